#include "ocrqa/enhance.hpp"

#include <stdexcept>

#include "ocrqa/block.hpp"
#include "ocrqa/text.hpp"
#include "ocrqa/textqual.hpp"

namespace ocrqa {

std::vector<EnhancementExample> build_enhancement_set(
    const std::vector<EnhancementTriple>& triples, const Dictionary& dict,
    const TrigramProfile& profile, EnhanceBuildReport* report) {
  std::vector<EnhancementExample> out;
  out.reserve(triples.size());
  for (const EnhancementTriple& t : triples) {
    if (!t.ori || !t.renewed || !t.gt)
      throw std::invalid_argument("build_enhancement_set: incomplete triple");
    try {
      EnhancementExample ex;
      ex.id_ori = t.ori->id;
      ex.id_new = t.renewed->id;
      ex.gt_id = t.gt->id;
      ex.features = extract_features(*t.ori, dict, profile);
      ex.target = quality(*t.renewed, *t.gt) - quality(*t.ori, *t.gt);
      ex.char_count = char_count(t.ori->text);
      out.push_back(std::move(ex));
    } catch (const std::exception& e) {
      if (report) report->skipped.push_back(t.ori->id + ": " + e.what());
    }
  }
  return out;
}

std::vector<Decision> select_candidates(const std::vector<Prediction>& predictions,
                                        double theta) {
  std::vector<Decision> out;
  out.reserve(predictions.size());
  for (const Prediction& p : predictions)
    out.push_back({p.id, p.predicted_gain >= theta});
  return out;
}

SelectionRatios selection_ratios(const std::vector<bool>& candidate,
                                 const std::vector<double>& actual_targets,
                                 const std::vector<double>& weights) {
  if (candidate.size() != actual_targets.size() || candidate.size() != weights.size())
    throw std::invalid_argument("selection_ratios: length mismatch");
  if (candidate.empty()) throw std::invalid_argument("selection_ratios: empty input");

  double total = 0.0;
  double cand = 0.0;
  double reduced = 0.0;
  double missed = 0.0;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (!(weights[i] > 0.0))
      throw std::invalid_argument("selection_ratios: weights must be positive");
    total += weights[i];
    if (candidate[i]) {
      cand += weights[i];
      if (actual_targets[i] < 0.0) reduced += weights[i];
    } else if (actual_targets[i] > 0.0) {
      missed += weights[i];
    }
  }
  return {reduced / total, missed / total, cand / total};
}

std::vector<SweepRow> sweep_ratios(const std::vector<double>& predicted,
                                   const std::vector<double>& actual_targets,
                                   const std::vector<double>& weights,
                                   const std::vector<double>& thetas) {
  std::vector<SweepRow> rows;
  rows.reserve(thetas.size());
  std::vector<bool> candidate(predicted.size());
  for (const double theta : thetas) {
    for (std::size_t i = 0; i < predicted.size(); ++i) candidate[i] = predicted[i] >= theta;
    const SelectionRatios r = selection_ratios(candidate, actual_targets, weights);
    rows.push_back({theta, r.c, r.eps_r, r.eps_i});
  }
  return rows;
}

}  // namespace ocrqa
