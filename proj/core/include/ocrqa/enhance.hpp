#pragma once

#include <string>
#include <vector>

#include "ocrqa/features.hpp"

namespace ocrqa {

struct Block;
struct Dictionary;
struct TrigramProfile;

// One regression example: the predicted quantity is the quality gain a rerun
// would produce, so features come from the original block only.
struct EnhancementExample {
  std::string id_ori;
  std::string id_new;
  std::string gt_id;
  FeatureVector features;     // of the ori block
  double target = 0.0;        // q(new, gt) - q(ori, gt), in [-1, 1]
  std::size_t char_count = 0; // of the ori block
};

struct EnhancementTriple {
  const Block* ori = nullptr;
  const Block* renewed = nullptr;
  const Block* gt = nullptr;
};

struct EnhanceBuildReport {
  std::vector<std::string> skipped;  // "id: reason"
};

// Builds one example per (ori, new, gt) triple. Triples whose ori block
// fails feature extraction are skipped with a report entry.
std::vector<EnhancementExample> build_enhancement_set(
    const std::vector<EnhancementTriple>& triples, const Dictionary& dict,
    const TrigramProfile& profile, EnhanceBuildReport* report = nullptr);

struct Prediction {
  std::string id;
  double predicted_gain = 0.0;
  double weight = 1.0;  // char count
};

struct Decision {
  std::string id;
  bool candidate = false;
};

// Candidate iff predicted gain >= theta; the boundary is inclusive.
std::vector<Decision> select_candidates(const std::vector<Prediction>& predictions,
                                        double theta);

struct SelectionRatios {
  double eps_r = 0.0;  // candidates with a strict quality reduction
  double eps_i = 0.0;  // non-candidates with a strict quality increase
  double c = 0.0;      // candidates
};

// All three ratios are weighted by char count and divide by the total
// weight. Zero targets count in neither epsilon.
SelectionRatios selection_ratios(const std::vector<bool>& candidate,
                                 const std::vector<double>& actual_targets,
                                 const std::vector<double>& weights);

struct SweepRow {
  double theta = 0.0;
  double c = 0.0;
  double eps_r = 0.0;
  double eps_i = 0.0;
};

// Ratios over an ascending theta grid, for plotting cut-off trade-offs.
std::vector<SweepRow> sweep_ratios(const std::vector<double>& predicted,
                                   const std::vector<double>& actual_targets,
                                   const std::vector<double>& weights,
                                   const std::vector<double>& thetas);

}  // namespace ocrqa
