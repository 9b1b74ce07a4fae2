#include "ocrqa/pipeline.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ocrqa/io_util.hpp"
#include "ocrqa/text.hpp"
#include "ocrqa/textqual.hpp"

namespace ocrqa {

using nlohmann::json;

std::optional<std::string> ResourceSet::resolve_language(const Block& block) const {
  if (block.lang && by_lang.count(*block.lang)) return *block.lang;
  return detect_language(block, stopwords, langid_profiles, detector);
}

std::vector<FeatureRecord> extract_corpus(const std::vector<Block>& blocks,
                                          const ResourceSet& resources,
                                          ExtractReport* report) {
  std::vector<FeatureRecord> records;
  records.reserve(blocks.size());
  for (const Block& block : blocks) {
    const std::optional<std::string> lang = resources.resolve_language(block);
    if (!lang) {
      if (report) report->abstained.emplace_back(block.id, "language abstained");
      continue;
    }
    const auto it = resources.by_lang.find(*lang);
    if (it == resources.by_lang.end()) {
      if (report) report->abstained.emplace_back(block.id, "no resources for " + *lang);
      continue;
    }
    try {
      FeatureRecord rec;
      rec.id = block.id;
      rec.features = extract_features(block, it->second.dict, it->second.trigrams);
      rec.lang = *lang;
      rec.char_count = char_count(block.text);
      rec.variant = block.variant;
      rec.gt_id = block.gt_id;
      records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      if (report) report->abstained.emplace_back(block.id, e.what());
    }
  }
  return records;
}

std::string feature_records_to_jsonl(const std::vector<FeatureRecord>& records) {
  std::ostringstream out;
  for (const FeatureRecord& r : records) {
    json j;
    j["id"] = r.id;
    j["x0"] = r.features.dict_score;
    j["x1"] = r.features.trigram_score;
    j["x2"] = r.features.clean_token_ratio;
    j["x3"] = r.features.year;
    j["lang"] = r.lang;
    j["char_count"] = r.char_count;
    j["variant"] = variant_name(r.variant);
    if (r.gt_id) j["gt_id"] = *r.gt_id;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::vector<FeatureRecord> feature_records_from_jsonl(std::string_view text) {
  std::vector<FeatureRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      FeatureRecord r;
      r.id = j.at("id").get<std::string>();
      r.features.dict_score = j.at("x0").get<double>();
      r.features.trigram_score = j.at("x1").get<double>();
      r.features.clean_token_ratio = j.at("x2").get<double>();
      r.features.year = j.at("x3").get<int>();
      r.lang = j.at("lang").get<std::string>();
      r.char_count = j.at("char_count").get<std::size_t>();
      if (j.contains("variant")) {
        const auto v = variant_from_name(j.at("variant").get<std::string>());
        if (!v) throw std::runtime_error("unknown variant");
        r.variant = *v;
      }
      if (j.contains("gt_id")) r.gt_id = j.at("gt_id").get<std::string>();
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("feature dump line " + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return records;
}

std::vector<LabelRecord> label_corpus(const std::vector<Block>& blocks, double theta,
                                      std::vector<std::pair<std::string, std::string>>* dangling) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("label_corpus: theta must be in (0,1)");
  const GtPairing pairing = pair_ground_truth(blocks);
  if (dangling) *dangling = pairing.dangling;
  std::vector<LabelRecord> records;
  records.reserve(pairing.pairs.size());
  for (const auto& [block_idx, gt_idx] : pairing.pairs) {
    const Block& block = blocks[block_idx];
    const QualityLabel ql = make_label(block, blocks[gt_idx], theta);
    LabelRecord rec;
    rec.id = block.id;
    rec.q = ql.q;
    rec.theta = ql.theta;
    rec.cls = ql.cls;
    rec.gt_id = *block.gt_id;
    rec.variant = block.variant;
    rec.char_count = char_count(block.text);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string label_records_to_jsonl(const std::vector<LabelRecord>& records) {
  std::ostringstream out;
  for (const LabelRecord& r : records) {
    json j;
    j["id"] = r.id;
    j["q"] = r.q;
    j["theta"] = r.theta;
    j["class"] = r.cls;
    j["gt_id"] = r.gt_id;
    j["variant"] = variant_name(r.variant);
    j["char_count"] = r.char_count;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::vector<LabelRecord> label_records_from_jsonl(std::string_view text) {
  std::vector<LabelRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      LabelRecord r;
      r.id = j.at("id").get<std::string>();
      r.q = j.at("q").get<double>();
      r.theta = j.at("theta").get<double>();
      r.cls = j.at("class").get<int>();
      r.gt_id = j.at("gt_id").get<std::string>();
      const auto v = variant_from_name(j.at("variant").get<std::string>());
      if (!v) throw std::runtime_error("unknown variant");
      r.variant = *v;
      r.char_count = j.at("char_count").get<std::size_t>();
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("label dump line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

LabeledSet join_classification(const std::vector<FeatureRecord>& features,
                               const std::vector<LabelRecord>& labels,
                               std::vector<std::string>* unmatched) {
  std::unordered_map<std::string, const LabelRecord*> by_id;
  for (const LabelRecord& l : labels) by_id.emplace(l.id, &l);

  LabeledSet set;
  set.classification = true;
  for (const FeatureRecord& f : features) {
    const auto it = by_id.find(f.id);
    if (it == by_id.end()) {
      if (unmatched) unmatched->push_back(f.id);
      continue;
    }
    LabeledExample ex;
    ex.id = f.id;
    ex.features = f.features;
    ex.target = it->second->cls;
    ex.char_count = f.char_count;
    ex.origin = f.variant;
    ex.gt_id = f.gt_id.value_or(it->second->gt_id);
    set.examples.push_back(std::move(ex));
  }
  return set;
}

LabeledSet join_enhancement(const std::vector<FeatureRecord>& features,
                            const std::vector<LabelRecord>& labels,
                            std::vector<std::string>* unmatched) {
  // q of the ori and new variant per gt_id.
  std::unordered_map<std::string, const LabelRecord*> ori_by_gt;
  std::unordered_map<std::string, const LabelRecord*> new_by_gt;
  for (const LabelRecord& l : labels) {
    if (l.variant == Variant::original) ori_by_gt.emplace(l.gt_id, &l);
    if (l.variant == Variant::reprocessed) new_by_gt.emplace(l.gt_id, &l);
  }

  LabeledSet set;
  set.classification = false;
  for (const FeatureRecord& f : features) {
    if (f.variant != Variant::original || !f.gt_id) continue;
    const auto ori_it = ori_by_gt.find(*f.gt_id);
    const auto new_it = new_by_gt.find(*f.gt_id);
    if (ori_it == ori_by_gt.end() || new_it == new_by_gt.end() ||
        ori_it->second->id != f.id) {
      if (unmatched) unmatched->push_back(f.id);
      continue;
    }
    LabeledExample ex;
    ex.id = f.id;
    ex.features = f.features;
    ex.target = new_it->second->q - ori_it->second->q;
    ex.char_count = f.char_count;
    ex.origin = Variant::original;
    ex.gt_id = *f.gt_id;
    set.examples.push_back(std::move(ex));
  }
  return set;
}

std::string labeled_set_to_jsonl(const LabeledSet& set) {
  std::ostringstream out;
  for (const LabeledExample& ex : set.examples) {
    json j;
    j["id"] = ex.id;
    j["x"] = ex.features.as_array();
    j["target"] = ex.target;
    j["char_count"] = ex.char_count;
    j["origin"] = variant_name(ex.origin);
    j["gt_id"] = ex.gt_id;
    out << j.dump() << '\n';
  }
  return out.str();
}

LabeledSet labeled_set_from_jsonl(std::string_view text, bool classification) {
  LabeledSet set;
  set.classification = classification;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      LabeledExample ex;
      ex.id = j.at("id").get<std::string>();
      const auto x = j.at("x").get<std::vector<double>>();
      if (x.size() != 4) throw std::runtime_error("expected 4 features");
      ex.features.dict_score = x[0];
      ex.features.trigram_score = x[1];
      ex.features.clean_token_ratio = x[2];
      ex.features.year = static_cast<int>(x[3]);
      ex.target = j.at("target").get<double>();
      ex.char_count = j.at("char_count").get<std::size_t>();
      const auto v = variant_from_name(j.at("origin").get<std::string>());
      if (!v) throw std::runtime_error("unknown origin");
      ex.origin = *v;
      ex.gt_id = j.at("gt_id").get<std::string>();
      set.examples.push_back(std::move(ex));
    } catch (const std::exception& e) {
      throw std::runtime_error("labeled set line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return set;
}

std::string classification_report_to_json(const ClassificationReport& report,
                                          double theta, double alpha_ori) {
  json j;
  j["task"] = "classification";
  j["theta"] = theta;
  j["alpha_ori"] = alpha_ori;
  j["count"] = report.count;
  j["f1"] = report.f1;
  j["kappa"] = report.kappa;
  j["kappa_degenerate"] = report.kappa_degenerate;
  j["accuracy"] = report.accuracy;
  j["confusion"] = {{"tp", report.tp}, {"fp", report.fp}, {"fn", report.fn}, {"tn", report.tn}};
  return j.dump(2) + "\n";
}

std::string regression_report_to_json(const RegressionReport& report, int k) {
  json j;
  j["task"] = "regression";
  j["k"] = k;
  j["count"] = report.count;
  j["mae"] = report.mae;
  j["mwae"] = report.mwae;
  j["mean_bias"] = report.mean_bias;
  j["baseline_mae"] = report.baseline_mae;
  return j.dump(2) + "\n";
}

std::string selection_report_to_json(const SelectionRatios& ratios, double theta,
                                     const std::vector<Decision>& decisions) {
  json j;
  j["theta"] = theta;
  j["c"] = ratios.c;
  j["eps_r"] = ratios.eps_r;
  j["eps_i"] = ratios.eps_i;
  json per_block = json::array();
  for (const Decision& d : decisions)
    per_block.push_back({{"id", d.id}, {"candidate", d.candidate}});
  j["decisions"] = std::move(per_block);
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "theta,c,eps_r,eps_i\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.theta) << ',' << format_double(r.c) << ','
        << format_double(r.eps_r) << ',' << format_double(r.eps_i) << '\n';
  }
  return out.str();
}

std::string theta_metrics_to_csv(const std::vector<ThetaMetricsRow>& rows) {
  std::ostringstream out;
  out << "theta,alpha_ori,f1,kappa,accuracy\n";
  for (const ThetaMetricsRow& r : rows) {
    out << format_double(r.theta) << ',' << format_double(r.alpha_ori) << ','
        << format_double(r.f1) << ',' << format_double(r.kappa) << ','
        << format_double(r.accuracy) << '\n';
  }
  return out.str();
}

int predict_class(const ModelArtifact& artifact, const FeatureVector& features) {
  const auto x = features.as_array();
  if (const auto* knn = std::get_if<KnnModel>(&artifact.model)) {
    if (knn->task != KnnTask::classify)
      throw std::invalid_argument("predict_class: artifact is a regressor");
    return knn_classify(*knn, x);
  }
  const auto& mlp = std::get<MlpClassifier>(artifact.model);
  return mlp_predict_class(mlp.net, apply_scaler(mlp.scaler, x));
}

double predict_gain(const ModelArtifact& artifact, const FeatureVector& features) {
  const auto* knn = std::get_if<KnnModel>(&artifact.model);
  if (!knn || knn->task != KnnTask::regress)
    throw std::invalid_argument("predict_gain: artifact is not a KNN regressor");
  return knn_regress(*knn, features.as_array());
}

std::vector<ThetaMetricsRow> theta_sweep_classification(
    const std::vector<FeatureRecord>& features, const std::vector<LabelRecord>& labels,
    const std::vector<double>& thetas, const ProtocolConfig& config) {
  std::vector<ThetaMetricsRow> rows;
  rows.reserve(thetas.size());
  for (const double theta : thetas) {
    std::vector<LabelRecord> relabeled = labels;
    for (LabelRecord& l : relabeled) {
      l.theta = theta;
      l.cls = label(l.q, theta);
    }
    const LabeledSet ball = join_classification(features, relabeled);
    const SplitResult split = split_train_test(ball, config.beta, config.seed);

    std::vector<std::vector<double>> X;
    std::vector<double> y;
    std::vector<double> w;
    X.reserve(split.train.examples.size());
    for (const LabeledExample& ex : split.train.examples) {
      const auto a = ex.features.as_array();
      X.emplace_back(a.begin(), a.end());
      y.push_back(ex.target);
      w.push_back(static_cast<double>(ex.char_count));
    }
    const KnnModel model = fit_knn(config.k, KnnTask::classify, config.scaler, X, y, w);

    std::vector<int> preds;
    std::vector<int> truth;
    preds.reserve(split.test.examples.size());
    for (const LabeledExample& ex : split.test.examples) {
      preds.push_back(knn_classify(model, ex.features.as_array()));
      truth.push_back(ex.target != 0.0 ? 1 : 0);
    }
    const ClassificationReport report = evaluate_classification(preds, truth);
    rows.push_back({theta, split.alpha_ori, report.f1, report.kappa, report.accuracy});
  }
  return rows;
}

}  // namespace ocrqa
