#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ocrqa/block.hpp"
#include "ocrqa/dataset.hpp"
#include "ocrqa/enhance.hpp"
#include "ocrqa/features.hpp"
#include "ocrqa/langid.hpp"
#include "ocrqa/model_io.hpp"
#include "ocrqa/resources.hpp"

namespace ocrqa {

// Everything feature extraction needs, keyed by language.
struct LanguageResources {
  Dictionary dict;
  TrigramProfile trigrams;
};

struct ResourceSet {
  std::map<std::string, LanguageResources> by_lang;
  std::vector<LanguageProfile> langid_profiles;
  StopwordList stopwords = builtin_lb_stopwords();
  DetectorConfig detector;

  // Metadata language when resources cover it, otherwise stop-word screen
  // plus profile distance. nullopt = abstain.
  std::optional<std::string> resolve_language(const Block& block) const;
};

// Feature dump record, one JSON object per line on the wire:
// id, x0..x3, lang, char_count, plus variant and gt_id for later joins.
struct FeatureRecord {
  std::string id;
  FeatureVector features;
  std::string lang;
  std::size_t char_count = 0;
  Variant variant = Variant::original;
  std::optional<std::string> gt_id;
};

struct ExtractReport {
  // (block id, reason) for blocks that produced no record
  std::vector<std::pair<std::string, std::string>> abstained;
};

std::vector<FeatureRecord> extract_corpus(const std::vector<Block>& blocks,
                                          const ResourceSet& resources,
                                          ExtractReport* report = nullptr);

std::string feature_records_to_jsonl(const std::vector<FeatureRecord>& records);
std::vector<FeatureRecord> feature_records_from_jsonl(std::string_view text);

// Label dump record: id, q, theta, class, plus join metadata.
struct LabelRecord {
  std::string id;
  double q = 0.0;
  double theta = 0.0;
  int cls = 0;
  std::string gt_id;
  Variant variant = Variant::original;
  std::size_t char_count = 0;
};

// Pairs blocks with their ground truth and labels each paired block.
// Unresolved gt_ids are reported through *dangling.
std::vector<LabelRecord> label_corpus(const std::vector<Block>& blocks, double theta,
                                      std::vector<std::pair<std::string, std::string>>* dangling
                                      = nullptr);

std::string label_records_to_jsonl(const std::vector<LabelRecord>& records);
std::vector<LabelRecord> label_records_from_jsonl(std::string_view text);

// Joins feature and label dumps by id into a classification set.
LabeledSet join_classification(const std::vector<FeatureRecord>& features,
                               const std::vector<LabelRecord>& labels,
                               std::vector<std::string>* unmatched = nullptr);

// Builds the enhancement regression set from a feature dump of ori blocks and
// the label dump holding q for both ori and new variants of each gt_id.
LabeledSet join_enhancement(const std::vector<FeatureRecord>& features,
                            const std::vector<LabelRecord>& labels,
                            std::vector<std::string>* unmatched = nullptr);

// Labeled-example JSONL (the train/test set files written by `train`).
std::string labeled_set_to_jsonl(const LabeledSet& set);
LabeledSet labeled_set_from_jsonl(std::string_view text, bool classification);

// Report serialization. All byte-stable for identical inputs.
std::string classification_report_to_json(const ClassificationReport& report,
                                          double theta, double alpha_ori);
std::string regression_report_to_json(const RegressionReport& report, int k);
std::string selection_report_to_json(const SelectionRatios& ratios, double theta,
                                     const std::vector<Decision>& decisions);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

struct ThetaMetricsRow {
  double theta = 0.0;
  double alpha_ori = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
  double accuracy = 0.0;
};

// theta on the x-axis, classification metrics as columns.
std::string theta_metrics_to_csv(const std::vector<ThetaMetricsRow>& rows);

// Class prediction with a loaded artifact (KNN classifier or MLP).
int predict_class(const ModelArtifact& artifact, const FeatureVector& features);

// Gain prediction with a loaded KNN regressor artifact.
double predict_gain(const ModelArtifact& artifact, const FeatureVector& features);

struct ProtocolConfig {
  std::size_t beta = 1000;
  int k = 15;
  ScalerKind scaler = ScalerKind::minmax;
  std::uint64_t seed = 42;
};

// The full train/test protocol per theta: relabel by q, join, split with
// alpha_ori preserved, fit the KNN classifier on the balanced train set and
// score the test set.
std::vector<ThetaMetricsRow> theta_sweep_classification(
    const std::vector<FeatureRecord>& features, const std::vector<LabelRecord>& labels,
    const std::vector<double>& thetas, const ProtocolConfig& config);

}  // namespace ocrqa
