#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocrqa/block.hpp"
#include "ocrqa/features.hpp"
#include "ocrqa/knn.hpp"

namespace ocrqa {

// One supervised example: features of a block plus a class label or a
// continuous enhancement target.
struct LabeledExample {
  std::string id;
  FeatureVector features;
  double target = 0.0;         // class 0/1 or enhancement gain
  std::size_t char_count = 0;  // of the block, used as weight
  Variant origin = Variant::original;
  std::string gt_id;           // leakage guard key; empty when unknown
};

struct LabeledSet {
  std::vector<LabeledExample> examples;
  bool classification = true;
};

struct AssembleReport {
  std::vector<std::string> issues;
};

// Union of the per-origin collections with origin tags preserved.
// Ground-truth id mismatches across the collections are reported.
LabeledSet assemble_ball(const LabeledSet& ori, const LabeledSet& renewed,
                         const LabeledSet& bad, AssembleReport* report = nullptr);

struct SplitResult {
  LabeledSet train;
  LabeledSet test;
  double alpha_ori = 0.0;  // positivity rate of the ori-origin subset
};

// Samples a test set of exactly beta examples whose positive fraction equals
// the positivity rate measured on the ori-origin subset (rounded to the
// nearest achievable count), then builds the largest possible 1:1 balanced
// train set from the remainder. No gt_id appears on both sides. Throws with
// a description of the shortfall when infeasible.
SplitResult split_train_test(const LabeledSet& ball, std::size_t beta, std::uint64_t seed);

struct RegressionReport {
  double mae = 0.0;
  double mwae = 0.0;
  double mean_bias = 0.0;
  double baseline_mae = 0.0;  // predict-the-mean reference
  std::size_t count = 0;
};

struct LoocvConfig {
  int k = 43;
  ScalerKind scaler = ScalerKind::minmax;
};

// Leave-one-out cross-validation of the weighted KNN regressor: for every
// example, fit scaler and store on the rest and predict the held-out one.
RegressionReport loocv_knn_regression(const LabeledSet& set, const LoocvConfig& config);

struct ClassificationReport {
  double f1 = 0.0;
  double kappa = 0.0;
  double accuracy = 0.0;
  bool kappa_degenerate = false;
  long long tp = 0, fp = 0, fn = 0, tn = 0;
  std::size_t count = 0;
};

ClassificationReport evaluate_classification(const std::vector<int>& preds,
                                             const std::vector<int>& labels);

}  // namespace ocrqa
