#pragma once

#include <span>
#include <vector>

#include "ocrqa/scaler.hpp"

namespace ocrqa {

struct KnnExample {
  std::vector<double> x;  // stored scaled by the model's scaler
  double target = 0.0;    // class 0/1 for classification, real for regression
  double weight = 1.0;    // character count of the source block
};

enum class KnnTask { classify, regress };

// Brute-force store; training data is a few 10^4 vectors at most, so no
// index structure is needed.
struct KnnModel {
  int k = 1;
  KnnTask task = KnnTask::classify;
  ScalerParams scaler;
  std::vector<KnnExample> examples;
};

// Fits the scaler on X and stores the scaled examples. Throws when
// k exceeds the number of examples or the inputs are inconsistent.
KnnModel fit_knn(int k, KnnTask task, ScalerKind scaler_kind,
                 const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                 const std::vector<double>& weights);

// Indices of the k nearest stored examples by Euclidean distance; ties on
// distance resolve to the earlier stored example.
std::vector<std::size_t> knn_neighbours(const KnnModel& model, std::span<const double> raw_x);

// Majority class of the k nearest; a tied vote returns class 1 so borderline
// blocks stay reprocessing candidates.
int knn_classify(const KnnModel& model, std::span<const double> raw_x);

// Mean of the k nearest targets, weighted by example character count.
double knn_regress(const KnnModel& model, std::span<const double> raw_x);

}  // namespace ocrqa
