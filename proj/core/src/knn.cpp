#include "ocrqa/knn.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocrqa {

KnnModel fit_knn(int k, KnnTask task, ScalerKind scaler_kind,
                 const std::vector<std::vector<double>>& X, const std::vector<double>& y,
                 const std::vector<double>& weights) {
  if (X.empty()) throw std::invalid_argument("fit_knn: no training examples");
  if (X.size() != y.size() || X.size() != weights.size())
    throw std::invalid_argument("fit_knn: X, y and weights must have equal length");
  if (k < 1 || static_cast<std::size_t>(k) > X.size())
    throw std::invalid_argument("fit_knn: k must be in [1, number of examples]");

  KnnModel model;
  model.k = k;
  model.task = task;
  model.scaler = fit_scaler(X, scaler_kind);
  model.examples.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (task == KnnTask::regress && !(weights[i] > 0.0))
      throw std::invalid_argument("fit_knn: regression weights must be positive");
    model.examples.push_back({apply_scaler(model.scaler, X[i]), y[i], weights[i]});
  }
  return model;
}

std::vector<std::size_t> knn_neighbours(const KnnModel& model, std::span<const double> raw_x) {
  if (model.examples.empty()) throw std::invalid_argument("knn: empty model");
  const std::vector<double> q = apply_scaler(model.scaler, raw_x);

  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(model.examples.size());
  for (std::size_t i = 0; i < model.examples.size(); ++i) {
    const auto& ex = model.examples[i].x;
    double d2 = 0.0;
    for (std::size_t d = 0; d < q.size(); ++d) {
      const double diff = q[d] - ex[d];
      d2 += diff * diff;
    }
    dist.emplace_back(d2, i);
  }
  const auto kth = dist.begin() + std::min<std::size_t>(model.k, dist.size());
  std::partial_sort(dist.begin(), kth, dist.end());

  std::vector<std::size_t> out;
  out.reserve(model.k);
  for (auto it = dist.begin(); it != kth; ++it) out.push_back(it->second);
  return out;
}

int knn_classify(const KnnModel& model, std::span<const double> raw_x) {
  long long votes_one = 0;
  const std::vector<std::size_t> nn = knn_neighbours(model, raw_x);
  for (const std::size_t i : nn) votes_one += model.examples[i].target != 0.0;
  return 2 * votes_one >= static_cast<long long>(nn.size()) ? 1 : 0;
}

double knn_regress(const KnnModel& model, std::span<const double> raw_x) {
  double weighted_sum = 0.0;
  double weight_total = 0.0;
  for (const std::size_t i : knn_neighbours(model, raw_x)) {
    weighted_sum += model.examples[i].weight * model.examples[i].target;
    weight_total += model.examples[i].weight;
  }
  return weighted_sum / weight_total;
}

}  // namespace ocrqa
