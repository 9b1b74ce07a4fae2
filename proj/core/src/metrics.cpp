#include "ocrqa/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace ocrqa {

namespace {

void check_lengths(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
  if (a == 0) throw std::invalid_argument(std::string(what) + ": empty input");
}

}  // namespace

ConfusionCounts confusion_counts(std::span<const int> preds, std::span<const int> labels) {
  check_lengths(preds.size(), labels.size(), "confusion_counts");
  ConfusionCounts c;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const bool p = preds[i] != 0;
    const bool l = labels[i] != 0;
    c.tp += p && l;
    c.fp += p && !l;
    c.fn += !p && l;
    c.tn += !p && !l;
  }
  return c;
}

double accuracy(std::span<const int> preds, std::span<const int> labels) {
  const ConfusionCounts c = confusion_counts(preds, labels);
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(preds.size());
}

double f1(std::span<const int> preds, std::span<const int> labels) {
  const ConfusionCounts c = confusion_counts(preds, labels);
  const double precision =
      c.tp + c.fp == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  const double recall =
      c.tp + c.fn == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double kappa(std::span<const int> preds, std::span<const int> labels, bool* degenerate) {
  const ConfusionCounts c = confusion_counts(preds, labels);
  const auto n = static_cast<double>(preds.size());
  const double p0 = static_cast<double>(c.tp + c.tn) / n;
  const double pred_pos = static_cast<double>(c.tp + c.fp) / n;
  const double label_pos = static_cast<double>(c.tp + c.fn) / n;
  const double pe = pred_pos * label_pos + (1.0 - pred_pos) * (1.0 - label_pos);
  if (degenerate) *degenerate = pe == 1.0;
  if (pe == 1.0) return 0.0;
  return (p0 - pe) / (1.0 - pe);
}

double mae(std::span<const double> preds, std::span<const double> targets) {
  check_lengths(preds.size(), targets.size(), "mae");
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) sum += std::abs(preds[i] - targets[i]);
  return sum / static_cast<double>(preds.size());
}

double mwae(std::span<const double> preds, std::span<const double> targets,
            std::span<const double> weights) {
  check_lengths(preds.size(), targets.size(), "mwae");
  check_lengths(preds.size(), weights.size(), "mwae");
  double sum = 0.0;
  double weight_total = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (!(weights[i] > 0.0)) throw std::invalid_argument("mwae: weights must be positive");
    sum += weights[i] * std::abs(preds[i] - targets[i]);
    weight_total += weights[i];
  }
  return sum / weight_total;
}

double mean_bias(std::span<const double> preds, std::span<const double> targets) {
  check_lengths(preds.size(), targets.size(), "mean_bias");
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) sum += preds[i] - targets[i];
  return sum / static_cast<double>(preds.size());
}

}  // namespace ocrqa
