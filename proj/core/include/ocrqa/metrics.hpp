#pragma once

#include <span>
#include <vector>

namespace ocrqa {

struct ConfusionCounts {
  long long tp = 0;  // predicted 1, label 1
  long long fp = 0;
  long long fn = 0;
  long long tn = 0;
};

ConfusionCounts confusion_counts(std::span<const int> preds, std::span<const int> labels);

double accuracy(std::span<const int> preds, std::span<const int> labels);

// Harmonic mean of precision and recall for the positive class (1);
// 0 when precision + recall is 0.
double f1(std::span<const int> preds, std::span<const int> labels);

// Cohen's kappa, (p0 - pe) / (1 - pe) with pe from the marginal frequencies
// of predictions and labels. The degenerate pe == 1 case is defined as 0;
// *degenerate reports it when requested.
double kappa(std::span<const int> preds, std::span<const int> labels,
             bool* degenerate = nullptr);

// Both throw on empty input.
double mae(std::span<const double> preds, std::span<const double> targets);
double mwae(std::span<const double> preds, std::span<const double> targets,
            std::span<const double> weights);

// mean(pred - target): positive means the model predicts too high.
double mean_bias(std::span<const double> preds, std::span<const double> targets);

}  // namespace ocrqa
