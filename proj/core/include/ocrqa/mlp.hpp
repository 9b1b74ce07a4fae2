#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ocrqa {

struct MlpConfig {
  std::vector<int> layers = {4, 16, 16, 2};  // input, hidden..., output
  double dropout = 0.5;                      // on hidden activations, train only
  double learning_rate = 1e-4;
  int epochs = 50;
  int patience = 10;  // epochs without validation improvement before stopping
  std::uint64_t seed = 1;
};

// Feedforward net with relu hidden layers and a softmax output, trained with
// batch-size-1 SGD on cross-entropy. Inputs are expected standardized.
struct MlpModel {
  std::vector<int> layers;
  std::vector<std::vector<double>> weights;  // per layer, row-major out x in
  std::vector<std::vector<double>> biases;
  double dropout = 0.5;
  double learning_rate = 1e-4;
};

// Glorot-uniform initialization, deterministic in the seed.
MlpModel mlp_init(const MlpConfig& config);

// Trains on (X, y) with dropout active, evaluates on the validation split
// after each epoch with dropout off, and returns the weights of the best
// validation-loss epoch. Stops early after `patience` epochs without
// improvement. Throws (naming the epoch) if the loss turns non-finite.
// Zero epochs returns the initial weights.
MlpModel mlp_train(const MlpConfig& config, const std::vector<std::vector<double>>& train_x,
                   const std::vector<int>& train_y,
                   const std::vector<std::vector<double>>& val_x,
                   const std::vector<int>& val_y);

// Class probabilities (sums to 1), dropout disabled.
std::vector<double> mlp_predict(const MlpModel& model, std::span<const double> x);

int mlp_predict_class(const MlpModel& model, std::span<const double> x);

// Cross-entropy loss of one example, dropout disabled. Test hook.
double mlp_loss(const MlpModel& model, std::span<const double> x, int label);

struct MlpGradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;
};

// Analytic gradients of the single-example cross-entropy loss, dropout
// disabled. Matches central finite differences; exercised by the tests.
MlpGradients mlp_gradients(const MlpModel& model, std::span<const double> x, int label);

}  // namespace ocrqa
