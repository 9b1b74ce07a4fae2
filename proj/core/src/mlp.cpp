#include "ocrqa/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ocrqa/rng.hpp"

namespace ocrqa {

namespace {

// Forward pass keeping post-activation values per layer. Dropout masks, when
// given, hold the inverted-dropout scale (0 or 1/(1-p)) per hidden unit.
struct Forward {
  std::vector<std::vector<double>> activations;  // [0] = input, last = logits
};

Forward forward_pass(const MlpModel& model, std::span<const double> x,
                     const std::vector<std::vector<double>>* dropout_masks = nullptr) {
  Forward f;
  f.activations.reserve(model.layers.size());
  f.activations.emplace_back(x.begin(), x.end());
  const std::size_t num_layers = model.weights.size();
  for (std::size_t l = 0; l < num_layers; ++l) {
    const auto in_size = static_cast<std::size_t>(model.layers[l]);
    const auto out_size = static_cast<std::size_t>(model.layers[l + 1]);
    const std::vector<double>& in = f.activations.back();
    std::vector<double> out(out_size);
    for (std::size_t o = 0; o < out_size; ++o) {
      double z = model.biases[l][o];
      const double* row = model.weights[l].data() + o * in_size;
      for (std::size_t i = 0; i < in_size; ++i) z += row[i] * in[i];
      out[o] = z;
    }
    const bool hidden = l + 1 < num_layers;
    if (hidden) {
      for (double& v : out) v = std::max(0.0, v);
      if (dropout_masks) {
        const std::vector<double>& mask = (*dropout_masks)[l];
        for (std::size_t o = 0; o < out_size; ++o) out[o] *= mask[o];
      }
    }
    f.activations.push_back(std::move(out));
  }
  return f;
}

std::vector<double> softmax(std::vector<double> logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& v : logits) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double& v : logits) v /= sum;
  return logits;
}

// Backprop of -log softmax(logits)[label]; returns gradients and applies the
// dropout masks used in the forward pass, when given.
MlpGradients backward_pass(const MlpModel& model, const Forward& f, int label,
                           const std::vector<std::vector<double>>* dropout_masks = nullptr) {
  const std::size_t num_layers = model.weights.size();
  MlpGradients g;
  g.weights.resize(num_layers);
  g.biases.resize(num_layers);

  std::vector<double> delta = softmax(f.activations.back());
  delta[static_cast<std::size_t>(label)] -= 1.0;

  for (std::size_t l = num_layers; l-- > 0;) {
    const auto in_size = static_cast<std::size_t>(model.layers[l]);
    const auto out_size = static_cast<std::size_t>(model.layers[l + 1]);
    const std::vector<double>& in = f.activations[l];
    g.weights[l].assign(out_size * in_size, 0.0);
    g.biases[l].assign(out_size, 0.0);
    for (std::size_t o = 0; o < out_size; ++o) {
      g.biases[l][o] = delta[o];
      double* row = g.weights[l].data() + o * in_size;
      for (std::size_t i = 0; i < in_size; ++i) row[i] = delta[o] * in[i];
    }
    if (l == 0) break;
    std::vector<double> prev_delta(in_size, 0.0);
    for (std::size_t i = 0; i < in_size; ++i) {
      double acc = 0.0;
      for (std::size_t o = 0; o < out_size; ++o)
        acc += model.weights[l][o * in_size + i] * delta[o];
      // relu derivative via the stored post-activation; the inverted-dropout
      // scale applied on the way forward also scales the gradient.
      double grad = f.activations[l][i] > 0.0 ? acc : 0.0;
      if (dropout_masks) grad *= (*dropout_masks)[l - 1][i];
      prev_delta[i] = grad;
    }
    delta = std::move(prev_delta);
  }
  return g;
}

double example_loss(const MlpModel& model, std::span<const double> x, int label) {
  const Forward f = forward_pass(model, x);
  const std::vector<double> p = softmax(f.activations.back());
  return -std::log(std::max(p[static_cast<std::size_t>(label)], 1e-300));
}

}  // namespace

MlpModel mlp_init(const MlpConfig& config) {
  if (config.layers.size() < 2) throw std::invalid_argument("mlp: need at least two layers");
  for (const int s : config.layers) {
    if (s < 1) throw std::invalid_argument("mlp: layer sizes must be positive");
  }
  MlpModel model;
  model.layers = config.layers;
  model.dropout = config.dropout;
  model.learning_rate = config.learning_rate;
  Rng rng(config.seed);
  for (std::size_t l = 0; l + 1 < config.layers.size(); ++l) {
    const auto in_size = static_cast<std::size_t>(config.layers[l]);
    const auto out_size = static_cast<std::size_t>(config.layers[l + 1]);
    const double bound = std::sqrt(6.0 / static_cast<double>(in_size + out_size));
    std::vector<double> w(out_size * in_size);
    for (double& v : w) v = (rng.uniform() * 2.0 - 1.0) * bound;
    model.weights.push_back(std::move(w));
    model.biases.emplace_back(out_size, 0.0);
  }
  return model;
}

MlpModel mlp_train(const MlpConfig& config, const std::vector<std::vector<double>>& train_x,
                   const std::vector<int>& train_y,
                   const std::vector<std::vector<double>>& val_x,
                   const std::vector<int>& val_y) {
  if (train_x.size() != train_y.size() || val_x.size() != val_y.size())
    throw std::invalid_argument("mlp_train: features and labels must have equal length");
  if (train_x.empty()) throw std::invalid_argument("mlp_train: empty training set");

  MlpModel model = mlp_init(config);
  MlpModel best = model;
  double best_val_loss = std::numeric_limits<double>::infinity();
  int epochs_since_best = 0;

  Rng rng(config.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<std::size_t> order(train_x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const std::size_t num_layers = model.weights.size();
  const double keep = 1.0 - config.dropout;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    for (const std::size_t idx : order) {
      std::vector<std::vector<double>> masks(num_layers > 0 ? num_layers - 1 : 0);
      for (std::size_t l = 0; l + 1 < num_layers; ++l) {
        masks[l].resize(static_cast<std::size_t>(model.layers[l + 1]));
        for (double& m : masks[l])
          m = (config.dropout > 0.0 && rng.bernoulli(config.dropout)) ? 0.0 : 1.0 / keep;
      }
      const Forward f = forward_pass(model, train_x[idx], &masks);
      if (!std::isfinite(f.activations.back()[0]) || !std::isfinite(f.activations.back()[1]))
        throw std::runtime_error("mlp_train: divergence at epoch " + std::to_string(epoch));
      const MlpGradients g = backward_pass(model, f, train_y[idx], &masks);
      for (std::size_t l = 0; l < num_layers; ++l) {
        for (std::size_t i = 0; i < model.weights[l].size(); ++i)
          model.weights[l][i] -= config.learning_rate * g.weights[l][i];
        for (std::size_t i = 0; i < model.biases[l].size(); ++i)
          model.biases[l][i] -= config.learning_rate * g.biases[l][i];
      }
    }

    double val_loss = 0.0;
    if (!val_x.empty()) {
      for (std::size_t i = 0; i < val_x.size(); ++i)
        val_loss += example_loss(model, val_x[i], val_y[i]);
      val_loss /= static_cast<double>(val_x.size());
    } else {
      for (std::size_t i = 0; i < train_x.size(); ++i)
        val_loss += example_loss(model, train_x[i], train_y[i]);
      val_loss /= static_cast<double>(train_x.size());
    }
    if (!std::isfinite(val_loss))
      throw std::runtime_error("mlp_train: divergence at epoch " + std::to_string(epoch));

    if (val_loss < best_val_loss) {
      best_val_loss = val_loss;
      best = model;
      epochs_since_best = 0;
    } else if (++epochs_since_best >= config.patience) {
      break;
    }
  }
  return best;
}

std::vector<double> mlp_predict(const MlpModel& model, std::span<const double> x) {
  const Forward f = forward_pass(model, x);
  return softmax(f.activations.back());
}

int mlp_predict_class(const MlpModel& model, std::span<const double> x) {
  const std::vector<double> p = mlp_predict(model, x);
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

double mlp_loss(const MlpModel& model, std::span<const double> x, int label) {
  return example_loss(model, x, label);
}

MlpGradients mlp_gradients(const MlpModel& model, std::span<const double> x, int label) {
  const Forward f = forward_pass(model, x);
  return backward_pass(model, f, label);
}

}  // namespace ocrqa
