#pragma once

#include <span>
#include <string>
#include <vector>

namespace ocrqa {

enum class ScalerKind { standardize, minmax };

std::string scaler_kind_name(ScalerKind kind);
ScalerKind scaler_kind_from_name(std::string_view name);

struct DimStats {
  // standardize: a = mean, b = stddev (population).
  // minmax:      a = min,  b = max.
  double a = 0.0;
  double b = 0.0;
  bool constant = false;  // dimension had no spread in the training data
};

struct ScalerParams {
  ScalerKind kind = ScalerKind::minmax;
  std::vector<DimStats> dims;
};

// Statistics per dimension over the training data only. Constant dimensions
// are flagged and later map to 0 instead of dividing by zero.
ScalerParams fit_scaler(const std::vector<std::vector<double>>& data, ScalerKind kind);

// Deterministic transform. Min-max outputs are clamped to [0,1] so test
// values outside the training range stay within the feature cube.
std::vector<double> apply_scaler(const ScalerParams& params, std::span<const double> x);

}  // namespace ocrqa
