#include "ocrqa/scaler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ocrqa {

std::string scaler_kind_name(ScalerKind kind) {
  return kind == ScalerKind::standardize ? "standardize" : "minmax";
}

ScalerKind scaler_kind_from_name(std::string_view name) {
  if (name == "standardize") return ScalerKind::standardize;
  if (name == "minmax") return ScalerKind::minmax;
  throw std::invalid_argument("unknown scaler kind: " + std::string(name));
}

ScalerParams fit_scaler(const std::vector<std::vector<double>>& data, ScalerKind kind) {
  if (data.empty()) throw std::invalid_argument("fit_scaler: no data");
  const std::size_t dims = data.front().size();
  for (const auto& row : data) {
    if (row.size() != dims) throw std::invalid_argument("fit_scaler: ragged data");
  }

  ScalerParams params;
  params.kind = kind;
  params.dims.resize(dims);
  const auto n = static_cast<double>(data.size());

  for (std::size_t d = 0; d < dims; ++d) {
    DimStats& s = params.dims[d];
    if (kind == ScalerKind::standardize) {
      double mean = 0.0;
      for (const auto& row : data) mean += row[d];
      mean /= n;
      double var = 0.0;
      for (const auto& row : data) var += (row[d] - mean) * (row[d] - mean);
      var /= n;
      s.a = mean;
      s.b = std::sqrt(var);
      s.constant = s.b == 0.0;
    } else {
      double lo = data.front()[d];
      double hi = lo;
      for (const auto& row : data) {
        lo = std::min(lo, row[d]);
        hi = std::max(hi, row[d]);
      }
      s.a = lo;
      s.b = hi;
      s.constant = hi == lo;
    }
  }
  return params;
}

std::vector<double> apply_scaler(const ScalerParams& params, std::span<const double> x) {
  if (x.size() != params.dims.size())
    throw std::invalid_argument("apply_scaler: dimension mismatch");
  std::vector<double> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    const DimStats& s = params.dims[d];
    if (s.constant) {
      out[d] = 0.0;
    } else if (params.kind == ScalerKind::standardize) {
      out[d] = (x[d] - s.a) / s.b;
    } else {
      out[d] = std::clamp((x[d] - s.a) / (s.b - s.a), 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace ocrqa
