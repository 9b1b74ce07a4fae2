#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "ocrqa/knn.hpp"
#include "ocrqa/mlp.hpp"

namespace ocrqa {

inline constexpr int kArtifactSchemaVersion = 1;
inline constexpr int kFeatureSchemaVersion = 1;  // (x0, x1, x2, x3=year)

struct ModelMeta {
  int schema_version = kArtifactSchemaVersion;
  int feature_schema = kFeatureSchemaVersion;
  double theta = 0.0;       // labeling or selection threshold the model was built for
  std::uint64_t seed = 0;
};

// The net plus the standardization fitted on its training data.
struct MlpClassifier {
  ScalerParams scaler;
  MlpModel net;
};

struct ModelArtifact {
  ModelMeta meta;
  std::variant<KnnModel, MlpClassifier> model;
};

// JSON container; doubles round-trip exactly. Serialization is byte-stable
// for identical artifacts.
std::string model_to_json(const ModelArtifact& artifact);
ModelArtifact model_from_json(std::string_view json_text);

void save_model(const std::filesystem::path& path, const ModelArtifact& artifact);
ModelArtifact load_model(const std::filesystem::path& path);

}  // namespace ocrqa
