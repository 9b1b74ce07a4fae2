#include "ocrqa/model_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ocrqa/io_util.hpp"

namespace ocrqa {

using nlohmann::json;

namespace {

json scaler_to_json(const ScalerParams& scaler) {
  json dims = json::array();
  for (const DimStats& d : scaler.dims)
    dims.push_back({{"a", d.a}, {"b", d.b}, {"constant", d.constant}});
  return {{"kind", scaler_kind_name(scaler.kind)}, {"dims", dims}};
}

ScalerParams scaler_from_json(const json& j) {
  ScalerParams scaler;
  scaler.kind = scaler_kind_from_name(j.at("kind").get<std::string>());
  for (const auto& d : j.at("dims"))
    scaler.dims.push_back(
        {d.at("a").get<double>(), d.at("b").get<double>(), d.at("constant").get<bool>()});
  return scaler;
}

}  // namespace

std::string model_to_json(const ModelArtifact& artifact) {
  json j;
  j["schema_version"] = artifact.meta.schema_version;
  j["feature_schema"] = artifact.meta.feature_schema;
  j["theta"] = artifact.meta.theta;
  j["seed"] = artifact.meta.seed;

  if (const auto* knn = std::get_if<KnnModel>(&artifact.model)) {
    j["model"] = knn->task == KnnTask::classify ? "knn_classifier" : "knn_regressor";
    json m;
    m["k"] = knn->k;
    m["scaler"] = scaler_to_json(knn->scaler);
    json examples = json::array();
    for (const KnnExample& ex : knn->examples)
      examples.push_back({{"x", ex.x}, {"y", ex.target}, {"w", ex.weight}});
    m["examples"] = std::move(examples);
    j["knn"] = std::move(m);
  } else {
    const auto& mlp = std::get<MlpClassifier>(artifact.model);
    j["model"] = "mlp_classifier";
    json m;
    m["scaler"] = scaler_to_json(mlp.scaler);
    m["layers"] = mlp.net.layers;
    m["weights"] = mlp.net.weights;
    m["biases"] = mlp.net.biases;
    m["dropout"] = mlp.net.dropout;
    m["learning_rate"] = mlp.net.learning_rate;
    j["mlp"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

ModelArtifact model_from_json(std::string_view json_text) {
  const json j = json::parse(json_text);
  ModelArtifact artifact;
  artifact.meta.schema_version = j.at("schema_version").get<int>();
  if (artifact.meta.schema_version != kArtifactSchemaVersion)
    throw std::runtime_error("unsupported model schema version " +
                             std::to_string(artifact.meta.schema_version));
  artifact.meta.feature_schema = j.at("feature_schema").get<int>();
  artifact.meta.theta = j.at("theta").get<double>();
  artifact.meta.seed = j.at("seed").get<std::uint64_t>();

  const std::string kind = j.at("model").get<std::string>();
  if (kind == "knn_classifier" || kind == "knn_regressor") {
    const json& m = j.at("knn");
    KnnModel knn;
    knn.k = m.at("k").get<int>();
    knn.task = kind == "knn_classifier" ? KnnTask::classify : KnnTask::regress;
    knn.scaler = scaler_from_json(m.at("scaler"));
    for (const auto& ex : m.at("examples")) {
      knn.examples.push_back({ex.at("x").get<std::vector<double>>(),
                              ex.at("y").get<double>(), ex.at("w").get<double>()});
    }
    if (knn.examples.empty()) throw std::runtime_error("model artifact has no examples");
    artifact.model = std::move(knn);
  } else if (kind == "mlp_classifier") {
    const json& m = j.at("mlp");
    MlpClassifier mlp;
    mlp.scaler = scaler_from_json(m.at("scaler"));
    mlp.net.layers = m.at("layers").get<std::vector<int>>();
    mlp.net.weights = m.at("weights").get<std::vector<std::vector<double>>>();
    mlp.net.biases = m.at("biases").get<std::vector<std::vector<double>>>();
    mlp.net.dropout = m.at("dropout").get<double>();
    mlp.net.learning_rate = m.at("learning_rate").get<double>();
    artifact.model = std::move(mlp);
  } else {
    throw std::runtime_error("unknown model kind: " + kind);
  }
  return artifact;
}

void save_model(const std::filesystem::path& path, const ModelArtifact& artifact) {
  atomic_write_file(path, model_to_json(artifact));
}

ModelArtifact load_model(const std::filesystem::path& path) {
  return model_from_json(read_file(path));
}

}  // namespace ocrqa
