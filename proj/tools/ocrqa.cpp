// ocrqa: batch candidate selection for OCR reprocessing.
//
// One subcommand per pipeline stage, so partial reruns work on cached
// intermediates: build-profile, degrade, extract, label, train, evaluate,
// select. Settings come from an optional JSON config file, overridden by
// flags. All randomness flows from explicit seeds; every output is written
// atomically (temp file plus rename).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ocrqa/block.hpp"
#include "ocrqa/confusion.hpp"
#include "ocrqa/dataset.hpp"
#include "ocrqa/enhance.hpp"
#include "ocrqa/io_util.hpp"
#include "ocrqa/langid.hpp"
#include "ocrqa/metrics.hpp"
#include "ocrqa/model_io.hpp"
#include "ocrqa/pipeline.hpp"
#include "ocrqa/resources.hpp"
#include "ocrqa/rng.hpp"
#include "ocrqa/text.hpp"
#include "ocrqa/textqual.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ocrqa;

namespace {

// Relative resource paths resolve against $OCRQA_RESOURCES when it is set.
fs::path resolve_resource(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* root = std::getenv("OCRQA_RESOURCES")) {
      const fs::path rooted = fs::path(root) / p;
      if (fs::exists(rooted)) return rooted;
    }
  }
  return p;
}

struct Config {
  json raw = json::object();

  static Config load(const std::string& path) {
    Config c;
    c.raw = json::parse(read_file(path));
    return c;
  }

  template <typename T>
  T get(const std::string& pointer, T fallback) const {
    const json::json_pointer p(pointer);
    if (raw.contains(p)) return raw.at(p).get<T>();
    return fallback;
  }
  bool has(const std::string& pointer) const {
    return raw.contains(json::json_pointer(pointer));
  }
};

ResourceSet load_resources(const Config& cfg) {
  ResourceSet rs;
  if (cfg.has("/resources/stopwords")) {
    std::ifstream in(resolve_resource(cfg.get<std::string>("/resources/stopwords", "")));
    if (!in) throw std::runtime_error("cannot open stop-word file");
    rs.stopwords = load_stopwords(in);
  }
  rs.stopwords.hit_threshold = cfg.get<double>("/resources/hit_threshold",
                                               rs.stopwords.hit_threshold);
  rs.detector.doc_max_rank = cfg.get<int>("/resources/doc_max_rank", rs.detector.doc_max_rank);
  rs.detector.abstain_ceiling =
      cfg.get<double>("/resources/abstain_ceiling", rs.detector.abstain_ceiling);

  if (cfg.has("/resources/languages")) {
    for (const auto& [lang, spec] : cfg.raw.at("/resources/languages"_json_pointer).items()) {
      LanguageResources lr;
      {
        std::ifstream in(resolve_resource(spec.at("dictionary").get<std::string>()));
        if (!in) throw std::runtime_error("cannot open dictionary for " + lang);
        lr.dict = load_dictionary(in, lang);
      }
      {
        std::ifstream in(resolve_resource(spec.at("trigrams").get<std::string>()));
        if (!in) throw std::runtime_error("cannot open tri-gram profile for " + lang);
        lr.trigrams = load_trigram_profile(in);
      }
      rs.by_lang.emplace(lang, std::move(lr));
    }
  }
  if (cfg.has("/resources/langid_profiles")) {
    for (const auto& path : cfg.raw.at("/resources/langid_profiles"_json_pointer)) {
      std::ifstream in(resolve_resource(path.get<std::string>()));
      if (!in) throw std::runtime_error("cannot open langid profile " + path.get<std::string>());
      rs.langid_profiles.push_back(load_language_profile(in));
    }
  }
  return rs;
}

std::vector<double> parse_grid(const std::string& spec) {
  // "min:max:step", inclusive endpoints within step/2.
  double lo = 0.0, hi = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
    throw std::runtime_error("bad sweep grid (expected min:max:step): " + spec);
  std::vector<double> grid;
  for (double t = lo; t <= hi + step / 2.0; t += step) grid.push_back(t);
  return grid;
}

void report_skips(const LoadReport& report) {
  for (const auto& skip : report.skipped)
    std::cerr << "skipped line " << skip.line << ": " << skip.reason << "\n";
  if (!report.skipped.empty())
    std::cerr << report.skipped.size() << " record(s) skipped\n";
}

std::string sidecar_jsonl(const std::vector<std::pair<std::string, std::string>>& items,
                          const char* key) {
  std::ostringstream out;
  for (const auto& [id, detail] : items) {
    json j;
    j["id"] = id;
    j[key] = detail;
    out << j.dump() << '\n';
  }
  return out.str();
}

struct TrainMatrices {
  std::vector<std::vector<double>> X;
  std::vector<double> y;
  std::vector<double> w;
};

TrainMatrices to_matrices(const LabeledSet& set) {
  TrainMatrices m;
  m.X.reserve(set.examples.size());
  for (const LabeledExample& ex : set.examples) {
    const auto a = ex.features.as_array();
    m.X.emplace_back(a.begin(), a.end());
    m.y.push_back(ex.target);
    m.w.push_back(static_cast<double>(ex.char_count));
  }
  return m;
}

int run(int argc, char** argv) {
  CLI::App app{"Block-level OCR quality assessment and reprocessing candidate selection"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override it");

  // ---- build-profile ----------------------------------------------------
  auto* cmd_profile = app.add_subcommand(
      "build-profile", "Build a tri-gram rank table or a langid n-gram profile from a corpus");
  std::string bp_corpus, bp_lang, bp_out, bp_kind = "trigram";
  int bp_gamma = -1, bp_max_rank = -1;
  cmd_profile->add_option("--corpus", bp_corpus, "Corpus text file")->required();
  cmd_profile->add_option("--lang", bp_lang, "Language tag (de, fr, lb)")->required();
  cmd_profile->add_option("--out", bp_out, "Output profile file")->required();
  cmd_profile->add_option("--kind", bp_kind, "trigram or langid")
      ->check(CLI::IsMember({"trigram", "langid"}));
  cmd_profile->add_option("--gamma", bp_gamma, "Tri-gram table size (default 1000)");
  cmd_profile->add_option("--max-rank", bp_max_rank, "Langid profile cap (default 400)");

  // ---- degrade -----------------------------------------------------------
  auto* cmd_degrade = app.add_subcommand(
      "degrade", "Produce synthetically degraded copies of blocks via a confusion table");
  std::string dg_blocks, dg_out, dg_table, dg_variant = "bad", dg_suffix;
  double dg_rate = -1.0;
  std::uint64_t dg_seed = 0;
  bool dg_seed_set = false;
  cmd_degrade->add_option("--blocks", dg_blocks, "Input block file (JSONL)")->required();
  cmd_degrade->add_option("--out", dg_out, "Output block file")->required();
  cmd_degrade->add_option("--table", dg_table, "Confusion table file (default: built-in)");
  cmd_degrade->add_option("--rate", dg_rate, "Replacement rate in [0,1]")->required();
  cmd_degrade->add_option("--variant", dg_variant, "Variant tag for the output blocks")
      ->check(CLI::IsMember({"ori", "new", "bad"}));
  cmd_degrade->add_option("--id-suffix", dg_suffix, "Id suffix (default: -<variant>)");
  cmd_degrade->add_option("--seed", dg_seed, "Seed")->each([&](const std::string&) {
    dg_seed_set = true;
  });

  // ---- extract -----------------------------------------------------------
  auto* cmd_extract = app.add_subcommand(
      "extract", "Detect languages and extract the feature vector of every block");
  std::string ex_blocks, ex_out, ex_abstained;
  cmd_extract->add_option("--blocks", ex_blocks, "Input block file")->required();
  cmd_extract->add_option("--out", ex_out, "Feature dump output (JSONL)")->required();
  cmd_extract->add_option("--abstained", ex_abstained,
                          "Sidecar report (default: <out>.abstained.jsonl)");

  // ---- label -------------------------------------------------------------
  auto* cmd_label = app.add_subcommand(
      "label", "Compute ground-truth quality q and class labels at a threshold");
  std::string lb_blocks, lb_out;
  double lb_theta = -1.0;
  cmd_label->add_option("--blocks", lb_blocks, "Block file incl. ground-truth blocks")
      ->required();
  cmd_label->add_option("--out", lb_out, "Label dump output (JSONL)")->required();
  cmd_label->add_option("--theta", lb_theta, "Quality threshold in (0,1); default from config");

  // ---- train -------------------------------------------------------------
  auto* cmd_train = app.add_subcommand("train", "Fit a model and write the artifact");
  std::string tr_features, tr_labels, tr_enhance, tr_out, tr_model = "knn", tr_test_out;
  int tr_k = -1, tr_epochs = -1, tr_patience = -1;
  double tr_lr = -1.0;
  long long tr_beta = -1;
  std::uint64_t tr_seed = 0;
  bool tr_seed_set = false;
  cmd_train->add_option("--features", tr_features, "Feature dump (JSONL)")->required();
  cmd_train->add_option("--labels", tr_labels, "Label dump for classification");
  cmd_train->add_option("--enhance-from", tr_enhance,
                        "Label dump holding q for ori and new variants; trains the regressor");
  cmd_train->add_option("--model", tr_model, "knn, mlp or knn-regress")
      ->check(CLI::IsMember({"knn", "mlp", "knn-regress"}));
  cmd_train->add_option("--out", tr_out, "Model artifact output")->required();
  cmd_train->add_option("--k", tr_k, "Neighbour count (classify default 15, regress 43)");
  cmd_train->add_option("--beta", tr_beta,
                        "Hold out a beta-sized test split before training (alpha_ori kept)");
  cmd_train->add_option("--test-out", tr_test_out, "Where to write the held-out test set");
  cmd_train->add_option("--epochs", tr_epochs, "MLP epoch budget (default 50)");
  cmd_train->add_option("--patience", tr_patience, "MLP early-stopping patience (default 10)");
  cmd_train->add_option("--lr", tr_lr, "MLP learning rate (default 1e-4)");
  cmd_train->add_option("--seed", tr_seed, "Seed")->each([&](const std::string&) {
    tr_seed_set = true;
  });

  // ---- evaluate ----------------------------------------------------------
  auto* cmd_eval = app.add_subcommand("evaluate", "Score a model on a test set or via LOOCV");
  std::string ev_model, ev_test, ev_report, ev_features, ev_labels, ev_enhance, ev_sweep,
      ev_sweep_csv, ev_format = "json";
  bool ev_loocv = false;
  long long ev_beta = -1;
  int ev_k = -1;
  std::uint64_t ev_seed = 0;
  bool ev_seed_set = false;
  cmd_eval->add_option("--model", ev_model, "Model artifact");
  cmd_eval->add_option("--test", ev_test, "Held-out test set written by train");
  cmd_eval->add_flag("--loocv", ev_loocv, "Leave-one-out cross-validation of the regressor");
  cmd_eval->add_option("--features", ev_features, "Feature dump (loocv / theta sweep)");
  cmd_eval->add_option("--enhance-from", ev_enhance, "Label dump for regression targets");
  cmd_eval->add_option("--labels", ev_labels, "Label dump with q values (theta sweep)");
  cmd_eval->add_option("--theta-sweep", ev_sweep, "min:max:step grid of thresholds");
  cmd_eval->add_option("--sweep-csv", ev_sweep_csv, "CSV output for the sweep");
  cmd_eval->add_option("--beta", ev_beta, "Test size for the sweep protocol");
  cmd_eval->add_option("--k", ev_k, "Neighbour count for the sweep protocol");
  cmd_eval->add_option("--report", ev_report, "Report output (JSON)");
  cmd_eval->add_option("--format", ev_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_eval->add_option("--seed", ev_seed, "Seed")->each([&](const std::string&) {
    ev_seed_set = true;
  });

  // ---- select ------------------------------------------------------------
  auto* cmd_select = app.add_subcommand(
      "select", "Apply the gain regressor and pick reprocessing candidates. "
                "Thresholds in [0, 0.05] tend to give the best trade-off.");
  std::string sl_model, sl_features, sl_report, sl_csv, sl_targets, sl_sweep,
      sl_format = "json";
  double sl_theta = std::numeric_limits<double>::quiet_NaN();
  cmd_select->add_option("--model", sl_model, "KNN regressor artifact")->required();
  cmd_select->add_option("--features", sl_features, "Feature dump of candidate blocks")
      ->required();
  cmd_select->add_option("--theta", sl_theta, "Cut-off: candidate iff predicted gain >= theta");
  cmd_select->add_option("--sweep", sl_sweep, "min:max:step grid instead of a single theta");
  cmd_select->add_option("--targets-from", sl_targets,
                         "Label dump with q of ori/new variants; enables the eps ratios");
  cmd_select->add_option("--report", sl_report, "Report output (JSON)");
  cmd_select->add_option("--csv", sl_csv, "CSV output for the sweep");
  cmd_select->add_option("--format", sl_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  Config cfg;
  if (!config_path.empty()) cfg = Config::load(config_path);
  const auto seed_or = [&](bool flag_set, std::uint64_t flag_value) {
    return flag_set ? flag_value : cfg.get<std::uint64_t>("/seed", 42);
  };

  if (cmd_profile->parsed()) {
    const std::string corpus = read_file(resolve_resource(bp_corpus));
    std::ostringstream out;
    if (bp_kind == "trigram") {
      const int gamma = bp_gamma > 0 ? bp_gamma : cfg.get<int>("/gamma", 1000);
      save_trigram_profile(out, build_trigram_profile(corpus, bp_lang, gamma));
    } else {
      const int cap = bp_max_rank > 0 ? bp_max_rank : cfg.get<int>("/resources/doc_max_rank", 400);
      save_language_profile(out, build_language_profile(corpus, bp_lang, cap));
    }
    atomic_write_file(bp_out, out.str());
    return 0;
  }

  if (cmd_degrade->parsed()) {
    LoadReport load_report;
    const std::vector<Block> blocks = load_blocks_file(dg_blocks, &load_report);
    report_skips(load_report);
    ConfusionTable table = default_confusion_table();
    if (!dg_table.empty()) {
      std::ifstream in(resolve_resource(dg_table));
      if (!in) throw std::runtime_error("cannot open confusion table: " + dg_table);
      table = load_confusion_table(in);
    }
    const Variant variant = *variant_from_name(dg_variant);
    const std::string suffix = dg_suffix.empty() ? "-" + dg_variant : dg_suffix;
    const std::uint64_t seed = seed_or(dg_seed_set, dg_seed);

    std::vector<Block> out;
    out.reserve(blocks.size());
    for (const Block& b : blocks) {
      Block d = b;
      d.id = b.id + suffix;
      d.variant = variant;
      d.gt_id = b.variant == Variant::ground_truth ? b.id : b.gt_id;
      d.text = degrade(b.text, table, dg_rate, derive_seed(seed, b.id));
      out.push_back(std::move(d));
    }
    atomic_write_file(dg_out, blocks_to_string(out));
    return 0;
  }

  if (cmd_extract->parsed()) {
    LoadReport load_report;
    const std::vector<Block> blocks = load_blocks_file(ex_blocks, &load_report);
    report_skips(load_report);
    const ResourceSet resources = load_resources(cfg);
    if (resources.by_lang.empty())
      throw std::runtime_error("extract needs per-language resources in the config");
    ExtractReport report;
    const std::vector<FeatureRecord> records = extract_corpus(blocks, resources, &report);
    atomic_write_file(ex_out, feature_records_to_jsonl(records));
    const std::string sidecar =
        ex_abstained.empty() ? ex_out + ".abstained.jsonl" : ex_abstained;
    atomic_write_file(sidecar, sidecar_jsonl(report.abstained, "reason"));
    if (!report.abstained.empty())
      std::cerr << report.abstained.size() << " block(s) abstained\n";
    return 0;
  }

  if (cmd_label->parsed()) {
    LoadReport load_report;
    const std::vector<Block> blocks = load_blocks_file(lb_blocks, &load_report);
    report_skips(load_report);
    const double theta = lb_theta > 0 ? lb_theta : cfg.get<double>("/theta", 0.95);
    std::vector<std::pair<std::string, std::string>> dangling;
    const std::vector<LabelRecord> records = label_corpus(blocks, theta, &dangling);
    atomic_write_file(lb_out, label_records_to_jsonl(records));
    atomic_write_file(lb_out + ".dangling.jsonl", sidecar_jsonl(dangling, "gt_id"));
    if (!dangling.empty()) std::cerr << dangling.size() << " dangling gt_id(s)\n";
    return 0;
  }

  if (cmd_train->parsed()) {
    const auto features = feature_records_from_jsonl(read_file(tr_features));
    const std::uint64_t seed = seed_or(tr_seed_set, tr_seed);

    if (tr_model == "knn-regress" || !tr_enhance.empty()) {
      if (tr_enhance.empty())
        throw std::runtime_error("knn-regress needs --enhance-from <label dump>");
      const auto labels = label_records_from_jsonl(read_file(tr_enhance));
      std::vector<std::string> unmatched;
      const LabeledSet set = join_enhancement(features, labels, &unmatched);
      if (set.examples.empty()) throw std::runtime_error("no enhancement examples assembled");
      if (!unmatched.empty())
        std::cerr << unmatched.size() << " feature record(s) without ori/new q pair\n";
      const int k = tr_k > 0 ? tr_k : cfg.get<int>("/knn/K", 43);
      const TrainMatrices m = to_matrices(set);
      ModelArtifact artifact;
      artifact.meta.seed = seed;
      artifact.meta.theta = cfg.get<double>("/theta", 0.95);
      artifact.model = fit_knn(k, KnnTask::regress, ScalerKind::minmax, m.X, m.y, m.w);
      save_model(tr_out, artifact);
      return 0;
    }

    if (tr_labels.empty()) throw std::runtime_error("train needs --labels or --enhance-from");
    const auto labels = label_records_from_jsonl(read_file(tr_labels));
    LabeledSet set = join_classification(features, labels);
    if (set.examples.empty()) throw std::runtime_error("no labeled examples assembled");
    const double theta = labels.front().theta;

    if (tr_beta > 0) {
      const SplitResult split = split_train_test(set, static_cast<std::size_t>(tr_beta), seed);
      if (tr_test_out.empty())
        throw std::runtime_error("--beta needs --test-out for the held-out split");
      atomic_write_file(tr_test_out, labeled_set_to_jsonl(split.test));
      set = split.train;
    }

    ModelArtifact artifact;
    artifact.meta.seed = seed;
    artifact.meta.theta = theta;
    const TrainMatrices m = to_matrices(set);
    if (tr_model == "knn") {
      const int k = tr_k > 0 ? tr_k : cfg.get<int>("/knn/k", 15);
      artifact.model = fit_knn(k, KnnTask::classify, ScalerKind::minmax, m.X, m.y, m.w);
    } else {
      MlpConfig mc;
      mc.layers = {4, 16, 16, 2};
      mc.epochs = tr_epochs >= 0 ? tr_epochs : cfg.get<int>("/mlp/epochs", 50);
      mc.patience = tr_patience > 0 ? tr_patience : cfg.get<int>("/mlp/patience", 10);
      mc.learning_rate = tr_lr > 0 ? tr_lr : cfg.get<double>("/mlp/learning_rate", 1e-4);
      mc.dropout = cfg.get<double>("/mlp/dropout", 0.5);
      mc.seed = seed;

      MlpClassifier clf;
      clf.scaler = fit_scaler(m.X, ScalerKind::standardize);
      std::vector<std::vector<double>> scaled;
      scaled.reserve(m.X.size());
      for (const auto& row : m.X) scaled.push_back(apply_scaler(clf.scaler, row));
      // 20% validation split, seed-controlled.
      std::vector<std::size_t> order(scaled.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      Rng rng(seed ^ 0xA5A5A5A5ull);
      rng.shuffle(order);
      const std::size_t val_count = scaled.size() / 5;
      std::vector<std::vector<double>> train_x, val_x;
      std::vector<int> train_y, val_y;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t idx = order[i];
        const int cls = m.y[idx] != 0.0 ? 1 : 0;
        if (i < val_count) {
          val_x.push_back(scaled[idx]);
          val_y.push_back(cls);
        } else {
          train_x.push_back(scaled[idx]);
          train_y.push_back(cls);
        }
      }
      clf.net = mlp_train(mc, train_x, train_y, val_x, val_y);
      artifact.model = std::move(clf);
    }
    save_model(tr_out, artifact);
    return 0;
  }

  if (cmd_eval->parsed()) {
    if (ev_loocv) {
      if (ev_model.empty() || ev_features.empty() || ev_enhance.empty())
        throw std::runtime_error("evaluate --loocv needs --model, --features, --enhance-from");
      const ModelArtifact artifact = load_model(ev_model);
      const auto* knn = std::get_if<KnnModel>(&artifact.model);
      if (!knn || knn->task != KnnTask::regress)
        throw std::runtime_error("evaluate --loocv needs a KNN regressor artifact");
      const auto features = feature_records_from_jsonl(read_file(ev_features));
      const auto labels = label_records_from_jsonl(read_file(ev_enhance));
      const LabeledSet set = join_enhancement(features, labels);
      const RegressionReport report =
          loocv_knn_regression(set, {knn->k, knn->scaler.kind});
      const std::string out = regression_report_to_json(report, knn->k);
      if (!ev_report.empty())
        atomic_write_file(ev_report, out);
      else
        std::cout << out;
      return 0;
    }

    if (!ev_sweep.empty()) {
      if (ev_features.empty() || ev_labels.empty())
        throw std::runtime_error("evaluate --theta-sweep needs --features and --labels");
      const auto features = feature_records_from_jsonl(read_file(ev_features));
      const auto labels = label_records_from_jsonl(read_file(ev_labels));
      ProtocolConfig pc;
      pc.beta = ev_beta > 0 ? static_cast<std::size_t>(ev_beta)
                            : cfg.get<std::size_t>("/split/beta", 1000);
      pc.k = ev_k > 0 ? ev_k : cfg.get<int>("/knn/k", 15);
      pc.seed = seed_or(ev_seed_set, ev_seed);
      const auto rows =
          theta_sweep_classification(features, labels, parse_grid(ev_sweep), pc);
      const std::string csv = theta_metrics_to_csv(rows);
      if (!ev_sweep_csv.empty())
        atomic_write_file(ev_sweep_csv, csv);
      else
        std::cout << csv;
      return 0;
    }

    if (ev_model.empty() || ev_test.empty())
      throw std::runtime_error("evaluate needs --model and --test (or --loocv / --theta-sweep)");
    const ModelArtifact artifact = load_model(ev_model);

    if (const auto* knn = std::get_if<KnnModel>(&artifact.model);
        knn && knn->task == KnnTask::regress) {
      const LabeledSet test = labeled_set_from_jsonl(read_file(ev_test), false);
      std::vector<double> preds, targets, weights;
      for (const LabeledExample& ex : test.examples) {
        preds.push_back(knn_regress(*knn, ex.features.as_array()));
        targets.push_back(ex.target);
        weights.push_back(static_cast<double>(ex.char_count));
      }
      RegressionReport report;
      report.count = preds.size();
      report.mae = mae(preds, targets);
      report.mwae = mwae(preds, targets, weights);
      report.mean_bias = mean_bias(preds, targets);
      double mean_target = 0.0;
      for (const double t : targets) mean_target += t;
      mean_target /= static_cast<double>(targets.size());
      report.baseline_mae = mae(std::vector<double>(targets.size(), mean_target), targets);
      const std::string out = regression_report_to_json(report, knn->k);
      if (!ev_report.empty())
        atomic_write_file(ev_report, out);
      else
        std::cout << out;
      return 0;
    }

    const LabeledSet test = labeled_set_from_jsonl(read_file(ev_test), true);
    std::vector<int> preds, truth;
    std::size_t ori_total = 0, ori_pos = 0;
    for (const LabeledExample& ex : test.examples) {
      preds.push_back(predict_class(artifact, ex.features));
      truth.push_back(ex.target != 0.0 ? 1 : 0);
      if (ex.origin == Variant::original) {
        ++ori_total;
        ori_pos += ex.target != 0.0;
      }
    }
    const ClassificationReport report = evaluate_classification(preds, truth);
    const double alpha =
        ori_total ? static_cast<double>(ori_pos) / static_cast<double>(ori_total) : 0.0;
    const std::string out =
        classification_report_to_json(report, artifact.meta.theta, alpha);
    if (!ev_report.empty())
      atomic_write_file(ev_report, out);
    else
      std::cout << out;
    return 0;
  }

  if (cmd_select->parsed()) {
    const ModelArtifact artifact = load_model(sl_model);
    const auto features = feature_records_from_jsonl(read_file(sl_features));

    std::vector<Prediction> predictions;
    predictions.reserve(features.size());
    for (const FeatureRecord& f : features)
      predictions.push_back(
          {f.id, predict_gain(artifact, f.features), static_cast<double>(f.char_count)});

    // Actual gains, when a label dump with ori/new q values is available.
    std::vector<double> targets;
    bool have_targets = false;
    if (!sl_targets.empty()) {
      const auto labels = label_records_from_jsonl(read_file(sl_targets));
      const LabeledSet actual = join_enhancement(features, labels);
      std::unordered_map<std::string, double> by_id;
      for (const LabeledExample& ex : actual.examples) by_id.emplace(ex.id, ex.target);
      targets.reserve(predictions.size());
      for (const Prediction& p : predictions) {
        const auto it = by_id.find(p.id);
        if (it == by_id.end())
          throw std::runtime_error("no actual gain for block " + p.id);
        targets.push_back(it->second);
      }
      have_targets = true;
    }

    if (!sl_sweep.empty()) {
      if (!have_targets)
        throw std::runtime_error("select --sweep needs --targets-from for the ratios");
      std::vector<double> preds, weights;
      for (const Prediction& p : predictions) {
        preds.push_back(p.predicted_gain);
        weights.push_back(p.weight);
      }
      const auto rows = sweep_ratios(preds, targets, weights, parse_grid(sl_sweep));
      const std::string csv = sweep_to_csv(rows);
      if (!sl_csv.empty())
        atomic_write_file(sl_csv, csv);
      else
        std::cout << csv;
      return 0;
    }

    if (std::isnan(sl_theta)) sl_theta = cfg.get<double>("/select/theta", 0.0);
    const std::vector<Decision> decisions = select_candidates(predictions, sl_theta);
    SelectionRatios ratios;
    if (have_targets) {
      std::vector<bool> cand;
      std::vector<double> weights;
      for (std::size_t i = 0; i < decisions.size(); ++i) {
        cand.push_back(decisions[i].candidate);
        weights.push_back(predictions[i].weight);
      }
      ratios = selection_ratios(cand, targets, weights);
    } else {
      double total = 0.0, cand_weight = 0.0;
      for (std::size_t i = 0; i < decisions.size(); ++i) {
        total += predictions[i].weight;
        if (decisions[i].candidate) cand_weight += predictions[i].weight;
      }
      ratios.c = total > 0.0 ? cand_weight / total : 0.0;
      ratios.eps_r = ratios.eps_i = 0.0;
    }
    const std::string out = selection_report_to_json(ratios, sl_theta, decisions);
    if (!sl_report.empty())
      atomic_write_file(sl_report, out);
    else
      std::cout << out;
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
