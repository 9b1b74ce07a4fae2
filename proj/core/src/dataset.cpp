#include "ocrqa/dataset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ocrqa/metrics.hpp"
#include "ocrqa/rng.hpp"

namespace ocrqa {

namespace {

std::unordered_set<std::string> gt_ids_of(const LabeledSet& set) {
  std::unordered_set<std::string> ids;
  for (const auto& ex : set.examples) {
    if (!ex.gt_id.empty()) ids.insert(ex.gt_id);
  }
  return ids;
}

std::vector<std::vector<double>> feature_matrix(const LabeledSet& set,
                                                const std::vector<std::size_t>& idx) {
  std::vector<std::vector<double>> X;
  X.reserve(idx.size());
  for (const std::size_t i : idx) {
    const auto a = set.examples[i].features.as_array();
    X.emplace_back(a.begin(), a.end());
  }
  return X;
}

}  // namespace

LabeledSet assemble_ball(const LabeledSet& ori, const LabeledSet& renewed,
                         const LabeledSet& bad, AssembleReport* report) {
  if (ori.classification != renewed.classification ||
      ori.classification != bad.classification)
    throw std::invalid_argument("assemble_ball: mixed target kinds");

  if (report) {
    const auto gt_ori = gt_ids_of(ori);
    const auto gt_new = gt_ids_of(renewed);
    const auto gt_bad = gt_ids_of(bad);
    for (const auto& id : gt_ori) {
      if (!gt_new.count(id))
        report->issues.push_back("gt_id " + id + " present in ori but not in new");
    }
    for (const auto& id : gt_new) {
      if (!gt_ori.count(id))
        report->issues.push_back("gt_id " + id + " present in new but not in ori");
    }
    if (bad.examples.empty()) {
      report->issues.push_back("bad collection is empty; class balance may suffer");
    } else {
      for (const auto& id : gt_bad) {
        if (!gt_ori.count(id))
          report->issues.push_back("gt_id " + id + " present in bad but not in ori");
      }
    }
  }

  LabeledSet ball;
  ball.classification = ori.classification;
  ball.examples.reserve(ori.examples.size() + renewed.examples.size() + bad.examples.size());
  std::unordered_set<std::string> seen;
  for (const LabeledSet* part : {&ori, &renewed, &bad}) {
    for (const auto& ex : part->examples) {
      if (!seen.insert(ex.id).second)
        throw std::invalid_argument("assemble_ball: duplicate example id " + ex.id);
      ball.examples.push_back(ex);
    }
  }
  return ball;
}

SplitResult split_train_test(const LabeledSet& ball, std::size_t beta, std::uint64_t seed) {
  if (!ball.classification)
    throw std::invalid_argument("split_train_test: needs class targets");
  if (beta >= ball.examples.size())
    throw std::invalid_argument("split_train_test: beta must be smaller than the set");

  // Positivity rate measured on the ori-origin subset.
  std::size_t ori_total = 0;
  std::size_t ori_pos = 0;
  for (const auto& ex : ball.examples) {
    if (ex.origin == Variant::original) {
      ++ori_total;
      ori_pos += ex.target != 0.0;
    }
  }
  if (ori_total == 0)
    throw std::invalid_argument("split_train_test: no ori-origin examples to measure alpha");
  const double alpha_ori = static_cast<double>(ori_pos) / static_cast<double>(ori_total);

  const auto beta_d = static_cast<double>(beta);
  auto test_pos_count = static_cast<std::size_t>(alpha_ori * beta_d + 0.5);

  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < ball.examples.size(); ++i) {
    (ball.examples[i].target != 0.0 ? positives : negatives).push_back(i);
  }
  if (positives.size() < test_pos_count)
    throw std::invalid_argument(
        "split_train_test: need " + std::to_string(test_pos_count) + " positives for the test "
        "set but only " + std::to_string(positives.size()) + " exist");
  if (negatives.size() < beta - test_pos_count)
    throw std::invalid_argument(
        "split_train_test: need " + std::to_string(beta - test_pos_count) +
        " negatives for the test set but only " + std::to_string(negatives.size()) + " exist");

  Rng rng(seed);
  rng.shuffle(positives);
  rng.shuffle(negatives);

  SplitResult out;
  out.alpha_ori = alpha_ori;
  out.train.classification = out.test.classification = true;

  std::unordered_set<std::size_t> test_idx;
  std::unordered_set<std::string> test_gt_ids;
  for (std::size_t i = 0; i < test_pos_count; ++i) test_idx.insert(positives[i]);
  for (std::size_t i = 0; i < beta - test_pos_count; ++i) test_idx.insert(negatives[i]);
  for (const std::size_t i : test_idx) {
    out.test.examples.push_back(ball.examples[i]);
    if (!ball.examples[i].gt_id.empty()) test_gt_ids.insert(ball.examples[i].gt_id);
  }
  // Deterministic test order regardless of hashing.
  std::sort(out.test.examples.begin(), out.test.examples.end(),
            [](const LabeledExample& a, const LabeledExample& b) { return a.id < b.id; });

  // Remainder, minus anything sharing a gt_id with the test set.
  std::vector<std::size_t> pool_pos;
  std::vector<std::size_t> pool_neg;
  for (const std::size_t i : positives) {
    if (!test_idx.count(i) && !test_gt_ids.count(ball.examples[i].gt_id)) pool_pos.push_back(i);
  }
  for (const std::size_t i : negatives) {
    if (!test_idx.count(i) && !test_gt_ids.count(ball.examples[i].gt_id)) pool_neg.push_back(i);
  }
  const std::size_t per_class = std::min(pool_pos.size(), pool_neg.size());
  if (per_class == 0)
    throw std::invalid_argument(
        "split_train_test: cannot balance the train set, one class is exhausted");
  // The pools are already in shuffled order; taking a prefix subsamples the
  // majority class uniformly.
  std::vector<std::size_t> train_idx;
  train_idx.insert(train_idx.end(), pool_pos.begin(), pool_pos.begin() + per_class);
  train_idx.insert(train_idx.end(), pool_neg.begin(), pool_neg.begin() + per_class);
  std::sort(train_idx.begin(), train_idx.end());
  for (const std::size_t i : train_idx) out.train.examples.push_back(ball.examples[i]);
  return out;
}

RegressionReport loocv_knn_regression(const LabeledSet& set, const LoocvConfig& config) {
  const std::size_t n = set.examples.size();
  if (n < 2) throw std::invalid_argument("loocv: need at least two examples");
  if (config.k < 1 || static_cast<std::size_t>(config.k) > n - 1)
    throw std::invalid_argument("loocv: k must be in [1, n-1]");

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;

  std::vector<double> preds(n);
  std::vector<double> targets(n);
  std::vector<double> weights(n);
  std::vector<std::size_t> rest;
  rest.reserve(n - 1);
  for (std::size_t held = 0; held < n; ++held) {
    rest.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (i != held) rest.push_back(i);
    }
    std::vector<double> y;
    std::vector<double> w;
    y.reserve(n - 1);
    w.reserve(n - 1);
    for (const std::size_t i : rest) {
      y.push_back(set.examples[i].target);
      w.push_back(static_cast<double>(set.examples[i].char_count));
    }
    const KnnModel model =
        fit_knn(config.k, KnnTask::regress, config.scaler, feature_matrix(set, rest), y, w);
    const auto q = set.examples[held].features.as_array();
    preds[held] = knn_regress(model, q);
    targets[held] = set.examples[held].target;
    weights[held] = static_cast<double>(set.examples[held].char_count);
  }

  RegressionReport report;
  report.count = n;
  report.mae = mae(preds, targets);
  report.mwae = mwae(preds, targets, weights);
  report.mean_bias = mean_bias(preds, targets);
  double mean_target = 0.0;
  for (const double t : targets) mean_target += t;
  mean_target /= static_cast<double>(n);
  std::vector<double> baseline(n, mean_target);
  report.baseline_mae = mae(baseline, targets);
  return report;
}

ClassificationReport evaluate_classification(const std::vector<int>& preds,
                                             const std::vector<int>& labels) {
  ClassificationReport report;
  report.count = preds.size();
  report.f1 = f1(preds, labels);
  report.kappa = kappa(preds, labels, &report.kappa_degenerate);
  report.accuracy = accuracy(preds, labels);
  const ConfusionCounts c = confusion_counts(preds, labels);
  report.tp = c.tp;
  report.fp = c.fp;
  report.fn = c.fn;
  report.tn = c.tn;
  return report;
}

}  // namespace ocrqa
