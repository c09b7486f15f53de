#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bagwise/core.hpp"
#include "bagwise/model.hpp"

namespace bagwise {

// 2x2 confusion counts over a fixed label vocabulary; counts[gold][pred].
struct ConfusionCounts {
  std::array<Label, 2> labels;
  std::array<std::array<long, 2>, 2> counts{{{0, 0}, {0, 0}}};

  void add(const Label& gold, const Label& predicted);
  long total() const noexcept;
};

// sum_l support(l)/total * precision(l) with precision(l) = TP/(TP+FP) and
// zero predicted count contributing precision 0.
double weighted_precision(const ConfusionCounts& cm);
double accuracy(const ConfusionCounts& cm);

// Hyper-parameter value lists; the Cartesian product is searched. Kinds
// without a given hyper-parameter ignore that axis.
struct GridSpec {
  std::vector<double> c_values{0.01, 0.1, 1.0, 10.0, 100.0};
  std::vector<double> gamma_values{1e-3, 1e-2, 0.1, 1.0};
};

struct GridPoint {
  double C = 1.0;
  std::optional<double> gamma;
};

// Grid points searched for a classifier kind, in grid order.
std::vector<GridPoint> grid_points_for(ClassifierKind kind,
                                       const GridSpec& grid);

struct CvPointResult {
  GridPoint point;
  double mean_precision = 0.0;
  int folds_evaluated = 0;
};

struct CvOutcome {
  GridPoint best;
  double best_precision = 0.0;
  int degenerate_folds = 0;
  std::vector<CvPointResult> table;
};

// Profile-granularity k-fold CV maximizing weighted precision; ties keep the
// first grid point. Folds whose training side lacks a class are reported as
// degenerate and skipped.
CvOutcome cross_validate(std::span<const Bag> train_bags, ClassifierKind kind,
                         const GridSpec& grid, int folds, std::uint64_t seed,
                         const TrainConfig& base_cfg,
                         const SignMapping& mapping);

struct RunMetrics {
  int run = 0;
  double precision = 0.0;
  double accuracy = 0.0;
  long ties = 0;
  GridPoint selected;
};

struct ExperimentOptions {
  double train_fraction = 0.8;
  int folds = 5;
  GridSpec grid;
  TrainConfig base_cfg;
  SignMapping mapping{Label{"female"}, Label{"male"}};
  int misvm_max_outer = 50;
};

struct EvalReport {
  ClassifierKind classifier = ClassifierKind::svm_linear;
  FeatureSpace feature_space = FeatureSpace::deep;
  int bag_size = 1;
  int runs = 0;
  std::uint64_t seed = 0;
  ExperimentOptions options;
  std::size_t eligible_profiles = 0;
  std::vector<RunMetrics> run_metrics;
  double mean_precision = 0.0;
  double mean_accuracy = 0.0;
  long total_ties = 0;
};

// One experiment cell: per run r, re-split with seed+r, subsample train and
// test bags to bag_size with seed+r (profiles with fewer instances are
// dropped up front), cross-validate on the train side, fit, and evaluate on
// the test side. Metrics are averaged over runs.
EvalReport run_experiment(std::span<const Bag> bags, ClassifierKind kind,
                          int bag_size, FeatureSpace space, int runs,
                          std::uint64_t seed, const ExperimentOptions& opts);

struct SweepCell {
  ClassifierKind classifier;
  FeatureSpace space;
  int bag_size;
};

struct SweepFailure {
  SweepCell cell;
  std::string message;
};

struct SweepResult {
  std::vector<EvalReport> reports;  // classifier-major, then space, then size
  std::vector<SweepFailure> failures;
};

// Full Cartesian sweep; failed cells are recorded and the sweep continues.
// Cells may be evaluated by up to `jobs` worker threads; results are merged
// in axis order so the output is independent of the worker count.
SweepResult sweep(const std::map<FeatureSpace, std::vector<Bag>>& bags_by_space,
                  std::span<const ClassifierKind> classifiers,
                  std::span<const int> bag_sizes,
                  std::span<const FeatureSpace> spaces, int runs,
                  std::uint64_t seed, const ExperimentOptions& opts,
                  int jobs = 1);

struct BestRow {
  ClassifierKind classifier;
  double precision = 0.0;
  double accuracy = 0.0;
  int bag_size = 0;
  FeatureSpace space = FeatureSpace::deep;
};

// Best-precision cell per classifier, in classifier axis order.
std::vector<BestRow> best_per_classifier(std::span<const EvalReport> reports);

// Fixed-layout summary of the best rows (one line per classifier).
std::string render_summary_table(std::span<const BestRow> rows);

// `classifier,feature_space,bag_size,run,precision,accuracy,ties` rows for
// every run of every report, in report order.
std::string merged_csv(std::span<const EvalReport> reports);

// Report serialization (JSON document, stable field order).
std::string report_to_json(const EvalReport& report);
void write_report(const std::string& path, const EvalReport& report);

}  // namespace bagwise
