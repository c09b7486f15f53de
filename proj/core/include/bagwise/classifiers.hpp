#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bagwise/core.hpp"

namespace bagwise {

enum class ClassifierKind { gaussian_nb, logreg, svm_linear, svm_rbf, misvm };

const char* to_string(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier_kind(std::string_view name);

struct TrainConfig {
  double C = 1.0;
  double tolerance = 1e-6;
  long max_iterations = 1'000'000;
  std::uint64_t seed = 0;
  double variance_floor = 1e-9;  // gaussian_nb only
  double gamma = 1.0;            // svm_rbf only
};

// Gaussian Naive Bayes: class priors plus per-class, per-dimension mean and
// variance (variance clamped from below by the floor).
struct GaussianNBModel {
  double prior_positive = 0.5;
  double prior_negative = 0.5;
  std::vector<double> mean_positive, mean_negative;
  std::vector<double> var_positive, var_negative;
  double variance_floor = 1e-9;
};

enum class LinearKind { logreg, svm };

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  LinearKind kind = LinearKind::svm;
  // solver report
  long iterations = 0;
  bool converged = true;
};

// Kernel SVM in dual form; coefficients are alpha_i * y_i for the retained
// support vectors (alpha_i > 0).
struct KernelModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coefficients;
  double bias = 0.0;
  double gamma = 1.0;
  double regularization = 1.0;  // C used at training, echoed for checks
  // solver report
  long iterations = 0;
  bool converged = true;
  double kkt_violation = 0.0;
};

// Trainers map labels through `mapping` and fit signed {-1,+1} targets.
// All are deterministic in (data order, cfg).

// Sample statistics per class (MLE variances), priors from class frequency.
GaussianNBModel train_gaussian_nb(std::span<const LabeledInstance> data,
                                  const SignMapping& mapping,
                                  const TrainConfig& cfg);

// Minimizes mean logistic loss + ||w||^2 / (2C), bias unpenalized, by L-BFGS
// with backtracking line search. Stops when the gradient norm falls below
// cfg.tolerance or after cfg.max_iterations (reported via `converged`).
LinearModel train_logreg(std::span<const LabeledInstance> data,
                         const SignMapping& mapping, const TrainConfig& cfg);

// Soft-margin SVM: min 1/2 ||w||^2 + C sum hinge(y (<w,x> + b)), solved in
// the dual by SMO with an unpenalized bias.
LinearModel train_linear_svm(std::span<const LabeledInstance> data,
                             const SignMapping& mapping,
                             const TrainConfig& cfg);

// Dual SVM with k(a, b) = exp(-gamma ||a - b||^2), solved by SMO to KKT
// violation <= cfg.tolerance. Non-convergence is reported on the model.
KernelModel train_rbf_svm(std::span<const LabeledInstance> data,
                          const SignMapping& mapping, const TrainConfig& cfg);

// Decision values: log-posterior difference for NB, <w,x> + b for linear
// models, kernel expansion + bias for kernel models.
double decision_value(const GaussianNBModel& model, const FeatureVector& x);
double decision_value(const LinearModel& model, const FeatureVector& x);
double decision_value(const KernelModel& model, const FeatureVector& x);

// sign(decision) through the mapping; a decision of exactly 0 maps to the
// positive label.
template <typename Model>
const Label& predict_instance(const Model& model, const FeatureVector& x,
                              const SignMapping& mapping) {
  return from_signed(decision_value(model, x) >= 0.0 ? +1 : -1, mapping);
}

// Logistic objective and gradient at (w, b): mean log-loss over the signed
// data plus ||w||^2 / (2C). Exposed so gradients can be checked against
// finite differences.
double logreg_loss_and_gradient(std::span<const std::vector<double>> xs,
                                std::span<const int> ys,
                                std::span<const double> w, double b, double C,
                                std::span<double> grad_w, double& grad_b);

// Primal soft-margin objective 1/2||w||^2 + C sum hinge; used by tests and
// by the MI-SVM objective trace.
double linear_svm_objective(std::span<const std::vector<double>> xs,
                            std::span<const int> ys,
                            std::span<const double> w, double b, double C);

}  // namespace bagwise
