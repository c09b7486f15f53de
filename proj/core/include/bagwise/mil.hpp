#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bagwise/classifiers.hpp"
#include "bagwise/core.hpp"

namespace bagwise {

struct MisvmConfig {
  double C = 1.0;
  int max_outer_iterations = 50;
  TrainConfig inner;  // inner SVM solver settings; inner.C is overridden by C
  std::uint64_t seed = 0;

  MisvmConfig() {
    // Witness-selection monotonicity needs near-exact inner solves.
    inner.tolerance = 1e-10;
    inner.max_iterations = 2'000'000;
  }
};

// Bag-level maximum-margin model: a linear decision function plus the
// alternating-optimization metadata.
struct MisvmModel {
  LinearModel linear;
  int outer_iterations = 0;
  bool reached_fixpoint = false;
  // (bag index, instance index) of the final witness of each positive bag,
  // in input bag order.
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
  // Soft-margin objective after each outer iteration's inner solve.
  std::vector<double> objective_trace;
};

// signed_label * max over instances of (<w,x> + b).
double functional_margin(const LinearModel& model, const Bag& bag,
                         int signed_label);

// sign of the bag maximum, through the mapping; exactly 0 is positive.
const Label& predict_bag(const MisvmModel& model, const Bag& bag,
                         const SignMapping& mapping);

// Alternating optimization: witnesses of positive bags start at the instance
// closest to the centroid (over positive bags) of per-bag instance means;
// each round trains a linear SVM on all negative-bag instances plus the
// current witnesses, then reselects each witness as its bag's argmax
// decision instance (ties to the lowest index), until a fixpoint or
// max_outer_iterations.
MisvmModel train_misvm(std::span<const Bag> bags, const SignMapping& mapping,
                       const MisvmConfig& cfg);

}  // namespace bagwise
