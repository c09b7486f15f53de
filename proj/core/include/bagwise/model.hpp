#pragma once

#include <variant>

#include "bagwise/aggregate.hpp"
#include "bagwise/classifiers.hpp"
#include "bagwise/mil.hpp"

namespace bagwise {

using AnyModel =
    std::variant<GaussianNBModel, LinearModel, KernelModel, MisvmModel>;

// A fitted classifier together with its label <-> sign mapping.
struct TrainedModel {
  ClassifierKind kind = ClassifierKind::svm_linear;
  AnyModel model;
  SignMapping mapping;
};

// Dispatch: SIL kinds train on propagated instances, MI-SVM on bags.
TrainedModel train_on_bags(ClassifierKind kind, std::span<const Bag> bags,
                           const SignMapping& mapping, const TrainConfig& cfg,
                           int misvm_max_outer = 50);

// Bag prediction: majority vote for SIL models (tie randomness keyed to
// profile_id and seed), decision-function max for MI-SVM.
VoteOutcome predict_bag_any(const TrainedModel& model, const Bag& bag,
                            std::uint64_t seed);

}  // namespace bagwise
