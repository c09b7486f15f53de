#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bagwise/classifiers.hpp"
#include "bagwise/core.hpp"

namespace bagwise {

// Bag labels copied down to every instance; output order is bag order, then
// instance order within each bag.
std::vector<LabeledInstance> propagate_labels(std::span<const Bag> bags);

struct VoteOutcome {
  Label label;
  bool tie = false;
};

// argmax label count. Exact ties are resolved by a uniform draw among the
// tied labels; the draw is keyed to the prediction multiset and the seed, so
// the vote is invariant under permutation of the predictions.
VoteOutcome majority_vote_detail(std::span<const Label> predictions,
                                 std::span<const Label> vocabulary,
                                 std::uint64_t seed);

Label majority_vote(std::span<const Label> predictions,
                    std::span<const Label> vocabulary, std::uint64_t seed);

std::uint64_t mix_vote_seed(const std::string& profile_id, std::uint64_t seed);

// Per-instance prediction followed by the vote. Tie randomness is seeded per
// (profile_id, seed) so repeated experiment runs are reproducible while ties
// stay uniform across profiles.
template <typename Model>
VoteOutcome predict_bag_sil_detail(const Model& model, const Bag& bag,
                                   const SignMapping& mapping,
                                   std::uint64_t seed) {
  if (bag.instances.empty()) fail(Errc::empty_bag, "bag " + bag.profile_id);
  std::vector<Label> predictions;
  predictions.reserve(bag.instances.size());
  for (const FeatureVector& x : bag.instances)
    predictions.push_back(predict_instance(model, x, mapping));
  const Label vocabulary[2] = {mapping.positive, mapping.negative};
  return majority_vote_detail(predictions, vocabulary,
                              mix_vote_seed(bag.profile_id, seed));
}

template <typename Model>
Label predict_bag_sil(const Model& model, const Bag& bag,
                      const SignMapping& mapping, std::uint64_t seed) {
  return predict_bag_sil_detail(model, bag, mapping, seed).label;
}

}  // namespace bagwise
