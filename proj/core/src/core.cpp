#include "bagwise/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "bagwise/rng.hpp"

namespace bagwise {

const char* to_string(FeatureSpace space) noexcept {
  switch (space) {
    case FeatureSpace::hoc: return "hoc";
    case FeatureSpace::hog: return "hog";
    case FeatureSpace::gist: return "gist";
    case FeatureSpace::deep: return "deep";
  }
  return "?";
}

FeatureSpace parse_feature_space(std::string_view name) {
  if (name == "hoc") return FeatureSpace::hoc;
  if (name == "hog") return FeatureSpace::hog;
  if (name == "gist") return FeatureSpace::gist;
  if (name == "deep") return FeatureSpace::deep;
  fail(Errc::invalid_config,
       "unknown feature space '" + std::string(name) + "'");
}

int to_signed(const Label& label, const SignMapping& mapping) {
  if (label == mapping.positive) return +1;
  if (label == mapping.negative) return -1;
  fail(Errc::unknown_label, "'" + label.name + "' is not in the vocabulary {" +
                                mapping.positive.name + ", " +
                                mapping.negative.name + "}");
}

const Label& from_signed(int sign, const SignMapping& mapping) {
  if (sign >= 0) return mapping.positive;
  return mapping.negative;
}

std::vector<Bag> Dataset::side(SplitSide which) const {
  std::vector<Bag> out;
  for (std::size_t i = 0; i < bags.size(); ++i)
    if (split[i] == which) out.push_back(bags[i]);
  return out;
}

std::size_t Dataset::count(SplitSide which) const noexcept {
  std::size_t n = 0;
  for (SplitSide s : split) n += (s == which);
  return n;
}

Dataset split_dataset(std::span<const Bag> bags, double train_fraction,
                      std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    fail(Errc::invalid_spec, "train_fraction must lie in (0, 1)");
  if (bags.size() < 2)
    fail(Errc::split_too_small, "need at least 2 bags to split");

  std::unordered_set<std::string_view> seen;
  for (const Bag& bag : bags) {
    if (!bag.gold_label)
      fail(Errc::missing_label, "bag " + bag.profile_id + " is unlabeled");
    if (!seen.insert(bag.profile_id).second)
      fail(Errc::duplicate_profile, bag.profile_id);
  }

  const std::size_t n = bags.size();
  const auto n_train =
      static_cast<std::size_t>(std::floor(train_fraction * n + 0.5));
  if (n_train == 0 || n_train == n)
    fail(Errc::split_too_small,
         "split leaves an empty side (" + std::to_string(n_train) + "/" +
             std::to_string(n - n_train) + ")");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(mix_seed(seed, 0x73706c6974ULL));  // domain tag: "split"
  shuffle(order, rng);

  Dataset ds;
  ds.bags.assign(bags.begin(), bags.end());
  ds.split.assign(n, SplitSide::test);
  ds.seed = seed;
  for (std::size_t i = 0; i < n_train; ++i)
    ds.split[order[i]] = SplitSide::train;
  return ds;
}

Bag sample_bag_subset(const Bag& bag, std::size_t k, std::uint64_t seed) {
  const std::size_t n = bag.instances.size();
  if (k < 1) fail(Errc::invalid_spec, "subset size must be at least 1");
  if (k > n)
    fail(Errc::insufficient_instances,
         "bag " + bag.profile_id + " has " + std::to_string(n) +
             " instances, requested " + std::to_string(k));
  if (k == n) return bag;

  Rng rng(mix_seed(mix_seed(fnv1a64(bag.profile_id), k), seed));
  Bag out;
  out.profile_id = bag.profile_id;
  out.gold_label = bag.gold_label;
  out.instances.reserve(k);
  for (std::size_t i : sample_without_replacement(n, k, rng))
    out.instances.push_back(bag.instances[i]);
  return out;
}

}  // namespace bagwise
