#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bagwise/error.hpp"

namespace bagwise {

// Feature space a vector was extracted in. "deep" embeddings are ingested
// from precomputed tables, never computed here.
enum class FeatureSpace { hoc, hog, gist, deep };

const char* to_string(FeatureSpace space) noexcept;
FeatureSpace parse_feature_space(std::string_view name);

// Class name of the binary task. Datasets carry exactly two distinct labels.
struct Label {
  std::string name;
  auto operator<=>(const Label&) const = default;
};

// Bijection between the two labels and {-1, +1}.
struct SignMapping {
  Label positive;
  Label negative;
};

int to_signed(const Label& label, const SignMapping& mapping);
const Label& from_signed(int sign, const SignMapping& mapping);

// One image in one feature space.
struct FeatureVector {
  std::vector<double> values;
  FeatureSpace space = FeatureSpace::deep;

  std::size_t dimension() const noexcept { return values.size(); }
};

// A profile's instance set. Instances share feature space and dimension.
struct Bag {
  std::string profile_id;
  std::vector<FeatureVector> instances;
  std::optional<Label> gold_label;
};

// An instance paired with a (propagated) label; the unit single-instance
// trainers consume.
struct LabeledInstance {
  FeatureVector features;
  Label label;
};

enum class SplitSide { train, test };

// Immutable bag collection with a profile-granularity train/test assignment.
struct Dataset {
  std::vector<Bag> bags;
  std::vector<SplitSide> split;  // parallel to bags
  std::uint64_t seed = 0;

  std::vector<Bag> side(SplitSide which) const;
  std::size_t count(SplitSide which) const noexcept;
};

// Profile-disjoint split, train size = floor(train_fraction * n + 0.5).
// Deterministic for a fixed seed. All bags must be labeled and profile ids
// unique; each side must end up with at least one bag.
Dataset split_dataset(std::span<const Bag> bags, double train_fraction,
                      std::uint64_t seed);

// k distinct instances sampled uniformly without replacement, deterministic
// per (bag, k, seed). Profile id and gold label are preserved; instance
// order follows the original bag.
Bag sample_bag_subset(const Bag& bag, std::size_t k, std::uint64_t seed);

}  // namespace bagwise
