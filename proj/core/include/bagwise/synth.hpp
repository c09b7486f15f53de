#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bagwise/core.hpp"
#include "bagwise/ingest.hpp"

namespace bagwise {

// Planted-witness generator: per bag, ceil((1-noise_fraction)*k)
// discriminative instances from a class-conditional Gaussian (means
// separated by class_separation along the first axis) and the remainder from
// a shared class-independent standard normal at the origin.
struct SynthSpec {
  int profiles_per_class = 50;
  int instances_per_bag = 12;
  double noise_fraction = 0.0;      // in [0, 1)
  double class_separation = 2.0;    // > 0
  int dimension = 8;
  std::uint64_t seed = 0;
  Label positive{"female"};
  Label negative{"male"};
  FeatureSpace space = FeatureSpace::deep;

  void validate() const;  // throws invalid_spec
};

// Deterministic per spec; discriminative instances come first in each bag.
// Every bag keeps at least one discriminative instance, so the generated
// data satisfies the MIL assumption by construction.
std::vector<Bag> generate_planted(const SynthSpec& spec);

// Serializes generated bags to the ingest formats for end-to-end CLI runs:
// a labeled manifest plus one feature table, with synthetic image paths
// "images/<profile_id>/<index>.png".
struct SynthFiles {
  std::vector<ProfileManifestEntry> manifest;
  FeatureTable table;
};

SynthFiles to_ingest_format(std::span<const Bag> bags);

}  // namespace bagwise
