#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bagwise/core.hpp"

namespace bagwise {

// Crowd annotation answers. A worker answers the gender question only after
// answering "individual" to the account-type question.
enum class AccountType { individual, non_individual, cannot_guess };
enum class GenderAnswer { female, male, cannot_guess };

const char* to_string(AccountType t) noexcept;
const char* to_string(GenderAnswer g) noexcept;
AccountType parse_account_type(std::string_view s);
GenderAnswer parse_gender_answer(std::string_view s);

struct AnnotationRecord {
  std::string worker_id;
  AccountType account_type = AccountType::cannot_guess;
  std::optional<GenderAnswer> gender;
};

struct ProfileManifestEntry {
  std::string profile_id;
  std::vector<std::string> image_paths;
  std::vector<AnnotationRecord> annotations;  // may be empty (unannotated)
  std::optional<Label> label;                 // present in labeled manifests
};

// Precomputed per-image feature rows keyed by the exact image path string.
struct FeatureTable {
  FeatureSpace space = FeatureSpace::deep;
  std::size_t dimension = 0;
  std::vector<std::pair<std::string, std::vector<double>>> rows;  // file order
  std::unordered_map<std::string, std::size_t> index;             // path -> row

  const std::vector<double>* find(const std::string& path) const;
};

// Crowd-agreement adjudication. A profile is retained with gender label l iff
//   - its account-type answers agree on "individual" with fraction
//     >= min_agreement of the judgements asked,
//   - the most frequent gender answer is unique, is not "cannot_guess", and
//     reaches the same agreement fraction.
// Entries without annotations are skipped; an entry with a non-empty
// annotation list of the wrong size is malformed. Agreement fractions are
// always computed over `judgements`, so unanswered gender questions count
// against agreement. Ties on the most frequent answer exclude the profile.
std::vector<std::pair<std::string, Label>> adjudicate(
    std::span<const ProfileManifestEntry> entries, double min_agreement,
    int judgements);

// Newline-delimited JSON manifest, one profile per line. Keys: profile_id
// (string), images (array of strings), optional annotations (array of
// {worker_id, account_type, gender}), optional label (string).
std::vector<ProfileManifestEntry> load_manifest(const std::string& path);
void write_manifest(const std::string& path,
                    std::span<const ProfileManifestEntry> entries);

// Feature-table CSV with header `path,f0,...,f{D-1}`. The dimension is
// inferred from the first row and enforced on the rest; values must be
// finite. Paths must not contain commas (the writer rejects them).
FeatureTable load_feature_table(const std::string& path,
                                FeatureSpace expected_space);
void write_feature_table(const std::string& path, const FeatureTable& table);

// Joins a labeled manifest with a feature table into bags. Images missing
// from the table are skipped and counted in *missing_images; profiles left
// with no instances are dropped and counted in *dropped_profiles.
std::vector<Bag> assemble_bags(std::span<const ProfileManifestEntry> entries,
                               const FeatureTable& table,
                               std::size_t* missing_images = nullptr,
                               std::size_t* dropped_profiles = nullptr);

}  // namespace bagwise
