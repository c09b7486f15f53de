#include "bagwise/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bagwise {

using nlohmann::json;

const char* to_string(AccountType t) noexcept {
  switch (t) {
    case AccountType::individual: return "individual";
    case AccountType::non_individual: return "non_individual";
    case AccountType::cannot_guess: return "cannot_guess";
  }
  return "?";
}

const char* to_string(GenderAnswer g) noexcept {
  switch (g) {
    case GenderAnswer::female: return "female";
    case GenderAnswer::male: return "male";
    case GenderAnswer::cannot_guess: return "cannot_guess";
  }
  return "?";
}

AccountType parse_account_type(std::string_view s) {
  if (s == "individual") return AccountType::individual;
  if (s == "non_individual") return AccountType::non_individual;
  if (s == "cannot_guess") return AccountType::cannot_guess;
  fail(Errc::manifest_parse, "unknown account_type '" + std::string(s) + "'");
}

GenderAnswer parse_gender_answer(std::string_view s) {
  if (s == "female") return GenderAnswer::female;
  if (s == "male") return GenderAnswer::male;
  if (s == "cannot_guess") return GenderAnswer::cannot_guess;
  fail(Errc::manifest_parse, "unknown gender '" + std::string(s) + "'");
}

const std::vector<double>* FeatureTable::find(const std::string& path) const {
  auto it = index.find(path);
  if (it == index.end()) return nullptr;
  return &rows[it->second].second;
}

namespace {

// Count of each distinct answer; returns the unique argmax if it reaches the
// agreement threshold, else nullopt. Ties never reach agreement.
template <typename Answer>
std::optional<Answer> agreed_answer(const std::vector<Answer>& votes,
                                    double min_agreement, int judgements) {
  std::vector<std::pair<Answer, int>> counts;
  for (const Answer& a : votes) {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& p) { return p.first == a; });
    if (it == counts.end())
      counts.emplace_back(a, 1);
    else
      ++it->second;
  }
  if (counts.empty()) return std::nullopt;
  auto best = std::max_element(
      counts.begin(), counts.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  int ties = static_cast<int>(std::count_if(
      counts.begin(), counts.end(),
      [&](const auto& p) { return p.second == best->second; }));
  if (ties > 1) return std::nullopt;
  double agreement = static_cast<double>(best->second) / judgements;
  if (agreement < min_agreement) return std::nullopt;
  return best->first;
}

}  // namespace

std::vector<std::pair<std::string, Label>> adjudicate(
    std::span<const ProfileManifestEntry> entries, double min_agreement,
    int judgements) {
  if (!(min_agreement > 0.0 && min_agreement <= 1.0))
    fail(Errc::invalid_spec, "min_agreement must lie in (0, 1]");
  if (judgements < 1) fail(Errc::invalid_spec, "judgements must be >= 1");

  std::vector<std::pair<std::string, Label>> retained;
  for (const ProfileManifestEntry& entry : entries) {
    if (entry.annotations.empty()) continue;  // unannotated, not retained
    if (static_cast<int>(entry.annotations.size()) != judgements)
      fail(Errc::malformed_annotations,
           "profile " + entry.profile_id + " has " +
               std::to_string(entry.annotations.size()) +
               " annotations, expected " + std::to_string(judgements));

    std::vector<AccountType> type_votes;
    std::vector<GenderAnswer> gender_votes;
    for (const AnnotationRecord& rec : entry.annotations) {
      type_votes.push_back(rec.account_type);
      if (rec.gender) gender_votes.push_back(*rec.gender);
    }

    auto account = agreed_answer(type_votes, min_agreement, judgements);
    if (!account || *account != AccountType::individual) continue;

    auto gender = agreed_answer(gender_votes, min_agreement, judgements);
    if (!gender || *gender == GenderAnswer::cannot_guess) continue;

    retained.emplace_back(entry.profile_id, Label{to_string(*gender)});
  }
  return retained;
}

namespace {

AnnotationRecord annotation_from_json(const json& j, long line) {
  if (!j.is_object())
    fail(Errc::manifest_parse,
         "line " + std::to_string(line) + ": annotation must be an object");
  AnnotationRecord rec;
  for (const auto& [key, value] : j.items()) {
    if (key == "worker_id") {
      rec.worker_id = value.get<std::string>();
    } else if (key == "account_type") {
      rec.account_type = parse_account_type(value.get<std::string>());
    } else if (key == "gender") {
      rec.gender = parse_gender_answer(value.get<std::string>());
    } else {
      fail(Errc::manifest_parse, "line " + std::to_string(line) +
                                     ": unknown annotation key '" + key + "'");
    }
  }
  if (rec.gender && rec.account_type != AccountType::individual)
    fail(Errc::manifest_parse,
         "line " + std::to_string(line) +
             ": gender answered on a non-individual annotation");
  return rec;
}

json annotation_to_json(const AnnotationRecord& rec) {
  json j;
  j["worker_id"] = rec.worker_id;
  j["account_type"] = to_string(rec.account_type);
  if (rec.gender) j["gender"] = to_string(*rec.gender);
  return j;
}

}  // namespace

std::vector<ProfileManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open manifest " + path);

  std::vector<ProfileManifestEntry> entries;
  std::unordered_map<std::string, long> seen;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(Errc::manifest_parse,
           "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object())
      fail(Errc::manifest_parse,
           "line " + std::to_string(line_no) + ": expected a JSON object");

    ProfileManifestEntry entry;
    try {
      for (const auto& [key, value] : j.items()) {
        if (key == "profile_id") {
          entry.profile_id = value.get<std::string>();
        } else if (key == "images") {
          for (const auto& p : value)
            entry.image_paths.push_back(p.get<std::string>());
        } else if (key == "annotations") {
          for (const auto& a : value)
            entry.annotations.push_back(annotation_from_json(a, line_no));
        } else if (key == "label") {
          entry.label = Label{value.get<std::string>()};
        } else {
          fail(Errc::manifest_parse, "line " + std::to_string(line_no) +
                                         ": unknown key '" + key + "'");
        }
      }
    } catch (const json::exception& e) {
      fail(Errc::manifest_parse,
           "line " + std::to_string(line_no) + ": " + e.what());
    }

    if (entry.profile_id.empty())
      fail(Errc::manifest_parse,
           "line " + std::to_string(line_no) + ": missing profile_id");
    if (entry.image_paths.empty())
      fail(Errc::manifest_parse, "line " + std::to_string(line_no) +
                                     ": profile " + entry.profile_id +
                                     " lists no images");
    std::unordered_set<std::string_view> unique_paths;
    for (const std::string& p : entry.image_paths)
      if (!unique_paths.insert(p).second)
        fail(Errc::manifest_parse, "line " + std::to_string(line_no) +
                                       ": duplicate image path '" + p + "'");

    auto [it, inserted] = seen.emplace(entry.profile_id, line_no);
    if (!inserted)
      fail(Errc::duplicate_profile,
           "profile " + entry.profile_id + " repeated on line " +
               std::to_string(line_no) + " (first on line " +
               std::to_string(it->second) + ")");
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_manifest(const std::string& path,
                    std::span<const ProfileManifestEntry> entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write manifest " + path);
  for (const ProfileManifestEntry& entry : entries) {
    json j;
    j["profile_id"] = entry.profile_id;
    j["images"] = entry.image_paths;
    if (!entry.annotations.empty()) {
      json anns = json::array();
      for (const AnnotationRecord& rec : entry.annotations)
        anns.push_back(annotation_to_json(rec));
      j["annotations"] = std::move(anns);
    }
    if (entry.label) j["label"] = entry.label->name;
    out << j.dump() << '\n';
  }
}

namespace {

double parse_feature_value(const std::string& field, const std::string& path,
                           long line) {
  char* end = nullptr;
  double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    fail(Errc::invalid_value, path + " line " + std::to_string(line) +
                                  ": not a number '" + field + "'");
  if (!std::isfinite(v))
    fail(Errc::invalid_value,
         path + " line " + std::to_string(line) + ": non-finite value");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

FeatureTable load_feature_table(const std::string& path,
                                FeatureSpace expected_space) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open feature table " + path);

  FeatureTable table;
  table.space = expected_space;

  std::string line;
  long line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      auto fields = split_csv_line(line);
      if (fields.empty() || fields[0] != "path")
        fail(Errc::invalid_value,
             path + ": header must start with 'path', got '" + line + "'");
      table.dimension = fields.size() - 1;
      if (table.dimension == 0)
        fail(Errc::dimension_mismatch, path + ": header lists no features");
      have_header = true;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != table.dimension + 1)
      fail(Errc::dimension_mismatch,
           path + " line " + std::to_string(line_no) + ": expected " +
               std::to_string(table.dimension) + " values, got " +
               std::to_string(fields.size() - 1));
    std::vector<double> values(table.dimension);
    for (std::size_t i = 0; i < table.dimension; ++i)
      values[i] = parse_feature_value(fields[i + 1], path, line_no);
    auto [it, inserted] = table.index.emplace(fields[0], table.rows.size());
    if (!inserted)
      fail(Errc::duplicate_row, path + " line " + std::to_string(line_no) +
                                    ": duplicate path '" + fields[0] + "'");
    table.rows.emplace_back(fields[0], std::move(values));
  }
  if (!have_header) fail(Errc::invalid_value, path + ": empty feature table");
  return table;
}

void write_feature_table(const std::string& path, const FeatureTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write feature table " + path);

  out << "path";
  for (std::size_t i = 0; i < table.dimension; ++i) out << ",f" << i;
  out << '\n';

  char buf[40];
  for (const auto& [row_path, values] : table.rows) {
    if (row_path.find(',') != std::string::npos ||
        row_path.find('\n') != std::string::npos)
      fail(Errc::invalid_value,
           "path '" + row_path + "' cannot be stored in CSV");
    if (values.size() != table.dimension)
      fail(Errc::dimension_mismatch, "row '" + row_path + "' has " +
                                         std::to_string(values.size()) +
                                         " values, table dimension is " +
                                         std::to_string(table.dimension));
    out << row_path;
    for (double v : values) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
}

std::vector<Bag> assemble_bags(std::span<const ProfileManifestEntry> entries,
                               const FeatureTable& table,
                               std::size_t* missing_images,
                               std::size_t* dropped_profiles) {
  std::size_t missing = 0, dropped = 0;
  std::vector<Bag> bags;
  for (const ProfileManifestEntry& entry : entries) {
    Bag bag;
    bag.profile_id = entry.profile_id;
    bag.gold_label = entry.label;
    for (const std::string& p : entry.image_paths) {
      const std::vector<double>* row = table.find(p);
      if (!row) {
        ++missing;
        continue;
      }
      bag.instances.push_back(FeatureVector{*row, table.space});
    }
    if (bag.instances.empty()) {
      ++dropped;
      continue;
    }
    bags.push_back(std::move(bag));
  }
  if (missing_images) *missing_images = missing;
  if (dropped_profiles) *dropped_profiles = dropped;
  return bags;
}

}  // namespace bagwise
