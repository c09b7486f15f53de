#pragma once

#include <stdexcept>
#include <string>

namespace bagwise {

// Failure codes used across the toolkit. The category of a code decides the
// process exit status in the CLI: usage/format errors exit 2, missing or
// insufficient data exits 3, numerical failures exit 4.
enum class Errc {
  // usage / config / malformed input files
  invalid_config,
  invalid_spec,
  manifest_parse,
  duplicate_profile,
  duplicate_row,
  malformed_annotations,
  dimension_mismatch,
  invalid_value,
  // missing or insufficient data
  io_error,
  split_too_small,
  insufficient_instances,
  unknown_label,
  missing_label,
  missing_class,
  empty_bag,
  empty_image,
  empty_evaluation,
  // numerics
  numerical_failure,
};

enum class ErrorCategory { config, data, numerical };

ErrorCategory category(Errc code) noexcept;
const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return bagwise::category(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bagwise
