#include "bagwise/error.hpp"

namespace bagwise {

ErrorCategory category(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_config:
    case Errc::invalid_spec:
    case Errc::manifest_parse:
    case Errc::duplicate_profile:
    case Errc::duplicate_row:
    case Errc::malformed_annotations:
    case Errc::dimension_mismatch:
    case Errc::invalid_value:
      return ErrorCategory::config;
    case Errc::io_error:
    case Errc::split_too_small:
    case Errc::insufficient_instances:
    case Errc::unknown_label:
    case Errc::missing_label:
    case Errc::missing_class:
    case Errc::empty_bag:
    case Errc::empty_image:
    case Errc::empty_evaluation:
      return ErrorCategory::data;
    case Errc::numerical_failure:
      return ErrorCategory::numerical;
  }
  return ErrorCategory::data;
}

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::manifest_parse: return "ManifestParseError";
    case Errc::duplicate_profile: return "DuplicateProfile";
    case Errc::duplicate_row: return "DuplicateRow";
    case Errc::malformed_annotations: return "MalformedAnnotations";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_value: return "InvalidValue";
    case Errc::io_error: return "IoError";
    case Errc::split_too_small: return "SplitTooSmall";
    case Errc::insufficient_instances: return "InsufficientInstances";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::missing_label: return "MissingLabel";
    case Errc::missing_class: return "MissingClass";
    case Errc::empty_bag: return "EmptyBag";
    case Errc::empty_image: return "EmptyImage";
    case Errc::empty_evaluation: return "EmptyEvaluation";
    case Errc::numerical_failure: return "NumericalFailure";
  }
  return "Error";
}

}  // namespace bagwise
