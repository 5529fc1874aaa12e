#include "agiscore/errors.hpp"

namespace agiscore {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::schema_version_unsupported: return "schema_version_unsupported";
    case Errc::score_out_of_range: return "score_out_of_range";
    case Errc::duplicate_domain: return "duplicate_domain";
    case Errc::empty_profile: return "empty_profile";
    case Errc::bad_weights: return "bad_weights";
    case Errc::raw_exceeds_weight: return "raw_exceeds_weight";
    case Errc::nonpositive_weight: return "nonpositive_weight";
    case Errc::empty_input: return "empty_input";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::unknown_domain: return "unknown_domain";
    case Errc::duplicate_edit: return "duplicate_edit";
    case Errc::bad_scale: return "bad_scale";
    case Errc::bad_sample_count: return "bad_sample_count";
    case Errc::too_few_samples: return "too_few_samples";
    case Errc::non_monotone_grid: return "non_monotone_grid";
    case Errc::bad_exponent: return "bad_exponent";
    case Errc::bad_epsilon: return "bad_epsilon";
  }
  return "unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error:
    case Errc::schema_version_unsupported:
    case Errc::score_out_of_range:
    case Errc::duplicate_domain:
    case Errc::empty_profile:
    case Errc::bad_weights:
    case Errc::raw_exceeds_weight:
    case Errc::nonpositive_weight:
      return true;
    default:
      return false;
  }
}

}  // namespace agiscore
