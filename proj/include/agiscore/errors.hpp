#pragma once

#include <stdexcept>
#include <string>

namespace agiscore {

// Error kinds raised by the library. The CLI maps document/profile
// validation kinds to exit code 2 and operation-precondition kinds to
// exit code 3.
enum class Errc {
  // document and profile validation
  parse_error,
  schema_version_unsupported,
  score_out_of_range,
  duplicate_domain,
  empty_profile,
  bad_weights,
  raw_exceeds_weight,
  nonpositive_weight,
  // operation preconditions
  empty_input,
  length_mismatch,
  unknown_domain,
  duplicate_edit,
  bad_scale,
  bad_sample_count,
  too_few_samples,
  non_monotone_grid,
  bad_exponent,
  bad_epsilon,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code) noexcept;

// True for kinds that describe invalid input data rather than a violated
// operation precondition.
bool is_validation_error(Errc code) noexcept;

}  // namespace agiscore
