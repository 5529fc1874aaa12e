#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agiscore/curve.hpp"
#include "agiscore/scenario.hpp"
#include "agiscore/types.hpp"

namespace agiscore {

// Display rounding for percent values. Kernels always return full
// precision; rounding is applied only when emitting.
enum class Rounding {
  integer,      // main-table style: whole percent
  one_decimal,  // appendix style: one decimal place
};

// Round half away from zero at the given number of decimals.
double round_half_away(double value, int decimals);

// Integer mode rounds the one-decimal value, so 15.467 displays as 16
// (15.467 -> 15.5 -> 16); score tables formatted from one-decimal
// intermediates reproduce exactly under this rule.
double round_percent(double percent, Rounding rounding);

std::string format_percent(double percent, Rounding rounding);

// Full-precision fixed-point decimal (never exponent notation), with
// trailing zeros trimmed to at least one decimal.
std::string format_full(double value);

// On-disk carrier for a profile and its optional subdomain tables. Scores
// are stored as percents in the file and converted at this boundary.
struct ProfileDocument {
  std::string schema_version = "1";
  DomainProfile profile;
  std::vector<SubdomainTable> subdomain_tables;
};

inline constexpr std::string_view kSchemaVersion = "1";

ProfileDocument parse_profile_document(std::string_view text);
ProfileDocument load_profile_document(const std::string& path);
std::string serialize_profile_document(const ProfileDocument& doc);

enum class CurveFormat { delimited, structured };

// delimited: header "p,agi_p", one full-precision row per sample.
// structured: JSON with profile name, grid metadata, and samples.
std::string emit_curve(const Curve& curve, CurveFormat format = CurveFormat::delimited);

// One row per profile with AGI_p at p in {1, 0.5, 0, -0.5, -1} and
// AGI_AUC, as percents under the chosen rounding. Columns:
//   model,agi_p1,agi_p0.5,agi_p0,agi_p-0.5,agi_p-1,agi_auc
std::string emit_report(std::span<const DomainProfile> profiles, const PGrid& grid = {},
                        EpsilonFloor eps = {}, Rounding rounding = Rounding::integer);

// delimited: header "p,lower,nominal,upper"; structured adds the method
// descriptor and sampling parameters.
std::string emit_envelope(const Envelope& envelope, CurveFormat format = CurveFormat::delimited);

}  // namespace agiscore
