#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agiscore/curve.hpp"
#include "agiscore/types.hpp"

namespace agiscore {

// A single what-if override: set one domain of a profile to a new score.
struct ScenarioEdit {
  std::string domain_id;
  double new_score = 0.0;  // fraction in [0,1]
};

// Returns a copy of the profile with the edits applied; untouched domains
// are bit-identical to the input. At most one edit per domain.
DomainProfile apply_scenario(const DomainProfile& profile, std::span<const ScenarioEdit> edits);

struct BottleneckGain {
  std::string domain_id;
  double auc_gain = 0.0;  // AGI_AUC(raised to target) - AGI_AUC(profile), as a fraction
};

// For every domain scoring below target, the AGI_AUC gain from raising that
// domain alone to target, sorted by descending gain (ties keep profile
// order). Gains are never negative.
std::vector<BottleneckGain> rank_bottlenecks(const DomainProfile& profile, double target,
                                             const PGrid& grid = {}, EpsilonFloor eps = {});

// Pointwise band around an AGI_p curve under score perturbation:
// lower <= nominal <= upper at every grid point.
struct Envelope {
  std::string profile_name;
  std::string method;
  double perturbation_scale = 0.0;
  int sample_count = 0;
  std::uint64_t seed = 0;
  ArrayXd p;
  ArrayXd lower;
  ArrayXd nominal;
  ArrayXd upper;
};

// Draws sample_count perturbed profiles (each score shifted by an
// independent uniform offset in [-scale, +scale], then clamped to [0,1])
// and takes the pointwise min/max of agi_p over the samples and the
// nominal profile. Sample i is generated from (seed, i) alone, so the
// band does not depend on evaluation order.
Envelope uncertainty_envelope(const DomainProfile& profile, const PGrid& grid = {},
                              EpsilonFloor eps = {}, double perturbation_scale = 0.05,
                              int sample_count = 1000, std::uint64_t seed = 0);

// Pseudorandom stream used by uncertainty_envelope, spelled out so the
// band reproduces anywhere: sample i runs splitmix64 from state
// seed + (i + 1) * 0x9E3779B97F4A7C15, and each output maps to [0,1) via
// its top 53 bits.
namespace prng {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t sample_state(std::uint64_t seed, int sample_index) {
  return seed + (static_cast<std::uint64_t>(sample_index) + 1) * 0x9E3779B97F4A7C15ull;
}

inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace prng

}  // namespace agiscore
