#pragma once

#include <cmath>

#include "agiscore/types.hpp"

namespace agiscore {

// Compensability exponent of the generalized-mean family. p = 1 is the
// fully compensatory arithmetic mean, p = 0 the geometric mean, p = -1 the
// harmonic mean; lower p weighs weak domains more heavily. Magnitudes
// below kGeometricBand are evaluated with the geometric branch, where the
// p != 0 formula has no precision left.
struct Exponent {
  static constexpr double kGeometricBand = 1e-9;

  double p = 1.0;

  Exponent() = default;
  Exponent(double value);  // NOLINT(google-explicit-constructor): call sites read agi_p(profile, 0.5)

  bool geometric() const { return std::abs(p) < kGeometricBand; }
};

// Generalized mean of the floored scores:
//   ((1/n) sum max(s_i, eps)^p)^(1/p)        for p != 0
//   (prod max(s_i, eps))^(1/n)               for p == 0
// The result lies in [min_i max(s_i,eps), max_i max(s_i,eps)].
double power_mean(ArrayRef scores, Exponent p, EpsilonFloor eps = {});

// Weighted generalized mean with weights normalized to unit sum:
//   (sum w~_i max(s_i, eps)^p)^(1/p)         for p != 0
//   prod max(s_i, eps)^{w~_i}                for p == 0
// The p == 0 branch is the classical weighted geometric mean; for other p
// the normalized-weight power sum is the one extension that reduces to
// power_mean under uniform weights and to that geometric form at p == 0.
// Uniform weights reproduce power_mean bit-for-bit.
double weighted_power_mean(ArrayRef scores, ArrayRef weights, Exponent p, EpsilonFloor eps = {});

// AGI_p of a validated profile: weighted_power_mean when the profile
// carries domain weights, power_mean otherwise.
double agi_p(const DomainProfile& profile, Exponent p, EpsilonFloor eps = {});

}  // namespace agiscore
