#include "agiscore/mean.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace agiscore {
namespace {

// Summation order must not depend on the order the caller stored the
// scores in (permuting a profile may not change any result bit), so every
// reduction below runs over (log score, weight) pairs in one canonical
// order.
std::vector<std::pair<double, double>> canonical_log_terms(ArrayRef floored, ArrayRef weights) {
  std::vector<std::pair<double, double>> terms;
  terms.reserve(static_cast<std::size_t>(floored.size()));
  for (Eigen::Index i = 0; i < floored.size(); ++i) {
    terms.emplace_back(std::log(floored[i]), weights[i]);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

}  // namespace

Exponent::Exponent(double value) : p(value) {
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "exponent must be finite, got " << value;
    throw Error(Errc::bad_exponent, msg.str());
  }
}

double weighted_power_mean(ArrayRef scores, ArrayRef weights, Exponent p, EpsilonFloor eps) {
  const auto n = scores.size();
  if (n == 0) {
    throw Error(Errc::empty_input, "weighted_power_mean: no scores");
  }
  if (weights.size() != n) {
    std::ostringstream msg;
    msg << "weighted_power_mean: " << weights.size() << " weights for " << n << " scores";
    throw Error(Errc::length_mismatch, msg.str());
  }
  double weight_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(scores[i])) {
      std::ostringstream msg;
      msg << "weighted_power_mean: score " << scores[i] << " is not finite";
      throw Error(Errc::score_out_of_range, msg.str());
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      std::ostringstream msg;
      msg << "weighted_power_mean: weight " << weights[i] << " is negative or non-finite";
      throw Error(Errc::bad_weights, msg.str());
    }
    weight_sum += weights[i];
  }
  if (!(weight_sum > 0.0)) {
    throw Error(Errc::bad_weights, "weighted_power_mean: weights sum to zero");
  }

  const ArrayXd floored = floor_scores(scores, eps);
  const double lo = floored.minCoeff();
  const double hi = floored.maxCoeff();

  // Equal weights collapse to the unweighted mean; canonicalizing them to 1
  // makes that collapse exact rather than within rounding.
  ArrayXd w = weights;
  if ((w == w[0]).all()) {
    w.setOnes();
  }

  const auto terms = canonical_log_terms(floored, w);
  double total_weight = 0.0;
  for (const auto& term : terms) total_weight += term.second;

  double result;
  if (p.geometric()) {
    // prod x_i^{w~_i} = exp(sum w~_i log x_i); the product itself would
    // underflow once a handful of scores sit at the floor.
    double acc = 0.0;
    for (const auto& [lx, wi] : terms) acc += wi * lx;
    result = std::exp(acc / total_weight);
  } else {
    // Powers are taken in log space with the largest exponent factored
    // out, so the sum stays in range for any finite p.
    const double shift = p.p > 0.0 ? p.p * terms.back().first : p.p * terms.front().first;
    double acc = 0.0;
    for (const auto& [lx, wi] : terms) acc += wi * std::exp(p.p * lx - shift);
    result = std::exp((shift + std::log(acc / total_weight)) / p.p);
  }

  // The generalized mean lies between the floored extremes; clamping also
  // pins the all-equal case to the exact common value.
  return std::clamp(result, lo, hi);
}

double power_mean(ArrayRef scores, Exponent p, EpsilonFloor eps) {
  return weighted_power_mean(scores, ArrayXd::Ones(scores.size()), p, eps);
}

double agi_p(const DomainProfile& profile, Exponent p, EpsilonFloor eps) {
  if (profile.weights) {
    return weighted_power_mean(profile.scores, *profile.weights, p, eps);
  }
  return power_mean(profile.scores, p, eps);
}

}  // namespace agiscore
