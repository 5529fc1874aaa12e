#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agiscore/errors.hpp"

namespace agiscore {

using Eigen::ArrayXd;
using ArrayRef = const Eigen::Ref<const Eigen::ArrayXd>&;

// Proficiency floor substituted for scores below it, so geometric and
// harmonic aggregates stay finite when a domain scores zero.
struct EpsilonFloor {
  double value = 1e-6;

  EpsilonFloor() = default;
  explicit EpsilonFloor(double v);
};

// One model's proficiency per cognitive domain. Scores are unit-interval
// fractions; percent is a display convention handled at the I/O boundary.
// Weights, when present, are relative domain importances (any nonnegative
// scale; aggregation normalizes them).
struct DomainProfile {
  std::string model_name;
  std::vector<std::string> domain_ids;
  ArrayXd scores;
  std::optional<ArrayXd> weights;

  Eigen::Index size() const { return scores.size(); }
  std::optional<Eigen::Index> index_of(std::string_view domain_id) const;
};

// Returns the profile unchanged if every invariant holds; throws otherwise.
// Invariants: at least one domain, unique ids, finite scores in [0,1], and
// (when present) nonnegative weights of matching length with positive sum.
const DomainProfile& validate_profile(const DomainProfile& profile);

// Raw subdomain results for one domain. Each entry carries the maximum
// weight that caps its contribution: raw_score == weight means
// human-equivalent proficiency in that subdomain.
struct SubdomainTable {
  std::string domain_id;
  std::vector<std::string> subdomain_ids;
  ArrayXd raw_scores;
  ArrayXd weights;

  Eigen::Index size() const { return raw_scores.size(); }
};

const SubdomainTable& validate_table(const SubdomainTable& table);

// raw_score / weight * 100, the percent of human-equivalent proficiency.
double normalize_subdomain(double raw_score, double weight);

// Element-wise max(score, eps); output is strictly positive.
ArrayXd floor_scores(ArrayRef scores, EpsilonFloor eps = {});

}  // namespace agiscore
