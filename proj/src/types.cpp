#include "agiscore/types.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace agiscore {

EpsilonFloor::EpsilonFloor(double v) : value(v) {
  if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) {
    std::ostringstream msg;
    msg << "epsilon floor must lie in (0,1), got " << v;
    throw Error(Errc::bad_epsilon, msg.str());
  }
}

std::optional<Eigen::Index> DomainProfile::index_of(std::string_view domain_id) const {
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(domain_ids.size()); ++i) {
    if (domain_ids[static_cast<std::size_t>(i)] == domain_id) return i;
  }
  return std::nullopt;
}

const DomainProfile& validate_profile(const DomainProfile& profile) {
  const auto n = profile.scores.size();
  if (n == 0) {
    throw Error(Errc::empty_profile, "profile '" + profile.model_name + "' has no domains");
  }
  if (static_cast<Eigen::Index>(profile.domain_ids.size()) != n) {
    std::ostringstream msg;
    msg << "profile '" << profile.model_name << "': " << profile.domain_ids.size()
        << " domain ids but " << n << " scores";
    throw Error(Errc::length_mismatch, msg.str());
  }

  std::unordered_set<std::string_view> seen;
  for (const auto& id : profile.domain_ids) {
    if (!seen.insert(id).second) {
      throw Error(Errc::duplicate_domain, "duplicate domain id '" + id + "'");
    }
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = profile.scores[i];
    if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
      std::ostringstream msg;
      msg << "domain '" << profile.domain_ids[static_cast<std::size_t>(i)]
          << "': score " << s << " outside [0,1]";
      throw Error(Errc::score_out_of_range, msg.str());
    }
  }

  if (profile.weights) {
    const auto& w = *profile.weights;
    if (w.size() != n) {
      std::ostringstream msg;
      msg << "profile '" << profile.model_name << "': " << w.size() << " weights for " << n
          << " domains";
      throw Error(Errc::length_mismatch, msg.str());
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!std::isfinite(w[i]) || w[i] < 0.0) {
        std::ostringstream msg;
        msg << "domain '" << profile.domain_ids[static_cast<std::size_t>(i)]
            << "': weight " << w[i] << " is negative or non-finite";
        throw Error(Errc::bad_weights, msg.str());
      }
      sum += w[i];
    }
    if (!(sum > 0.0)) {
      throw Error(Errc::bad_weights,
                  "profile '" + profile.model_name + "': weights sum to zero");
    }
  }
  return profile;
}

const SubdomainTable& validate_table(const SubdomainTable& table) {
  const auto n = table.raw_scores.size();
  if (n == 0) {
    throw Error(Errc::empty_input, "subdomain table '" + table.domain_id + "' has no entries");
  }
  if (static_cast<Eigen::Index>(table.subdomain_ids.size()) != n || table.weights.size() != n) {
    throw Error(Errc::length_mismatch,
                "subdomain table '" + table.domain_id + "': id/raw/weight lengths differ");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double raw = table.raw_scores[i];
    const double w = table.weights[i];
    const auto& id = table.subdomain_ids[static_cast<std::size_t>(i)];
    if (!std::isfinite(w) || w <= 0.0) {
      std::ostringstream msg;
      msg << "subdomain '" << id << "': weight " << w << " must be positive";
      throw Error(Errc::nonpositive_weight, msg.str());
    }
    if (!std::isfinite(raw) || raw < 0.0) {
      std::ostringstream msg;
      msg << "subdomain '" << id << "': raw score " << raw << " must be nonnegative";
      throw Error(Errc::score_out_of_range, msg.str());
    }
    if (raw > w) {
      std::ostringstream msg;
      msg << "subdomain '" << id << "': raw score " << raw << " exceeds weight " << w;
      throw Error(Errc::raw_exceeds_weight, msg.str());
    }
  }
  return table;
}

double normalize_subdomain(double raw_score, double weight) {
  if (!std::isfinite(weight) || weight <= 0.0) {
    std::ostringstream msg;
    msg << "weight " << weight << " must be positive";
    throw Error(Errc::nonpositive_weight, msg.str());
  }
  if (!std::isfinite(raw_score) || raw_score < 0.0) {
    std::ostringstream msg;
    msg << "raw score " << raw_score << " must be nonnegative";
    throw Error(Errc::score_out_of_range, msg.str());
  }
  if (raw_score > weight) {
    std::ostringstream msg;
    msg << "raw score " << raw_score << " exceeds weight " << weight;
    throw Error(Errc::raw_exceeds_weight, msg.str());
  }
  return raw_score / weight * 100.0;
}

ArrayXd floor_scores(ArrayRef scores, EpsilonFloor eps) {
  return scores.max(eps.value);
}

}  // namespace agiscore
