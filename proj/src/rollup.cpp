#include "agiscore/rollup.hpp"

#include <unordered_set>
#include <utility>

namespace agiscore {

const char* aggregate_name(Aggregate a) noexcept {
  switch (a) {
    case Aggregate::am: return "am";
    case Aggregate::wam: return "wam";
    case Aggregate::gm: return "gm";
    case Aggregate::wgm: return "wgm";
  }
  return "unknown";
}

double DomainAggregates::get(Aggregate a) const {
  switch (a) {
    case Aggregate::am: return am;
    case Aggregate::wam: return wam;
    case Aggregate::gm: return gm;
    case Aggregate::wgm: return wgm;
  }
  return am;
}

DomainAggregates rollup_domain(const SubdomainTable& table, EpsilonFloor eps) {
  validate_table(table);

  ArrayXd fractions(table.size());
  for (Eigen::Index i = 0; i < table.size(); ++i) {
    fractions[i] = normalize_subdomain(table.raw_scores[i], table.weights[i]) / 100.0;
  }

  DomainAggregates out;
  out.domain_id = table.domain_id;
  out.am = 100.0 * power_mean(fractions, 1.0, eps);
  out.wam = 100.0 * weighted_power_mean(fractions, table.weights, 1.0, eps);
  out.gm = 100.0 * power_mean(fractions, 0.0, eps);
  out.wgm = 100.0 * weighted_power_mean(fractions, table.weights, 0.0, eps);
  return out;
}

DomainProfile rollup_all(std::span<const SubdomainTable> tables, Aggregate aggregate,
                         EpsilonFloor eps, std::string model_name) {
  if (tables.empty()) {
    throw Error(Errc::empty_input, "rollup_all: no subdomain tables");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& table : tables) {
    if (!seen.insert(table.domain_id).second) {
      throw Error(Errc::duplicate_domain, "duplicate domain id '" + table.domain_id + "'");
    }
  }

  DomainProfile profile;
  profile.model_name = std::move(model_name);
  profile.scores.resize(static_cast<Eigen::Index>(tables.size()));
  Eigen::Index i = 0;
  for (const auto& table : tables) {
    const DomainAggregates agg = rollup_domain(table, eps);
    profile.domain_ids.push_back(agg.domain_id);
    profile.scores[i++] = agg.get(aggregate) / 100.0;
  }
  validate_profile(profile);
  return profile;
}

}  // namespace agiscore
