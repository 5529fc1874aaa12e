#pragma once

#include <span>
#include <string>
#include <vector>

#include "agiscore/mean.hpp"
#include "agiscore/types.hpp"

namespace agiscore {

// Domain-level aggregate to use when assembling a profile from tables.
enum class Aggregate { am, wam, gm, wgm };

const char* aggregate_name(Aggregate a) noexcept;

// The four domain-level summaries of one subdomain table, as percents:
// unweighted/weighted arithmetic mean (breadth) and unweighted/weighted
// geometric mean (balance). GM <= AM and WGM <= WAM always.
struct DomainAggregates {
  std::string domain_id;
  double am = 0.0;
  double wam = 0.0;
  double gm = 0.0;
  double wgm = 0.0;

  double get(Aggregate a) const;
};

// Normalizes each subdomain to a fraction of human-equivalent proficiency
// and aggregates with the generalized-mean kernel at p = 1 and p = 0.
DomainAggregates rollup_domain(const SubdomainTable& table, EpsilonFloor eps = {});

// Rolls every table up with the chosen aggregate and assembles the results
// into a profile (scores as fractions), ready for agi_p / agi_auc.
DomainProfile rollup_all(std::span<const SubdomainTable> tables, Aggregate aggregate,
                         EpsilonFloor eps = {}, std::string model_name = {});

}  // namespace agiscore
