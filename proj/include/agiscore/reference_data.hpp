#pragma once

#include <array>
#include <span>
#include <vector>

#include "agiscore/types.hpp"

// Bundled evaluation dataset: published cognitive-domain scores for
// GPT-4 (2023) and GPT-5 (2025), the ideal reference model, the per-domain
// subdomain tables behind them, and the published aggregate values the
// test suites reproduce.
namespace agiscore::reference {

// Domain order used throughout: General Knowledge, Reading and Writing,
// Mathematics, On-the-Spot Reasoning, Working Memory, Long-Term Memory
// Storage, Long-Term Memory Retrieval, Visual Processing, Auditory
// Processing, Speed.
inline constexpr std::array<const char*, 10> kDomainIds = {"K", "RW", "M",  "R", "WM",
                                                           "MS", "MR", "V", "A", "S"};

const DomainProfile& gpt4_profile();
const DomainProfile& gpt5_profile();
const DomainProfile& ideal_profile();

std::span<const DomainProfile> all_profiles();

// Subdomain tables per domain, in kDomainIds order. Raw scores are
// reconstructed from the published normalized percents as
// percent * weight / 100.
const std::vector<SubdomainTable>& gpt4_tables();
const std::vector<SubdomainTable>& gpt5_tables();

// Published key scores (integer percents) per model:
// AGI_p at p in {1, 0.5, 0, -0.5, -1} and AGI_AUC.
struct ExpectedKeyScores {
  const char* model;
  std::array<int, 6> values;
};

std::span<const ExpectedKeyScores> expected_key_scores();

// Published per-domain aggregates (percents, printed at one decimal except
// the 0.01 underflow entries).
struct ExpectedAggregates {
  const char* domain_id;
  double am;
  double wam;
  double gm;
  double wgm;
};

std::span<const ExpectedAggregates> expected_aggregates_gpt4();
std::span<const ExpectedAggregates> expected_aggregates_gpt5();

// External benchmark context, shipped for documentation only; nothing in
// this library computes or depends on these.
inline constexpr double kArcAgi2Gpt5ProPercent = 18.0;
inline constexpr double kArcAgi2Gpt5HighPercent = 10.0;
inline constexpr double kBigBenchExtraHardGpt4Percent = 6.0;

}  // namespace agiscore::reference
