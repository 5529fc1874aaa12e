#include "agiscore/reference_data.hpp"

#include <initializer_list>
#include <string>

namespace agiscore::reference {
namespace {

DomainProfile make_profile(const char* name, std::initializer_list<double> percents) {
  DomainProfile profile;
  profile.model_name = name;
  profile.domain_ids.assign(kDomainIds.begin(), kDomainIds.end());
  profile.scores.resize(static_cast<Eigen::Index>(percents.size()));
  Eigen::Index i = 0;
  for (const double pct : percents) profile.scores[i++] = pct / 100.0;
  validate_profile(profile);
  return profile;
}

SubdomainTable make_table(const char* domain_id, std::initializer_list<const char*> ids,
                          std::initializer_list<double> weights,
                          std::initializer_list<double> percents) {
  SubdomainTable table;
  table.domain_id = domain_id;
  table.subdomain_ids.assign(ids.begin(), ids.end());
  const auto n = static_cast<Eigen::Index>(ids.size());
  table.raw_scores.resize(n);
  table.weights.resize(n);
  Eigen::Index i = 0;
  auto pct = percents.begin();
  for (const double w : weights) {
    table.weights[i] = w;
    table.raw_scores[i] = *pct++ * w / 100.0;
    ++i;
  }
  validate_table(table);
  return table;
}

std::vector<SubdomainTable> make_tables(bool gpt5) {
  std::vector<SubdomainTable> t;
  t.push_back(make_table("K", {"Common", "Science", "Soc. Sci.", "History", "Culture"},
                         {20, 20, 20, 20, 20},
                         gpt5 ? std::initializer_list<double>{100, 100, 100, 100, 50}
                              : std::initializer_list<double>{100, 100, 100, 100, 0}));
  t.push_back(make_table("RW", {"Letters", "Reading", "Writing", "Usage"}, {10, 30, 30, 30},
                         gpt5 ? std::initializer_list<double>{100, 100, 100, 100}
                              : std::initializer_list<double>{0, 67, 100, 33}));
  t.push_back(make_table("M", {"Arithmetic", "Algebra", "Geometry", "Prob.", "Calculus"},
                         {20, 20, 20, 20, 20},
                         gpt5 ? std::initializer_list<double>{100, 100, 100, 100, 100}
                              : std::initializer_list<double>{100, 50, 0, 50, 0}));
  t.push_back(make_table("R", {"Deduction", "Induction", "ToM", "Planning", "Adapt."},
                         {20, 40, 20, 10, 10},
                         gpt5 ? std::initializer_list<double>{100, 50, 100, 100, 0}
                              : std::initializer_list<double>{0, 0, 0, 0, 0}));
  t.push_back(make_table("WM", {"Textual", "Auditory", "Visual", "Cross-Mod."}, {20, 20, 40, 20},
                         gpt5 ? std::initializer_list<double>{100, 0, 25, 50}
                              : std::initializer_list<double>{100, 0, 0, 0}));
  t.push_back(make_table("MS", {"Assoc.", "Meaningful", "Verbatim"}, {40, 30, 30}, {0, 0, 0}));
  t.push_back(make_table("MR", {"Fluency", "Halluc. Avoid."}, {60, 40}, {67, 0}));
  t.push_back(make_table("V", {"Percep.", "Gen.", "Reason.", "Spatial"}, {40, 30, 20, 10},
                         gpt5 ? std::initializer_list<double>{50, 67, 0, 0}
                              : std::initializer_list<double>{0, 0, 0, 0}));
  t.push_back(make_table("A", {"Phonetic", "Speech Rec.", "Voice", "Rhyth.", "Musical"},
                         {10, 40, 30, 10, 10},
                         gpt5 ? std::initializer_list<double>{0, 100, 67, 0, 0}
                              : std::initializer_list<double>{0, 0, 0, 0, 0}));
  t.push_back(make_table("S", {"PS-S", "PS-C", "Re", "Wr", "Num", "SRT", "CRT", "IT", "CS", "PF"},
                         {10, 10, 10, 10, 10, 10, 10, 10, 10, 10},
                         {0, 0, 100, 100, 100, 0, 0, 0, 0, 0}));
  return t;
}

}  // namespace

const DomainProfile& gpt4_profile() {
  static const DomainProfile profile =
      make_profile("GPT-4 (2023)", {80, 60, 40, 0, 20, 0, 40, 0, 0, 30});
  return profile;
}

const DomainProfile& gpt5_profile() {
  static const DomainProfile profile =
      make_profile("GPT-5 (2025)", {90, 100, 100, 70, 50, 0, 40, 40, 60, 30});
  return profile;
}

const DomainProfile& ideal_profile() {
  static const DomainProfile profile =
      make_profile("AGI", {100, 100, 100, 100, 100, 100, 100, 100, 100, 100});
  return profile;
}

std::span<const DomainProfile> all_profiles() {
  static const std::vector<DomainProfile> profiles = {gpt4_profile(), gpt5_profile(),
                                                      ideal_profile()};
  return profiles;
}

const std::vector<SubdomainTable>& gpt4_tables() {
  static const std::vector<SubdomainTable> tables = make_tables(false);
  return tables;
}

const std::vector<SubdomainTable>& gpt5_tables() {
  static const std::vector<SubdomainTable> tables = make_tables(true);
  return tables;
}

std::span<const ExpectedKeyScores> expected_key_scores() {
  static const ExpectedKeyScores rows[] = {
      {"GPT-4 (2023)", {27, 16, 0, 0, 0, 7}},
      {"GPT-5 (2025)", {58, 50, 16, 0, 0, 24}},
      {"AGI", {100, 100, 100, 100, 100, 100}},
  };
  return rows;
}

std::span<const ExpectedAggregates> expected_aggregates_gpt4() {
  static const ExpectedAggregates rows[] = {
      {"K", 80.0, 80.0, 6.3, 6.3},   {"RW", 50.0, 60.0, 2.2, 16.0},
      {"M", 40.0, 40.0, 0.3, 0.3},   {"R", 0.0, 0.0, 0.0, 0.0},
      {"WM", 25.0, 20.0, 0.0, 0.0},  {"MS", 0.0, 0.0, 0.0, 0.0},
      {"MR", 33.5, 40.2, 0.1, 0.3},  {"V", 0.0, 0.0, 0.0, 0.0},
      {"A", 0.0, 0.0, 0.0, 0.0},     {"S", 30.0, 30.0, 0.01, 0.01},
  };
  return rows;
}

std::span<const ExpectedAggregates> expected_aggregates_gpt5() {
  static const ExpectedAggregates rows[] = {
      {"K", 90.0, 90.0, 87.1, 87.1}, {"RW", 100.0, 100.0, 100.0, 100.0},
      {"M", 100.0, 100.0, 100.0, 100.0}, {"R", 70.0, 70.0, 5.5, 19.0},
      {"WM", 43.8, 40.0, 1.9, 3.2},  {"MS", 0.0, 0.0, 0.0, 0.0},
      {"MR", 33.5, 40.2, 0.1, 0.3},  {"V", 29.3, 40.1, 0.1, 1.1},
      {"A", 33.4, 60.1, 0.0, 1.4},   {"S", 30.0, 30.0, 0.01, 0.01},
  };
  return rows;
}

}  // namespace agiscore::reference
