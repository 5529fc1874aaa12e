// Acceptance suite: every release-gating check, one verdict line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "agiscore/curve.hpp"
#include "agiscore/mean.hpp"
#include "agiscore/reference_data.hpp"
#include "agiscore/report_io.hpp"
#include "agiscore/rollup.hpp"
#include "agiscore/scenario.hpp"
#include "process_support.hpp"
#include "test_support.hpp"

using namespace agiscore;
using testsupport::rel_diff;

namespace {

struct CriterionFailure {
  std::string message;
};

#define EXPECT(cond, msg)                                   \
  do {                                                      \
    if (!(cond)) {                                          \
      std::ostringstream oss_;                              \
      oss_ << msg;                                          \
      throw CriterionFailure{oss_.str()};                   \
    }                                                       \
  } while (0)

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Key-score table reproduction: integer display equals the published
//    values; the one-decimal intermediates sit within half an integer unit;
//    full run finishes inside one second.
void criterion_key_scores() {
  const auto start = std::chrono::steady_clock::now();
  const double exponents[] = {1.0, 0.5, 0.0, -0.5, -1.0};

  for (const auto& expected : reference::expected_key_scores()) {
    const DomainProfile* profile = nullptr;
    for (const auto& candidate : reference::all_profiles()) {
      if (candidate.model_name == expected.model) profile = &candidate;
    }
    EXPECT(profile != nullptr, "missing bundled profile " << expected.model);

    for (int col = 0; col < 6; ++col) {
      const double value =
          col < 5 ? agi_p(*profile, exponents[col]) : agi_auc(*profile);
      const double percent = 100.0 * value;
      const int shown = static_cast<int>(round_percent(percent, Rounding::integer));
      EXPECT(shown == expected.values[static_cast<std::size_t>(col)],
             expected.model << " column " << col << ": displayed " << shown << ", published "
                            << expected.values[static_cast<std::size_t>(col)]);
      EXPECT(std::abs(round_half_away(percent, 1) -
                      expected.values[static_cast<std::size_t>(col)]) <= 0.5,
             expected.model << " column " << col << ": value " << percent
                            << " further than 0.5 points from published");
    }
  }
  const double elapsed = seconds_since(start);
  EXPECT(elapsed < 1.0, "took " << elapsed << " s");
}

// 2. Per-domain aggregate reproduction: all 10 domains x 2 models x 4
//    aggregates within +/-0.05 percentage points of the published tables,
//    underflow rows included; full run inside one second.
void criterion_domain_aggregates() {
  const auto start = std::chrono::steady_clock::now();

  struct Model {
    const char* name;
    const std::vector<SubdomainTable>* tables;
    std::span<const reference::ExpectedAggregates> expected;
  };
  const Model models[] = {
      {"GPT-4", &reference::gpt4_tables(), reference::expected_aggregates_gpt4()},
      {"GPT-5", &reference::gpt5_tables(), reference::expected_aggregates_gpt5()},
  };

  for (const auto& model : models) {
    EXPECT(model.tables->size() == 10, model.name << ": expected 10 tables");
    for (std::size_t d = 0; d < model.tables->size(); ++d) {
      const DomainAggregates agg = rollup_domain((*model.tables)[d]);
      const auto& expected = model.expected[d];
      EXPECT(agg.domain_id == expected.domain_id, "table order mismatch");
      const struct {
        const char* label;
        double got;
        double want;
      } cells[] = {{"AM", agg.am, expected.am},
                   {"WAM", agg.wam, expected.wam},
                   {"GM", agg.gm, expected.gm},
                   {"WGM", agg.wgm, expected.wgm}};
      for (const auto& cell : cells) {
        EXPECT(std::abs(cell.got - cell.want) <= 0.05,
               model.name << " " << expected.domain_id << " " << cell.label << ": got "
                          << cell.got << ", published " << cell.want);
      }
    }
  }

  // the named underflow/rounding rows, spelled out
  const DomainAggregates s4 = rollup_domain(reference::gpt4_tables()[9]);
  EXPECT(std::abs(s4.gm - 0.01) <= 0.05 && std::abs(s4.wgm - 0.01) <= 0.05,
         "speed GM/WGM drifted from 0.01: " << s4.gm << "/" << s4.wgm);
  const DomainAggregates k4 = rollup_domain(reference::gpt4_tables()[0]);
  EXPECT(std::abs(k4.gm - 6.3) <= 0.05, "knowledge GM drifted from 6.3: " << k4.gm);
  const DomainAggregates rw4 = rollup_domain(reference::gpt4_tables()[1]);
  EXPECT(std::abs(rw4.wgm - 16.0) <= 0.05, "reading WGM drifted from 16.0: " << rw4.wgm);
  const DomainAggregates r5 = rollup_domain(reference::gpt5_tables()[3]);
  EXPECT(std::abs(r5.wgm - 19.0) <= 0.05, "reasoning WGM drifted from 19.0: " << r5.wgm);

  const double elapsed = seconds_since(start);
  EXPECT(elapsed < 1.0, "took " << elapsed << " s");
}

// 3. Quadrature: doubling the default grid moves AGI_AUC by less than 1e-4
//    on every bundled profile, and the trapezoid is exact on affine curves.
void criterion_quadrature() {
  for (const auto& profile : reference::all_profiles()) {
    const double coarse = agi_auc(profile, PGrid{-1.0, 1.0, 201});
    const double fine = agi_auc(profile, PGrid{-1.0, 1.0, 401});
    EXPECT(std::abs(coarse - fine) < 1e-4,
           profile.model_name << ": 201->401 moved AUC by " << std::abs(coarse - fine));
  }

  for (const Eigen::Index n : {2L, 5L, 33L, 201L, 400L}) {
    Curve c;
    c.p = PGrid{-1.0, 1.0, n}.points();
    c.values = 0.25 + 0.375 * (c.p + 1.0);  // affine, range [0.25, 1.0]
    const double exact = 0.25 + 0.375;      // mean of an affine function over the span
    EXPECT(std::abs(auc(c) - exact) < 1e-12,
           "affine curve with " << n << " points: error " << std::abs(auc(c) - exact));
  }
}

// 4. Generalized-mean property suite over 1000 random lattice profiles.
void criterion_properties() {
  testsupport::Rng rng(0xA61C0DE);
  const EpsilonFloor eps;
  const double oracle_ps[] = {1.0, 0.0, -1.0};

  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.range(1, 12);
    const ArrayXd scores = rng.lattice_scores(n);
    const ArrayXd floored = floor_scores(scores, eps);
    const bool all_equal = (floored == floored[0]).all();
    const double lo = floored.minCoeff();
    const double hi = floored.maxCoeff();

    // monotone in p on a 41-point grid, strict unless all scores collapse
    double prev = power_mean(scores, -1.0, eps);
    EXPECT(prev >= lo && prev <= hi, "bounds violated at p=-1");
    for (int k = 1; k <= 40; ++k) {
      const double p = -1.0 + 2.0 * k / 40.0;
      const double cur = power_mean(scores, p, eps);
      if (all_equal) {
        EXPECT(cur == prev, "trial " << trial << ": equal scores moved at p=" << p);
      } else {
        EXPECT(cur > prev, "trial " << trial << ": not strictly increasing at p=" << p);
      }
      EXPECT(cur >= lo && cur <= hi, "trial " << trial << ": bounds violated at p=" << p);
      prev = cur;
    }

    // permutation invariance, bit for bit
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)],
                                              order[static_cast<std::size_t>(rng.range(0, i))]);
    ArrayXd shuffled(n);
    ArrayXd weights(n);
    for (int i = 0; i < n; ++i) {
      shuffled[i] = scores[order[static_cast<std::size_t>(i)]];
      weights[i] = 1.0 + static_cast<double>(rng.range(0, 9));
    }
    const double p = -1.0 + 2.0 * rng.uniform();
    EXPECT(power_mean(shuffled, p, eps) == power_mean(scores, p, eps),
           "trial " << trial << ": permutation changed the result");

    // homogeneity on floored-positive scores
    const ArrayXd positive = scores.max(0.01);
    const double c = 0.1 + 0.9 * rng.uniform();
    EXPECT(rel_diff(power_mean(c * positive, p, eps), c * power_mean(positive, p, eps)) < 1e-12,
           "trial " << trial << ": homogeneity broke at p=" << p);

    // equal weights collapse onto the unweighted mean
    const double cw = 0.5 + 9.5 * rng.uniform();
    const ArrayXd equal_weights = ArrayXd::Constant(n, cw);
    EXPECT(rel_diff(weighted_power_mean(scores, equal_weights, 1.0, eps),
                    power_mean(scores, 1.0, eps)) < 1e-12,
           "trial " << trial << ": WAM != AM under equal weights");
    EXPECT(rel_diff(weighted_power_mean(scores, equal_weights, 0.0, eps),
                    power_mean(scores, 0.0, eps)) < 1e-12,
           "trial " << trial << ": WGM != GM under equal weights");

    // brute-force oracle agreement at p = 1, 0, -1 (weighted and not)
    for (const double op : oracle_ps) {
      double oracle = 0.0;
      double oracle_w = 0.0;
      if (op == 1.0) {
        oracle = testsupport::arithmetic_oracle(scores, eps.value);
        oracle_w = testsupport::arithmetic_oracle(scores, eps.value, &weights);
      } else if (op == 0.0) {
        oracle = testsupport::geometric_oracle(scores, eps.value);
        oracle_w = testsupport::geometric_oracle(scores, eps.value, &weights);
      } else {
        oracle = testsupport::harmonic_oracle(scores, eps.value);
        oracle_w = testsupport::harmonic_oracle(scores, eps.value, &weights);
      }
      EXPECT(rel_diff(power_mean(scores, op, eps), oracle) < 1e-12,
             "trial " << trial << ": oracle mismatch at p=" << op);
      EXPECT(rel_diff(weighted_power_mean(scores, weights, op, eps), oracle_w) < 1e-12,
             "trial " << trial << ": weighted oracle mismatch at p=" << op);
    }
  }
}

// 5. Scenario: raising the storage bottleneck from 0 to 30 points lands on
//    61 exactly for the arithmetic score and near 55 for the integral, and
//    no single-domain raise ever lowers any score.
void criterion_scenario() {
  const ScenarioEdit edit{"MS", 0.30};
  const DomainProfile next = apply_scenario(reference::gpt5_profile(), {&edit, 1});

  const double p1 = 100.0 * agi_p(next, 1.0);
  EXPECT(static_cast<int>(round_percent(p1, Rounding::integer)) == 61,
         "arithmetic score displayed " << round_percent(p1, Rounding::integer));
  EXPECT(std::abs(p1 - 61.0) < 1e-6, "arithmetic score " << p1 << " not 61 exactly");

  std::vector<double> ps(201), vs(201);
  for (int k = 0; k < 201; ++k) {
    ps[static_cast<std::size_t>(k)] = -1.0 + 0.01 * k;
    vs[static_cast<std::size_t>(k)] = agi_p(next, ps[static_cast<std::size_t>(k)]);
  }
  const double oracle = testsupport::trapezoid_oracle(ps, vs);
  const double auc_next = agi_auc(next);
  EXPECT(rel_diff(auc_next, oracle) < 1e-12, "AUC " << auc_next << " vs oracle " << oracle);
  EXPECT(std::abs(100.0 * auc_next - 55.0) <= 1.0,
         "AUC " << 100.0 * auc_next << " not within 55 +/- 1");
  EXPECT(auc_next > agi_auc(reference::gpt5_profile()), "scenario did not increase AUC");

  const double exponents[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (const auto& profile : reference::all_profiles()) {
    const double base_auc = agi_auc(profile, PGrid{-1.0, 1.0, 41});
    for (Eigen::Index i = 0; i < profile.size(); ++i) {
      for (const double target : {0.25, 0.5, 1.0}) {
        if (profile.scores[i] >= target) continue;
        const ScenarioEdit raise{profile.domain_ids[static_cast<std::size_t>(i)], target};
        const DomainProfile raised = apply_scenario(profile, {&raise, 1});
        for (const double p : exponents) {
          EXPECT(agi_p(raised, p) >= agi_p(profile, p),
                 profile.model_name << ": raising " << raise.domain_id << " lowered AGI_" << p);
        }
        EXPECT(agi_auc(raised, PGrid{-1.0, 1.0, 41}) >= base_auc,
               profile.model_name << ": raising " << raise.domain_id << " lowered the AUC");
      }
    }
  }
}

// 6. Determinism: report, curve, and seeded envelope produce bit-identical
//    bytes across two consecutive CLI runs (and library emissions agree).
void criterion_determinism() {
  const std::string report_args = "report " + testsupport::data_file("gpt4_2023.json") + " " +
                                  testsupport::data_file("gpt5_2025.json") + " " +
                                  testsupport::data_file("agi_ideal.json");
  const std::string curve_args = "curve " + testsupport::data_file("gpt5_2025.json");
  const std::string envelope_args = "envelope " + testsupport::data_file("gpt5_2025.json") +
                                    " --scale 5 --samples 200 --seed 11";

  for (const auto& args : {report_args, curve_args, envelope_args}) {
    const auto first = testsupport::run_cli(args);
    const auto second = testsupport::run_cli(args);
    EXPECT(first.exit_code == 0, "'" << args << "' exited " << first.exit_code);
    EXPECT(second.exit_code == 0, "'" << args << "' exited " << second.exit_code);
    EXPECT(!first.output.empty(), "'" << args << "' produced no output");
    EXPECT(first.output == second.output, "'" << args << "' output differs between runs");
  }

  const std::vector<DomainProfile> profiles(reference::all_profiles().begin(),
                                            reference::all_profiles().end());
  EXPECT(emit_report(profiles) == emit_report(profiles), "emit_report not reproducible");
  const Curve c1 = sample_curve(reference::gpt5_profile());
  const Curve c2 = sample_curve(reference::gpt5_profile());
  EXPECT(emit_curve(c1) == emit_curve(c2), "emit_curve not reproducible");
  const Envelope e1 = uncertainty_envelope(reference::gpt5_profile(), {}, {}, 0.05, 100, 5);
  const Envelope e2 = uncertainty_envelope(reference::gpt5_profile(), {}, {}, 0.05, 100, 5);
  EXPECT(emit_envelope(e1) == emit_envelope(e2), "emit_envelope not reproducible");
}

struct Criterion {
  const char* label;
  void (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1. key-score table reproduction (integer display, <1s)", criterion_key_scores},
      {"2. per-domain aggregate reproduction (+/-0.05, <1s)", criterion_domain_aggregates},
      {"3. quadrature convergence and affine exactness", criterion_quadrature},
      {"4. generalized-mean property suite (1000 profiles)", criterion_properties},
      {"5. bottleneck scenario and monotone response", criterion_scenario},
      {"6. bit-identical report/curve/envelope output", criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    try {
      criterion.run();
      std::cout << "[PASS] " << criterion.label << "\n";
    } catch (const CriterionFailure& f) {
      ++failures;
      std::cout << "[FAIL] " << criterion.label << ": " << f.message << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << criterion.label << ": unexpected error: " << e.what() << "\n";
    }
  }

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
