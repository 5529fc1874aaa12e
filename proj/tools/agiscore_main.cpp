#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "agiscore/curve.hpp"
#include "agiscore/mean.hpp"
#include "agiscore/report_io.hpp"
#include "agiscore/rollup.hpp"
#include "agiscore/scenario.hpp"
#include "agiscore/types.hpp"

namespace {

using namespace agiscore;

struct GridOptions {
  double p_min = -1.0;
  double p_max = 1.0;
  Eigen::Index num_points = 201;

  PGrid grid() const { return PGrid{p_min, p_max, num_points}; }
};

void add_grid_options(CLI::App* cmd, GridOptions& opts) {
  cmd->add_option("--p-min", opts.p_min, "Lower exponent bound")->capture_default_str();
  cmd->add_option("--p-max", opts.p_max, "Upper exponent bound")->capture_default_str();
  cmd->add_option("--grid", opts.num_points, "Number of uniform grid points")
      ->check(CLI::Range(static_cast<Eigen::Index>(2), std::numeric_limits<Eigen::Index>::max()))
      ->capture_default_str();
}

void add_eps_option(CLI::App* cmd, double& eps) {
  cmd->add_option("--eps", eps, "Score floor applied inside all aggregations")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0))
      ->capture_default_str();
}

void add_rounding_option(CLI::App* cmd, std::string& rounding, const char* def) {
  rounding = def;
  cmd->add_option("--rounding", rounding, "Percent display rounding")
      ->check(CLI::IsMember({"integer", "decimal"}))
      ->capture_default_str();
}

Rounding parse_rounding(const std::string& name) {
  return name == "decimal" ? Rounding::one_decimal : Rounding::integer;
}

CurveFormat parse_format(const std::string& name) {
  return name == "json" ? CurveFormat::structured : CurveFormat::delimited;
}

void verbose_note(bool verbose, const ProfileDocument& doc, const std::string& path) {
  if (!verbose) return;
  std::cerr << "loaded '" << path << "': model \"" << doc.profile.model_name << "\", "
            << doc.profile.size() << " domains, " << doc.subdomain_tables.size()
            << " subdomain tables\n";
}

std::vector<ScenarioEdit> parse_edits(const std::vector<std::string>& sets) {
  std::vector<ScenarioEdit> edits;
  for (const auto& item : sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw CLI::ValidationError("--set", "expected DOMAIN=PERCENT, got '" + item + "'");
    }
    ScenarioEdit edit;
    edit.domain_id = item.substr(0, eq);
    std::size_t consumed = 0;
    const std::string value = item.substr(eq + 1);
    try {
      edit.new_score = std::stod(value, &consumed) / 100.0;
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != value.size()) {
      throw CLI::ValidationError("--set", "'" + value + "' is not a number");
    }
    edits.push_back(std::move(edit));
  }
  return edits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence-aware general-intelligence scoring over domain ability profiles"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Progress notes on stderr; never touches stdout");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a profile document");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "Profile document")->required();

  // score
  auto* score_cmd = app.add_subcommand("score", "AGI_p at chosen exponents");
  std::string score_file;
  std::vector<double> score_ps = {1.0, 0.5, 0.0, -0.5, -1.0};
  double score_eps = 1e-6;
  std::string score_rounding;
  score_cmd->add_option("file", score_file, "Profile document")->required();
  score_cmd->add_option("--p", score_ps, "Exponents to evaluate")
      ->delimiter(',')
      ->capture_default_str();
  add_eps_option(score_cmd, score_eps);
  add_rounding_option(score_cmd, score_rounding, "integer");

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "Sample the AGI_p curve");
  std::string curve_file;
  GridOptions curve_grid;
  double curve_eps = 1e-6;
  std::string curve_format = "csv";
  curve_cmd->add_option("file", curve_file, "Profile document")->required();
  add_grid_options(curve_cmd, curve_grid);
  add_eps_option(curve_cmd, curve_eps);
  curve_cmd->add_option("--format", curve_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // auc
  auto* auc_cmd = app.add_subcommand("auc", "Integrated AGI_AUC score");
  std::string auc_file;
  GridOptions auc_grid;
  double auc_eps = 1e-6;
  std::string auc_rounding;
  auc_cmd->add_option("file", auc_file, "Profile document")->required();
  add_grid_options(auc_cmd, auc_grid);
  add_eps_option(auc_cmd, auc_eps);
  add_rounding_option(auc_cmd, auc_rounding, "integer");

  // rollup
  auto* rollup_cmd = app.add_subcommand("rollup", "Aggregate subdomain tables per domain");
  std::string rollup_file;
  std::string rollup_aggregator;
  double rollup_eps = 1e-6;
  std::string rollup_rounding;
  rollup_cmd->add_option("file", rollup_file, "Profile document with subdomain tables")
      ->required();
  rollup_cmd->add_option("--aggregator", rollup_aggregator, "Aggregate used as profile score")
      ->check(CLI::IsMember({"am", "wam", "gm", "wgm"}))
      ->required();
  add_eps_option(rollup_cmd, rollup_eps);
  add_rounding_option(rollup_cmd, rollup_rounding, "decimal");

  // report
  auto* report_cmd = app.add_subcommand("report", "Key-score comparison table");
  std::vector<std::string> report_files;
  GridOptions report_grid;
  double report_eps = 1e-6;
  std::string report_rounding;
  report_cmd->add_option("files", report_files, "Profile documents")->required();
  add_grid_options(report_cmd, report_grid);
  add_eps_option(report_cmd, report_eps);
  add_rounding_option(report_cmd, report_rounding, "integer");

  // scenario
  auto* scenario_cmd = app.add_subcommand("scenario", "What-if domain score overrides");
  std::string scenario_file;
  std::vector<std::string> scenario_sets;
  GridOptions scenario_grid;
  double scenario_eps = 1e-6;
  std::string scenario_rounding;
  scenario_cmd->add_option("file", scenario_file, "Profile document")->required();
  scenario_cmd->add_option("--set", scenario_sets, "Override DOMAIN=PERCENT (repeatable)")
      ->required();
  add_grid_options(scenario_cmd, scenario_grid);
  add_eps_option(scenario_cmd, scenario_eps);
  add_rounding_option(scenario_cmd, scenario_rounding, "integer");

  // bottlenecks
  auto* bottlenecks_cmd =
      app.add_subcommand("bottlenecks", "Rank domains by marginal AGI_AUC gain");
  std::string bottlenecks_file;
  double bottlenecks_target = 0.0;
  GridOptions bottlenecks_grid;
  double bottlenecks_eps = 1e-6;
  bottlenecks_cmd->add_option("file", bottlenecks_file, "Profile document")->required();
  bottlenecks_cmd
      ->add_option("--target", bottlenecks_target, "Raise-to target in percent")
      ->check(CLI::Range(0.0, 100.0))
      ->required();
  add_grid_options(bottlenecks_cmd, bottlenecks_grid);
  add_eps_option(bottlenecks_cmd, bottlenecks_eps);

  // envelope
  auto* envelope_cmd = app.add_subcommand("envelope", "Perturbation band around the curve");
  std::string envelope_file;
  double envelope_scale = 5.0;
  int envelope_samples = 1000;
  std::uint64_t envelope_seed = 0;
  GridOptions envelope_grid;
  double envelope_eps = 1e-6;
  std::string envelope_format = "csv";
  envelope_cmd->add_option("file", envelope_file, "Profile document")->required();
  envelope_cmd
      ->add_option("--scale", envelope_scale, "Perturbation half-width in percentage points")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  envelope_cmd->add_option("--samples", envelope_samples, "Number of perturbed profiles")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()))
      ->capture_default_str();
  envelope_cmd->add_option("--seed", envelope_seed, "PRNG seed")->capture_default_str();
  add_grid_options(envelope_cmd, envelope_grid);
  add_eps_option(envelope_cmd, envelope_eps);
  envelope_cmd->add_option("--format", envelope_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      const ProfileDocument doc = load_profile_document(validate_file);
      verbose_note(verbose, doc, validate_file);
      return 0;
    }

    if (app.got_subcommand(score_cmd)) {
      const ProfileDocument doc = load_profile_document(score_file);
      verbose_note(verbose, doc, score_file);
      const Rounding rounding = parse_rounding(score_rounding);
      std::string out = "p,agi_p_percent\n";
      for (const double p : score_ps) {
        out += format_full(p);
        out += ',';
        out += format_percent(100.0 * agi_p(doc.profile, p, EpsilonFloor(score_eps)), rounding);
        out += '\n';
      }
      std::cout << out;
      return 0;
    }

    if (app.got_subcommand(curve_cmd)) {
      const ProfileDocument doc = load_profile_document(curve_file);
      verbose_note(verbose, doc, curve_file);
      const Curve curve =
          sample_curve(doc.profile, curve_grid.grid(), EpsilonFloor(curve_eps));
      std::cout << emit_curve(curve, parse_format(curve_format));
      return 0;
    }

    if (app.got_subcommand(auc_cmd)) {
      const ProfileDocument doc = load_profile_document(auc_file);
      verbose_note(verbose, doc, auc_file);
      const double value = agi_auc(doc.profile, auc_grid.grid(), EpsilonFloor(auc_eps));
      std::cout << format_percent(100.0 * value, parse_rounding(auc_rounding)) << "\n";
      return 0;
    }

    if (app.got_subcommand(rollup_cmd)) {
      const ProfileDocument doc = load_profile_document(rollup_file);
      verbose_note(verbose, doc, rollup_file);
      if (doc.subdomain_tables.empty()) {
        throw Error(Errc::empty_input,
                    "'" + rollup_file + "' carries no subdomain tables to roll up");
      }
      const EpsilonFloor eps(rollup_eps);
      const Rounding rounding = parse_rounding(rollup_rounding);
      Aggregate aggregate = Aggregate::am;
      if (rollup_aggregator == "wam") aggregate = Aggregate::wam;
      if (rollup_aggregator == "gm") aggregate = Aggregate::gm;
      if (rollup_aggregator == "wgm") aggregate = Aggregate::wgm;

      std::string out = "domain,am,wam,gm,wgm,score_percent\n";
      for (const auto& table : doc.subdomain_tables) {
        const DomainAggregates agg = rollup_domain(table, eps);
        out += agg.domain_id;
        for (const Aggregate a : {Aggregate::am, Aggregate::wam, Aggregate::gm, Aggregate::wgm}) {
          out += ',';
          out += format_percent(agg.get(a), rounding);
        }
        out += ',';
        out += format_percent(agg.get(aggregate), rounding);
        out += '\n';
      }
      // Assembles and validates the profile; any duplicate domain id fails here.
      rollup_all(doc.subdomain_tables, aggregate, eps, doc.profile.model_name);
      std::cout << out;
      return 0;
    }

    if (app.got_subcommand(report_cmd)) {
      std::vector<DomainProfile> profiles;
      for (const auto& path : report_files) {
        ProfileDocument doc = load_profile_document(path);
        verbose_note(verbose, doc, path);
        profiles.push_back(std::move(doc.profile));
      }
      std::cout << emit_report(profiles, report_grid.grid(), EpsilonFloor(report_eps),
                               parse_rounding(report_rounding));
      return 0;
    }

    if (app.got_subcommand(scenario_cmd)) {
      const ProfileDocument doc = load_profile_document(scenario_file);
      verbose_note(verbose, doc, scenario_file);
      const std::vector<ScenarioEdit> edits = parse_edits(scenario_sets);
      const EpsilonFloor eps(scenario_eps);
      const PGrid grid = scenario_grid.grid();
      const Rounding rounding = parse_rounding(scenario_rounding);

      const DomainProfile& before = doc.profile;
      const DomainProfile after = apply_scenario(before, edits);

      std::string out = "field,before,after\n";
      for (Eigen::Index i = 0; i < before.size(); ++i) {
        out += before.domain_ids[static_cast<std::size_t>(i)];
        out += ',';
        out += format_percent(100.0 * before.scores[i], rounding);
        out += ',';
        out += format_percent(100.0 * after.scores[i], rounding);
        out += '\n';
      }
      static constexpr std::pair<const char*, double> kMetrics[] = {
          {"agi_p1", 1.0}, {"agi_p0.5", 0.5}, {"agi_p0", 0.0},
          {"agi_p-0.5", -0.5}, {"agi_p-1", -1.0}};
      for (const auto& [label, p] : kMetrics) {
        out += label;
        out += ',';
        out += format_percent(100.0 * agi_p(before, p, eps), rounding);
        out += ',';
        out += format_percent(100.0 * agi_p(after, p, eps), rounding);
        out += '\n';
      }
      out += "agi_auc,";
      out += format_percent(100.0 * agi_auc(before, grid, eps), rounding);
      out += ',';
      out += format_percent(100.0 * agi_auc(after, grid, eps), rounding);
      out += '\n';
      std::cout << out;
      return 0;
    }

    if (app.got_subcommand(bottlenecks_cmd)) {
      const ProfileDocument doc = load_profile_document(bottlenecks_file);
      verbose_note(verbose, doc, bottlenecks_file);
      const auto gains = rank_bottlenecks(doc.profile, bottlenecks_target / 100.0,
                                          bottlenecks_grid.grid(), EpsilonFloor(bottlenecks_eps));
      std::string out = "domain,auc_gain_percent\n";
      for (const auto& gain : gains) {
        out += gain.domain_id;
        out += ',';
        out += format_full(100.0 * gain.auc_gain);
        out += '\n';
      }
      std::cout << out;
      return 0;
    }

    if (app.got_subcommand(envelope_cmd)) {
      const ProfileDocument doc = load_profile_document(envelope_file);
      verbose_note(verbose, doc, envelope_file);
      const Envelope env = uncertainty_envelope(doc.profile, envelope_grid.grid(),
                                                EpsilonFloor(envelope_eps),
                                                envelope_scale / 100.0, envelope_samples,
                                                envelope_seed);
      std::cout << emit_envelope(env, parse_format(envelope_format));
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  return 0;
}
