#include "agiscore/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "agiscore/mean.hpp"

namespace agiscore {
namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& require_field(const ordered_json& j, const char* key, const char* context) {
  const auto it = j.find(key);
  if (it == j.end()) {
    std::ostringstream msg;
    msg << context << ": missing field '" << key << "'";
    throw Error(Errc::parse_error, msg.str());
  }
  return *it;
}

double require_number(const ordered_json& j, const char* key, const char* context) {
  const auto& field = require_field(j, key, context);
  if (!field.is_number()) {
    std::ostringstream msg;
    msg << context << ": field '" << key << "' must be a number";
    throw Error(Errc::parse_error, msg.str());
  }
  return field.get<double>();
}

std::string require_string(const ordered_json& j, const char* key, const char* context) {
  const auto& field = require_field(j, key, context);
  if (!field.is_string()) {
    std::ostringstream msg;
    msg << context << ": field '" << key << "' must be a string";
    throw Error(Errc::parse_error, msg.str());
  }
  return field.get<std::string>();
}

}  // namespace

double round_half_away(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

double round_percent(double percent, Rounding rounding) {
  const double one_decimal = round_half_away(percent, 1);
  if (rounding == Rounding::one_decimal) return one_decimal;
  return round_half_away(one_decimal, 0);
}

std::string format_percent(double percent, Rounding rounding) {
  char buf[32];
  if (rounding == Rounding::integer) {
    std::snprintf(buf, sizeof buf, "%.0f", round_percent(percent, rounding));
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", round_percent(percent, rounding));
  }
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17f", value);
  std::string s = buf;
  const auto dot = s.find('.');
  const auto last = s.find_last_not_of('0');
  s.erase(std::max(dot + 1, last) + 1);
  return s;
}

ProfileDocument parse_profile_document(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!root.is_object()) {
    throw Error(Errc::parse_error, "document root must be an object");
  }

  ProfileDocument doc;
  doc.schema_version = require_string(root, "schema_version", "document");
  if (doc.schema_version != kSchemaVersion) {
    throw Error(Errc::schema_version_unsupported,
                "unsupported schema_version '" + doc.schema_version + "' (expected '" +
                    std::string(kSchemaVersion) + "')");
  }
  doc.profile.model_name = require_string(root, "model_name", "document");

  const auto& domains = require_field(root, "domains", "document");
  if (!domains.is_array() || domains.empty()) {
    throw Error(Errc::empty_profile, "document 'domains' must be a nonempty array");
  }
  const auto n = static_cast<Eigen::Index>(domains.size());
  doc.profile.scores.resize(n);
  std::vector<double> weights;
  Eigen::Index i = 0;
  for (const auto& d : domains) {
    const std::string context = "domains[" + std::to_string(i) + "]";
    doc.profile.domain_ids.push_back(require_string(d, "id", context.c_str()));
    doc.profile.scores[i] = require_number(d, "score_percent", context.c_str()) / 100.0;
    if (d.contains("weight")) {
      weights.push_back(require_number(d, "weight", context.c_str()));
    }
    ++i;
  }
  if (!weights.empty()) {
    if (static_cast<Eigen::Index>(weights.size()) != n) {
      throw Error(Errc::bad_weights,
                  "weights must be given for all domains or none (got " +
                      std::to_string(weights.size()) + " of " + std::to_string(n) + ")");
    }
    doc.profile.weights = Eigen::Map<const ArrayXd>(weights.data(), n);
  }
  validate_profile(doc.profile);

  if (root.contains("subdomain_tables")) {
    const auto& tables = root["subdomain_tables"];
    if (!tables.is_array()) {
      throw Error(Errc::parse_error, "'subdomain_tables' must be an array");
    }
    for (const auto& t : tables) {
      SubdomainTable table;
      table.domain_id = require_string(t, "domain_id", "subdomain_tables");
      const auto& entries = require_field(t, "entries", table.domain_id.c_str());
      if (!entries.is_array() || entries.empty()) {
        throw Error(Errc::empty_input,
                    "subdomain table '" + table.domain_id + "' has no entries");
      }
      table.raw_scores.resize(static_cast<Eigen::Index>(entries.size()));
      table.weights.resize(static_cast<Eigen::Index>(entries.size()));
      Eigen::Index k = 0;
      for (const auto& entry : entries) {
        const std::string context = table.domain_id + ".entries[" + std::to_string(k) + "]";
        table.subdomain_ids.push_back(require_string(entry, "id", context.c_str()));
        table.raw_scores[k] = require_number(entry, "raw", context.c_str());
        table.weights[k] = require_number(entry, "weight", context.c_str());
        ++k;
      }
      validate_table(table);
      doc.subdomain_tables.push_back(std::move(table));
    }
  }
  return doc;
}

ProfileDocument load_profile_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_profile_document(buffer.str());
  } catch (Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string serialize_profile_document(const ProfileDocument& doc) {
  ordered_json root;
  root["schema_version"] = doc.schema_version;
  root["model_name"] = doc.profile.model_name;
  root["domains"] = ordered_json::array();
  for (Eigen::Index i = 0; i < doc.profile.size(); ++i) {
    ordered_json d;
    d["id"] = doc.profile.domain_ids[static_cast<std::size_t>(i)];
    d["score_percent"] = doc.profile.scores[i] * 100.0;
    if (doc.profile.weights) {
      d["weight"] = (*doc.profile.weights)[i];
    }
    root["domains"].push_back(std::move(d));
  }
  if (!doc.subdomain_tables.empty()) {
    root["subdomain_tables"] = ordered_json::array();
    for (const auto& table : doc.subdomain_tables) {
      ordered_json t;
      t["domain_id"] = table.domain_id;
      t["entries"] = ordered_json::array();
      for (Eigen::Index k = 0; k < table.size(); ++k) {
        ordered_json entry;
        entry["id"] = table.subdomain_ids[static_cast<std::size_t>(k)];
        entry["raw"] = table.raw_scores[k];
        entry["weight"] = table.weights[k];
        t["entries"].push_back(std::move(entry));
      }
      root["subdomain_tables"].push_back(std::move(t));
    }
  }
  return root.dump(2) + "\n";
}

std::string emit_curve(const Curve& curve, CurveFormat format) {
  if (format == CurveFormat::delimited) {
    std::string out = "p,agi_p\n";
    for (Eigen::Index k = 0; k < curve.size(); ++k) {
      out += format_full(curve.p[k]);
      out += ',';
      out += format_full(curve.values[k]);
      out += '\n';
    }
    return out;
  }
  ordered_json root;
  root["profile_name"] = curve.profile_name;
  root["grid"] = {{"p_min", curve.p[0]},
                  {"p_max", curve.p[curve.size() - 1]},
                  {"num_points", curve.size()}};
  root["samples"] = ordered_json::array();
  for (Eigen::Index k = 0; k < curve.size(); ++k) {
    root["samples"].push_back({{"p", curve.p[k]}, {"agi_p", curve.values[k]}});
  }
  return root.dump(2) + "\n";
}

std::string emit_report(std::span<const DomainProfile> profiles, const PGrid& grid,
                        EpsilonFloor eps, Rounding rounding) {
  if (profiles.empty()) {
    throw Error(Errc::empty_input, "report needs at least one profile");
  }
  static constexpr double kReportExponents[] = {1.0, 0.5, 0.0, -0.5, -1.0};
  std::string out = "model,agi_p1,agi_p0.5,agi_p0,agi_p-0.5,agi_p-1,agi_auc\n";
  for (const auto& profile : profiles) {
    out += profile.model_name;
    for (const double p : kReportExponents) {
      out += ',';
      out += format_percent(100.0 * agi_p(profile, p, eps), rounding);
    }
    out += ',';
    out += format_percent(100.0 * agi_auc(profile, grid, eps), rounding);
    out += '\n';
  }
  return out;
}

std::string emit_envelope(const Envelope& envelope, CurveFormat format) {
  if (format == CurveFormat::delimited) {
    std::string out = "p,lower,nominal,upper\n";
    for (Eigen::Index k = 0; k < envelope.p.size(); ++k) {
      out += format_full(envelope.p[k]);
      out += ',';
      out += format_full(envelope.lower[k]);
      out += ',';
      out += format_full(envelope.nominal[k]);
      out += ',';
      out += format_full(envelope.upper[k]);
      out += '\n';
    }
    return out;
  }
  ordered_json root;
  root["profile_name"] = envelope.profile_name;
  root["method"] = envelope.method;
  root["perturbation_scale"] = envelope.perturbation_scale;
  root["sample_count"] = envelope.sample_count;
  root["seed"] = envelope.seed;
  root["points"] = ordered_json::array();
  for (Eigen::Index k = 0; k < envelope.p.size(); ++k) {
    root["points"].push_back({{"p", envelope.p[k]},
                              {"lower", envelope.lower[k]},
                              {"nominal", envelope.nominal[k]},
                              {"upper", envelope.upper[k]}});
  }
  return root.dump(2) + "\n";
}

}  // namespace agiscore
