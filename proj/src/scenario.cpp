#include "agiscore/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace agiscore {

DomainProfile apply_scenario(const DomainProfile& profile, std::span<const ScenarioEdit> edits) {
  DomainProfile edited = profile;
  std::unordered_set<std::string_view> touched;
  for (const auto& edit : edits) {
    const auto idx = profile.index_of(edit.domain_id);
    if (!idx) {
      throw Error(Errc::unknown_domain,
                  "scenario edit targets unknown domain '" + edit.domain_id + "'");
    }
    if (!touched.insert(edit.domain_id).second) {
      throw Error(Errc::duplicate_edit, "domain '" + edit.domain_id + "' edited twice");
    }
    if (!std::isfinite(edit.new_score) || edit.new_score < 0.0 || edit.new_score > 1.0) {
      std::ostringstream msg;
      msg << "scenario score " << edit.new_score << " for domain '" << edit.domain_id
          << "' outside [0,1]";
      throw Error(Errc::score_out_of_range, msg.str());
    }
    edited.scores[*idx] = edit.new_score;
  }
  return edited;
}

std::vector<BottleneckGain> rank_bottlenecks(const DomainProfile& profile, double target,
                                             const PGrid& grid, EpsilonFloor eps) {
  if (!std::isfinite(target) || target < 0.0 || target > 1.0) {
    std::ostringstream msg;
    msg << "bottleneck target " << target << " outside [0,1]";
    throw Error(Errc::score_out_of_range, msg.str());
  }

  const double base = agi_auc(profile, grid, eps);
  std::vector<BottleneckGain> gains;
  for (Eigen::Index i = 0; i < profile.size(); ++i) {
    if (!(profile.scores[i] < target)) continue;
    const ScenarioEdit edit{profile.domain_ids[static_cast<std::size_t>(i)], target};
    const double raised = agi_auc(apply_scenario(profile, {&edit, 1}), grid, eps);
    gains.push_back({edit.domain_id, std::max(raised - base, 0.0)});
  }
  // Ties keep profile order.
  std::stable_sort(gains.begin(), gains.end(),
                   [](const BottleneckGain& a, const BottleneckGain& b) {
                     return a.auc_gain > b.auc_gain;
                   });
  return gains;
}

Envelope uncertainty_envelope(const DomainProfile& profile, const PGrid& grid, EpsilonFloor eps,
                              double perturbation_scale, int sample_count, std::uint64_t seed) {
  if (!std::isfinite(perturbation_scale) || perturbation_scale < 0.0) {
    std::ostringstream msg;
    msg << "perturbation scale " << perturbation_scale << " must be >= 0";
    throw Error(Errc::bad_scale, msg.str());
  }
  if (sample_count < 1) {
    std::ostringstream msg;
    msg << "sample count " << sample_count << " must be >= 1";
    throw Error(Errc::bad_sample_count, msg.str());
  }

  const Curve nominal = sample_curve(profile, grid, eps);

  Envelope env;
  env.profile_name = profile.model_name;
  env.method = "uniform-additive-clamped/minmax(splitmix64)";
  env.perturbation_scale = perturbation_scale;
  env.sample_count = sample_count;
  env.seed = seed;
  env.p = nominal.p;
  env.nominal = nominal.values;
  env.lower = nominal.values;
  env.upper = nominal.values;

  DomainProfile perturbed = profile;
  for (int i = 0; i < sample_count; ++i) {
    std::uint64_t state = prng::sample_state(seed, i);
    for (Eigen::Index d = 0; d < profile.size(); ++d) {
      const double u = prng::unit_interval(prng::splitmix64_next(state));
      const double offset = (2.0 * u - 1.0) * perturbation_scale;
      perturbed.scores[d] = std::clamp(profile.scores[d] + offset, 0.0, 1.0);
    }
    for (Eigen::Index k = 0; k < env.p.size(); ++k) {
      const double v = agi_p(perturbed, env.p[k], eps);
      env.lower[k] = std::min(env.lower[k], v);
      env.upper[k] = std::max(env.upper[k], v);
    }
  }
  return env;
}

}  // namespace agiscore
