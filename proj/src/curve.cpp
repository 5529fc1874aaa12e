#include "agiscore/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace agiscore {

ArrayXd PGrid::points() const {
  if (num_points < 2) {
    std::ostringstream msg;
    msg << "grid needs at least 2 points, got " << num_points;
    throw Error(Errc::too_few_samples, msg.str());
  }
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_min < p_max)) {
    std::ostringstream msg;
    msg << "grid requires p_min < p_max, got [" << p_min << ", " << p_max << "]";
    throw Error(Errc::non_monotone_grid, msg.str());
  }
  const double step = (p_max - p_min) / static_cast<double>(num_points - 1);
  ArrayXd pts(num_points);
  for (Eigen::Index k = 0; k < num_points; ++k) {
    pts[k] = p_min + static_cast<double>(k) * step;
  }
  return pts;
}

Curve sample_curve(const DomainProfile& profile, const PGrid& grid, EpsilonFloor eps) {
  Curve curve;
  curve.profile_name = profile.model_name;
  curve.p = grid.points();
  curve.values.resize(curve.p.size());
  for (Eigen::Index k = 0; k < curve.p.size(); ++k) {
    curve.values[k] = agi_p(profile, curve.p[k], eps);
  }
  return curve;
}

double auc(const Curve& curve) {
  const auto n = curve.size();
  if (n < 2) {
    std::ostringstream msg;
    msg << "auc needs at least 2 samples, got " << n;
    throw Error(Errc::too_few_samples, msg.str());
  }
  if (curve.values.size() != n) {
    throw Error(Errc::length_mismatch, "curve p/value lengths differ");
  }
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (!(curve.p[k] < curve.p[k + 1])) {
      std::ostringstream msg;
      msg << "curve grid not strictly increasing at index " << k;
      throw Error(Errc::non_monotone_grid, msg.str());
    }
  }

  const auto& p = curve.p;
  const auto& v = curve.values;
  const double area =
      ((p.tail(n - 1) - p.head(n - 1)) * (v.tail(n - 1) + v.head(n - 1))).sum() / 2.0;
  const double normalized = area / (p[n - 1] - p[0]);
  return std::clamp(normalized, v.minCoeff(), v.maxCoeff());
}

double agi_auc(const DomainProfile& profile, const PGrid& grid, EpsilonFloor eps) {
  return auc(sample_curve(profile, grid, eps));
}

}  // namespace agiscore
