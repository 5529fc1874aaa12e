#pragma once

#include <string>

#include "agiscore/mean.hpp"
#include "agiscore/types.hpp"

namespace agiscore {

// Uniform exponent grid p_k = p_min + k * (p_max - p_min) / (num_points - 1).
// The default 201-point grid on [-1, 1] has spacing 0.01 and contains p = 0
// as an exact grid point; even point counts skip p = 0, which only means no
// sample uses the geometric branch.
struct PGrid {
  double p_min = -1.0;
  double p_max = 1.0;
  Eigen::Index num_points = 201;

  ArrayXd points() const;
};

// AGI_p sampled over a grid. p is strictly increasing; values are
// nondecreasing in p (generalized-mean monotonicity).
struct Curve {
  std::string profile_name;
  ArrayXd p;
  ArrayXd values;

  Eigen::Index size() const { return p.size(); }
};

Curve sample_curve(const DomainProfile& profile, const PGrid& grid = {}, EpsilonFloor eps = {});

// Normalized composite-trapezoid estimate of the curve integral:
//   (1 / (p_last - p_first)) * sum_k (p_{k+1} - p_k) (v_k + v_{k+1}) / 2.
// Exact for values affine in p; the result lies within [min value, max value].
double auc(const Curve& curve);

double agi_auc(const DomainProfile& profile, const PGrid& grid = {}, EpsilonFloor eps = {});

}  // namespace agiscore
