#ifndef DISTDYN_CONDITIONING_HPP
#define DISTDYN_CONDITIONING_HPP

#include <map>
#include <string>
#include <utility>

#include "distdyn/density.hpp"
#include "distdyn/panel.hpp"

namespace distdyn {

// A pre-filtered series: the base series divided by a conditioning quantity.
// Cells without a value carry a recorded exclusion reason. The embedded Series
// feeds the dynamics pipeline exactly like an unconditioned one.
struct ConditionedSeries {
  Series series;
  std::string conditioner;  // "space" or a covariate name
  std::map<std::pair<std::string, int>, std::string> exclusions;
};

// value(i, t) = series(i, t) / unweighted mean of series over i's neighbors at
// t. Entities without neighbors are excluded with reason "no neighbors".
ConditionedSeries spatial_condition(const Series& series, const PanelDataset& panel);

// value(i, t) = series(i, t) / covariate(i, t).
ConditionedSeries ratio_condition(const Series& series, const Series& covariate);

// KDE over contemporaneous (a, b) pairs pooled across years, uniform weights.
JointDensityGrid joint_distribution(const Series& series_a, const Series& series_b,
                                    const Grid1D& a_grid, const Grid1D& b_grid, double h_a,
                                    double h_b);

// Pooled contemporaneous values of two series where both are defined.
std::pair<std::vector<double>, std::vector<double>> pooled_pairs(const Series& series_a,
                                                                 const Series& series_b);

}  // namespace distdyn

#endif
