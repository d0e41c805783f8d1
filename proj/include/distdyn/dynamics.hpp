#ifndef DISTDYN_DYNAMICS_HPP
#define DISTDYN_DYNAMICS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "distdyn/density.hpp"
#include "distdyn/panel.hpp"

namespace distdyn {

// Row-conditional transition density g(y|x). Each valid row integrates to 1
// over the y grid; rows whose x-marginal falls below marginal_floor are
// marked invalid and carry no density.
struct ConditionalKernel {
  Grid1D x_grid;
  Grid1D y_grid;
  std::vector<double> g;    // row-major: g[ix * y_grid.size() + iy]
  std::vector<char> valid;  // per x row
  double marginal_floor = 0.0;
  double h_x = 0.0;
  double h_y = 0.0;

  double at(std::size_t ix, std::size_t iy) const { return g[ix * y_grid.size() + iy]; }
  std::span<const double> row(std::size_t ix) const {
    return std::span<const double>(g).subspan(ix * y_grid.size(), y_grid.size());
  }
};

struct ErgodicResult {
  DensityGrid distribution;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

struct NTPCurve {
  Grid1D x_grid;
  std::vector<double> p;  // in [-1, 1] on valid rows
  std::vector<char> valid;
};

// Builds the joint KDE and the x-marginal KDE from the pooled pairs, divides
// row-wise, invalidates thin rows, and renormalizes each valid row to unit
// integral over the y grid. Bandwidths default to per-axis Silverman.
ConditionalKernel conditional_kernel(const TransitionPairs& pairs, const Grid1D& x_grid,
                                     const Grid1D& y_grid,
                                     std::optional<std::pair<double, double>> bandwidths =
                                         std::nullopt,
                                     double marginal_floor_fraction = 1e-4);

// Power iteration on the quadrature-discretized operator, starting from the
// uniform density (or `start` when supplied), renormalizing to unit mass each
// step. Requires identical x and y grids. Non-convergence returns the last
// iterate with converged = false.
ErgodicResult ergodic_distribution(const ConditionalKernel& kernel, double tolerance = 1e-10,
                                   int max_iter = 100000,
                                   std::span<const double> start = {});

// One application of the evolution operator (with renormalization); exposed
// for fixed-point residual checks.
DensityGrid apply_transition(const ConditionalKernel& kernel, std::span<const double> density);

// p(x) = mass of g(.|x) above x minus mass below x, trapezoid quadrature with
// the cell containing x split linearly.
NTPCurve net_transition_probability(const ConditionalKernel& kernel);

}  // namespace distdyn

#endif
