#ifndef DISTDYN_DENSITY_HPP
#define DISTDYN_DENSITY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace distdyn {

// Uniform evaluation grid, at least 16 points.
struct Grid1D {
  std::vector<double> points;
  double step = 0.0;

  static Grid1D linspace(double lo, double hi, std::size_t n);

  std::size_t size() const { return points.size(); }
  double front() const { return points.front(); }
  double back() const { return points.back(); }

  bool same_as(const Grid1D& other, double rel_tol = 1e-12) const;
};

struct DensityGrid {
  Grid1D grid;
  std::vector<double> density;

  double integral() const;  // trapezoid
};

// Row-major over x then y: density[ix * y_grid.size() + iy].
struct JointDensityGrid {
  Grid1D x_grid;
  Grid1D y_grid;
  std::vector<double> density;

  double at(std::size_t ix, std::size_t iy) const { return density[ix * y_grid.size() + iy]; }
  double integral() const;  // 2-D trapezoid
};

// Trapezoid quadrature of uniformly sampled values.
double trapezoid(std::span<const double> y, double step);

// Trapezoid weights: step everywhere, step/2 at the two ends.
std::vector<double> trapezoid_weights(std::size_t n, double step);

// Default evaluation support: `n` points on [min - 4h, max + 4h], lower edge
// clamped at zero when `clamp_zero` (intensity-type variables are nonnegative).
Grid1D default_grid(std::span<const double> sample, double bandwidth, std::size_t n = 512,
                    bool clamp_zero = true);

// Gaussian-kernel weighted density estimate; empty `weights` means uniform.
DensityGrid kde_1d(std::span<const double> sample, std::span<const double> weights,
                   const Grid1D& grid, double bandwidth);

// Product-Gaussian bivariate estimate over weighted (x, y) pairs.
JointDensityGrid kde_2d(std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> weights, const Grid1D& x_grid,
                        const Grid1D& y_grid, double h_x, double h_y);

enum class Axis { X, Y };

// Integrates the other axis out with the trapezoid rule.
DensityGrid marginal_of_joint(const JointDensityGrid& joint, Axis axis);

}  // namespace distdyn

#endif
