#include "distdyn/density.hpp"

#include <algorithm>
#include <cmath>

#include "distdyn/errors.hpp"
#include "distdyn/parallel.hpp"
#include "distdyn/stats.hpp"

namespace distdyn {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double gauss(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

}  // namespace

Grid1D Grid1D::linspace(double lo, double hi, std::size_t n) {
  if (n < 16) throw Error("grid needs at least 16 points");
  if (!(hi > lo)) throw Error("grid upper bound must exceed lower bound");
  Grid1D g;
  g.step = (hi - lo) / static_cast<double>(n - 1);
  g.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.points[i] = lo + g.step * static_cast<double>(i);
  g.points.back() = hi;
  return g;
}

bool Grid1D::same_as(const Grid1D& other, double rel_tol) const {
  if (points.size() != other.points.size()) return false;
  const double scale = std::max(std::abs(back()), std::abs(other.back())) + 1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::abs(points[i] - other.points[i]) > rel_tol * scale) return false;
  }
  return true;
}

double trapezoid(std::span<const double> y, double step) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
  return s * step;
}

std::vector<double> trapezoid_weights(std::size_t n, double step) {
  std::vector<double> w(n, step);
  if (n >= 2) {
    w.front() = 0.5 * step;
    w.back() = 0.5 * step;
  }
  return w;
}

double DensityGrid::integral() const { return trapezoid(density, grid.step); }

double JointDensityGrid::integral() const {
  const std::size_t nx = x_grid.size(), ny = y_grid.size();
  std::vector<double> row(nx);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    row[ix] = trapezoid(std::span<const double>(density).subspan(ix * ny, ny), y_grid.step);
  }
  return trapezoid(row, x_grid.step);
}

Grid1D default_grid(std::span<const double> sample, double bandwidth, std::size_t n,
                    bool clamp_zero) {
  if (sample.empty()) throw InsufficientData("empty sample");
  const auto [mn, mx] = std::minmax_element(sample.begin(), sample.end());
  double lo = *mn - 4.0 * bandwidth;
  double hi = *mx + 4.0 * bandwidth;
  if (clamp_zero) lo = std::max(0.0, lo);
  return Grid1D::linspace(lo, hi, n);
}

DensityGrid kde_1d(std::span<const double> sample, std::span<const double> weights,
                   const Grid1D& grid, double bandwidth) {
  if (sample.empty()) throw InsufficientData("empty sample");
  if (!(bandwidth > 0.0)) throw Error("bandwidth must be positive");
  std::vector<double> wu;
  if (weights.empty()) {
    wu = stats::uniform_weights(sample.size());
    weights = wu;
  }
  stats::validate_weights(weights, sample.size());

  DensityGrid out{grid, std::vector<double>(grid.size(), 0.0)};
  const double inv_h = 1.0 / bandwidth;
  parallel_for(grid.size(), [&](std::size_t g) {
    const double xg = grid.points[g];
    double acc = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      acc += weights[i] * gauss((xg - sample[i]) * inv_h);
    }
    out.density[g] = acc * inv_h;
  });
  return out;
}

JointDensityGrid kde_2d(std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> weights, const Grid1D& x_grid,
                        const Grid1D& y_grid, double h_x, double h_y) {
  if (xs.empty() || ys.size() != xs.size()) throw InsufficientData("empty or ragged pair list");
  if (!(h_x > 0.0) || !(h_y > 0.0)) throw Error("bandwidths must be positive");
  std::vector<double> wu;
  if (weights.empty()) {
    wu = stats::uniform_weights(xs.size());
    weights = wu;
  }
  stats::validate_weights(weights, xs.size());

  const std::size_t nx = x_grid.size(), ny = y_grid.size(), n = xs.size();
  JointDensityGrid out{x_grid, y_grid, std::vector<double>(nx * ny, 0.0)};
  const double inv_hx = 1.0 / h_x, inv_hy = 1.0 / h_y;

  // Kernel tables: the exp calls dominate, so evaluate each grid-point /
  // sample combination once per axis.
  std::vector<double> kx(nx * n), ky(ny * n);
  parallel_for(nx, [&](std::size_t ix) {
    for (std::size_t i = 0; i < n; ++i) {
      kx[ix * n + i] = gauss((x_grid.points[ix] - xs[i]) * inv_hx);
    }
  });
  parallel_for(ny, [&](std::size_t iy) {
    for (std::size_t i = 0; i < n; ++i) {
      ky[iy * n + i] = gauss((y_grid.points[iy] - ys[i]) * inv_hy);
    }
  });

  parallel_for(nx, [&](std::size_t ix) {
    const double* ax = kx.data() + ix * n;
    double* row = out.density.data() + ix * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double* by = ky.data() + iy * n;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += weights[i] * ax[i] * by[i];
      }
      row[iy] = acc * inv_hx * inv_hy;
    }
  });
  return out;
}

DensityGrid marginal_of_joint(const JointDensityGrid& joint, Axis axis) {
  const std::size_t nx = joint.x_grid.size(), ny = joint.y_grid.size();
  if (axis == Axis::X) {
    DensityGrid out{joint.x_grid, std::vector<double>(nx, 0.0)};
    for (std::size_t ix = 0; ix < nx; ++ix) {
      out.density[ix] = trapezoid(std::span<const double>(joint.density).subspan(ix * ny, ny),
                                  joint.y_grid.step);
    }
    return out;
  }
  DensityGrid out{joint.y_grid, std::vector<double>(ny, 0.0)};
  std::vector<double> col(nx);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) col[ix] = joint.at(ix, iy);
    out.density[iy] = trapezoid(col, joint.x_grid.step);
  }
  return out;
}

}  // namespace distdyn
