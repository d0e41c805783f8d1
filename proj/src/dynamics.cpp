#include "distdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "distdyn/errors.hpp"
#include "distdyn/parallel.hpp"
#include "distdyn/stats.hpp"

namespace distdyn {

ConditionalKernel conditional_kernel(const TransitionPairs& pairs, const Grid1D& x_grid,
                                     const Grid1D& y_grid,
                                     std::optional<std::pair<double, double>> bandwidths,
                                     double marginal_floor_fraction) {
  const auto xs = pairs.xs();
  const auto ys = pairs.ys();
  const auto ws = pairs.ws();

  double h_x, h_y;
  if (bandwidths) {
    h_x = bandwidths->first;
    h_y = bandwidths->second;
    if (!(h_x > 0.0) || !(h_y > 0.0)) throw Error("bandwidths must be positive");
  } else {
    try {
      h_x = stats::silverman_bandwidth(xs, ws);
      h_y = stats::silverman_bandwidth(ys, ws);
    } catch (const DegenerateSample&) {
      throw DegenerateKernel("zero-spread transition pairs");
    }
  }

  const JointDensityGrid joint = kde_2d(xs, ys, ws, x_grid, y_grid, h_x, h_y);
  const DensityGrid marginal = kde_1d(xs, ws, x_grid, h_x);

  const double max_marginal = *std::max_element(marginal.density.begin(), marginal.density.end());
  const double floor = marginal_floor_fraction * max_marginal;

  ConditionalKernel kernel;
  kernel.x_grid = x_grid;
  kernel.y_grid = y_grid;
  kernel.g.assign(x_grid.size() * y_grid.size(), 0.0);
  kernel.valid.assign(x_grid.size(), 0);
  kernel.marginal_floor = floor;
  kernel.h_x = h_x;
  kernel.h_y = h_y;

  const std::size_t ny = y_grid.size();
  std::size_t n_valid = 0;
  for (std::size_t ix = 0; ix < x_grid.size(); ++ix) {
    if (marginal.density[ix] < floor) continue;
    double* row = kernel.g.data() + ix * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      row[iy] = joint.at(ix, iy) / marginal.density[ix];
    }
    const double mass = trapezoid(std::span<const double>(row, ny), y_grid.step);
    if (!(mass > 0.0)) {
      std::fill(row, row + ny, 0.0);
      continue;
    }
    for (std::size_t iy = 0; iy < ny; ++iy) row[iy] /= mass;
    kernel.valid[ix] = 1;
    ++n_valid;
  }
  if (n_valid == 0) throw DegenerateKernel("every kernel row below the marginal floor");
  return kernel;
}

DensityGrid apply_transition(const ConditionalKernel& kernel, std::span<const double> density) {
  const std::size_t nx = kernel.x_grid.size();
  const std::size_t ny = kernel.y_grid.size();
  if (density.size() != nx) throw GridMismatch("density length does not match the grid");
  const auto tw = trapezoid_weights(nx, kernel.x_grid.step);

  DensityGrid out{kernel.y_grid, std::vector<double>(ny, 0.0)};
  parallel_for(ny, [&](std::size_t j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      acc += tw[i] * density[i] * kernel.g[i * ny + j];
    }
    out.density[j] = acc;
  });
  const double mass = out.integral();
  if (!(mass > 0.0)) throw DegenerateKernel("evolution operator annihilated all mass");
  for (double& d : out.density) d /= mass;
  return out;
}

ErgodicResult ergodic_distribution(const ConditionalKernel& kernel, double tolerance, int max_iter,
                                   std::span<const double> start) {
  if (!kernel.x_grid.same_as(kernel.y_grid)) {
    throw GridMismatch("ergodic iteration requires identical x and y grids");
  }
  const std::size_t n = kernel.x_grid.size();

  std::vector<double> f;
  if (start.empty()) {
    f.assign(n, 1.0 / (kernel.x_grid.back() - kernel.x_grid.front()));
  } else {
    if (start.size() != n) throw GridMismatch("start density length does not match the grid");
    f.assign(start.begin(), start.end());
    const double mass = trapezoid(f, kernel.x_grid.step);
    if (!(mass > 0.0)) throw Error("start density has no mass");
    for (double& v : f) v /= mass;
  }

  ErgodicResult result;
  std::vector<double> diff(n);
  for (int it = 1; it <= max_iter; ++it) {
    DensityGrid next = apply_transition(kernel, f);
    for (std::size_t i = 0; i < n; ++i) diff[i] = std::abs(next.density[i] - f[i]);
    const double l1 = trapezoid(diff, kernel.x_grid.step);
    f = std::move(next.density);
    result.iterations = it;
    result.residual = l1;
    if (l1 < tolerance) {
      result.converged = true;
      break;
    }
  }
  result.distribution = DensityGrid{kernel.x_grid, std::move(f)};
  return result;
}

namespace {

// Mass of a linearly interpolated row below z, trapezoid cells with the cell
// containing z split at z.
double mass_below(std::span<const double> row, const Grid1D& grid, double z) {
  const std::size_t n = grid.size();
  if (z <= grid.front()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = grid.points[i], b = grid.points[i + 1];
    if (z >= b) {
      acc += 0.5 * (row[i] + row[i + 1]) * grid.step;
    } else {
      const double t = (z - a) / (b - a);
      const double gz = row[i] + t * (row[i + 1] - row[i]);
      acc += 0.5 * (row[i] + gz) * (z - a);
      break;
    }
  }
  return acc;
}

}  // namespace

NTPCurve net_transition_probability(const ConditionalKernel& kernel) {
  const std::size_t nx = kernel.x_grid.size();
  NTPCurve curve;
  curve.x_grid = kernel.x_grid;
  curve.p.assign(nx, 0.0);
  curve.valid = kernel.valid;

  for (std::size_t ix = 0; ix < nx; ++ix) {
    if (!kernel.valid[ix]) continue;
    const auto row = kernel.row(ix);
    const double total = trapezoid(row, kernel.y_grid.step);
    const double below = mass_below(row, kernel.y_grid, kernel.x_grid.points[ix]);
    curve.p[ix] = (total - below) - below;
  }
  return curve;
}

}  // namespace distdyn
