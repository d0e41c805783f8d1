#ifndef DISTDYN_TESTS_EIGEN_ORACLE_HPP
#define DISTDYN_TESTS_EIGEN_ORACLE_HPP

// Dense eigen-decomposition route to the ergodic distribution; independent
// check on the power iteration.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "distdyn/dynamics.hpp"
#include "oracles.hpp"

namespace oracle {

// Dominant left eigenvector of the row-stochastic quadrature matrix
// P[i][j] = g(y_j | x_i) * tw_j, mapped back to a density on the grid.
inline std::vector<double> eigen_ergodic(const distdyn::ConditionalKernel& kernel) {
  const std::size_t n = kernel.x_grid.size();
  const auto tw = distdyn::trapezoid_weights(n, kernel.x_grid.step);
  Eigen::MatrixXd pt(n, n);  // P transposed
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pt(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = kernel.at(i, j) * tw[j];
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(pt);
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double mag = std::abs(solver.eigenvalues()[k]);
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  if (v.sum() < 0.0) v = -v;
  // stationary mass pi_j = f(x_j) * tw_j, so divide by tw to get the density
  std::vector<double> density(n);
  for (std::size_t j = 0; j < n; ++j) density[j] = v[static_cast<Eigen::Index>(j)] / tw[j];
  const double mass = trapz(density, kernel.x_grid.step);
  for (double& d : density) d /= mass;
  return density;
}

}  // namespace oracle

#endif
