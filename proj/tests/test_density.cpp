#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "distdyn/density.hpp"
#include "distdyn/errors.hpp"
#include "distdyn/stats.hpp"
#include "oracles.hpp"

using namespace distdyn;

TEST_CASE("grid construction") {
  const Grid1D g = Grid1D::linspace(0.0, 1.0, 101);
  CHECK(g.size() == 101);
  CHECK(g.step == doctest::Approx(0.01));
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK_THROWS(Grid1D::linspace(0.0, 1.0, 8));
  CHECK_THROWS(Grid1D::linspace(1.0, 1.0, 32));
}

TEST_CASE("default grid clamps at zero for intensity variables") {
  const std::vector<double> sample{0.1, 0.2, 0.5};
  const Grid1D g = default_grid(sample, 1.0, 128, true);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(4.5));
  const Grid1D unclamped = default_grid(sample, 1.0, 128, false);
  CHECK(unclamped.front() == doctest::Approx(-3.9));
}

TEST_CASE("single-point kernel values") {
  const std::vector<double> sample{0.0};
  const Grid1D grid = Grid1D::linspace(-3.0, 3.0, 601);
  const DensityGrid d = kde_1d(sample, {}, grid, 1.0);
  const std::size_t at0 = 300, at1 = 400;
  CHECK(grid.points[at0] == doctest::Approx(0.0));
  CHECK(d.density[at0] == doctest::Approx(0.3989422804).epsilon(1e-9));
  CHECK(grid.points[at1] == doctest::Approx(1.0));
  CHECK(d.density[at1] == doctest::Approx(0.2419707245).epsilon(1e-9));
}

TEST_CASE("weighted two-point kernel") {
  const std::vector<double> sample{-1.0, 1.0};
  const std::vector<double> w{0.25, 0.75};
  const Grid1D grid = Grid1D::linspace(-2.0, 2.0, 401);
  const DensityGrid d = kde_1d(sample, w, grid, 1.0);
  // both points are one bandwidth from 0: 0.25*phi(1) + 0.75*phi(1) = phi(1)
  CHECK(d.density[200] == doctest::Approx(0.2419707245).epsilon(1e-9));
  CHECK(d.density[200] ==
        doctest::Approx(oracle::kde_at(sample, w, 1.0, grid.points[200])).epsilon(1e-12));
}

TEST_CASE("kde integrates to one on a data +- 4h grid") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> sample(80);
    for (auto& v : sample) v = gauss(rng);
    const double h = stats::silverman_bandwidth(sample);
    const Grid1D grid = default_grid(sample, h, 512, false);
    const DensityGrid d = kde_1d(sample, {}, grid, h);
    CHECK(d.integral() == doctest::Approx(1.0).epsilon(1e-3));
    for (double v : d.density) CHECK(v >= 0.0);
  }
}

TEST_CASE("uniform weights match no weights bitwise") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 5.0);
  std::vector<double> sample(40);
  for (auto& v : sample) v = uni(rng);
  const double h = stats::silverman_bandwidth(sample);
  const Grid1D grid = default_grid(sample, h, 256, true);
  const DensityGrid a = kde_1d(sample, {}, grid, h);
  const DensityGrid b = kde_1d(sample, stats::uniform_weights(sample.size()), grid, h);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a.density[i] == b.density[i]);
}

TEST_CASE("affine equivariance of kde_1d") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(1.0, 0.5);
  std::vector<double> sample(60);
  for (auto& v : sample) v = gauss(rng);
  const double h = 0.3, c = 2.5;
  const Grid1D grid = Grid1D::linspace(-1.0, 3.0, 128);
  const DensityGrid base = kde_1d(sample, {}, grid, h);

  std::vector<double> scaled(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) scaled[i] = c * sample[i];
  Grid1D scaled_grid = Grid1D::linspace(-c, 3.0 * c, 128);
  const DensityGrid result = kde_1d(scaled, {}, scaled_grid, c * h);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(result.density[i] == doctest::Approx(base.density[i] / c).epsilon(1e-12));
  }
}

TEST_CASE("kde_2d single pair peak") {
  const std::vector<double> xs{0.0}, ys{0.0};
  const Grid1D grid = Grid1D::linspace(-2.0, 2.0, 101);
  const JointDensityGrid joint = kde_2d(xs, ys, {}, grid, grid, 1.0, 1.0);
  CHECK(joint.at(50, 50) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-9));
}

TEST_CASE("product kernel factorizes") {
  // pairs built as the product of two singleton samples
  const std::vector<double> xs{0.5, 0.5, -0.5, -0.5};
  const std::vector<double> ys{1.0, -1.0, 1.0, -1.0};
  const Grid1D grid = Grid1D::linspace(-3.0, 3.0, 61);
  const JointDensityGrid joint = kde_2d(xs, ys, {}, grid, grid, 0.7, 0.9);
  const DensityGrid fx = kde_1d(std::vector<double>{0.5, -0.5}, {}, grid, 0.7);
  const DensityGrid fy = kde_1d(std::vector<double>{1.0, -1.0}, {}, grid, 0.9);
  for (std::size_t ix = 0; ix < grid.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.size(); ++iy) {
      CHECK(joint.at(ix, iy) ==
            doctest::Approx(fx.density[ix] * fy.density[iy]).epsilon(1e-12));
    }
  }
}

TEST_CASE("bivariate sample integral captures at least 0.95 on a +-4sd grid") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gx(0.0, 1.0), gy(0.5, 1.5);
  std::vector<double> xs(100), ys(100);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = gx(rng);
    ys[i] = gy(rng);
  }
  const double hx = stats::silverman_bandwidth(xs);
  const double hy = stats::silverman_bandwidth(ys);
  const Grid1D x_grid = Grid1D::linspace(-4.0, 4.0, 128);
  const Grid1D y_grid = Grid1D::linspace(0.5 - 6.0, 0.5 + 6.0, 128);
  const JointDensityGrid joint = kde_2d(xs, ys, {}, x_grid, y_grid, hx, hy);
  CHECK(joint.integral() >= 0.95);
  CHECK(joint.integral() <= 1.0001);
}

TEST_CASE("marginal of joint matches direct kde") {
  std::mt19937_64 rng(47);
  std::normal_distribution<double> gx(1.0, 0.6), gy(2.0, 0.8);
  std::vector<double> xs(200), ys(200);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = gx(rng);
    ys[i] = gy(rng);
  }
  const double hx = stats::silverman_bandwidth(xs);
  const double hy = stats::silverman_bandwidth(ys);
  const Grid1D x_grid = default_grid(xs, hx, 512, false);
  const Grid1D y_grid = default_grid(ys, hy, 512, false);
  const JointDensityGrid joint = kde_2d(xs, ys, {}, x_grid, y_grid, hx, hy);

  const DensityGrid mx = marginal_of_joint(joint, Axis::X);
  const DensityGrid direct = kde_1d(xs, {}, x_grid, hx);
  double max_err = 0.0;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    max_err = std::max(max_err, std::abs(mx.density[i] - direct.density[i]));
  }
  CHECK(max_err <= 1e-6);

  const DensityGrid my = marginal_of_joint(joint, Axis::Y);
  const DensityGrid direct_y = kde_1d(ys, {}, y_grid, hy);
  max_err = 0.0;
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    max_err = std::max(max_err, std::abs(my.density[i] - direct_y.density[i]));
  }
  CHECK(max_err <= 1e-6);
}

TEST_CASE("empty sample is rejected") {
  const Grid1D grid = Grid1D::linspace(0.0, 1.0, 32);
  CHECK_THROWS_AS(kde_1d(std::vector<double>{}, {}, grid, 1.0), InsufficientData);
}
