#ifndef DISTDYN_TESTS_HELPERS_HPP
#define DISTDYN_TESTS_HELPERS_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "distdyn/panel.hpp"

namespace testutil {

inline std::vector<std::string> make_entities(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

inline std::vector<int> make_years(int start, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(start + static_cast<int>(i));
  return out;
}

// Panel with a single variable filled from a generator f(entity_idx, year_idx).
template <typename F>
distdyn::PanelDataset make_panel(std::size_t n_entities, int start_year, std::size_t n_years,
                                 const std::string& variable, F&& f) {
  distdyn::PanelDataset panel(make_entities(n_entities), make_years(start_year, n_years));
  for (std::size_t e = 0; e < n_entities; ++e) {
    for (std::size_t t = 0; t < n_years; ++t) {
      panel.set("e" + std::to_string(e), start_year + static_cast<int>(t), variable,
                f(e, t));
    }
  }
  return panel;
}

// Mean-reverting positive series around per-entity club centers; used to build
// persistent multimodal panels.
struct ClubProcess {
  std::vector<double> centers;
  double rho = 0.8;
  double sigma = 0.05;
  std::mt19937_64 rng{42};

  double center_of(std::size_t entity) const { return centers[entity % centers.size()]; }

  std::vector<double> path(std::size_t entity, std::size_t n_years) {
    std::normal_distribution<double> noise(0.0, sigma);
    const double c = center_of(entity);
    std::vector<double> out(n_years);
    double x = c;
    for (std::size_t t = 0; t < n_years; ++t) {
      x = c + rho * (x - c) + noise(rng);
      out[t] = std::max(1e-6, x);
    }
    return out;
  }
};

}  // namespace testutil

#endif
