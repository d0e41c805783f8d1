#include "distdyn/conditioning.hpp"

#include <cmath>
#include <limits>

#include "distdyn/errors.hpp"

namespace distdyn {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ConditionedSeries spatial_condition(const Series& series, const PanelDataset& panel) {
  if (!panel.has_adjacency()) throw ConfigError("spatial conditioning requires adjacency data");

  ConditionedSeries out;
  out.conditioner = "space";
  out.series = series;
  out.series.weights.clear();  // conditioned dynamics are unweighted

  const std::size_t ny = series.years.size();
  for (std::size_t e = 0; e < series.entities.size(); ++e) {
    const auto& entity = series.entities[e];
    const auto& nbrs = panel.neighbors(entity);
    if (nbrs.empty()) {
      for (std::size_t t = 0; t < ny; ++t) {
        out.series.values[e * ny + t] = kNaN;
        out.exclusions[{entity, series.years[t]}] = "no neighbors";
      }
      continue;
    }
    for (std::size_t t = 0; t < ny; ++t) {
      if (!series.defined(e, t)) {
        out.exclusions[{entity, series.years[t]}] = "undefined base value";
        continue;
      }
      double mean = 0.0;
      std::size_t n = 0;
      for (const auto& nb : nbrs) {
        const std::size_t ne = panel.entity_index(nb);
        if (!series.defined(ne, t)) continue;
        mean += series.at(ne, t);
        ++n;
      }
      if (n == 0) {
        out.series.values[e * ny + t] = kNaN;
        out.exclusions[{entity, series.years[t]}] = "no defined neighbors";
        continue;
      }
      mean /= static_cast<double>(n);
      if (!(mean > 0.0)) throw DegenerateNeighborhood(entity, series.years[t]);
      out.series.values[e * ny + t] = series.at(e, t) / mean;
    }
  }
  return out;
}

ConditionedSeries ratio_condition(const Series& series, const Series& covariate) {
  if (series.entities != covariate.entities || series.years != covariate.years) {
    throw MissingData("series and covariate are not defined on the same panel");
  }

  ConditionedSeries out;
  out.conditioner = covariate.variable;
  out.series = series;
  out.series.weights.clear();

  const std::size_t ny = series.years.size();
  for (std::size_t e = 0; e < series.entities.size(); ++e) {
    for (std::size_t t = 0; t < ny; ++t) {
      if (!series.defined(e, t)) {
        out.exclusions[{series.entities[e], series.years[t]}] = "undefined base value";
        continue;
      }
      if (!covariate.defined(e, t)) {
        throw MissingData(series.entities[e], series.years[t], covariate.variable);
      }
      const double c = covariate.at(e, t);
      if (!(c > 0.0)) throw DegenerateCovariate(series.entities[e], series.years[t]);
      out.series.values[e * ny + t] = series.at(e, t) / c;
    }
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> pooled_pairs(const Series& series_a,
                                                                 const Series& series_b) {
  if (series_a.entities != series_b.entities || series_a.years != series_b.years) {
    throw MissingData("joint distribution requires series on the same panel");
  }
  std::vector<double> a, b;
  const std::size_t ny = series_a.years.size();
  for (std::size_t e = 0; e < series_a.entities.size(); ++e) {
    for (std::size_t t = 0; t < ny; ++t) {
      if (!series_a.defined(e, t) || !series_b.defined(e, t)) continue;
      a.push_back(series_a.at(e, t));
      b.push_back(series_b.at(e, t));
    }
  }
  if (a.empty()) throw MissingData("no overlapping support between the two series");
  return {std::move(a), std::move(b)};
}

JointDensityGrid joint_distribution(const Series& series_a, const Series& series_b,
                                    const Grid1D& a_grid, const Grid1D& b_grid, double h_a,
                                    double h_b) {
  auto [a, b] = pooled_pairs(series_a, series_b);
  return kde_2d(a, b, {}, a_grid, b_grid, h_a, h_b);
}

}  // namespace distdyn
