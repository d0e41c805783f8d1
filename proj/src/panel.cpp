#include "distdyn/panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distdyn/errors.hpp"

namespace distdyn {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

PanelDataset::PanelDataset(std::vector<std::string> entities, std::vector<int> years)
    : entities_(std::move(entities)), years_(std::move(years)) {
  if (entities_.empty()) throw Error("panel needs at least one entity");
  if (years_.empty()) throw Error("panel needs at least one year");
  for (std::size_t i = 1; i < years_.size(); ++i) {
    if (years_[i] != years_[i - 1] + 1) throw Error("panel years must be consecutive");
  }
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    if (!entity_index_.emplace(entities_[i], i).second) {
      throw Error("duplicate entity: " + entities_[i]);
    }
  }
}

void PanelDataset::set(const std::string& entity, int year, const std::string& variable,
                       double value) {
  const std::size_t e = entity_index(entity);
  const std::size_t t = year_index(year);
  auto& cells = values_[variable];
  if (cells.empty()) cells.assign(entities_.size() * years_.size(), kNaN);
  cells[e * years_.size() + t] = value;
}

void PanelDataset::set_region(const std::string& entity, const std::string& region) {
  entity_index(entity);
  regions_[entity] = region;
}

void PanelDataset::add_edge(const std::string& a, const std::string& b) {
  entity_index(a);
  entity_index(b);
  if (a == b) throw Error("self-loop in adjacency: " + a);
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

std::size_t PanelDataset::entity_index(const std::string& entity) const {
  auto it = entity_index_.find(entity);
  if (it == entity_index_.end()) throw MissingData("unknown entity: " + entity);
  return it->second;
}

std::size_t PanelDataset::year_index(int year) const {
  if (year < years_.front() || year > years_.back()) throw InvalidYear(year);
  return static_cast<std::size_t>(year - years_.front());
}

bool PanelDataset::has(const std::string& entity, int year, const std::string& variable) const {
  auto it = values_.find(variable);
  if (it == values_.end()) return false;
  auto e = entity_index_.find(entity);
  if (e == entity_index_.end()) return false;
  if (year < years_.front() || year > years_.back()) return false;
  return !std::isnan(it->second[e->second * years_.size() +
                               static_cast<std::size_t>(year - years_.front())]);
}

double PanelDataset::value(const std::string& entity, int year, const std::string& variable) const {
  const std::size_t e = entity_index(entity);
  const std::size_t t = year_index(year);
  auto it = values_.find(variable);
  if (it == values_.end()) throw MissingData(entity, year, variable);
  const double v = it->second[e * years_.size() + t];
  if (std::isnan(v)) throw MissingData(entity, year, variable);
  return v;
}

double PanelDataset::value_at(std::size_t e, std::size_t t, const std::string& variable) const {
  return value(entities_[e], years_[t], variable);
}

const std::set<std::string>& PanelDataset::neighbors(const std::string& entity) const {
  auto it = adjacency_.find(entity);
  return it == adjacency_.end() ? empty_neighbors_ : it->second;
}

bool Series::defined(std::size_t e, std::size_t t) const {
  return !std::isnan(values[e * years.size() + t]);
}

std::vector<double> TransitionPairs::xs() const {
  std::vector<double> v(pairs.size());
  std::transform(pairs.begin(), pairs.end(), v.begin(), [](const auto& p) { return p.x; });
  return v;
}

std::vector<double> TransitionPairs::ys() const {
  std::vector<double> v(pairs.size());
  std::transform(pairs.begin(), pairs.end(), v.begin(), [](const auto& p) { return p.y; });
  return v;
}

std::vector<double> TransitionPairs::ws() const {
  std::vector<double> v(pairs.size());
  std::transform(pairs.begin(), pairs.end(), v.begin(), [](const auto& p) { return p.w; });
  return v;
}

Series relative_series(const PanelDataset& panel, const std::string& variable,
                       const std::optional<std::string>& weight_variable) {
  const auto& entities = panel.entities();
  const auto& years = panel.years();
  const std::size_t ne = entities.size(), ny = years.size();

  Series out;
  out.entities = entities;
  out.years = years;
  out.variable = variable;
  out.values.assign(ne * ny, kNaN);
  if (weight_variable) out.weights.assign(ne * ny, kNaN);

  for (std::size_t t = 0; t < ny; ++t) {
    double mean = 0.0;
    for (std::size_t e = 0; e < ne; ++e) {
      mean += panel.value(entities[e], years[t], variable);
    }
    mean /= static_cast<double>(ne);
    if (!(mean > 0.0)) throw DegenerateYear(years[t]);
    for (std::size_t e = 0; e < ne; ++e) {
      out.values[e * ny + t] = panel.value(entities[e], years[t], variable) / mean;
    }
    if (weight_variable) {
      double wsum = 0.0;
      for (std::size_t e = 0; e < ne; ++e) {
        const double w = panel.value(entities[e], years[t], *weight_variable);
        if (!(w > 0.0)) throw InvalidWeights("nonpositive weight variable value");
        wsum += w;
      }
      for (std::size_t e = 0; e < ne; ++e) {
        out.weights[e * ny + t] = panel.value(entities[e], years[t], *weight_variable) / wsum;
      }
    }
  }
  return out;
}

double coefficient_of_variation(const PanelDataset& panel, const std::string& variable, int year) {
  const auto& entities = panel.entities();
  if (entities.size() < 2) throw InsufficientData("coefficient of variation needs n >= 2");
  double mean = 0.0;
  for (const auto& e : entities) mean += panel.value(e, year, variable);
  mean /= static_cast<double>(entities.size());
  if (!(mean > 0.0)) throw DegenerateYear(year);
  double ss = 0.0;
  for (const auto& e : entities) {
    const double d = panel.value(e, year, variable) - mean;
    ss += d * d;
  }
  const double s = std::sqrt(ss / static_cast<double>(entities.size() - 1));
  return s / mean;
}

namespace {

double region_mean(const PanelDataset& panel, const std::string& variable, int year,
                   const std::string& region, std::size_t* count) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [entity, label] : panel.regions()) {
    if (label != region) continue;
    sum += panel.value(entity, year, variable);
    ++n;
  }
  *count = n;
  return n ? sum / static_cast<double>(n) : 0.0;
}

}  // namespace

std::map<int, double> regional_ratio(const PanelDataset& panel, const std::string& variable,
                                     const std::string& numerator_region,
                                     const std::string& denominator_region) {
  if (!panel.has_regions()) throw EmptyRegion(numerator_region);
  std::map<int, double> out;
  for (int year : panel.years()) {
    std::size_t n_num = 0, n_den = 0;
    const double num = region_mean(panel, variable, year, numerator_region, &n_num);
    const double den = region_mean(panel, variable, year, denominator_region, &n_den);
    if (n_num == 0) throw EmptyRegion(numerator_region);
    if (n_den == 0) throw EmptyRegion(denominator_region);
    if (!(den > 0.0)) throw DegenerateYear(year);
    out[year] = num / den;
  }
  return out;
}

TransitionPairs transition_pairs(const Series& series, int tau, int start_year, int end_year) {
  if (tau < 1) throw Error("tau must be at least 1");
  if (end_year - start_year < tau) throw InsufficientData("year window shorter than tau");
  if (start_year < series.years.front() || end_year > series.years.back()) {
    throw InvalidYear(start_year < series.years.front() ? start_year : end_year);
  }

  const std::size_t t0 = static_cast<std::size_t>(start_year - series.years.front());
  const std::size_t t1 = static_cast<std::size_t>(end_year - series.years.front());

  TransitionPairs out;
  out.tau = tau;
  double wsum = 0.0;
  for (std::size_t e = 0; e < series.entities.size(); ++e) {
    for (std::size_t t = t0; t + static_cast<std::size_t>(tau) <= t1; ++t) {
      const std::size_t t2 = t + static_cast<std::size_t>(tau);
      if (!series.defined(e, t) || !series.defined(e, t2)) continue;
      const double w = series.weighted() ? series.weight_at(e, t) : 1.0;
      out.pairs.push_back({series.at(e, t), series.at(e, t2), w});
      out.tags.push_back({series.entities[e], series.years[t]});
      wsum += w;
    }
  }
  if (out.pairs.empty()) throw InsufficientData("no transition pairs in window");
  for (auto& p : out.pairs) p.w /= wsum;
  return out;
}

}  // namespace distdyn
