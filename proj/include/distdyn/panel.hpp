#ifndef DISTDYN_PANEL_HPP
#define DISTDYN_PANEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace distdyn {

// Immutable after load; all operations below are pure.
class PanelDataset {
 public:
  PanelDataset(std::vector<std::string> entities, std::vector<int> years);

  void set(const std::string& entity, int year, const std::string& variable, double value);
  void set_region(const std::string& entity, const std::string& region);
  // Symmetrized: adding a->b also adds b->a.
  void add_edge(const std::string& a, const std::string& b);

  const std::vector<std::string>& entities() const { return entities_; }
  const std::vector<int>& years() const { return years_; }
  std::size_t entity_index(const std::string& entity) const;  // throws MissingData
  std::size_t year_index(int year) const;                     // throws InvalidYear

  bool has(const std::string& entity, int year, const std::string& variable) const;
  double value(const std::string& entity, int year, const std::string& variable) const;
  double value_at(std::size_t e, std::size_t t, const std::string& variable) const;

  bool has_regions() const { return !regions_.empty(); }
  bool has_adjacency() const { return !adjacency_.empty(); }
  const std::map<std::string, std::string>& regions() const { return regions_; }
  const std::set<std::string>& neighbors(const std::string& entity) const;

 private:
  std::vector<std::string> entities_;
  std::vector<int> years_;
  std::map<std::string, std::size_t> entity_index_;
  // variable -> dense entity-major cells, NaN = absent
  std::map<std::string, std::vector<double>> values_;
  std::map<std::string, std::string> regions_;
  std::map<std::string, std::set<std::string>> adjacency_;
  std::set<std::string> empty_neighbors_;
};

// A variable normalized by its yearly unweighted cross-sectional mean,
// optionally carrying per-year weight shares. NaN cells are undefined
// (conditioning may exclude entities).
struct Series {
  std::vector<std::string> entities;
  std::vector<int> years;
  std::string variable;
  std::vector<double> values;   // entity-major: values[e * n_years + t]
  std::vector<double> weights;  // same layout, sums to 1 within each year; empty = unweighted

  bool weighted() const { return !weights.empty(); }
  bool defined(std::size_t e, std::size_t t) const;
  double at(std::size_t e, std::size_t t) const { return values[e * years.size() + t]; }
  double weight_at(std::size_t e, std::size_t t) const { return weights[e * years.size() + t]; }
};

struct TransitionPair {
  double x;
  double y;
  double w;
};

struct PairTag {
  std::string entity;
  int base_year;
};

struct TransitionPairs {
  int tau = 1;
  std::vector<TransitionPair> pairs;  // weights sum to 1
  std::vector<PairTag> tags;

  std::vector<double> xs() const;
  std::vector<double> ys() const;
  std::vector<double> ws() const;
};

// Divides each cell by its year's unweighted cross-sectional mean. When
// weight_variable is given, weights are that variable's per-year shares.
Series relative_series(const PanelDataset& panel, const std::string& variable,
                       const std::optional<std::string>& weight_variable = std::nullopt);

// s / mu with the divisor-(n-1) sample standard deviation.
double coefficient_of_variation(const PanelDataset& panel, const std::string& variable, int year);

// Per-year ratio of unweighted region means, keyed by year.
std::map<int, double> regional_ratio(const PanelDataset& panel, const std::string& variable,
                                     const std::string& numerator_region,
                                     const std::string& denominator_region);

// Pools (value(i,t), value(i,t+tau)) for t in [start, end - tau]. Pair weight
// is the base-year share, renormalized over the pooled set; uniform when the
// series is unweighted. Undefined cells are skipped.
TransitionPairs transition_pairs(const Series& series, int tau, int start_year, int end_year);

}  // namespace distdyn

#endif
