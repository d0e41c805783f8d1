#include "distdyn/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "distdyn/conditioning.hpp"
#include "distdyn/csv.hpp"
#include "distdyn/density.hpp"
#include "distdyn/dynamics.hpp"
#include "distdyn/emissions.hpp"
#include "distdyn/errors.hpp"
#include "distdyn/panel.hpp"
#include "distdyn/stats.hpp"
#include "distdyn/svg.hpp"

namespace distdyn {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::None: return "none";
    case WeightMode::Gdp: return "gdp";
    case WeightMode::Population: return "population";
  }
  return "none";
}

WeightMode weight_mode_from_string(const std::string& s) {
  if (s == "none") return WeightMode::None;
  if (s == "gdp") return WeightMode::Gdp;
  if (s == "population") return WeightMode::Population;
  throw ConfigError("unknown weight mode: " + s);
}

std::string YearRange::label() const {
  return std::to_string(start) + "-" + std::to_string(end);
}

namespace {

YearRange parse_range(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw ConfigError("bad year range: " + s);
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) items.push_back(item.substr(a, b - a + 1));
  }
  return items;
}

}  // namespace

AnalysisConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path.string());
  const fs::path base = path.parent_path();

  AnalysisConfig cfg;
  auto resolve = [&](const std::string& v) -> fs::path {
    fs::path p(v);
    return p.is_absolute() ? p : base / p;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    const auto b = line.find_last_not_of(" \t");
    line = line.substr(a, b - a + 1);
    if (line.front() == '[') continue;  // section headers are organizational

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("bad config line " + std::to_string(lineno) + ": " + line);
    }
    auto trim = [](std::string s) {
      const auto x = s.find_first_not_of(" \t");
      if (x == std::string::npos) return std::string();
      const auto y = s.find_last_not_of(" \t");
      return s.substr(x, y - x + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "panel") cfg.panel_file = resolve(value);
    else if (key == "regions") cfg.regions_file = resolve(value);
    else if (key == "adjacency") cfg.adjacency_file = resolve(value);
    else if (key == "factors") cfg.factors_file = resolve(value);
    else if (key == "consumption") cfg.consumption_file = resolve(value);
    else if (key == "deflator") cfg.deflator_file = resolve(value);
    else if (key == "variable") cfg.variable = value;
    else if (key == "gdp_variable") cfg.gdp_variable = value;
    else if (key == "population_variable") cfg.population_variable = value;
    else if (key == "capital_variable") cfg.capital_variable = value;
    else if (key == "east_region") cfg.east_region = value;
    else if (key == "central_region") cfg.central_region = value;
    else if (key == "west_region") cfg.west_region = value;
    else if (key == "modes") {
      cfg.modes.clear();
      for (const auto& m : split_list(value)) cfg.modes.push_back(weight_mode_from_string(m));
    } else if (key == "tau") cfg.tau = std::stoi(value);
    else if (key == "period") cfg.full_period = parse_range(value);
    else if (key == "subperiods") {
      cfg.subperiods.clear();
      for (const auto& r : split_list(value)) cfg.subperiods.push_back(parse_range(r));
    } else if (key == "snapshot_years") {
      cfg.snapshot_years.clear();
      for (const auto& y : split_list(value)) cfg.snapshot_years.push_back(std::stoi(y));
    } else if (key == "grid_size") cfg.grid_size = static_cast<std::size_t>(std::stoul(value));
    else if (key == "tolerance") cfg.tolerance = std::stod(value);
    else if (key == "max_iter") cfg.max_iter = std::stoi(value);
    else if (key == "marginal_floor") cfg.marginal_floor_fraction = std::stod(value);
    else if (key == "base_year") cfg.base_year = std::stoi(value);
    else if (key == "svg") cfg.svg = (value == "true" || value == "1" || value == "yes");
    else if (key == "out") cfg.out_dir = resolve(value);
    else throw ConfigError("unknown config key: " + key);
  }
  if (cfg.grid_size < 64) throw ConfigError("grid_size must be at least 64");
  return cfg;
}

namespace {

void require_file(const fs::path& p, const std::string& what) {
  if (p.empty()) throw ConfigError("missing required config entry: " + what);
  if (!fs::exists(p)) throw ConfigError(what + " file does not exist: " + p.string());
}

PanelDataset load_panel_inputs(const AnalysisConfig& cfg, bool need_regions, bool need_adjacency) {
  require_file(cfg.panel_file, "panel");
  PanelDataset panel = csv::load_panel(cfg.panel_file);
  if (need_regions) {
    require_file(cfg.regions_file, "regions");
    csv::load_regions(panel, cfg.regions_file);
  } else if (!cfg.regions_file.empty() && fs::exists(cfg.regions_file)) {
    csv::load_regions(panel, cfg.regions_file);
  }
  if (need_adjacency) {
    require_file(cfg.adjacency_file, "adjacency");
    csv::load_adjacency(panel, cfg.adjacency_file);
  } else if (!cfg.adjacency_file.empty() && fs::exists(cfg.adjacency_file)) {
    csv::load_adjacency(panel, cfg.adjacency_file);
  }
  return panel;
}

YearRange full_period_of(const AnalysisConfig& cfg, const PanelDataset& panel) {
  if (cfg.full_period) return *cfg.full_period;
  return {panel.years().front(), panel.years().back()};
}

std::optional<std::string> weight_variable(const AnalysisConfig& cfg, WeightMode mode) {
  switch (mode) {
    case WeightMode::None: return std::nullopt;
    case WeightMode::Gdp: return cfg.gdp_variable;
    case WeightMode::Population: return cfg.population_variable;
  }
  return std::nullopt;
}

ordered_json config_echo(const AnalysisConfig& cfg) {
  ordered_json j;
  j["panel"] = cfg.panel_file.string();
  j["regions"] = cfg.regions_file.string();
  j["adjacency"] = cfg.adjacency_file.string();
  j["factors"] = cfg.factors_file.string();
  j["consumption"] = cfg.consumption_file.string();
  j["deflator"] = cfg.deflator_file.string();
  j["variable"] = cfg.variable;
  j["gdp_variable"] = cfg.gdp_variable;
  j["population_variable"] = cfg.population_variable;
  j["capital_variable"] = cfg.capital_variable;
  std::vector<std::string> modes;
  for (auto m : cfg.modes) modes.push_back(to_string(m));
  j["modes"] = modes;
  j["tau"] = cfg.tau;
  if (cfg.full_period) j["period"] = cfg.full_period->label();
  std::vector<std::string> subs;
  for (const auto& r : cfg.subperiods) subs.push_back(r.label());
  j["subperiods"] = subs;
  j["snapshot_years"] = cfg.snapshot_years;
  j["grid_size"] = cfg.grid_size;
  j["tolerance"] = cfg.tolerance;
  j["max_iter"] = cfg.max_iter;
  j["marginal_floor"] = cfg.marginal_floor_fraction;
  j["base_year"] = cfg.base_year;
  j["svg"] = cfg.svg;
  return j;
}

struct ManifestBuilder {
  ordered_json overlays = ordered_json::array();

  void add_overlay(const std::string& plot, const std::vector<std::string>& files,
                   const std::vector<std::string>& styles) {
    ordered_json o;
    o["plot"] = plot;
    o["files"] = files;
    o["styles"] = styles;
    overlays.push_back(o);
  }

  void write(const AnalysisConfig& cfg, const std::string& command, const RunReport& report) const {
    ordered_json j;
    j["command"] = command;
    j["config"] = config_echo(cfg);
    j["outputs"] = report.outputs;
    j["overlays"] = overlays;
    j["ok"] = report.ok;
    std::ofstream out(cfg.out_dir / "manifest.json", std::ios::binary);
    if (!out) throw Error("cannot write manifest.json");
    out << j.dump(2) << '\n';
  }
};

void write_ergodic_sidecar(const ErgodicResult& result, const fs::path& path) {
  ordered_json j;
  j["iterations"] = result.iterations;
  j["residual"] = result.residual;
  j["converged"] = result.converged;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

// A constant covariate (every entity exactly at the mean) has no data-driven
// bandwidth; fall back to a small window so the joint export stays defined.
double bandwidth_or_fallback(std::span<const double> sample) {
  try {
    return stats::silverman_bandwidth(sample);
  } catch (const DegenerateSample&) {
    double scale = 0.0;
    for (double v : sample) scale = std::max(scale, std::abs(v));
    return 0.05 * std::max(1.0, scale);
  }
}

// Shared x=y grid for a period: pooled base and forward values of the
// unweighted pairs, Silverman bandwidth, clamped at zero.
Grid1D period_grid(const TransitionPairs& pairs, std::size_t grid_size) {
  std::vector<double> pooled = pairs.xs();
  const auto ys = pairs.ys();
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  const double h = stats::silverman_bandwidth(pooled);
  return default_grid(pooled, h, grid_size, true);
}

// Kernel + NTP + ergodic file triple for one pair set on a fixed grid.
bool emit_dynamics_set(const AnalysisConfig& cfg, const TransitionPairs& pairs, const Grid1D& grid,
                       const std::string& stem, RunReport& report) {
  const ConditionalKernel kernel =
      conditional_kernel(pairs, grid, grid, std::nullopt, cfg.marginal_floor_fraction);
  const NTPCurve ntp = net_transition_probability(kernel);
  const ErgodicResult ergodic = ergodic_distribution(kernel, cfg.tolerance, cfg.max_iter);

  csv::write_kernel(kernel, cfg.out_dir / ("kernel_" + stem + ".csv"));
  csv::write_ntp(ntp, cfg.out_dir / ("ntp_" + stem + ".csv"));
  csv::write_density(ergodic.distribution, cfg.out_dir / ("ergodic_" + stem + ".csv"));
  write_ergodic_sidecar(ergodic, cfg.out_dir / ("ergodic_" + stem + ".json"));
  report.outputs.push_back("kernel_" + stem + ".csv");
  report.outputs.push_back("ntp_" + stem + ".csv");
  report.outputs.push_back("ergodic_" + stem + ".csv");
  report.outputs.push_back("ergodic_" + stem + ".json");

  if (cfg.svg) {
    svg::write_heatmap(kernel.x_grid, kernel.y_grid, kernel.g,
                       cfg.out_dir / ("kernel_" + stem + ".svg"));
    svg::write_lines({{ntp.x_grid.points, ntp.p, "black", ""}},
                     cfg.out_dir / ("ntp_" + stem + ".svg"));
    svg::write_lines({{ergodic.distribution.grid.points, ergodic.distribution.density, "black",
                       ""}},
                     cfg.out_dir / ("ergodic_" + stem + ".svg"));
    report.outputs.push_back("kernel_" + stem + ".svg");
    report.outputs.push_back("ntp_" + stem + ".svg");
    report.outputs.push_back("ergodic_" + stem + ".svg");
  }
  return ergodic.converged;
}

// Derived per-capita income and capital-intensity cells, stored back on the
// panel under reserved names.
const std::string kIncomeVar = "__income";
const std::string kCapitalIntensityVar = "__capital_intensity";

void derive_income(PanelDataset& panel, const AnalysisConfig& cfg) {
  for (const auto& e : panel.entities()) {
    for (int y : panel.years()) {
      const double pop = panel.value(e, y, cfg.population_variable);
      if (!(pop > 0.0)) throw Error("nonpositive population for " + e);
      panel.set(e, y, kIncomeVar, panel.value(e, y, cfg.gdp_variable) / pop);
    }
  }
}

void derive_capital_intensity(PanelDataset& panel, const AnalysisConfig& cfg) {
  for (const auto& e : panel.entities()) {
    for (int y : panel.years()) {
      const double gdp = panel.value(e, y, cfg.gdp_variable);
      if (!(gdp > 0.0)) throw DegenerateGDP(e, y);
      panel.set(e, y, kCapitalIntensityVar, panel.value(e, y, cfg.capital_variable) / gdp);
    }
  }
}

}  // namespace

RunReport run_dispersion(const AnalysisConfig& cfg) {
  PanelDataset panel = load_panel_inputs(cfg, true, false);
  fs::create_directories(cfg.out_dir);
  RunReport report;

  const auto west_east = regional_ratio(panel, cfg.variable, cfg.west_region, cfg.east_region);
  const auto central_east =
      regional_ratio(panel, cfg.variable, cfg.central_region, cfg.east_region);

  std::vector<std::vector<std::string>> rows;
  for (int year : panel.years()) {
    const double cv = coefficient_of_variation(panel, cfg.variable, year);
    rows.push_back({std::to_string(year), csv::format_double(cv),
                    csv::format_double(west_east.at(year)),
                    csv::format_double(central_east.at(year))});
  }
  csv::write_table({"year", "cv", "west_east", "central_east"}, rows,
                   cfg.out_dir / "dispersion.csv");
  report.outputs.push_back("dispersion.csv");

  if (cfg.svg) {
    std::vector<double> years, cvs;
    for (const auto& r : rows) {
      years.push_back(std::stod(r[0]));
      cvs.push_back(std::stod(r[1]));
    }
    svg::write_lines({{years, cvs, "black", ""}}, cfg.out_dir / "dispersion.svg");
    report.outputs.push_back("dispersion.svg");
  }

  ManifestBuilder manifest;
  manifest.write(cfg, "dispersion", report);
  return report;
}

RunReport run_snapshot_densities(const AnalysisConfig& cfg) {
  PanelDataset panel = load_panel_inputs(cfg, false, false);
  fs::create_directories(cfg.out_dir);
  RunReport report;
  ManifestBuilder manifest;

  const std::vector<int> years =
      cfg.snapshot_years.empty()
          ? std::vector<int>{panel.years().front(), panel.years().back()}
          : cfg.snapshot_years;

  for (int year : years) {
    panel.year_index(year);  // throws InvalidYear when outside the panel
  }

  const Series base = relative_series(panel, cfg.variable);
  const std::size_t ny = base.years.size();

  for (int year : years) {
    const std::size_t t = panel.year_index(year);
    std::vector<double> sample(base.entities.size());
    for (std::size_t e = 0; e < sample.size(); ++e) sample[e] = base.values[e * ny + t];

    // Shared grid per year so weighted overlays align with the unweighted curve.
    const double h0 = stats::silverman_bandwidth(sample);
    const Grid1D grid = default_grid(sample, h0, cfg.grid_size, true);

    std::vector<std::string> files;
    for (WeightMode mode : cfg.modes) {
      std::vector<double> weights;
      if (const auto wv = weight_variable(cfg, mode)) {
        const Series weighted = relative_series(panel, cfg.variable, wv);
        weights.resize(sample.size());
        for (std::size_t e = 0; e < sample.size(); ++e) {
          weights[e] = weighted.weights[e * ny + t];
        }
      }
      const double h = weights.empty() ? h0 : stats::silverman_bandwidth(sample, weights);
      const DensityGrid density = kde_1d(sample, weights, grid, h);
      const std::string name = "density_" + std::to_string(year) + "_" + to_string(mode) + ".csv";
      csv::write_density(density, cfg.out_dir / name);
      report.outputs.push_back(name);
      files.push_back(name);
    }
    manifest.add_overlay("density_" + std::to_string(year), files, {"solid", "dash", "dot"});

    if (cfg.svg) {
      std::vector<svg::Curve> curves;
      const std::vector<std::string> dashes = {"", "6,4", "2,3"};
      for (std::size_t m = 0; m < files.size(); ++m) {
        // re-read is avoided: recompute cheaply for rendering
        std::vector<double> weights;
        if (const auto wv = weight_variable(cfg, cfg.modes[m])) {
          const Series weighted = relative_series(panel, cfg.variable, wv);
          weights.resize(sample.size());
          for (std::size_t e = 0; e < sample.size(); ++e) {
            weights[e] = weighted.weights[e * ny + t];
          }
        }
        const double h = weights.empty() ? h0 : stats::silverman_bandwidth(sample, weights);
        const DensityGrid d = kde_1d(sample, weights, grid, h);
        curves.push_back({grid.points, d.density, "black", dashes[m % dashes.size()]});
      }
      const std::string name = "density_" + std::to_string(year) + ".svg";
      svg::write_lines(curves, cfg.out_dir / name);
      report.outputs.push_back(name);
    }
  }

  manifest.write(cfg, "snapshot", report);
  return report;
}

RunReport run_dynamics(const AnalysisConfig& cfg) {
  PanelDataset panel = load_panel_inputs(cfg, false, false);
  fs::create_directories(cfg.out_dir);
  RunReport report;
  ManifestBuilder manifest;

  std::vector<YearRange> periods = {full_period_of(cfg, panel)};
  periods.insert(periods.end(), cfg.subperiods.begin(), cfg.subperiods.end());

  const Series unweighted = relative_series(panel, cfg.variable);

  for (const YearRange& period : periods) {
    const TransitionPairs base_pairs =
        transition_pairs(unweighted, cfg.tau, period.start, period.end);
    const Grid1D grid = period_grid(base_pairs, cfg.grid_size);

    std::vector<std::string> ntp_files, ergodic_files;
    for (WeightMode mode : cfg.modes) {
      const std::string stem = period.label() + "_" + to_string(mode);
      TransitionPairs pairs = base_pairs;
      if (const auto wv = weight_variable(cfg, mode)) {
        const Series weighted = relative_series(panel, cfg.variable, wv);
        pairs = transition_pairs(weighted, cfg.tau, period.start, period.end);
      }
      report.ok &= emit_dynamics_set(cfg, pairs, grid, stem, report);
      ntp_files.push_back("ntp_" + stem + ".csv");
      ergodic_files.push_back("ergodic_" + stem + ".csv");
    }
    manifest.add_overlay("ntp_" + period.label(), ntp_files, {"solid", "dash", "dot"});
    manifest.add_overlay("ergodic_" + period.label(), ergodic_files, {"solid", "dash", "dot"});
  }

  manifest.write(cfg, "dynamics", report);
  return report;
}

RunReport run_conditional(const AnalysisConfig& cfg, const std::string& conditioner) {
  const bool spatial = conditioner == "space";
  if (!spatial && conditioner != "income" && conditioner != "capital") {
    throw ConfigError("unknown conditioner: " + conditioner);
  }

  PanelDataset panel = load_panel_inputs(cfg, false, spatial);
  fs::create_directories(cfg.out_dir);
  RunReport report;
  ManifestBuilder manifest;

  const Series rcei = relative_series(panel, cfg.variable);
  const YearRange period = full_period_of(cfg, panel);

  ConditionedSeries conditioned;
  Series covariate;
  if (spatial) {
    conditioned = spatial_condition(rcei, panel);
    // The spatial covariate for the joint plot is the neighbor-mean series:
    // base / conditioned wherever both are defined.
    covariate = rcei;
    const std::size_t ny = rcei.years.size();
    for (std::size_t e = 0; e < rcei.entities.size(); ++e) {
      for (std::size_t t = 0; t < ny; ++t) {
        const std::size_t idx = e * ny + t;
        if (conditioned.series.defined(e, t) && rcei.defined(e, t)) {
          covariate.values[idx] = rcei.at(e, t) / conditioned.series.at(e, t);
        } else {
          covariate.values[idx] = std::numeric_limits<double>::quiet_NaN();
        }
      }
    }
    covariate.variable = "neighbor_mean";
  } else if (conditioner == "income") {
    derive_income(panel, cfg);
    covariate = relative_series(panel, kIncomeVar);
    covariate.variable = "relative_income";
    conditioned = ratio_condition(rcei, covariate);
  } else {
    derive_capital_intensity(panel, cfg);
    covariate = relative_series(panel, kCapitalIntensityVar);
    covariate.variable = "relative_capital";
    conditioned = ratio_condition(rcei, covariate);
  }
  conditioned.conditioner = conditioner;

  // Joint distribution of the base series and the conditioning covariate.
  {
    auto [a, b] = pooled_pairs(rcei, covariate);
    const double h_a = bandwidth_or_fallback(a);
    const double h_b = bandwidth_or_fallback(b);
    const Grid1D a_grid = default_grid(a, h_a, cfg.grid_size, true);
    const Grid1D b_grid = default_grid(b, h_b, cfg.grid_size, true);
    const JointDensityGrid joint = kde_2d(a, b, {}, a_grid, b_grid, h_a, h_b);
    const std::string name = "joint_" + conditioner + ".csv";
    csv::write_joint(joint, cfg.out_dir / name);
    report.outputs.push_back(name);
    if (cfg.svg) {
      svg::write_heatmap(a_grid, b_grid, joint.density, cfg.out_dir / ("joint_" + conditioner +
                                                                       ".svg"));
      report.outputs.push_back("joint_" + conditioner + ".svg");
    }
  }

  // Conditioned series export.
  {
    const std::string name = "conditioned_" + conditioner + ".csv";
    csv::write_conditioned(conditioned, cfg.out_dir / name);
    report.outputs.push_back(name);
  }

  // Conditioned dynamics on its own grid, plus the unconditional reference set.
  {
    const TransitionPairs cond_pairs =
        transition_pairs(conditioned.series, cfg.tau, period.start, period.end);
    const Grid1D cond_grid = period_grid(cond_pairs, cfg.grid_size);
    report.ok &= emit_dynamics_set(cfg, cond_pairs, cond_grid, "cond_" + conditioner, report);

    const TransitionPairs base_pairs = transition_pairs(rcei, cfg.tau, period.start, period.end);
    const Grid1D base_grid = period_grid(base_pairs, cfg.grid_size);
    report.ok &= emit_dynamics_set(cfg, base_pairs, base_grid, period.label() + "_none", report);

    manifest.add_overlay("ntp_cond_" + conditioner,
                         {"ntp_cond_" + conditioner + ".csv",
                          "ntp_" + period.label() + "_none.csv"},
                         {"solid", "dash"});
    manifest.add_overlay("ergodic_cond_" + conditioner,
                         {"ergodic_cond_" + conditioner + ".csv",
                          "ergodic_" + period.label() + "_none.csv"},
                         {"solid", "dash"});
  }

  manifest.write(cfg, "conditional_" + conditioner, report);
  return report;
}

RunReport run_emissions(const AnalysisConfig& cfg) {
  require_file(cfg.consumption_file, "consumption");
  require_file(cfg.factors_file, "factors");
  require_file(cfg.deflator_file, "deflator");
  PanelDataset panel = load_panel_inputs(cfg, false, false);
  fs::create_directories(cfg.out_dir);
  RunReport report;

  const EnergyConsumption consumption = csv::load_consumption(cfg.consumption_file);
  const EmissionFactors factors = csv::load_factors(cfg.factors_file);
  const CellSeries deflator = csv::load_deflator(cfg.deflator_file);

  const CellSeries co2 = estimate_co2(consumption, factors);

  CellSeries nominal;
  for (const auto& [cell, mass] : co2) {
    (void)mass;
    nominal[cell] = panel.value(cell.first, cell.second, cfg.gdp_variable);
  }
  const int base_year = cfg.base_year ? cfg.base_year : panel.years().front();
  const CellSeries real_gdp = deflate(nominal, deflator, base_year);
  const CellSeries intens = intensity(co2, real_gdp);

  std::vector<std::vector<std::string>> rows;
  auto append = [&](const CellSeries& cells, const std::string& variable) {
    for (const auto& [cell, value] : cells) {
      rows.push_back(
          {cell.first, std::to_string(cell.second), variable, csv::format_double(value)});
    }
  };
  append(co2, "co2");
  append(real_gdp, "real_gdp");
  append(intens, cfg.variable);
  csv::write_table({"entity", "year", "variable", "value"}, rows,
                   cfg.out_dir / "emissions_panel.csv");
  report.outputs.push_back("emissions_panel.csv");

  ManifestBuilder manifest;
  manifest.write(cfg, "emissions", report);
  return report;
}

}  // namespace distdyn
