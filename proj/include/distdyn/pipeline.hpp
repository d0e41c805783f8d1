#ifndef DISTDYN_PIPELINE_HPP
#define DISTDYN_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace distdyn {

enum class WeightMode { None, Gdp, Population };

std::string to_string(WeightMode mode);
WeightMode weight_mode_from_string(const std::string& s);

struct YearRange {
  int start = 0;
  int end = 0;

  std::string label() const;  // "1995-2014"
};

struct AnalysisConfig {
  // data files
  std::filesystem::path panel_file;
  std::filesystem::path regions_file;
  std::filesystem::path adjacency_file;
  std::filesystem::path factors_file;
  std::filesystem::path consumption_file;
  std::filesystem::path deflator_file;

  // variable names in the panel
  std::string variable = "intensity";
  std::string gdp_variable = "gdp";
  std::string population_variable = "population";
  std::string capital_variable = "capital";

  // region labels for the dispersion ratios
  std::string east_region = "east";
  std::string central_region = "central";
  std::string west_region = "west";

  std::vector<WeightMode> modes = {WeightMode::None, WeightMode::Gdp, WeightMode::Population};
  int tau = 1;
  std::optional<YearRange> full_period;  // defaults to the panel's span
  std::vector<YearRange> subperiods;
  std::vector<int> snapshot_years;
  std::size_t grid_size = 512;
  double tolerance = 1e-10;
  int max_iter = 100000;
  double marginal_floor_fraction = 1e-4;
  int base_year = 0;  // deflation base; defaults to the panel's first year
  bool svg = false;

  std::filesystem::path out_dir = "out";
};

// Key = value file with [section] headers; '#' starts a comment. Sections are
// organizational only; keys are global.
AnalysisConfig load_config(const std::filesystem::path& path);

struct RunReport {
  std::vector<std::string> outputs;  // paths relative to out_dir
  bool ok = true;                    // false when any ergodic solve failed to converge
};

RunReport run_dispersion(const AnalysisConfig& config);
RunReport run_snapshot_densities(const AnalysisConfig& config);
RunReport run_dynamics(const AnalysisConfig& config);
RunReport run_conditional(const AnalysisConfig& config, const std::string& conditioner);
RunReport run_emissions(const AnalysisConfig& config);

}  // namespace distdyn

#endif
