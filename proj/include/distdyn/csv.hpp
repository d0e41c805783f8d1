#ifndef DISTDYN_CSV_HPP
#define DISTDYN_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "distdyn/conditioning.hpp"
#include "distdyn/density.hpp"
#include "distdyn/dynamics.hpp"
#include "distdyn/emissions.hpp"
#include "distdyn/panel.hpp"

namespace distdyn::csv {

// Shortest round-trip decimal representation; '.' decimal point regardless of
// locale.
std::string format_double(double v);

// Long-format panel: header `entity,year,variable,value`.
PanelDataset load_panel(const std::filesystem::path& path);

// `entity,region`; `entity,neighbor` (symmetrized on load; asymmetric input
// rows warn on stderr).
void load_regions(PanelDataset& panel, const std::filesystem::path& path);
void load_adjacency(PanelDataset& panel, const std::filesystem::path& path);

// `fuel,cf,cc,cof`
EmissionFactors load_factors(const std::filesystem::path& path);
// `entity,year,fuel,quantity`
EnergyConsumption load_consumption(const std::filesystem::path& path);
// `entity,year,index`
CellSeries load_deflator(const std::filesystem::path& path);

void write_density(const DensityGrid& density, const std::filesystem::path& path);
void write_joint(const JointDensityGrid& joint, const std::filesystem::path& path);
void write_kernel(const ConditionalKernel& kernel, const std::filesystem::path& path);
void write_ntp(const NTPCurve& curve, const std::filesystem::path& path);
void write_conditioned(const ConditionedSeries& series, const std::filesystem::path& path);
void write_cells(const CellSeries& cells, const std::string& variable,
                 const std::filesystem::path& path);

// Generic table writer: header row plus pre-formatted cells, LF line endings.
void write_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::filesystem::path& path);

}  // namespace distdyn::csv

#endif
