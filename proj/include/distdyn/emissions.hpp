#ifndef DISTDYN_EMISSIONS_HPP
#define DISTDYN_EMISSIONS_HPP

#include <map>
#include <string>
#include <utility>

namespace distdyn {

// (entity, year) -> value, ordered for deterministic iteration.
using CellSeries = std::map<std::pair<std::string, int>, double>;

struct FuelFactors {
  double cf;   // physical unit -> energy unit
  double cc;   // carbon content per energy unit
  double cof;  // oxidation fraction, in (0, 1]
};

struct EmissionFactors {
  std::map<std::string, FuelFactors> by_fuel;
};

struct EnergyConsumption {
  // (entity, year) -> fuel -> quantity in the fuel's native unit
  std::map<std::pair<std::string, int>, std::map<std::string, double>> cells;
};

// CO2 = sum over fuels of E * CF * CC * COF * 44/12.
CellSeries estimate_co2(const EnergyConsumption& consumption, const EmissionFactors& factors);

// real(e, t) = nominal(e, t) * index(e, base_year) / index(e, t). A deflator
// keyed under entity "*" broadcasts to every entity.
CellSeries deflate(const CellSeries& nominal, const CellSeries& deflator_index, int base_year);

// Elementwise co2 / real_gdp over the cells of co2.
CellSeries intensity(const CellSeries& co2, const CellSeries& real_gdp);

}  // namespace distdyn

#endif
