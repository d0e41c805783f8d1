#include "distdyn/emissions.hpp"

#include "distdyn/errors.hpp"

namespace distdyn {

namespace {
constexpr double kCo2OverC = 44.0 / 12.0;
}

CellSeries estimate_co2(const EnergyConsumption& consumption, const EmissionFactors& factors) {
  for (const auto& [fuel, f] : factors.by_fuel) {
    if (!(f.cf > 0.0) || !(f.cc > 0.0) || !(f.cof > 0.0) || f.cof > 1.0) {
      throw Error("invalid factors for fuel: " + fuel);
    }
  }
  CellSeries out;
  for (const auto& [cell, fuels] : consumption.cells) {
    double total = 0.0;
    for (const auto& [fuel, quantity] : fuels) {
      if (quantity < 0.0) throw InvalidQuantity("negative consumption of " + fuel);
      auto it = factors.by_fuel.find(fuel);
      if (it == factors.by_fuel.end()) throw MissingFactor(fuel);
      const auto& f = it->second;
      total += quantity * f.cf * f.cc * f.cof * kCo2OverC;
    }
    out[cell] = total;
  }
  return out;
}

namespace {

double deflator_at(const CellSeries& index, const std::string& entity, int year) {
  auto it = index.find({entity, year});
  if (it == index.end()) it = index.find({"*", year});  // national broadcast
  if (it == index.end()) {
    throw MissingData("no deflator index for " + entity + " in " + std::to_string(year));
  }
  if (!(it->second > 0.0)) throw InvalidDeflator("nonpositive deflator index");
  return it->second;
}

}  // namespace

CellSeries deflate(const CellSeries& nominal, const CellSeries& deflator_index, int base_year) {
  CellSeries out;
  for (const auto& [cell, value] : nominal) {
    const double base = deflator_at(deflator_index, cell.first, base_year);
    const double cur = deflator_at(deflator_index, cell.first, cell.second);
    out[cell] = value * base / cur;
  }
  return out;
}

CellSeries intensity(const CellSeries& co2, const CellSeries& real_gdp) {
  CellSeries out;
  for (const auto& [cell, mass] : co2) {
    auto it = real_gdp.find(cell);
    if (it == real_gdp.end()) {
      throw MissingData("no GDP for " + cell.first + " in " + std::to_string(cell.second));
    }
    if (!(it->second > 0.0)) throw DegenerateGDP(cell.first, cell.second);
    out[cell] = mass / it->second;
  }
  return out;
}

}  // namespace distdyn
