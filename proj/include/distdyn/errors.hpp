#ifndef DISTDYN_ERRORS_HPP
#define DISTDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distdyn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingData : Error {
  MissingData(const std::string& entity, int year, const std::string& variable)
      : Error("missing data: " + variable + " for " + entity + " in " + std::to_string(year)) {}
  explicit MissingData(const std::string& what) : Error(what) {}
};

struct DegenerateYear : Error {
  explicit DegenerateYear(int year)
      : Error("degenerate year " + std::to_string(year) + ": nonpositive cross-sectional mean") {}
};

struct InsufficientData : Error {
  using Error::Error;
};

struct EmptyRegion : Error {
  explicit EmptyRegion(const std::string& label) : Error("empty region: " + label) {}
};

struct MissingFactor : Error {
  explicit MissingFactor(const std::string& fuel) : Error("no emission factors for fuel: " + fuel) {}
};

struct InvalidQuantity : Error {
  using Error::Error;
};

struct InvalidDeflator : Error {
  using Error::Error;
};

struct DegenerateGDP : Error {
  DegenerateGDP(const std::string& entity, int year)
      : Error("nonpositive GDP for " + entity + " in " + std::to_string(year)) {}
};

struct DegenerateSample : Error {
  using Error::Error;
};

struct InvalidWeights : Error {
  using Error::Error;
};

struct DegenerateKernel : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct DegenerateNeighborhood : Error {
  DegenerateNeighborhood(const std::string& entity, int year)
      : Error("nonpositive neighbor mean for " + entity + " in " + std::to_string(year)) {}
};

struct DegenerateCovariate : Error {
  DegenerateCovariate(const std::string& entity, int year)
      : Error("nonpositive covariate for " + entity + " in " + std::to_string(year)) {}
};

struct InvalidYear : Error {
  explicit InvalidYear(int year) : Error("year " + std::to_string(year) + " outside panel range") {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace distdyn

#endif
