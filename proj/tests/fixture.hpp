#ifndef DISTDYN_TESTS_FIXTURE_HPP
#define DISTDYN_TESTS_FIXTURE_HPP

// Deterministic synthetic data fixture written as the CSV file set the CLI
// consumes. Seeded; repeated generation is byte-identical.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

namespace testutil {

struct Fixture {
  std::filesystem::path dir;
  std::filesystem::path config_path;
  int start_year = 1995;
  std::size_t n_years = 20;
  std::size_t n_entities = 12;
};

inline std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

// Writes panel (intensity/gdp/population/capital), regions, adjacency,
// factors, consumption, deflator, and a config file under `dir`.
inline Fixture write_fixture(const std::filesystem::path& dir, unsigned seed = 42) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Fixture fx;
  fx.dir = dir;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::uniform_real_distribution<double> uni(0.8, 1.2);

  const auto entities = make_entities(fx.n_entities);
  const std::vector<double> centers{1.0, 2.0, 3.5};

  {
    std::ofstream out(dir / "panel.csv", std::ios::binary);
    out << "entity,year,variable,value\n";
    for (std::size_t e = 0; e < fx.n_entities; ++e) {
      const double center = centers[e % centers.size()];
      double x = center;
      const double gdp0 = 50.0 * uni(rng);
      const double pop0 = 10.0 * uni(rng);
      const double cap0 = 120.0 * uni(rng);
      for (std::size_t t = 0; t < fx.n_years; ++t) {
        x = center + 0.8 * (x - center) + noise(rng);
        if (x < 0.05) x = 0.05;
        const int year = fx.start_year + static_cast<int>(t);
        const double growth = 1.0 + 0.03 * static_cast<double>(t);
        out << entities[e] << ',' << year << ",intensity," << fmt(x) << '\n';
        out << entities[e] << ',' << year << ",gdp," << fmt(gdp0 * growth) << '\n';
        out << entities[e] << ',' << year << ",population," << fmt(pop0) << '\n';
        out << entities[e] << ',' << year << ",capital," << fmt(cap0 * growth) << '\n';
      }
    }
  }

  {
    std::ofstream out(dir / "regions.csv", std::ios::binary);
    out << "entity,region\n";
    const std::vector<std::string> labels{"east", "central", "west"};
    for (std::size_t e = 0; e < fx.n_entities; ++e) {
      out << entities[e] << ',' << labels[e % 3] << '\n';
    }
  }

  {
    // ring adjacency, one direction per edge (load symmetrizes)
    std::ofstream out(dir / "adjacency.csv", std::ios::binary);
    out << "entity,neighbor\n";
    for (std::size_t e = 0; e < fx.n_entities; ++e) {
      const std::size_t next = (e + 1) % fx.n_entities;
      out << entities[e] << ',' << entities[next] << '\n';
      out << entities[next] << ',' << entities[e] << '\n';
    }
  }

  {
    std::ofstream out(dir / "factors.csv", std::ios::binary);
    out << "fuel,cf,cc,cof\n";
    out << "coal,0.7143,26.37,0.94\n";
    out << "oil,1.4286,20.1,0.98\n";
    out << "gas,1.33,15.3,0.99\n";
  }

  {
    std::ofstream out(dir / "consumption.csv", std::ios::binary);
    out << "entity,year,fuel,quantity\n";
    std::mt19937_64 crng(seed + 1);
    std::uniform_real_distribution<double> q(1.0, 20.0);
    for (std::size_t e = 0; e < fx.n_entities; ++e) {
      for (std::size_t t = 0; t < fx.n_years; ++t) {
        const int year = fx.start_year + static_cast<int>(t);
        for (const char* fuel : {"coal", "oil", "gas"}) {
          out << entities[e] << ',' << year << ',' << fuel << ',' << fmt(q(crng)) << '\n';
        }
      }
    }
  }

  {
    std::ofstream out(dir / "deflator.csv", std::ios::binary);
    out << "entity,year,index\n";
    for (std::size_t t = 0; t < fx.n_years; ++t) {
      const int year = fx.start_year + static_cast<int>(t);
      out << "*," << year << ',' << fmt(100.0 * (1.0 + 0.02 * static_cast<double>(t))) << '\n';
    }
  }

  fx.config_path = dir / "config.ini";
  {
    std::ofstream out(fx.config_path, std::ios::binary);
    out << "[data]\n";
    out << "panel = panel.csv\n";
    out << "regions = regions.csv\n";
    out << "adjacency = adjacency.csv\n";
    out << "factors = factors.csv\n";
    out << "consumption = consumption.csv\n";
    out << "deflator = deflator.csv\n";
    out << "[analysis]\n";
    out << "variable = intensity\n";
    out << "tau = 1\n";
    out << "subperiods = 1995-2005,2005-2014\n";
    out << "snapshot_years = 1995,2005,2014\n";
    out << "grid_size = 128\n";
    out << "tolerance = 1e-10\n";
    out << "base_year = 1995\n";
    out << "[output]\n";
    out << "out = out\n";
  }

  return fx;
}

}  // namespace testutil

#endif
