#include "distdyn/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "distdyn/errors.hpp"

namespace distdyn::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, const std::filesystem::path& path) {
  double v = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("bad numeric field '" + s + "' in " + path.string());
  }
  return v;
}

int parse_int(const std::string& s, const std::filesystem::path& path) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad integer field '" + s + "' in " + path.string());
  }
  return v;
}

struct CsvReader {
  std::ifstream in;
  std::filesystem::path path;
  std::size_t n_cols;

  CsvReader(const std::filesystem::path& p, const std::string& expected_header) : path(p) {
    in.open(p);
    if (!in) throw ConfigError("cannot open " + p.string());
    std::string header;
    if (!std::getline(in, header)) throw ConfigError("empty file: " + p.string());
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != expected_header) {
      throw ConfigError("expected header '" + expected_header + "' in " + p.string() + ", got '" +
                        header + "'");
    }
    n_cols = split_line(expected_header).size();
  }

  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      fields = split_line(line);
      if (fields.size() != n_cols) {
        throw ConfigError("wrong field count in " + path.string() + ": " + line);
      }
      return true;
    }
    return false;
  }
};

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("double formatting failed");
  return std::string(buf, ptr);
}

PanelDataset load_panel(const std::filesystem::path& path) {
  struct Row {
    std::string entity;
    int year;
    std::string variable;
    double value;
  };
  std::vector<Row> rows;
  std::vector<std::string> entities;
  std::set<std::string> seen;
  int min_year = 0, max_year = 0;

  CsvReader reader(path, "entity,year,variable,value");
  std::vector<std::string> f;
  while (reader.next(f)) {
    Row r{f[0], parse_int(f[1], path), f[2], parse_double(f[3], path)};
    if (seen.insert(r.entity).second) entities.push_back(r.entity);
    if (rows.empty()) {
      min_year = max_year = r.year;
    } else {
      min_year = std::min(min_year, r.year);
      max_year = std::max(max_year, r.year);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ConfigError("no data rows in " + path.string());

  std::vector<int> years(static_cast<std::size_t>(max_year - min_year) + 1);
  for (std::size_t i = 0; i < years.size(); ++i) years[i] = min_year + static_cast<int>(i);

  PanelDataset panel(entities, years);
  for (const auto& r : rows) panel.set(r.entity, r.year, r.variable, r.value);
  return panel;
}

void load_regions(PanelDataset& panel, const std::filesystem::path& path) {
  CsvReader reader(path, "entity,region");
  std::vector<std::string> f;
  while (reader.next(f)) panel.set_region(f[0], f[1]);
}

void load_adjacency(PanelDataset& panel, const std::filesystem::path& path) {
  CsvReader reader(path, "entity,neighbor");
  std::vector<std::string> f;
  std::set<std::pair<std::string, std::string>> edges;
  while (reader.next(f)) {
    edges.insert({f[0], f[1]});
    panel.add_edge(f[0], f[1]);
  }
  for (const auto& [a, b] : edges) {
    if (!edges.count({b, a})) {
      std::cerr << "warning: adjacency edge " << a << " -> " << b
                << " has no reverse row; symmetrized\n";
    }
  }
}

EmissionFactors load_factors(const std::filesystem::path& path) {
  CsvReader reader(path, "fuel,cf,cc,cof");
  EmissionFactors factors;
  std::vector<std::string> f;
  while (reader.next(f)) {
    factors.by_fuel[f[0]] =
        FuelFactors{parse_double(f[1], path), parse_double(f[2], path), parse_double(f[3], path)};
  }
  if (factors.by_fuel.empty()) throw ConfigError("no factor rows in " + path.string());
  return factors;
}

EnergyConsumption load_consumption(const std::filesystem::path& path) {
  CsvReader reader(path, "entity,year,fuel,quantity");
  EnergyConsumption consumption;
  std::vector<std::string> f;
  while (reader.next(f)) {
    consumption.cells[{f[0], parse_int(f[1], path)}][f[2]] = parse_double(f[3], path);
  }
  if (consumption.cells.empty()) throw ConfigError("no consumption rows in " + path.string());
  return consumption;
}

CellSeries load_deflator(const std::filesystem::path& path) {
  CsvReader reader(path, "entity,year,index");
  CellSeries index;
  std::vector<std::string> f;
  while (reader.next(f)) {
    index[{f[0], parse_int(f[1], path)}] = parse_double(f[2], path);
  }
  if (index.empty()) throw ConfigError("no deflator rows in " + path.string());
  return index;
}

void write_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

void write_density(const DensityGrid& density, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(density.grid.size());
  for (std::size_t i = 0; i < density.grid.size(); ++i) {
    rows.push_back({format_double(density.grid.points[i]), format_double(density.density[i])});
  }
  write_table({"x", "density"}, rows, path);
}

void write_joint(const JointDensityGrid& joint, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(joint.density.size());
  for (std::size_t ix = 0; ix < joint.x_grid.size(); ++ix) {
    for (std::size_t iy = 0; iy < joint.y_grid.size(); ++iy) {
      rows.push_back({format_double(joint.x_grid.points[ix]),
                      format_double(joint.y_grid.points[iy]), format_double(joint.at(ix, iy))});
    }
  }
  write_table({"x", "y", "density"}, rows, path);
}

void write_kernel(const ConditionalKernel& kernel, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(kernel.g.size());
  for (std::size_t ix = 0; ix < kernel.x_grid.size(); ++ix) {
    for (std::size_t iy = 0; iy < kernel.y_grid.size(); ++iy) {
      rows.push_back({format_double(kernel.x_grid.points[ix]),
                      format_double(kernel.y_grid.points[iy]), format_double(kernel.at(ix, iy)),
                      kernel.valid[ix] ? "1" : "0"});
    }
  }
  write_table({"x", "y", "g", "valid"}, rows, path);
}

void write_ntp(const NTPCurve& curve, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(curve.x_grid.size());
  for (std::size_t i = 0; i < curve.x_grid.size(); ++i) {
    rows.push_back({format_double(curve.x_grid.points[i]), format_double(curve.p[i]),
                    curve.valid[i] ? "1" : "0"});
  }
  write_table({"x", "p", "valid"}, rows, path);
}

void write_conditioned(const ConditionedSeries& series, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  const auto& s = series.series;
  for (std::size_t e = 0; e < s.entities.size(); ++e) {
    for (std::size_t t = 0; t < s.years.size(); ++t) {
      const std::pair<std::string, int> key{s.entities[e], s.years[t]};
      auto excl = series.exclusions.find(key);
      if (excl != series.exclusions.end()) {
        rows.push_back({s.entities[e], std::to_string(s.years[t]), "", excl->second});
      } else if (s.defined(e, t)) {
        rows.push_back({s.entities[e], std::to_string(s.years[t]), format_double(s.at(e, t)), ""});
      }
    }
  }
  write_table({"entity", "year", "value", "excluded_reason"}, rows, path);
}

void write_cells(const CellSeries& cells, const std::string& variable,
                 const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(cells.size());
  for (const auto& [cell, value] : cells) {
    rows.push_back({cell.first, std::to_string(cell.second), variable, format_double(value)});
  }
  write_table({"entity", "year", "variable", "value"}, rows, path);
}

}  // namespace distdyn::csv
