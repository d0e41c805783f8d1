#ifndef DISTDYN_SVG_HPP
#define DISTDYN_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "distdyn/density.hpp"
#include "distdyn/dynamics.hpp"

namespace distdyn::svg {

struct Curve {
  std::vector<double> x;
  std::vector<double> y;
  std::string stroke = "black";
  std::string dash;  // SVG dasharray, empty = solid
};

// Minimal polyline plot with axes.
void write_lines(const std::vector<Curve>& curves, const std::filesystem::path& path);

// Grayscale cell map of a conditional kernel or joint density, with the
// diagonal marked.
void write_heatmap(const Grid1D& x_grid, const Grid1D& y_grid, const std::vector<double>& values,
                   const std::filesystem::path& path);

}  // namespace distdyn::svg

#endif
