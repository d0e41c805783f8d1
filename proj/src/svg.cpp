#include "distdyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "distdyn/errors.hpp"

namespace distdyn::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

void write_lines(const std::vector<Curve>& curves, const std::filesystem::path& path) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (first) {
        xmin = xmax = c.x[i];
        ymin = ymax = c.y[i];
        first = false;
      }
      xmin = std::min(xmin, c.x[i]);
      xmax = std::max(xmax, c.x[i]);
      ymin = std::min(ymin, c.y[i]);
      ymax = std::max(ymax, c.y[i]);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;

  auto px = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\""
      << num(kWidth - kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"gray\"/>\n";
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin)
      << "\" y2=\"" << num(kHeight - kMargin) << "\" stroke=\"gray\"/>\n";
  for (const auto& c : curves) {
    out << "<polyline fill=\"none\" stroke=\"" << c.stroke << "\"";
    if (!c.dash.empty()) out << " stroke-dasharray=\"" << c.dash << "\"";
    out << " points=\"";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (i) out << ' ';
      out << num(px(c.x[i])) << ',' << num(py(c.y[i]));
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_heatmap(const Grid1D& x_grid, const Grid1D& y_grid, const std::vector<double>& values,
                   const std::filesystem::path& path) {
  const std::size_t nx = x_grid.size(), ny = y_grid.size();
  const double vmax = values.empty() ? 1.0 : *std::max_element(values.begin(), values.end());
  const double cw = (kWidth - 2 * kMargin) / static_cast<double>(nx);
  const double ch = (kHeight - 2 * kMargin) / static_cast<double>(ny);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t ix = 0; ix < nx; ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double v = values[ix * ny + iy];
      if (v <= 0.0 || vmax <= 0.0) continue;
      const int shade = 255 - static_cast<int>(std::lround(255.0 * std::min(1.0, v / vmax)));
      if (shade >= 250) continue;
      out << "<rect x=\"" << num(kMargin + cw * static_cast<double>(ix)) << "\" y=\""
          << num(kHeight - kMargin - ch * static_cast<double>(iy + 1)) << "\" width=\"" << num(cw)
          << "\" height=\"" << num(ch) << "\" fill=\"rgb(" << shade << ',' << shade << ','
          << shade << ")\"/>\n";
    }
  }
  // diagonal reference
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\""
      << num(kWidth - kMargin) << "\" y2=\"" << num(kMargin)
      << "\" stroke=\"red\" stroke-dasharray=\"4,4\"/>\n";
  out << "</svg>\n";
}

}  // namespace distdyn::svg
