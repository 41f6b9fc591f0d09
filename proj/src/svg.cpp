#include "somq/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace somq {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 24.0;

struct Frame {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void include(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

double coord(std::span<const double> v, std::size_t c) { return c < v.size() ? v[c] : 0.0; }

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_map_svg(const CodeBook& codebook, const Dataset& data, std::string_view title) {
  Frame f;
  for (std::size_t i = 0; i < data.size(); ++i) f.include(coord(data.sample(i), 0), coord(data.sample(i), 1));
  for (std::size_t k = 0; k < codebook.units(); ++k) {
    f.include(coord(codebook.prototype(k), 0), coord(codebook.prototype(k), 1));
  }
  const double span = std::max({f.x1 - f.x0, f.y1 - f.y0, 1e-12});
  const double scale = (kSize - 2.0 * kMargin) / span;
  auto px = [&](double x) { return fixed(kMargin + (x - f.x0) * scale); };
  auto py = [&](double y) { return fixed(kSize - kMargin - (y - f.y0) * scale); };

  const std::string size = fixed(kSize);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
                    "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<title>" + escape(title) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" style=\"fill:#ffffff\"/>\n";
  out += "<g style=\"fill:#9e9e9e;fill-opacity:0.6\">\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto x = data.sample(i);
    out += "<circle cx=\"" + px(coord(x, 0)) + "\" cy=\"" + py(coord(x, 1)) + "\" r=\"1.5\"/>\n";
  }
  out += "</g>\n<g style=\"fill:none;stroke:#c62828;stroke-width:1.2\">\n";
  const MapGrid& grid = codebook.grid();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto a = codebook.prototype(k);
    for (std::size_t l : grid.neighbors(k)) {
      if (l < k) continue;
      const auto b = codebook.prototype(l);
      out += "<polyline points=\"" + px(coord(a, 0)) + "," + py(coord(a, 1)) + " " + px(coord(b, 0)) + "," +
             py(coord(b, 1)) + "\"/>\n";
    }
  }
  out += "</g>\n<g style=\"fill:#c62828\">\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto a = codebook.prototype(k);
    out += "<circle cx=\"" + px(coord(a, 0)) + "\" cy=\"" + py(coord(a, 1)) + "\" r=\"2.5\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace somq
