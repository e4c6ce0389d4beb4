#include "ford/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace ford {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

}  // namespace

std::string render_svg(const FordAnalysis& an) {
  const auto corners = an.domain.corners();
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](complexd z, double r) {
    xmin = std::min(xmin, std::real(z) - r);
    xmax = std::max(xmax, std::real(z) + r);
    ymin = std::min(ymin, std::imag(z) - r);
    ymax = std::max(ymax, std::imag(z) + r);
  };
  for (const auto& q : corners) grow(q, 0.0);
  for (const auto& c : an.candidates) grow(c.sphere.center, c.sphere.radius);
  const double pad = 0.04 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double sw = 0.0035 * std::max(xmax - xmin, ymax - ymin);

  // image y axis points down; flip the plane's y
  auto X = [&](complexd z) { return num(std::real(z)); };
  auto Y = [&](complexd z) { return num(-std::imag(z)); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(xmin) +
         " " + num(-ymax) + " " + num(xmax - xmin) + " " + num(ymax - ymin) +
         "\">\n";

  svg += "  <path d=\"M " + X(corners[0]) + " " + Y(corners[0]);
  for (int i = 1; i < 4; ++i) svg += " L " + X(corners[i]) + " " + Y(corners[i]);
  svg += " Z\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" + num(sw) +
         "\"/>\n";

  for (std::size_t i = 0; i < an.candidates.size(); ++i) {
    const auto& s = an.candidates[i].sphere;
    const bool visible = an.verdicts[i].visible;
    svg += "  <circle cx=\"" + X(s.center) + "\" cy=\"" + Y(s.center) +
           "\" r=\"" + num(s.radius) + "\"";
    if (visible) {
      svg += " fill=\"#1a7a4a\" fill-opacity=\"0.12\" stroke=\"#1a7a4a\"";
    } else {
      svg += " fill=\"none\" stroke=\"#aaaaaa\" stroke-dasharray=\"" +
             num(3.0 * sw) + " " + num(3.0 * sw) + "\"";
    }
    svg += " stroke-width=\"" + num(sw) + "\"><title>" +
           an.candidates[i].word.str() + "</title></circle>\n";
  }

  for (const auto& e : an.edges) {
    svg += "  <line x1=\"" + X(e.endpoint1) + "\" y1=\"" + Y(e.endpoint1) +
           "\" x2=\"" + X(e.endpoint2) + "\" y2=\"" + Y(e.endpoint2) +
           "\" stroke=\"#c03030\" stroke-width=\"" + num(1.4 * sw) + "\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace ford
