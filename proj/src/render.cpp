#include "pseudoknot/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace pk {
namespace {

constexpr double kCenter = 200.0;
constexpr double kRadius = 150.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

struct Point {
  double x, y;
};

Point endpoint(std::size_t i, std::size_t m) {
  const double theta = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
  return {kCenter + kRadius * std::cos(theta), kCenter - kRadius * std::sin(theta)};
}

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
      << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/>"
         "</marker></defs>\n"
      << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n"
      << "<circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kRadius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
      // counterclockwise: at the top the circle runs leftwards
      << "<path d=\"M" << num(kCenter + 6) << "," << num(kCenter - kRadius - 6) << " L" << num(kCenter - 6) << ","
      << num(kCenter - kRadius) << " L" << num(kCenter + 6) << "," << num(kCenter - kRadius + 6)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

void dot(std::ostringstream& out, Point p) {
  out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"2.5\" fill=\"black\"/>\n";
}

void label(std::ostringstream& out, Point a, Point b, const std::string& text) {
  // Midpoint pulled slightly towards the centre so short chords stay readable.
  const double x = (a.x + b.x) / 2 * 0.9 + kCenter * 0.1;
  const double y = (a.y + b.y) / 2 * 0.9 + kCenter * 0.1;
  out << "<text x=\"" << num(x + 4) << "\" y=\"" << num(y - 4)
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#b00000\">" << text << "</text>\n";
}

void line(std::ostringstream& out, Point a, Point b, double width, bool arrow) {
  out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
      << "\" stroke=\"black\" stroke-width=\"" << num(width) << "\"" << (arrow ? " marker-end=\"url(#head)\"" : "")
      << "/>\n";
}

}  // namespace

std::string render_svg(const PseudoGaussDiagram& g) {
  std::ostringstream out;
  open_svg(out);
  const std::size_t m = g.size();
  for (std::size_t p = 0; p < m; ++p) {
    const GaussToken& t = g.tokens()[p];
    if (t.head) continue;  // draw each chord once, from its tail
    const std::size_t q = g.partner(p);
    const Point a = endpoint(p, m), b = endpoint(q, m);
    if (t.precrossing) {
      line(out, a, b, 4.5, false);
    } else {
      line(out, a, b, 1.5, true);
      label(out, a, b, t.sign > 0 ? "+" : "-");
    }
  }
  for (std::size_t p = 0; p < m; ++p) dot(out, endpoint(p, m));
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const DecoratedChordDiagram& c) {
  std::ostringstream out;
  open_svg(out);
  const std::size_t m = c.endpoint_count();
  for (const auto& ch : c.chords()) {
    const Point a = endpoint(ch.a, m), b = endpoint(ch.b, m);
    line(out, a, b, 3.0, false);
    label(out, a, b, std::to_string(ch.decoration));
  }
  for (std::size_t p = 0; p < m; ++p) dot(out, endpoint(p, m));
  out << "</svg>\n";
  return out.str();
}

}  // namespace pk
