#include "torictop/svg.hpp"

#include "torictop/error.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace torictop::svg {

namespace {

struct Box {
  std::int64_t x0, y0, x1, y1;  // lattice units, inclusive
  int width() const { return static_cast<int>((x1 - x0) * kPixelsPerUnit); }
  int height() const { return static_cast<int>((y1 - y0) * kPixelsPerUnit); }
};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double to_px_x(const Box& b, double x) { return (x - static_cast<double>(b.x0)) * kPixelsPerUnit; }
double to_px_y(const Box& b, double y) { return (static_cast<double>(b.y1) - y) * kPixelsPerUnit; }

void open(std::ostringstream& out, const Box& b) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << b.width() << "\" height=\"" << b.height()
      << "\" viewBox=\"0 0 " << b.width() << ' ' << b.height() << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void lattice_dots(std::ostringstream& out, const Box& b) {
  out << "<g fill=\"#888\">\n";
  for (auto x = b.x0; x <= b.x1; ++x)
    for (auto y = b.y0; y <= b.y1; ++y)
      out << "<circle cx=\"" << px(to_px_x(b, static_cast<double>(x))) << "\" cy=\""
          << px(to_px_y(b, static_cast<double>(y))) << "\" r=\"1.5\"/>\n";
  out << "</g>\n";
}

}  // namespace

std::string render_fan(const fans::MultiFan& fan) {
  if (fan.dimension() != 2) throw InvalidInput("only planar fans can be drawn");
  Box b{-1, -1, 1, 1};
  for (const auto& r : fan.rays()) {
    b.x0 = std::min(b.x0, r[0] - 1);
    b.x1 = std::max(b.x1, r[0] + 1);
    b.y0 = std::min(b.y0, r[1] - 1);
    b.y1 = std::max(b.y1, r[1] + 1);
  }
  std::ostringstream out;
  open(out, b);
  out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
         "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  lattice_dots(out, b);
  const double ox = to_px_x(b, 0), oy = to_px_y(b, 0);
  for (const auto& top : fan.top_faces()) {
    const auto w = fan.weight(top).value();
    if (w == 0) continue;
    const auto& p = fan.ray(top[0]);
    const auto& q = fan.ray(top[1]);
    const double opacity = std::min(0.6, 0.15 * static_cast<double>(std::llabs(w)));
    out << "<polygon points=\"" << px(ox) << ',' << px(oy) << ' ' << px(to_px_x(b, static_cast<double>(p[0])))
        << ',' << px(to_px_y(b, static_cast<double>(p[1]))) << ' ' << px(to_px_x(b, static_cast<double>(q[0])))
        << ',' << px(to_px_y(b, static_cast<double>(q[1]))) << "\" fill=\"" << (w > 0 ? "#3366cc" : "#cc3333")
        << "\" fill-opacity=\"" << px(opacity) << "\"/>\n";
  }
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    const auto& r = fan.rays()[i];
    const double x = to_px_x(b, static_cast<double>(r[0])), y = to_px_y(b, static_cast<double>(r[1]));
    out << "<line x1=\"" << px(ox) << "\" y1=\"" << px(oy) << "\" x2=\"" << px(x) << "\" y2=\"" << px(y)
        << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    out << "<text x=\"" << px(x + 4) << "\" y=\"" << px(y - 4) << "\" font-size=\"11\">v" << i + 1 << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_loops(const std::vector<lattice::OrientedLoop>& loops) {
  if (loops.empty()) throw InvalidInput("nothing to draw");
  Box b{0, 0, 0, 0};
  bool first = true;
  for (const auto& l : loops)
    for (const auto& p : l.vertices()) {
      auto x0 = to_int64(floor_of(p[0])) - 1, x1 = to_int64(ceil_of(p[0])) + 1;
      auto y0 = to_int64(floor_of(p[1])) - 1, y1 = to_int64(ceil_of(p[1])) + 1;
      if (first) {
        b = {x0, y0, x1, y1};
        first = false;
      }
      b.x0 = std::min(b.x0, x0);
      b.x1 = std::max(b.x1, x1);
      b.y0 = std::min(b.y0, y0);
      b.y1 = std::max(b.y1, y1);
    }
  std::ostringstream out;
  open(out, b);
  out << "<g stroke=\"none\">\n";
  for (auto x = b.x0; x < b.x1; ++x)
    for (auto y = b.y0; y < b.y1; ++y) {
      lattice::Point c{Rational(2 * x + 1, 2), Rational(2 * y + 1, 2)};
      std::int64_t m = 0;
      bool boundary = false;
      for (const auto& l : loops) {
        if (lattice::on_loop(l, c)) {
          boundary = true;
          break;
        }
        m += lattice::winding_number(l, c);
      }
      if (boundary || m == 0) continue;
      const double opacity = std::min(0.8, 0.25 * static_cast<double>(std::llabs(m)));
      out << "<rect x=\"" << px(to_px_x(b, static_cast<double>(x))) << "\" y=\""
          << px(to_px_y(b, static_cast<double>(y + 1))) << "\" width=\"" << kPixelsPerUnit << "\" height=\""
          << kPixelsPerUnit << "\" fill=\"" << (m > 0 ? "#3366cc" : "#cc3333") << "\" fill-opacity=\""
          << px(opacity) << "\"><title>" << m << "</title></rect>\n";
    }
  out << "</g>\n";
  lattice_dots(out, b);
  for (const auto& l : loops) {
    out << "<path d=\"";
    const auto& vs = l.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      out << (i == 0 ? 'M' : 'L') << px(to_px_x(b, vs[i][0].convert_to<double>())) << ','
          << px(to_px_y(b, vs[i][1].convert_to<double>())) << ' ';
    out << "Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace torictop::svg
