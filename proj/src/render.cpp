#include "afgr/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "afgr/error.hpp"

namespace afgr {

namespace {

constexpr double kUnit = 60.0;
constexpr double kMargin = 30.0;

struct Pt {
  double x, y;
};

// Coordinates c1 alpha_1 + c2 alpha_2 with alpha_1 to the right and alpha_2
// at 120 degrees; SVG y grows downwards.
Pt project(const MomentPoint& p) {
  if (p.rank() == 2) return {kUnit * p[0].get_d(), 0.0};
  const double c1 = p[0].get_d();
  const double c2 = Rational(p[0] + p[1]).get_d();
  return {kUnit * (c1 - 0.5 * c2), -kUnit * (std::sqrt(3.0) / 2.0) * c2};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::vector<MomentPoint> lattice_points_in(const Polytope& P) {
  std::vector<MomentPoint> out;
  const int n = P.rank();
  const Rational s = P.vertices().front().sum();
  if (s.get_den() != 1) return out;
  std::vector<Int> lo(n - 1), hi(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    double mn = 1e18, mx = -1e18;
    for (const auto& v : P.vertices()) {
      mn = std::min(mn, v[j].get_d());
      mx = std::max(mx, v[j].get_d());
    }
    lo[j] = static_cast<Int>(std::floor(mn)) - 1;
    hi[j] = static_cast<Int>(std::ceil(mx)) + 1;
  }
  const Int total = s.get_num().get_si();
  if (n == 2) {
    for (Int a = lo[0]; a <= hi[0]; ++a) {
      MomentPoint p(Coweight{a, total - a});
      if (contains(P, p)) out.push_back(p);
    }
  } else {
    for (Int a = lo[0]; a <= hi[0]; ++a)
      for (Int b = lo[1]; b <= hi[1]; ++b) {
        MomentPoint p(Coweight{a, b, total - a - b});
        if (contains(P, p)) out.push_back(p);
      }
  }
  return out;
}

}  // namespace

std::string render_svg(const Polytope& P) {
  if (P.size() == 0) throw DomainError("render: empty polytope");
  if (P.rank() > 3) throw DomainError("render: only ranks 2 and 3 can be drawn");
  const auto cycle = boundary_cycle(P);
  const auto dots = lattice_points_in(P);
  std::vector<Pt> all;
  for (const auto& v : cycle) all.push_back(project(v));
  for (const auto& d : dots) all.push_back(project(d));
  double minx = all[0].x, maxx = all[0].x, miny = all[0].y, maxy = all[0].y;
  for (const auto& p : all) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double w = maxx - minx + 2 * kMargin, h = maxy - miny + 2 * kMargin;
  auto X = [&](const Pt& p) { return fmt(p.x - minx + kMargin); };
  auto Y = [&](const Pt& p) { return fmt(p.y - miny + kMargin); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  if (cycle.size() >= 3) {
    os << "  <polygon fill=\"#dde8f5\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Pt p = project(cycle[i]);
      os << (i ? " " : "") << X(p) << ',' << Y(p);
    }
    os << "\"/>\n";
  } else if (cycle.size() == 2) {
    const Pt a = project(cycle[0]), b = project(cycle[1]);
    os << "  <line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
       << "\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (const auto& d : dots) {
    const Pt p = project(d);
    os << "  <circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"3\" fill=\"#333333\"/>\n";
  }
  for (const auto& v : cycle) {
    const Pt p = project(v);
    os << "  <circle class=\"vertex\" cx=\"" << X(p) << "\" cy=\"" << Y(p)
       << "\" r=\"5\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace afgr
