#include <algorithm>
#include <map>

#include "afgr/lp.hpp"
#include "afgr/polytope.hpp"

namespace afgr {

namespace {

Rational twice_area(const std::vector<MomentPoint>& cyc) {
  Rational a = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& p = cyc[i];
    const auto& q = cyc[(i + 1) % cyc.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return a;
}

// Some edge of A or B has A and B in opposite closed half-planes.
bool interiors_disjoint(const std::vector<MomentPoint>& A, const std::vector<MomentPoint>& B) {
  auto separates = [](const std::vector<MomentPoint>& P, const std::vector<MomentPoint>& Q) {
    for (std::size_t i = 0; i < P.size(); ++i) {
      const auto& a = P[i];
      const auto& b = P[(i + 1) % P.size()];
      bool all_right = true;
      for (const auto& q : Q) {
        const Rational c = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]);
        if (c > 0) {
          all_right = false;
          break;
        }
      }
      if (all_right) return true;
    }
    return false;
  };
  return separates(A, B) || separates(B, A);
}

// Index of a coordinate along which the segment P varies.
int segment_axis(const Polytope& P) {
  const auto& vs = P.vertices();
  for (int j = 0; j < P.rank(); ++j)
    if (vs[0][j] != vs[1][j]) return j;
  return 0;
}

void validate_1d(const Polytope& P, const Subdivision& S) {
  const int ax = segment_axis(P);
  std::vector<std::pair<Rational, Rational>> iv;
  for (const auto& c : S.cells) {
    if (c.dim() != 1) throw DomainError("subdivision: cells must be segments");
    for (const auto& v : c.vertices())
      if (!contains(P, v)) throw DomainError("subdivision: cell leaves the polytope");
    Rational a = c.vertices()[0][ax], b = c.vertices()[1][ax];
    if (b < a) std::swap(a, b);
    iv.emplace_back(a, b);
  }
  std::sort(iv.begin(), iv.end());
  Rational lo = P.vertices()[0][ax], hi = P.vertices()[1][ax];
  if (hi < lo) std::swap(lo, hi);
  Rational cur = lo;
  for (const auto& [a, b] : iv) {
    if (a != cur) throw DomainError("subdivision: cells overlap or leave gaps");
    cur = b;
  }
  if (cur != hi) throw DomainError("subdivision: cells do not cover the polytope");
}

}  // namespace

void validate_tiling(const Polytope& P, const Subdivision& S) {
  if (S.cells.empty()) throw DomainError("subdivision: no cells");
  for (const auto& c : S.cells) require_same_rank(P.rank(), c.rank(), "subdivision");
  if (S.cells.size() == 1 && S.cells.front() == P) return;
  const int d = P.dim();
  if (d == 0) throw DomainError("subdivision: a point has only the trivial subdivision");
  if (d == 1) return validate_1d(P, S);
  if (P.rank() != 3) throw DomainError("subdivision: tiling checks are planar only (rank <= 3)");

  std::vector<std::vector<MomentPoint>> cycles;
  Rational area = 0;
  for (const auto& c : S.cells) {
    if (c.dim() != 2) throw DomainError("subdivision: cells must be two-dimensional");
    for (const auto& v : c.vertices())
      if (!contains(P, v)) throw DomainError("subdivision: cell leaves the polytope");
    cycles.push_back(boundary_cycle(c));
    area += twice_area(cycles.back());
  }
  if (area != twice_area(boundary_cycle(P)))
    throw DomainError("subdivision: cell areas do not add up to the polytope");
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!interiors_disjoint(cycles[i], cycles[j]))
        throw DomainError("subdivision: cells overlap");
      for (int k = 0; k < 2; ++k) {
        const Polytope& A = S.cells[k == 0 ? i : j];
        const Polytope& B = S.cells[k == 0 ? j : i];
        for (const auto& v : A.vertices())
          if (contains(B, v) && !B.has_vertex(v))
            throw DomainError("subdivision: cells do not meet face-to-face");
      }
    }
}

RegularityResult check_regular_subdivision(const Polytope& P, const Subdivision& S) {
  validate_tiling(P, S);
  RegularityResult res;
  for (const auto& c : S.cells)
    for (const auto& v : c.vertices()) res.points.push_back(v);
  std::sort(res.points.begin(), res.points.end());
  res.points.erase(std::unique(res.points.begin(), res.points.end()), res.points.end());
  const int n = P.rank();

  // Variables: h_a per point, per cell an affine function (n-1 slopes + offset)
  // on the chart given by the first n-1 coordinates, and the margin t.
  auto build = [&](bool fixed_margin) {
    LinearProgram lp;
    std::vector<int> h;
    for (std::size_t a = 0; a < res.points.size(); ++a) h.push_back(lp.add_variable(false));
    std::vector<std::vector<int>> f(S.cells.size());
    for (auto& fc : f)
      for (int j = 0; j < n; ++j) fc.push_back(lp.add_variable(false));
    const int t = fixed_margin ? -1 : lp.add_variable(false);
    for (std::size_t ci = 0; ci < S.cells.size(); ++ci) {
      for (std::size_t a = 0; a < res.points.size(); ++a) {
        const auto& p = res.points[a];
        std::vector<std::pair<int, Rational>> terms;
        for (int j = 0; j + 1 < n; ++j)
          if (p[j] != 0) terms.emplace_back(f[ci][j], p[j]);
        terms.emplace_back(f[ci][n - 1], Rational(1));
        terms.emplace_back(h[a], Rational(-1));
        if (S.cells[ci].has_vertex(p)) {
          lp.add_constraint(terms, LinearProgram::Sense::Eq, Rational(0));
        } else if (fixed_margin) {
          lp.add_constraint(terms, LinearProgram::Sense::Le, Rational(-1));
        } else {
          terms.emplace_back(t, Rational(1));
          lp.add_constraint(terms, LinearProgram::Sense::Le, Rational(0));
        }
      }
    }
    if (!fixed_margin) {
      lp.add_constraint({{t, Rational(1)}}, LinearProgram::Sense::Le, Rational(1));
      lp.set_objective({{t, Rational(1)}}, true);
    }
    return std::make_pair(lp, h);
  };

  auto [lp, h] = build(false);
  const auto sol = lp.solve();
  if (sol.status == LpStatus::Optimal && sol.value > 0) {
    res.regular = true;
    for (int v : h) res.heights.push_back(sol.x[v]);
    return res;
  }
  auto [lp1, h1] = build(true);
  auto cert = lp1.solve();
  if (cert.status != LpStatus::Infeasible)
    throw DomainError("check_regular_subdivision: inconsistent margin LP");
  res.system = std::move(cert.A);
  res.rhs = std::move(cert.b);
  res.certificate = std::move(cert.farkas);
  return res;
}

}  // namespace afgr
