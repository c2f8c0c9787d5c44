#include "afgr/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "afgr/lp.hpp"
#include "afgr/orders.hpp"

namespace afgr {

namespace {

void check_points(const std::vector<MomentPoint>& pts, const char* what) {
  if (pts.empty()) throw DomainError(std::string(what) + ": empty point set");
  const int n = pts.front().rank();
  if (n < 2 || n > kMaxPolytopeRank)
    throw DomainError(std::string(what) + ": rank must be between 2 and 6");
  const Rational s = pts.front().sum();
  for (const auto& p : pts) {
    require_same_rank(n, p.rank(), what);
    if (p.sum() != s)
      throw DomainError(std::string(what) + ": points must share a coordinate sum");
  }
}

// z-component of (b - a) x (c - a) in the first two coordinates.
Rational cross(const MomentPoint& a, const MomentPoint& b, const MomentPoint& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Rational cross_dir(const MomentPoint& a, const MomentPoint& b, const MomentPoint& d) {
  return (b[0] - a[0]) * d[1] - (b[1] - a[1]) * d[0];
}

// Andrew's monotone chain; input sorted and unique. Collinear points dropped.
std::vector<MomentPoint> ccw_hull(const std::vector<MomentPoint>& pts) {
  if (pts.size() <= 2) return pts;
  std::vector<MomentPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

int affine_dim(const std::vector<MomentPoint>& pts) {
  if (pts.size() <= 1) return 0;
  const int n = pts.front().rank();
  RatMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (int j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_convex_combination(const std::vector<MomentPoint>& gens, const MomentPoint& p) {
  LinearProgram lp;
  std::vector<int> lam;
  for (std::size_t i = 0; i < gens.size(); ++i) lam.push_back(lp.add_variable(true));
  const int n = p.rank();
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, Rational>> terms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i][j] != 0) terms.emplace_back(lam[i], gens[i][j]);
    lp.add_constraint(terms, LinearProgram::Sense::Eq, p[j]);
  }
  std::vector<std::pair<int, Rational>> ones;
  for (int v : lam) ones.emplace_back(v, Rational(1));
  lp.add_constraint(ones, LinearProgram::Sense::Eq, Rational(1));
  lp.set_objective({}, false);
  return lp.solve().status == LpStatus::Optimal;
}

bool segment_contains(const MomentPoint& a, const MomentPoint& b, const MomentPoint& p) {
  // p = a + s (b - a), 0 <= s <= 1, in all coordinates.
  std::optional<Rational> s;
  for (int j = 0; j < a.rank(); ++j) {
    const Rational d = b[j] - a[j];
    const Rational q = p[j] - a[j];
    if (d == 0) {
      if (q != 0) return false;
      continue;
    }
    const Rational sj = q / d;
    if (s && *s != sj) return false;
    s = sj;
  }
  return !s || (*s >= 0 && *s <= 1);
}

MomentPoint to_moment(const Coweight& c) { return MomentPoint(c); }

}  // namespace

Polytope Polytope::from_vertices_unchecked(std::vector<MomentPoint> vertices) {
  Polytope P;
  P.vertices_ = std::move(vertices);
  return P;
}

int Polytope::dim() const { return affine_dim(vertices_); }

bool Polytope::has_vertex(const MomentPoint& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

std::optional<std::vector<Coweight>> Polytope::lattice_vertices() const {
  std::vector<Coweight> out;
  for (const auto& v : vertices_) {
    auto c = v.as_coweight();
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

Polytope Polytope::translated(const MomentPoint& by) const {
  std::vector<MomentPoint> vs;
  for (const auto& v : vertices_) vs.push_back(v + by);
  return from_vertices_unchecked(std::move(vs));
}

Polytope convex_hull(const std::vector<MomentPoint>& points) {
  check_points(points, "convex_hull");
  std::vector<MomentPoint> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = pts.front().rank();
  std::vector<MomentPoint> out;
  if (n == 2) {
    out.push_back(pts.front());
    if (pts.size() > 1) out.push_back(pts.back());
  } else if (n == 3) {
    out = ccw_hull(pts);
    std::sort(out.begin(), out.end());
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<MomentPoint> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (others.empty() || !in_convex_combination(others, pts[i])) out.push_back(pts[i]);
    }
  }
  return Polytope::from_vertices_unchecked(std::move(out));
}

Polytope convex_hull(const std::vector<Coweight>& points) {
  std::vector<MomentPoint> pts;
  for (const auto& c : points) pts.push_back(to_moment(c));
  return convex_hull(pts);
}

std::vector<MomentPoint> boundary_cycle(const Polytope& P) {
  if (P.rank() != 3 || P.size() <= 2) return P.vertices();
  return ccw_hull(P.vertices());
}

bool contains_lp(const Polytope& P, const MomentPoint& p) {
  if (P.size() == 0) return false;
  require_same_rank(P.rank(), p.rank(), "contains");
  return in_convex_combination(P.vertices(), p);
}

bool contains(const Polytope& P, const MomentPoint& p) {
  if (P.size() == 0) return false;
  require_same_rank(P.rank(), p.rank(), "contains");
  const auto& vs = P.vertices();
  if (p.sum() != vs.front().sum()) return false;
  if (vs.size() == 1) return vs.front() == p;
  if (vs.size() == 2) return segment_contains(vs[0], vs[1], p);
  if (P.rank() == 3) {
    const auto cyc = ccw_hull(vs);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (cross(cyc[i], cyc[(i + 1) % cyc.size()], p) < 0) return false;
    return true;
  }
  return contains_lp(P, p);
}

std::optional<std::pair<Rational, Rational>> line_extent(const Polytope& P,
                                                         const MomentPoint& p,
                                                         const MomentPoint& dir) {
  require_same_rank(P.rank(), p.rank(), "line_extent");
  require_same_rank(P.rank(), dir.rank(), "line_extent");
  if (dir.sum() != 0) throw DomainError("line_extent: direction must have coordinate sum 0");
  bool zero = true;
  for (const auto& c : dir.coords()) zero = zero && c == 0;
  if (zero) throw DomainError("line_extent: zero direction");
  if (P.size() == 0 || p.sum() != P.vertices().front().sum()) return std::nullopt;

  const auto& vs = P.vertices();
  if (P.rank() == 3 && vs.size() >= 3) {
    const auto cyc = ccw_hull(vs);
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& a = cyc[i];
      const auto& b = cyc[(i + 1) % cyc.size()];
      // cross(a, b, p) + t * cross_dir(a, b, dir) >= 0
      const Rational c0 = cross(a, b, p);
      const Rational c1 = cross_dir(a, b, dir);
      if (c1 == 0) {
        if (c0 < 0) return std::nullopt;
      } else if (c1 > 0) {
        const Rational bound = -c0 / c1;
        if (!lo || bound > *lo) lo = bound;
      } else {
        const Rational bound = -c0 / c1;
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  // General path: extremize t over sum(lam_i v_i) - t dir = p.
  auto extremize = [&](bool maximize) -> std::optional<Rational> {
    LinearProgram lp;
    std::vector<int> lam;
    for (std::size_t i = 0; i < vs.size(); ++i) lam.push_back(lp.add_variable(true));
    const int t = lp.add_variable(false);
    for (int j = 0; j < P.rank(); ++j) {
      std::vector<std::pair<int, Rational>> terms;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i][j] != 0) terms.emplace_back(lam[i], vs[i][j]);
      if (dir[j] != 0) terms.emplace_back(t, -dir[j]);
      lp.add_constraint(terms, LinearProgram::Sense::Eq, p[j]);
    }
    std::vector<std::pair<int, Rational>> ones;
    for (int v : lam) ones.emplace_back(v, Rational(1));
    lp.add_constraint(ones, LinearProgram::Sense::Eq, Rational(1));
    lp.set_objective({{t, Rational(1)}}, maximize);
    auto sol = lp.solve();
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    return sol.value;
  };
  auto hi = extremize(true);
  if (!hi) return std::nullopt;
  auto lo = extremize(false);
  return std::make_pair(*lo, *hi);
}

std::vector<Coweight> coset_lattice_points(const Polytope& P, const Coweight& v) {
  if (P.size() == 0) return {};
  const int n = P.rank();
  require_same_rank(n, v.rank(), "coset_lattice_points");
  if (!contains(P, MomentPoint(v)))
    throw DomainError("coset_lattice_points: base point " + v.str() + " is not in the polytope");
  std::vector<Int> lo(n - 1), hi(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    Rational mn = P.vertices().front()[j], mx = mn;
    for (const auto& p : P.vertices()) {
      mn = std::min(mn, p[j]);
      mx = std::max(mx, p[j]);
    }
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[j] = f.get_si();
    hi[j] = c.get_si();
  }
  std::vector<Coweight> out;
  std::vector<Int> cur(n);
  auto rec = [&](auto&& self, int j, Int partial) -> void {
    if (j == n - 1) {
      cur[n - 1] = v.sum() - partial;
      Coweight c(cur);
      if (contains(P, MomentPoint(c))) out.push_back(c);
      return;
    }
    for (Int x = lo[j]; x <= hi[j]; ++x) {
      cur[j] = x;
      self(self, j + 1, partial + x);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Int reflection_count(const Polytope& P, const MomentPoint& p) {
  const int n = P.rank();
  require_same_rank(n, p.rank(), "reflection_count");
  Int total = 0;
  for (const Root& g : positive_roots(n)) {
    const auto ext = line_extent(P, p, MomentPoint(g.coroot(n)));
    if (!ext) continue;
    // Reflection in H_{g,k} moves p by t g^vee with t = k - <p,g>.
    const Rational a = p.pair(g);
    const Rational lo = ext->first + a, hi = ext->second + a;
    mpz_class kl, kh;
    mpz_cdiv_q(kl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(kh.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (kh < kl) continue;
    Int cnt = mpz_class(kh - kl + 1).get_si();
    if (a.get_den() == 1 && ext->first <= 0 && ext->second >= 0) --cnt;
    total += cnt;
  }
  return total;
}

Int root_direction_count(const Polytope& P, const Coweight& v) {
  const MomentPoint p(v);
  if (!P.has_vertex(p)) throw DomainError("root_direction_count: " + v.str() + " is not a vertex");
  return reflection_count(P, p);
}

namespace {
std::string describe_counts(const std::vector<std::pair<Coweight, Int>>& counts) {
  std::ostringstream os;
  os << "dimension_estimate: vertex counts disagree:";
  for (const auto& [v, c] : counts) os << ' ' << v.str() << "->" << c;
  return os.str();
}
}  // namespace

VertexCountMismatch::VertexCountMismatch(std::vector<std::pair<Coweight, Int>> counts)
    : DomainError(describe_counts(counts)), counts_(std::move(counts)) {}

Int dimension_estimate(const Polytope& P) {
  if (P.size() == 0) throw DomainError("dimension_estimate: empty polytope");
  const auto lv = P.lattice_vertices();
  if (!lv) throw DomainError("dimension_estimate: vertices must be lattice points");
  std::vector<std::pair<Coweight, Int>> counts;
  for (const auto& v : *lv) counts.emplace_back(v, root_direction_count(P, v));
  for (const auto& c : counts)
    if (c.second != counts.front().second) throw VertexCountMismatch(counts);
  return counts.front().second;
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  require_same_rank(P.rank(), Q.rank(), "minkowski_sum");
  std::vector<MomentPoint> pts;
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) pts.push_back(a + b);
  return convex_hull(pts);
}

Polytope scaled(const Polytope& P, Int k) {
  if (k < 0) throw DomainError("scaled: negative factor");
  if (k == 0) return convex_hull(std::vector<Coweight>{Coweight::zero(P.rank())});
  std::vector<MomentPoint> vs;
  for (const auto& v : P.vertices()) vs.push_back(v * make_rational(k));
  return Polytope::from_vertices_unchecked(std::move(vs));
}

Polytope prime_sum_sl3(Int c1, Int c2, Int c3, Int c4) {
  if (c1 < 0 || c2 < 0 || c3 < 0 || c4 < 0)
    throw DomainError("mv_polytope_sl3: coefficients must be nonnegative");
  const Coweight z = Coweight::zero(3), a{1, -1, 0}, b{0, 1, -1}, t{1, 0, -1};
  const Polytope a1 = convex_hull(std::vector<Coweight>{z, a});
  const Polytope a2 = convex_hull(std::vector<Coweight>{z, b});
  const Polytope b1 = convex_hull(std::vector<Coweight>{z, a, t});
  const Polytope b2 = convex_hull(std::vector<Coweight>{z, b, t});
  Polytope out = convex_hull(std::vector<Coweight>{z});
  out = minkowski_sum(out, scaled(a1, c1));
  out = minkowski_sum(out, scaled(a2, c2));
  out = minkowski_sum(out, scaled(b1, c3));
  out = minkowski_sum(out, scaled(b2, c4));
  return out;
}

Polytope mv_polytope_sl3(Int c1, Int c2, Int c3, Int c4) {
  if (c1 > 0 && c2 > 0)
    throw DomainError(
        "mv_polytope_sl3: both segment coefficients positive; the sum is not an MV polytope");
  return prime_sum_sl3(c1, c2, c3, c4);
}

std::optional<std::pair<Coweight, Coweight>> top_bottom(const Polytope& P) {
  const auto lv = P.lattice_vertices();
  if (!lv || lv->empty()) return std::nullopt;
  std::optional<Coweight> top, bottom;
  for (const auto& c : *lv) {
    bool is_top = true, is_bottom = true;
    for (const auto& d : *lv) {
      is_top = is_top && dominance_leq(d, c);
      is_bottom = is_bottom && dominance_leq(c, d);
    }
    if (is_top) top = c;
    if (is_bottom) bottom = c;
  }
  if (!top || !bottom) return std::nullopt;
  return std::make_pair(*top, *bottom);
}

}  // namespace afgr
