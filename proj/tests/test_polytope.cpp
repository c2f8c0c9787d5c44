#include <doctest.h>

#include <random>

#include "afgr/dims.hpp"
#include "afgr/error.hpp"
#include "afgr/golden.hpp"
#include "afgr/orders.hpp"
#include "afgr/polytope.hpp"

using namespace afgr;

namespace {

const Coweight Z{0, 0, 0}, A{1, -1, 0}, B{0, 1, -1}, T{1, 0, -1};

Polytope hull(std::vector<Coweight> pts) { return convex_hull(pts); }

// Brute-force ray count: all roots, m = 1..40.
Int ray_count_oracle(const Polytope& P, const Coweight& v) {
  const int n = v.rank();
  Int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Int m = 1; m <= 40; ++m)
        if (contains(P, MomentPoint(v + Coweight::coroot(n, i, j) * m))) ++c;
    }
  return c;
}

// Tropical Pluecker relation for SL3: the two Lusztig data of P along the
// reduced words (1,2,1) and (2,1,2), read off the polytope's edge lengths.
bool tropical_mv_oracle(const Polytope& P) {
  const auto tb = top_bottom(P);
  if (!tb) return false;
  const MomentPoint top(tb->first), bot(tb->second);
  auto reach = [&](const MomentPoint& from, const Coweight& dir) {
    const auto ext = line_extent(P, from, MomentPoint(dir));
    return ext ? ext->second : Rational(0);
  };
  const Rational n1 = reach(bot, A), n3 = reach(top, -B);
  const Rational m1 = reach(bot, B), m3 = reach(top, -A);
  const MomentPoint diff = top - bot;  // = c_a alpha + c_b beta
  const Rational ca = diff[0], cb = diff[0] + diff[1];
  const Rational n2 = ca - n1, m2 = ca - m3;
  if (n2 != cb - n3 || m2 != cb - m1) return false;
  return m2 == std::min(n1, n3) && n2 == std::min(m1, m3);
}

Int height_of(const Coweight& c) { return height(c); }

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("hulls") {
    CHECK(hull({T}).size() == 1);
    std::vector<Coweight> orb;
    std::vector<int> p{0, 1, 2};
    do orb.push_back(Perm(p).act(T));
    while (std::next_permutation(p.begin(), p.end()));
    orb.push_back(Z);
    CHECK(hull(orb).size() == 6);
    CHECK(hull({Z, A, A * 2}).size() == 2);
    CHECK_THROWS_AS(convex_hull(std::vector<MomentPoint>{}), DomainError);
    CHECK_THROWS_AS(convex_hull(std::vector<Coweight>{Coweight{1, 0, 0}, Coweight{0, 0, 0}}), DomainError);
    const auto H = named_polytope("hexagon");
    CHECK(std::is_sorted(H.vertices().begin(), H.vertices().end()));
    CHECK(H.dim() == 2);
  }

  TEST_CASE("rank 4 hull through the LP path") {
    std::vector<Coweight> orb;
    std::vector<int> p{0, 1, 2, 3};
    do orb.push_back(Perm(p).act(Coweight{1, 0, 0, -1}));
    while (std::next_permutation(p.begin(), p.end()));
    orb.push_back(Coweight::zero(4));
    const Polytope P = convex_hull(orb);
    CHECK(P.size() == 12);
    CHECK(P.dim() == 3);
    CHECK(contains(P, MomentPoint(Coweight::zero(4))));
    CHECK(!contains(P, MomentPoint(Coweight{2, 0, 0, -2})));
    CHECK(root_direction_count(P, Coweight{1, 0, 0, -1}) == ray_count_oracle(P, Coweight{1, 0, 0, -1}));
  }

  TEST_CASE("containment: planar path against LP") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Coweight> pts;
      for (int k = 0; k < 5; ++k) {
        const Int a = c(rng), b = c(rng);
        pts.push_back(Coweight{a, b, -a - b});
      }
      const Polytope P = convex_hull(pts);
      for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= 4; ++b) {
          const MomentPoint m({make_rational(2 * a + 1, 2), make_rational(b), make_rational(-2 * a - 1 - 2 * b, 2)});
          CHECK(contains(P, m) == contains_lp(P, m));
          const MomentPoint l(Coweight{a, b, -a - b});
          CHECK(contains(P, l) == contains_lp(P, l));
        }
    }
    const auto H = named_polytope("hexagon");
    CHECK(contains(H, MomentPoint(Z)));
    CHECK(!contains(H, MomentPoint(T * 2)));
    for (const auto& v : H.vertices()) CHECK(contains(H, v));
  }

  TEST_CASE("coset lattice points") {
    CHECK(coset_lattice_points(hull({T}), T) == std::vector<Coweight>{T});
    CHECK(coset_lattice_points(named_polytope("hexagon"), T).size() == 7);
    CHECK(coset_lattice_points(named_polytope("sl2-segment"), Coweight{1, -1}).size() == 4);
  }

  TEST_CASE("root direction counts") {
    const auto H = named_polytope("hexagon");
    CHECK(root_direction_count(H, T) == 4);
    CHECK(dimension_estimate(H) == 4);
    CHECK(dimension_estimate(named_polytope("sl2-segment")) == 3);
    CHECK(dimension_estimate(named_polytope("prime-triangle")) == 2);
    CHECK(dimension_estimate(hull({T})) == 0);
    CHECK_THROWS_AS(root_direction_count(H, Z), DomainError);
    for (Int lo = -6; lo <= 6; ++lo)
      for (Int hi = lo; hi <= lo + 6; ++hi) {
        const Polytope S = hull({Coweight{lo, -lo}, Coweight{hi, -hi}});
        CHECK(dimension_estimate(S) == height_of(Coweight{hi - lo, lo - hi}));
      }
  }

  TEST_CASE("ray counts against brute force and the reflection count") {
    for (Int a = 0; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b)
        for (Int c = 0; c <= 2; ++c)
          for (Int d = 0; d <= 2; ++d) {
            const Polytope P = prime_sum_sl3(a, b, c, d);
            const auto lv = *P.lattice_vertices();
            for (const auto& v : lv) {
              CHECK(root_direction_count(P, v) == ray_count_oracle(P, v));
              CHECK(reflection_count(P, MomentPoint(v)) == root_direction_count(P, v));
            }
          }
  }

  TEST_CASE("reflection count at rational points") {
    const Polytope P = named_polytope("trapezoid");
    const int n = 3;
    for (Int a = -2; a <= 4; ++a)
      for (Int b = -2; b <= 4; ++b) {
        const MomentPoint p({make_rational(3 * a + 1, 3), make_rational(3 * b + 1, 3), make_rational(-3 * a - 3 * b - 2, 3)});
        if (!contains(P, p)) continue;
        Int brute = 0;
        for (const Root& g : positive_roots(n))
          for (Int k = -20; k <= 20; ++k) {
            const MomentPoint img = reflection(n, AffineRoot{g, k}).act(p);
            if (img != p && contains(P, img)) ++brute;
          }
        CHECK(reflection_count(P, p) == brute);
      }
  }

  TEST_CASE("MV polytopes: vertex independence and height") {
    int mv = 0;
    for (Int a = 0; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b)
        for (Int c = 0; c <= 2; ++c)
          for (Int d = 0; d <= 2; ++d) {
            const Polytope P = prime_sum_sl3(a, b, c, d);
            CHECK(tropical_mv_oracle(P) == (a * b == 0));
            if (a * b != 0) {
              CHECK_THROWS_AS(mv_polytope_sl3(a, b, c, d), DomainError);
              CHECK_THROWS_AS(dimension_estimate(P), VertexCountMismatch);
              continue;
            }
            ++mv;
            const Polytope M = mv_polytope_sl3(a, b, c, d);
            const auto tb = top_bottom(M);
            REQUIRE(tb.has_value());
            CHECK(dimension_estimate(M) == height_of(tb->first - tb->second));
          }
    CHECK(mv == 45);
    try {
      dimension_estimate(prime_sum_sl3(1, 1, 0, 0));
      FAIL("expected a mismatch");
    } catch (const VertexCountMismatch& e) {
      std::map<Coweight, Int> m(e.counts().begin(), e.counts().end());
      CHECK(m.at(Z) == 3);
      CHECK(m.at(A) == 2);
    }
    CHECK_THROWS_AS(mv_polytope_sl3(-1, 0, 0, 0), DomainError);
  }

  TEST_CASE("named MV examples") {
    CHECK(mv_polytope_sl3(0, 0, 0, 0).size() == 1);
    CHECK(mv_polytope_sl3(0, 0, 1, 1) == named_polytope("hexagon").translated(MomentPoint(T)));
    CHECK(mv_polytope_sl3(1, 0, 0, 0) == hull({Z, A}));
    CHECK(minkowski_sum(hull({Z, A}), hull({Z, B})).size() == 4);
    CHECK(minkowski_sum(hull({Z, A, T}), hull({Z, B})).size() == 4);
    const auto P = named_polytope("hexagon");
    CHECK(minkowski_sum(P, hull({Z})) == P);
  }

  TEST_CASE("Minkowski sums: commutative, associative, vertex bound") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-2, 2), k(1, 4);
    auto rnd = [&] {
      std::vector<Coweight> pts;
      for (int i = k(rng); i > 0; --i) {
        const Int a = c(rng), b = c(rng);
        pts.push_back(Coweight{a, b, -a - b});
      }
      return hull(pts);
    };
    for (int t = 0; t < 30; ++t) {
      const auto P = rnd(), Q = rnd(), R = rnd();
      CHECK(minkowski_sum(P, Q) == minkowski_sum(Q, P));
      CHECK(minkowski_sum(minkowski_sum(P, Q), R) == minkowski_sum(P, minkowski_sum(Q, R)));
      CHECK(minkowski_sum(P, Q).size() <= P.size() + Q.size());
    }
  }
}

TEST_SUITE("polytope") {
  namespace {
  // Independent check of a lifting: for every cell, the affine function
  // through its lifted vertices is strictly below all other lifted points.
  bool lifting_induces(const Subdivision& S, const RegularityResult& r) {
    std::map<MomentPoint, Rational> h;
    for (std::size_t i = 0; i < r.points.size(); ++i) h[r.points[i]] = r.heights[i];
    for (const auto& cell : S.cells) {
      const auto& v = cell.vertices();
      // plane z = a x + b y + c through three affinely independent vertices
      const auto &p = v[0], &q = v[1], &s = v[2];
      const Rational det = (q[0] - p[0]) * (s[1] - p[1]) - (q[1] - p[1]) * (s[0] - p[0]);
      const Rational dq = h[q] - h[p], ds = h[s] - h[p];
      const Rational a = (dq * (s[1] - p[1]) - ds * (q[1] - p[1])) / det;
      const Rational b = ((q[0] - p[0]) * ds - (s[0] - p[0]) * dq) / det;
      auto f = [&](const MomentPoint& x) -> Rational { return h[p] + a * (x[0] - p[0]) + b * (x[1] - p[1]); };
      for (const auto& x : r.points) {
        if (cell.has_vertex(x)) {
          if (f(x) != h[x]) return false;
        } else if (!(f(x) < h[x])) {
          return false;
        }
      }
    }
    return true;
  }
  }  // namespace

  TEST_CASE("regular subdivisions") {
    for (const auto& name : subdivision_names()) {
      const auto ns = named_subdivision(name);
      const auto r = check_regular_subdivision(ns.outer, ns.subdivision);
      CHECK(r.regular == ns.expected_regular);
      if (r.regular) CHECK(lifting_induces(ns.subdivision, r));
      else CHECK(verify_farkas(r.system, r.rhs, r.certificate));
    }
    for (const auto& name : polytope_names()) {
      const auto P = named_polytope(name);
      CHECK(check_regular_subdivision(P, Subdivision{{P}}).regular);
    }
  }

  TEST_CASE("hexagon flip changes the verdict") {
    // 2H = three ears around the triangle {2a, 2b, -2t}, whose inside carries
    // the inner-triangle configuration.
    const Coweight a2 = A * 2, b2 = B * 2, t2 = T * 2;
    const Polytope outer = hull({a2, b2, t2, -a2, -b2, -t2});
    auto build = [&](bool twisted) {
      Subdivision S;
      S.cells = {hull({a2, t2, b2}), hull({b2, -a2, -t2}), hull({-t2, -b2, a2})};
      auto inner = named_subdivision(twisted ? "mother" : "mother-mixed").subdivision.cells;
      S.cells.insert(S.cells.end(), inner.begin(), inner.end());
      return S;
    };
    const auto reg = check_regular_subdivision(outer, build(false));
    const auto non = check_regular_subdivision(outer, build(true));
    CHECK(reg.regular);
    CHECK(lifting_induces(build(false), reg));
    CHECK(!non.regular);
    CHECK(verify_farkas(non.system, non.rhs, non.certificate));
  }

  TEST_CASE("invalid tilings are rejected") {
    const auto H = named_polytope("hexagon");
    CHECK_THROWS_AS(check_regular_subdivision(H, Subdivision{{hull({Z, A, T, B})}}), DomainError);
    // overlapping cells with the right total area
    Subdivision overlap{{hull({Z, A, T, B}), hull({Z, A, T, B}), hull({Z, -T, -B, A})}};
    CHECK_THROWS_AS(check_regular_subdivision(H, overlap), DomainError);
    const Polytope tri = hull({A * 2, B * 2, -T * 2});
    Subdivision split{{hull({A * 2, B * 2, Z}), hull({B * 2, -T * 2, Z}), hull({-T * 2, A * 2, Z})}};
    CHECK_NOTHROW(validate_tiling(tri, split));
    // a vertex in the middle of a neighbour's edge
    const MomentPoint a2(A * 2), b2(B * 2), t2(-T * 2), m(-A);
    const MomentPoint mid = (a2 + m) * make_rational(1, 2);
    Subdivision hanging{{convex_hull(std::vector<MomentPoint>{a2, b2, mid}),
                         convex_hull(std::vector<MomentPoint>{mid, b2, m}),
                         convex_hull(std::vector<MomentPoint>{a2, m, t2})}};
    CHECK_THROWS_AS(validate_tiling(tri, hanging), DomainError);
    // segment subdivisions
    const Polytope seg = hull({Coweight{-2, 2}, Coweight{2, -2}});
    Subdivision halves{{hull({Coweight{-2, 2}, Coweight{0, 0}}), hull({Coweight{0, 0}, Coweight{2, -2}})}};
    CHECK(check_regular_subdivision(seg, halves).regular);
    Subdivision gap{{hull({Coweight{-2, 2}, Coweight{-1, 1}}), hull({Coweight{0, 0}, Coweight{2, -2}})}};
    CHECK_THROWS_AS(validate_tiling(seg, gap), DomainError);
  }
}
