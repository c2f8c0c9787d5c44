#include <doctest.h>

#include <random>

#include "afgr/lp.hpp"

using namespace afgr;

namespace {
Rational q(Int a, Int b = 1) { return make_rational(a, b); }
using S = LinearProgram::Sense;
}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("textbook optimum") {
    LinearProgram lp;
    const int x = lp.add_variable(true), y = lp.add_variable(true);
    lp.add_constraint({{x, q(1)}, {y, q(2)}}, S::Le, q(4));
    lp.add_constraint({{x, q(3)}, {y, q(1)}}, S::Le, q(6));
    lp.set_objective({{x, q(1)}, {y, q(1)}}, true);
    const auto s = lp.solve();
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == q(14, 5));
    CHECK(s.x[x] == q(8, 5));
    CHECK(s.x[y] == q(6, 5));
  }

  TEST_CASE("infeasible systems carry a valid certificate") {
    LinearProgram lp;
    const int x = lp.add_variable(true), y = lp.add_variable(true);
    lp.add_constraint({{x, q(1)}, {y, q(1)}}, S::Eq, q(-1));
    const auto s = lp.solve();
    REQUIRE(s.status == LpStatus::Infeasible);
    CHECK(verify_farkas(s.A, s.b, s.farkas));

    LinearProgram lp2;
    const int u = lp2.add_variable(false);
    lp2.add_constraint({{u, q(1)}}, S::Ge, q(2));
    lp2.add_constraint({{u, q(1)}}, S::Le, q(1));
    const auto s2 = lp2.solve();
    REQUIRE(s2.status == LpStatus::Infeasible);
    CHECK(verify_farkas(s2.A, s2.b, s2.farkas));
    CHECK(!verify_farkas(s2.A, s2.b, std::vector<Rational>(s2.b.size())));
  }

  TEST_CASE("unbounded and redundant rows") {
    LinearProgram lp;
    const int x = lp.add_variable(true), y = lp.add_variable(true);
    lp.add_constraint({{x, q(1)}, {y, q(-1)}}, S::Le, q(1));
    lp.set_objective({{x, q(1)}}, true);
    CHECK(lp.solve().status == LpStatus::Unbounded);

    LinearProgram r;
    const int a = r.add_variable(true), b = r.add_variable(true);
    r.add_constraint({{a, q(1)}, {b, q(1)}}, S::Eq, q(1));
    r.add_constraint({{a, q(2)}, {b, q(2)}}, S::Eq, q(2));
    r.set_objective({{a, q(1)}}, false);
    const auto s = r.solve();
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == 0);
  }

  TEST_CASE("random planar LPs against vertex enumeration") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> co(-5, 5), rh(0, 10);
    for (int trial = 0; trial < 60; ++trial) {
      // rows a x + b y <= c, plus the box 0 <= x, y <= 10
      std::vector<std::array<Rational, 3>> rows;
      for (int i = 0; i < 4; ++i) rows.push_back({q(co(rng)), q(co(rng)), q(rh(rng))});
      rows.push_back({q(1), q(0), q(10)});
      rows.push_back({q(0), q(1), q(10)});
      rows.push_back({q(-1), q(0), q(0)});
      rows.push_back({q(0), q(-1), q(0)});
      const Rational cx = q(co(rng)), cy = q(co(rng));

      std::optional<Rational> best;
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          const auto& r1 = rows[i];
          const auto& r2 = rows[j];
          const Rational det = r1[0] * r2[1] - r1[1] * r2[0];
          if (det == 0) continue;
          const Rational px = (r1[2] * r2[1] - r1[1] * r2[2]) / det;
          const Rational py = (r1[0] * r2[2] - r1[2] * r2[0]) / det;
          bool ok = true;
          for (const auto& r : rows) ok = ok && r[0] * px + r[1] * py <= r[2];
          if (ok) {
            const Rational v = cx * px + cy * py;
            if (!best || v > *best) best = v;
          }
        }

      LinearProgram lp;
      const int x = lp.add_variable(false), y = lp.add_variable(false);
      for (const auto& r : rows) lp.add_constraint({{x, r[0]}, {y, r[1]}}, S::Le, r[2]);
      lp.set_objective({{x, cx}, {y, cy}}, true);
      const auto s = lp.solve();
      if (best) {
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == *best);
      } else {
        REQUIRE(s.status == LpStatus::Infeasible);
        CHECK(verify_farkas(s.A, s.b, s.farkas));
      }
    }
  }
}
