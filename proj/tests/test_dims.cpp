#include <doctest.h>

#include <numeric>

#include "afgr/dims.hpp"
#include "afgr/error.hpp"
#include "afgr/orders.hpp"

using namespace afgr;

namespace {

const Coweight A2{1, -1};
const Coweight A{1, -1, 0}, B{0, 1, -1}, T{1, 0, -1};

std::vector<Perm> perms(int n) {
  std::vector<Perm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// SL_n coweights with every coordinate in [-b, b].
std::vector<Coweight> box(int n, Int b) {
  std::vector<Coweight> out;
  std::vector<Int> c(n - 1, -b);
  while (true) {
    Int s = 0;
    for (Int x : c) s += x;
    if (-b <= -s && -s <= b) {
      std::vector<Int> full(c);
      full.push_back(-s);
      out.emplace_back(full);
    }
    int i = 0;
    while (i < n - 1 && c[i] == b) c[i++] = -b;
    if (i == n - 1) break;
    ++c[i];
  }
  return out;
}

std::vector<Coweight> small_lambdas(int n) {
  std::vector<Coweight> out;
  for (const auto& l : box(n, 3))
    if (height(l.dominant()) <= 3) out.push_back(l);
  return out;
}

Int pos_roots(int n) { return static_cast<Int>(positive_roots(n).size()); }

}  // namespace

TEST_SUITE("dims") {
  TEST_CASE("heights") {
    CHECK(height(Coweight{0, 0}) == 0);
    CHECK(height(A2 * 2) == 2);
    CHECK(height(T) == 2);
    CHECK(height(-A) == -1);
    CHECK_THROWS_AS(height(Coweight{1, 0, 0}), DomainError);
  }

  TEST_CASE("Iwahori orbit dimensions") {
    CHECK(iwahori_dim_gr(-A2) == 2);
    CHECK(iwahori_dim_gr(A2) == 1);
    CHECK(iwahori_dim_gr(T) == 1);
    CHECK(iwahori_dim_fl(AffineWeylElt::identity(2)) == 0);
    CHECK(iwahori_dim_fl(from_word(2, std::vector<int>{0, 1, 0})) == 3);
    CHECK(iwahori_dim_fl(AffineWeylElt::translation(A2 * 2)) == 4);
    CHECK(partial_flag_dim(T) == 3);
    CHECK(partial_flag_dim(Coweight{1, 1, -2}) == 2);
    CHECK(minimal_coset_rep(Coweight{-1, 0, 1}) == Perm::longest(3));
    CHECK(minimal_coset_rep(Coweight{1, 1, -2}).is_identity());
  }

  TEST_CASE("Iwahori orbit in Gr: minimal length in the coset t_lambda W") {
    for (int n : {2, 3})
      for (const auto& l : small_lambdas(n)) {
        Int best = -1;
        for (const auto& w : perms(n)) {
          const Int len = length(AffineWeylElt(l, w));
          if (best < 0 || len < best) best = len;
        }
        CHECK(iwahori_dim_gr(l) == best);
        const Perm w = minimal_coset_rep(l);
        CHECK(w.act(l.dominant()) == l);
      }
  }

  TEST_CASE("Gr intersections") {
    const auto a = gr_intersection_dim(-A2, A2);
    REQUIRE(!a.empty());
    CHECK(*a.value == 2);
    CHECK(a.equidimensional);
    CHECK(gr_intersection_dim(A2, Coweight{0, 0}).empty());
    const auto b = gr_intersection_dim(-T, Coweight{0, 0, 0});
    REQUIRE(!b.empty());
    CHECK(*b.value == 2);
  }

  TEST_CASE("density and monotone stepping") {
    for (int n : {2, 3})
      for (const auto& l : small_lambdas(n)) {
        const Coweight dom = l.dominant();
        const auto top = gr_intersection_dim(l, dom);
        REQUIRE(!top.empty());
        CHECK(*top.value == iwahori_dim_gr(l));
        const auto bottom = gr_intersection_dim(l, l);
        REQUIRE(!bottom.empty());
        CHECK(*bottom.value >= 0);

        std::vector<Coweight> between;
        for (const auto& m : box(n, 3))
          if (dominance_leq(l, m) && dominance_leq(m, dom)) between.push_back(m);
        for (const auto& m1 : between)
          for (const auto& m2 : between)
            if (dominance_leq(m2, m1) && height(m2) == height(m1) - 1)
              CHECK(*gr_intersection_dim(l, m2).value == *gr_intersection_dim(l, m1).value - 1);
        for (const auto& m : box(n, 3))
          if (!(dominance_leq(l, m) && dominance_leq(m, dom))) CHECK(gr_intersection_dim(l, m).empty());
      }
  }

  TEST_CASE("affine flag bounds") {
    const auto s1 = Perm::transposition(2, 0, 1);
    const auto r = fl_intersection_bound(AffineWeylElt(A2, s1), AffineWeylElt(A2, s1));
    REQUIRE(!r.empty());
    CHECK(*r.value == 1);
    CHECK(!r.equidimensional);
    CHECK(fl_intersection_bound(AffineWeylElt(-T, Perm::identity(3)), AffineWeylElt(Coweight{0, 0, 0}, Perm::longest(3)))
              .empty());
    CHECK(fl_intersection_bound(AffineWeylElt(A2, s1), AffineWeylElt(Coweight{0, 0}, s1)).empty());

    for (const auto& l : small_lambdas(3))
      for (const auto& m : box(3, 2)) {
        const auto gr = gr_intersection_dim(l, m);
        for (const auto& w1 : perms(3))
          for (const auto& w2 : perms(3)) {
            const auto fl = fl_intersection_bound(AffineWeylElt(l, w1), AffineWeylElt(m, w2));
            if (gr.empty()) {
              CHECK(fl.empty());
              continue;
            }
            if (w1 != w2 && finite_bruhat_leq(w1, w2)) CHECK(fl.empty());
            if (!fl.empty()) CHECK(*fl.value <= *gr.value + pos_roots(3));
          }
      }
  }
}
