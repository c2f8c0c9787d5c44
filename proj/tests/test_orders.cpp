#include <doctest.h>

#include "afgr/error.hpp"
#include "afgr/orders.hpp"

using namespace afgr;

namespace {

std::vector<AffineWeylElt> sl2_box(Int bound) {
  std::vector<AffineWeylElt> out;
  for (Int k = -bound; k <= bound; ++k)
    for (const Perm& w : {Perm::identity(2), Perm::longest(2)}) out.emplace_back(Coweight{k, -k}, w);
  return out;
}

std::vector<Perm> perms3() {
  std::vector<Perm> out;
  std::vector<int> p{0, 1, 2};
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_SUITE("orders") {
  TEST_CASE("dominance") {
    CHECK(dominance_leq({1, 0, -1}, {1, 0, -1}));
    CHECK(dominance_leq({-1, 1}, {1, -1}));
    CHECK(!dominance_leq({1, -1, 0}, {0, 1, -1}));
    CHECK(!dominance_leq({0, 1, -1}, {1, -1, 0}));
    CHECK_THROWS_AS(dominance_leq({1, -1}, {1, 0, -1}), DomainError);
  }

  TEST_CASE("flags") {
    const auto e = flag_of(AffineWeylElt::identity(2));
    CHECK(e.etas == std::vector<Coweight>{{0, 0}, {1, 0}});
    const auto s0 = flag_of(from_word(2, std::vector<int>{0}));
    CHECK(s0.etas == std::vector<Coweight>{{1, -1}, {1, 0}});
    // eta_{n-1} + e_{w(n)} = eta_0 + (1,...,1)
    for (const auto& x : elements_up_to_length(3, 4)) {
      const auto f = flag_of(x);
      Coweight last = f.etas.back();
      last[x.fin()(2)] += 1;
      CHECK(last == f.etas.front() + Coweight{1, 1, 1});
      for (std::size_t i = 1; i < f.etas.size(); ++i) {
        const Coweight step = f.etas[i] - f.etas[i - 1];
        CHECK(step.sum() == 1);
      }
    }
  }

  TEST_CASE("SL2 semi-infinite chain") {
    const std::vector<std::vector<int>> chain{{1, 0, 1}, {1, 0}, {1}, {}, {0}, {0, 1}};
    const Perm w0 = Perm::longest(2);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const auto x = from_word(2, chain[i]), y = from_word(2, chain[i + 1]);
      CHECK(semiinf_leq_lattice(x, y, w0));
      CHECK(semiinf_leq_cone(x, y, w0));
      CHECK(!semiinf_leq_lattice(y, x, w0));
      CHECK(!semiinf_leq_cone(y, x, w0));
    }
    CHECK(semiinf_leq_lattice(AffineWeylElt::translation({-1, 0, 1}), AffineWeylElt::identity(3),
                              Perm::longest(3)));
    const AffineWeylElt a = AffineWeylElt::translation({-1, 1, 0});
    const AffineWeylElt b(Coweight{0, 1, -1}, Perm::transposition(3, 0, 1));
    CHECK(semiinf_leq_lattice(a, b, Perm::longest(3)) == semiinf_leq_cone(a, b, Perm::longest(3)));
  }

  TEST_CASE("lattice and cone forms agree") {
    const auto sl2 = sl2_box(3);
    for (const Perm& w : {Perm::identity(2), Perm::longest(2)})
      for (const auto& x : sl2)
        for (const auto& y : sl2) CHECK(semiinf_leq_lattice(x, y, w) == semiinf_leq_cone(x, y, w));
    const auto sl3 = elements_up_to_length(3, 5);
    for (const Perm& w : perms3()) {
      int bad = 0;
      for (const auto& x : sl3)
        for (const auto& y : sl3) bad += semiinf_leq_lattice(x, y, w) != semiinf_leq_cone(x, y, w);
      CHECK(bad == 0);
    }
  }

  TEST_CASE("partial order axioms") {
    const auto el = elements_up_to_length(3, 3);
    for (const Perm& w : perms3())
      for (const auto& x : el) {
        CHECK(semiinf_leq_lattice(x, x, w));
        for (const auto& y : el) {
          if (x != y && semiinf_leq_lattice(x, y, w)) CHECK(!semiinf_leq_lattice(y, x, w));
          for (const auto& z : el)
            if (semiinf_leq_lattice(x, y, w) && semiinf_leq_lattice(y, z, w))
              CHECK(semiinf_leq_lattice(x, z, w));
        }
      }
  }

  TEST_CASE("translation monotonicity") {
    for (Int a = -2; a <= 2; ++a)
      for (Int b = -2; b <= 2; ++b)
        for (Int c = -2; c <= 2; ++c)
          for (Int d = -2; d <= 2; ++d) {
            const Coweight l{a, b, -a - b}, m{c, d, -c - d};
            CHECK(semiinf_leq_lattice(AffineWeylElt::translation(l), AffineWeylElt::translation(m),
                                      Perm::longest(3)) == dominance_leq(l, m));
          }
  }
}
