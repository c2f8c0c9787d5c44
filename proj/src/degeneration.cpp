#include "afgr/degeneration.hpp"

#include <algorithm>
#include <set>

#include "afgr/dims.hpp"
#include "afgr/error.hpp"
#include "afgr/orders.hpp"

namespace afgr {

AffineWeylElt degenerate_fixed_point(const Coweight& beta) {
  return AffineWeylElt::translation(beta);
}

P1Limit degenerate_p1(const Coweight& b1, const Coweight& b2) {
  require_same_rank(b1.rank(), b2.rank(), "degenerate_p1");
  const int n = b1.rank();
  const Coweight diff = b1 - b2;
  std::optional<Root> root;
  Int m = 0;
  for (const Root& a : positive_roots(n)) {
    const Int k = diff[a.i];
    if (k >= 1 && diff == a.coroot(n) * k) {
      root = a;
      m = k;
    }
  }
  if (!root)
    throw DomainError("degenerate_p1: " + b1.str() + " - " + b2.str() +
                      " is not a positive multiple of a positive coroot");
  const Perm s = Perm::transposition(n, root->i, root->j);
  P1Limit out;
  out.fixed_points = {AffineWeylElt(b1, Perm::identity(n)), AffineWeylElt(b1, s),
                      AffineWeylElt(b2, Perm::identity(n))};
  out.edges = {std::make_pair(out.fixed_points[0], out.fixed_points[1]),
               std::make_pair(out.fixed_points[1], out.fixed_points[2])};
  out.edge_roots = {AffineRoot{*root, root->pair(b1)}, AffineRoot{*root, root->pair(b1) - m}};
  return out;
}

AffineRoot degenerate_root_subgroup(const AffineRoot& gamma) {
  if (gamma.root.positive()) return gamma;
  return {gamma.root, gamma.level + 1};
}

std::pair<AffineWeylElt, std::vector<AffineRoot>> degenerate_product_orbit(
    const Coweight& mu, const std::vector<AffineRoot>& gammas) {
  std::set<AffineRoot> seen;
  std::vector<AffineRoot> out;
  for (const auto& g : gammas) {
    if (!seen.insert(g).second) throw DomainError("degenerate_product_orbit: duplicate root");
    out.push_back(degenerate_root_subgroup(g));
  }
  return {AffineWeylElt::translation(mu), out};
}

AffineWeylElt degenerate_semiinfinite(const Perm& w, const Coweight& mu) {
  require_same_rank(w.rank(), mu.rank(), "degenerate_semiinfinite");
  return AffineWeylElt::translation(mu);
}

bool in_semiinfinite_limit(const AffineWeylElt& y, const Perm& w, const Coweight& mu) {
  return semiinf_leq_lattice(y, degenerate_semiinfinite(w, mu), w);
}

AdmissibleSet admissible_set(const Coweight& lambda) {
  require_sl(lambda, "admissible_set");
  if (!lambda.is_dominant()) throw DomainError("admissible_set: " + lambda.str() + " is not dominant");
  std::set<Coweight> orbit;
  std::vector<int> p(lambda.rank());
  for (int i = 0; i < lambda.rank(); ++i) p[i] = i;
  do {
    orbit.insert(Perm(p).act(lambda));
  } while (std::next_permutation(p.begin(), p.end()));
  AdmissibleSet out;
  std::set<AffineWeylElt> all;
  for (const auto& mu : orbit) {
    const auto t = AffineWeylElt::translation(mu);
    out.maximal.push_back(t);
    for (auto& z : bruhat_ideal(t)) all.insert(std::move(z));
  }
  out.elements.assign(all.begin(), all.end());
  auto by_len = [](const AffineWeylElt& a, const AffineWeylElt& b) {
    const Int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  };
  std::sort(out.elements.begin(), out.elements.end(), by_len);
  std::sort(out.maximal.begin(), out.maximal.end(), by_len);
  return out;
}

Polytope iwahori_orbit_polytope(const AffineWeylElt& x) {
  std::vector<MomentPoint> pts;
  for (const auto& z : bruhat_ideal(x)) pts.push_back(moment_image(z));
  return convex_hull(pts);
}

LimitReport go_orbit_limit(const Coweight& lambda) {
  const AdmissibleSet adm = admissible_set(lambda);
  LimitReport r;
  std::vector<MomentPoint> pts;
  for (const auto& z : adm.elements) pts.push_back(moment_image(z));
  r.polytope = convex_hull(pts);
  for (const auto& m : adm.maximal) r.components.push_back({m, iwahori_orbit_polytope(m)});
  r.lower_bound = static_cast<Int>(adm.maximal.size());
  r.upper_bound = UpperBound{r.lower_bound, false, 0, 0};
  return r;
}

Polytope limit_polytope(const Polytope& P) {
  const auto lv = P.lattice_vertices();
  if (!lv) throw DomainError("limit_polytope: vertices must be lattice points");
  std::vector<MomentPoint> pts;
  for (const auto& v : *lv) pts.push_back(moment_image(AffineWeylElt::translation(v)));
  return convex_hull(pts);
}

Int component_lower_bound(const Polytope& P) {
  if (!P.lattice_vertices()) throw DomainError("component_lower_bound: vertices must be lattice points");
  return static_cast<Int>(P.size());
}

namespace {

void require_sl2(const Coweight& c, const char* what) {
  if (c.rank() != 2) throw DomainError(std::string(what) + ": rank 2 only");
  require_sl(c, what);
}

// SL2 fixed points whose moment image lies in [lo, hi] (first coordinate),
// sorted along the line.
std::vector<AffineWeylElt> sl2_chain(const Rational& lo, const Rational& hi) {
  std::vector<std::pair<Rational, AffineWeylElt>> pts;
  const mpz_class a = lo.get_num() / lo.get_den() - 2;
  const mpz_class b = hi.get_num() / hi.get_den() + 2;
  for (Int k = a.get_si(); k <= b.get_si(); ++k)
    for (const Perm& w : {Perm::identity(2), Perm::longest(2)}) {
      AffineWeylElt x(Coweight{k, -k}, w);
      const Rational c = moment_image(x)[0];
      if (c >= lo && c <= hi) pts.emplace_back(c, x);
    }
  std::sort(pts.begin(), pts.end());
  std::vector<AffineWeylElt> out;
  for (auto& p : pts) out.push_back(p.second);
  return out;
}

Polytope hull_of(const std::vector<AffineWeylElt>& xs) {
  std::vector<MomentPoint> pts;
  for (const auto& x : xs) pts.push_back(moment_image(x));
  return convex_hull(pts);
}

}  // namespace

Sl2MvLimit sl2_mv_limit(const Coweight& lambda, const Coweight& mu) {
  require_sl2(lambda, "sl2_mv_limit");
  require_sl2(mu, "sl2_mv_limit");
  if (!lambda.is_dominant()) throw DomainError("sl2_mv_limit: " + lambda.str() + " is not dominant");
  const Coweight top = mu + lambda;
  if (!dominance_leq(Coweight::zero(2), top))
    throw DomainError("sl2_mv_limit: the MV cycle is empty (mu + lambda is not >= 0)");
  Sl2MvLimit out;
  out.d = height(top);
  const auto low = AffineWeylElt::translation(-lambda);
  const auto high = AffineWeylElt::translation(mu);
  // Closure of S_e^{(-lambda,e)} intersected with closure of S_{w0}^{(mu,e)}.
  const auto cand = sl2_chain(moment_image(low)[0], moment_image(high)[0]);
  for (const auto& y : cand)
    if (semiinf_leq_lattice(y, low, Perm::identity(2)) && semiinf_leq_lattice(y, high, Perm::longest(2)))
      out.fixed_points.push_back(y);
  for (Int k = 1; k < out.d; ++k) out.cells_by_dim[k] = 2 * (out.d - k);
  if (out.d >= 1) {
    out.cells_by_dim[out.d] = 2;
    const auto& fp = out.fixed_points;
    const std::vector<AffineWeylElt> first(fp.begin(), fp.end() - 1);
    const std::vector<AffineWeylElt> last(fp.begin() + 1, fp.end());
    out.components.push_back({low, hull_of(first)});
    out.components.push_back({high, hull_of(last)});
  }
  return out;
}

Sl2IwahoriLimit sl2_iwahori_limit(const Coweight& gamma, bool opposite) {
  require_sl2(gamma, "sl2_iwahori_limit");
  if (gamma[0] == 0) throw DomainError("sl2_iwahori_limit: gamma = 0 is a G(O)-orbit; use go_orbit_limit");
  if (!opposite && gamma[0] < 0)
    throw DomainError("sl2_iwahori_limit: standard case needs dominant gamma (anti-dominant is a G(O)-orbit)");
  if (opposite && gamma[0] > 0)
    throw DomainError("sl2_iwahori_limit: opposite case needs anti-dominant gamma (dominant is a G(O)-orbit)");
  Sl2IwahoriLimit out;
  out.d = iwahori_dim_gr(opposite ? -gamma : gamma);
  std::vector<int> word;
  const int a = opposite ? 1 : 0, b = opposite ? 0 : 1;
  for (Int i = 0; i < (out.d - 1) / 2; ++i) {
    word.push_back(a);
    word.push_back(b);
  }
  word.push_back(a);
  const AffineWeylElt iw = from_word(2, word);
  const AffineWeylElt tr = AffineWeylElt::translation(gamma);
  // The limit is a chain of 2d+1 fixed points: the Iwahori ideal plus t_gamma.
  std::vector<std::pair<Rational, AffineWeylElt>> chain;
  for (const auto& z : bruhat_ideal(iw)) chain.emplace_back(moment_image(z)[0], z);
  chain.emplace_back(moment_image(tr)[0], tr);
  std::sort(chain.begin(), chain.end());
  std::vector<AffineWeylElt> rest;
  for (const auto& [c, z] : chain) rest.push_back(z);
  // Drop the end of the chain far from t_gamma.
  if (opposite) rest.pop_back();
  else rest.erase(rest.begin());
  out.components = {Component{tr, hull_of(rest)}, Component{iw, iwahori_orbit_polytope(iw)}};
  return out;
}

}  // namespace afgr
