#include "afgr/upper_bound.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "afgr/error.hpp"
#include "afgr/orders.hpp"

namespace afgr {

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Int floor_q(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

bool coroot_parallel(const MomentPoint& d) {
  int nonzero = 0;
  Rational s = 0;
  for (const auto& c : d.coords())
    if (c != 0) {
      ++nonzero;
      s += c;
    }
  return nonzero == 2 && s == 0;
}

struct Instance {
  std::vector<AffineWeylElt> cand;
  std::vector<MomentPoint> phi;
  std::vector<std::vector<char>> pair_ok;
  Int d = 0;
};

Instance prepare(const Polytope& P, Int d) {
  if (d < 0) throw DomainError("component_upper_bound: negative dimension");
  Instance in;
  in.d = d;
  in.cand = upper_bound_candidates(limit_polytope(P), d);
  for (const auto& x : in.cand) in.phi.push_back(moment_image(x));
  const std::size_t m = in.cand.size();
  in.pair_ok.assign(m, std::vector<char>(m, 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && coroot_parallel(in.phi[i] - in.phi[j]))
        in.pair_ok[i][j] = as_reflection(in.cand[i] * in.cand[j].inverse()).has_value();
  return in;
}

// Hull of the chosen points if they are in convex position.
std::optional<Polytope> convex_position_hull(const Instance& in, const std::vector<int>& idx) {
  std::vector<MomentPoint> pts;
  for (int i : idx) pts.push_back(in.phi[i]);
  Polytope Q = convex_hull(pts);
  if (Q.size() != pts.size()) return std::nullopt;
  return Q;
}

bool satisfies_counts(const Instance& in, const Polytope& Q) {
  for (const auto& v : Q.vertices())
    if (reflection_count(Q, v) < in.d) return false;
  return true;
}

struct Branch {
  Int count = 0;
  Int visited = 0;
  bool complete = true;
};

void dfs(const Instance& in, std::vector<int>& chosen, Int cap, Branch& b) {
  if (b.visited >= cap) {
    b.complete = false;
    return;
  }
  ++b.visited;
  const auto Q = convex_position_hull(in, chosen);
  if (!Q) return;  // supersets are not in convex position either
  if (satisfies_counts(in, *Q)) ++b.count;
  const int m = static_cast<int>(in.cand.size());
  for (int j = chosen.back() + 1; j < m && b.complete; ++j) {
    bool ok = true;
    for (int i : chosen) ok = ok && in.pair_ok[i][j];
    if (!ok) continue;
    chosen.push_back(j);
    dfs(in, chosen, cap, b);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<AffineWeylElt> upper_bound_candidates(const Polytope& Pt, Int d) {
  if (Pt.size() == 0) return {};
  const int n = Pt.rank();
  const MomentPoint b0 = alcove_barycenter(n);
  std::vector<std::pair<MomentPoint, AffineWeylElt>> found;
  for (const Perm& w : all_perms(n)) {
    const MomentPoint wb = w.act(b0);
    // lambda = Phi - w.b0 ranges over a box around Pt - w.b0.
    std::vector<Int> lo(n - 1), hi(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
      Rational mn = Pt.vertices().front()[j] - wb[j], mx = mn;
      for (const auto& v : Pt.vertices()) {
        mn = std::min(mn, Rational(v[j] - wb[j]));
        mx = std::max(mx, Rational(v[j] - wb[j]));
      }
      lo[j] = floor_q(mn);
      hi[j] = floor_q(mx) + 1;
    }
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int j, Int partial) -> void {
      if (j == n - 1) {
        cur[n - 1] = -partial;
        AffineWeylElt x(Coweight(cur), w);
        MomentPoint p = moment_image(x);
        if (contains(Pt, p) && reflection_count(Pt, p) >= d) found.emplace_back(p, x);
        return;
      }
      for (Int v = lo[j]; v <= hi[j]; ++v) {
        cur[j] = v;
        self(self, j + 1, partial + v);
      }
    };
    rec(rec, 0, 0);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  std::vector<AffineWeylElt> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

UpperBound component_upper_bound(const Polytope& P, Int d, Int cap) {
  const Instance in = prepare(P, d);
  const int m = static_cast<int>(in.cand.size());
  std::vector<Branch> branches(m);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < m; ++i) {
    std::vector<int> chosen{i};
    dfs(in, chosen, cap, branches[i]);
  }
  UpperBound r;
  r.candidates = m;
  for (const Branch& b : branches) {
    if (!b.complete || r.subsets_visited + b.visited > cap) {
      r.cap_exceeded = true;
      r.subsets_visited = std::min(cap, r.subsets_visited + b.visited);
      break;
    }
    r.count += b.count;
    r.subsets_visited += b.visited;
  }
  return r;
}

UpperBound component_upper_bound_serial(const Polytope& P, Int d, Int cap) {
  const Instance in = prepare(P, d);
  const int m = static_cast<int>(in.cand.size());
  if (m >= 63) throw DomainError("component_upper_bound_serial: too many candidates");
  UpperBound r;
  r.candidates = m;
  const std::uint64_t total = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    if (r.subsets_visited >= cap) {
      r.cap_exceeded = true;
      break;
    }
    ++r.subsets_visited;
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) idx.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < idx.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b) ok = in.pair_ok[idx[a]][idx[b]];
    if (!ok) continue;
    const auto Q = convex_position_hull(in, idx);
    if (Q && satisfies_counts(in, *Q)) ++r.count;
  }
  return r;
}

Int order_disagreements(const std::vector<AffineWeylElt>& el, const Perm& w) {
  const int m = static_cast<int>(el.size());
  Int bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (semiinf_leq_lattice(el[i], el[j], w) != semiinf_leq_cone(el[i], el[j], w)) ++bad;
  return bad;
}

Int order_disagreements_serial(const std::vector<AffineWeylElt>& el, const Perm& w) {
  Int bad = 0;
  for (const auto& x : el)
    for (const auto& y : el)
      if (semiinf_leq_lattice(x, y, w) != semiinf_leq_cone(x, y, w)) ++bad;
  return bad;
}

}  // namespace afgr
