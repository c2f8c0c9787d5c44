#include "afgr/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "afgr/error.hpp"

namespace afgr {

// ---------------------------------------------------------------- Coweight

Coweight Coweight::coroot(int n, int i, int j) {
  Coweight c = zero(n);
  c[i] += 1;
  c[j] -= 1;
  return c;
}

Int Coweight::sum() const { return std::accumulate(c_.begin(), c_.end(), Int{0}); }

bool Coweight::is_dominant() const {
  return std::is_sorted(c_.begin(), c_.end(), std::greater<>());
}

Coweight Coweight::dominant() const {
  std::vector<Int> v = c_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Coweight(std::move(v));
}

Coweight Coweight::operator+(const Coweight& o) const {
  require_same_rank(rank(), o.rank(), "coweight addition");
  Coweight r = *this;
  for (int i = 0; i < rank(); ++i) r[i] += o[i];
  return r;
}

Coweight Coweight::operator-(const Coweight& o) const { return *this + (-o); }

Coweight Coweight::operator-() const {
  Coweight r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Coweight Coweight::operator*(Int k) const {
  Coweight r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> images) : w_(std::move(images)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 0 || v >= rank() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p = identity(n);
  std::swap(p.w_[i], p.w_[j]);
  return p;
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  require_same_rank(rank(), o.rank(), "permutation product");
  std::vector<int> v(w_.size());
  for (int i = 0; i < rank(); ++i) v[i] = w_[o.w_[i]];
  Perm p;
  p.w_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> v(w_.size());
  for (int i = 0; i < rank(); ++i) v[w_[i]] = i;
  Perm p;
  p.w_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (w_[i] != i) return false;
  return true;
}

Int Perm::length() const {
  Int inv = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Coweight Perm::act(const Coweight& x) const {
  require_same_rank(rank(), x.rank(), "permutation action");
  Coweight r = Coweight::zero(rank());
  for (int i = 0; i < rank(); ++i) r[w_[i]] = x[i];
  return r;
}

MomentPoint Perm::act(const MomentPoint& x) const {
  require_same_rank(rank(), x.rank(), "permutation action");
  std::vector<Rational> r(w_.size());
  for (int i = 0; i < rank(); ++i) r[w_[i]] = x[i];
  return MomentPoint(std::move(r));
}

bool finite_bruhat_leq(const Perm& u, const Perm& v) {
  require_same_rank(u.rank(), v.rank(), "finite Bruhat order");
  const int n = u.rank();
  // u <= v iff for every k the sorted prefix {u(1..k)} is entrywise <= that of v.
  for (int k = 1; k < n; ++k) {
    std::vector<int> a(u.images().begin(), u.images().begin() + k);
    std::vector<int> b(v.images().begin(), v.images().begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- MomentPoint

MomentPoint::MomentPoint(const Coweight& x) {
  c_.reserve(x.rank());
  for (int i = 0; i < x.rank(); ++i) c_.emplace_back(static_cast<long>(x[i]));
}

Rational MomentPoint::sum() const {
  Rational s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

std::optional<Coweight> MomentPoint::as_coweight() const {
  std::vector<Int> v;
  v.reserve(c_.size());
  for (const auto& q : c_) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    v.push_back(q.get_num().get_si());
  }
  return Coweight(std::move(v));
}

MomentPoint MomentPoint::operator+(const MomentPoint& o) const {
  require_same_rank(rank(), o.rank(), "moment point addition");
  MomentPoint r = *this;
  for (int i = 0; i < rank(); ++i) r.c_[i] += o.c_[i];
  return r;
}

MomentPoint MomentPoint::operator-(const MomentPoint& o) const {
  require_same_rank(rank(), o.rank(), "moment point subtraction");
  MomentPoint r = *this;
  for (int i = 0; i < rank(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

MomentPoint MomentPoint::operator*(const Rational& k) const {
  MomentPoint r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

MomentPoint MomentPoint::operator+(const Coweight& o) const { return *this + MomentPoint(o); }

std::string MomentPoint::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- AffineWeylElt

AffineWeylElt::AffineWeylElt(Coweight trans, Perm fin) : trans_(std::move(trans)), fin_(std::move(fin)) {
  require_same_rank(trans_.rank(), fin_.rank(), "affine Weyl element");
}

AffineWeylElt AffineWeylElt::identity(int n) { return {Coweight::zero(n), Perm::identity(n)}; }

AffineWeylElt AffineWeylElt::translation(const Coweight& lambda) {
  return {lambda, Perm::identity(lambda.rank())};
}

AffineWeylElt AffineWeylElt::finite(const Perm& w) { return {Coweight::zero(w.rank()), w}; }

bool AffineWeylElt::is_identity() const {
  return fin_.is_identity() && std::all_of(trans_.coords().begin(), trans_.coords().end(),
                                           [](Int v) { return v == 0; });
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  require_same_rank(rank(), o.rank(), "affine Weyl product");
  return {trans_ + fin_.act(o.trans_), fin_ * o.fin_};
}

AffineWeylElt AffineWeylElt::inverse() const {
  Perm winv = fin_.inverse();
  return {-winv.act(trans_), winv};
}

Coweight AffineWeylElt::act(const Coweight& x) const { return trans_ + fin_.act(x); }

MomentPoint AffineWeylElt::act(const MomentPoint& x) const { return fin_.act(x) + trans_; }

std::string AffineWeylElt::str() const {
  std::ostringstream os;
  os << '(' << trans_.str() << ", [";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << fin_(i) + 1;
  os << "])";
  return os.str();
}

AffineWeylElt compose(const AffineWeylElt& x, const AffineWeylElt& y) { return x * y; }

AffineWeylElt simple_reflection(int n, int i) {
  if (n < 2) throw DomainError("rank must be at least 2");
  if (i < 0 || i >= n) throw DomainError("simple reflection index out of range: " + std::to_string(i));
  if (i == 0) return {Coweight::coroot(n, 0, n - 1), Perm::transposition(n, 0, n - 1)};
  return AffineWeylElt::finite(Perm::transposition(n, i - 1, i));
}

AffineWeylElt from_word(int n, std::span<const int> word) {
  AffineWeylElt x = AffineWeylElt::identity(n);
  for (int i : word) x = x * simple_reflection(n, i);
  return x;
}

AffineWeylElt reflection(int n, const AffineRoot& gamma) {
  const Root& r = gamma.root;
  if (r.i == r.j || r.i < 0 || r.j < 0 || r.i >= n || r.j >= n) throw DomainError("bad root");
  return {r.coroot(n) * gamma.level, Perm::transposition(n, r.i, r.j)};
}

std::optional<AffineRoot> as_reflection(const AffineWeylElt& x) {
  const int n = x.rank();
  std::vector<int> moved;
  for (int i = 0; i < n; ++i)
    if (x.fin()(i) != i) moved.push_back(i);
  if (moved.size() != 2) return std::nullopt;
  Root r{moved[0], moved[1]};
  const Int k = x.trans()[r.i];
  if (x.trans() != r.coroot(n) * k) return std::nullopt;
  return AffineRoot{r, k};
}

std::vector<AffineRoot> inversion_hyperplanes(const AffineWeylElt& x) {
  const int n = x.rank();
  const Perm winv = x.fin().inverse();
  std::vector<AffineRoot> out;
  for (const Root& a : positive_roots(n)) {
    const Int m = a.pair(x.trans());
    const bool stays_positive = winv(a.i) < winv(a.j);
    Int lo, hi;  // levels k with H_{a,k} strictly between the two alcoves
    if (stays_positive) {
      if (m > 0) { lo = 1; hi = m; }
      else { lo = m + 1; hi = 0; }
    } else {
      if (m >= 1) { lo = 1; hi = m - 1; }
      else { lo = m; hi = 0; }
    }
    for (Int k = lo; k <= hi; ++k) out.push_back({a, k});
  }
  return out;
}

Int length(const AffineWeylElt& x) {
  require_sl(x.trans(), "length");
  const Perm winv = x.fin().inverse();
  Int l = 0;
  for (const Root& a : positive_roots(x.rank())) {
    const Int m = a.pair(x.trans());
    l += winv(a.i) < winv(a.j) ? std::abs(m) : std::abs(m - 1);
  }
  return l;
}

std::vector<int> reduced_word(const AffineWeylElt& x) {
  const int n = x.rank();
  std::vector<int> rev;
  AffineWeylElt cur = x;
  Int l = length(cur);
  while (l > 0) {
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      AffineWeylElt next = cur * simple_reflection(n, i);
      const Int nl = length(next);
      if (nl < l) {
        rev.push_back(i);
        cur = std::move(next);
        l = nl;
        found = true;
      }
    }
    if (!found) throw DomainError("no right descent found");  // unreachable for l > 0
  }
  return {rev.rbegin(), rev.rend()};
}

bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y) {
  require_same_rank(x.rank(), y.rank(), "Bruhat order");
  const Int lx = length(x);
  if (lx > length(y)) return false;
  if (x == y) return true;
  const int n = x.rank();
  std::set<AffineWeylElt> seen{y};
  std::vector<AffineWeylElt> stack{y};
  while (!stack.empty()) {
    AffineWeylElt z = std::move(stack.back());
    stack.pop_back();
    for (const AffineRoot& h : inversion_hyperplanes(z)) {
      AffineWeylElt child = reflection(n, h) * z;
      if (child == x) return true;
      if (length(child) <= lx) continue;
      if (seen.insert(child).second) stack.push_back(std::move(child));
    }
  }
  return false;
}

namespace {

void sort_by_length(std::vector<AffineWeylElt>& v) {
  std::vector<std::pair<Int, AffineWeylElt>> keyed;
  keyed.reserve(v.size());
  for (auto& x : v) keyed.emplace_back(length(x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  v.clear();
  for (auto& [l, x] : keyed) v.push_back(std::move(x));
}

}  // namespace

std::vector<AffineWeylElt> bruhat_ideal(const AffineWeylElt& y) {
  require_sl(y.trans(), "Bruhat ideal");
  const int n = y.rank();
  std::set<AffineWeylElt> seen{y};
  std::deque<AffineWeylElt> queue{y};
  while (!queue.empty()) {
    AffineWeylElt z = std::move(queue.front());
    queue.pop_front();
    for (const AffineRoot& h : inversion_hyperplanes(z)) {
      AffineWeylElt child = reflection(n, h) * z;
      if (seen.insert(child).second) queue.push_back(std::move(child));
    }
  }
  std::vector<AffineWeylElt> out(seen.begin(), seen.end());
  sort_by_length(out);
  return out;
}

std::vector<AffineWeylElt> elements_up_to_length(int n, Int max_length) {
  std::set<AffineWeylElt> seen{AffineWeylElt::identity(n)};
  std::vector<AffineWeylElt> layer{AffineWeylElt::identity(n)};
  for (Int l = 0; l < max_length; ++l) {
    std::vector<AffineWeylElt> next;
    for (const auto& x : layer)
      for (int i = 0; i < n; ++i) {
        AffineWeylElt y = x * simple_reflection(n, i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  std::vector<AffineWeylElt> out(seen.begin(), seen.end());
  sort_by_length(out);
  return out;
}

MomentPoint alcove_barycenter(int n) {
  // omega_i^vee = e_1 + ... + e_i - (i/n)(1,...,1)
  std::vector<Rational> b(n, Rational(0));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) b[j] += (j < i ? Rational(1) : Rational(0)) - make_rational(i, n);
  for (auto& v : b) v /= n;
  return MomentPoint(std::move(b));
}

MomentPoint moment_image(const AffineWeylElt& x) {
  require_sl(x.trans(), "moment image");
  return x.act(alcove_barycenter(x.rank()));
}

void require_sl(const Coweight& x, const char* what) {
  if (!x.is_sl())
    throw DomainError(std::string(what) + ": coweight " + x.str() + " is not in the SL coroot lattice");
}

void require_same_rank(int a, int b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
}

}  // namespace afgr
