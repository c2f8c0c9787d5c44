#pragma once

// Root data of type A_{n-1} and the affine Weyl group X_*(T) x| S_n.
//
// Conventions (fixed once, used everywhere):
//   * coweights live in GL_n coordinates; SL_n coweights have coordinate sum 0
//   * a permutation w acts on coweights by w.e_i = e_{w(i)}
//   * (lambda, w) acts on the coweight space by x -> lambda + w.x
//   * s_i (1 <= i < n) swaps coordinates i, i+1;  s_0 = t_{theta} s_theta with
//     theta = e_1 - e_n, so that (s_0 s_1)^2 = t_{2 alpha} in rank 2
//   * fundamental alcove: 0 < <x, alpha_i>,  <x, theta> < 1
//
// Indices are 0-based internally (coordinate 0 is e_1); the JSON/CLI layer
// converts to 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace afgr {

using Int = std::int64_t;
using Rational = mpq_class;

/// num/den in canonical form.
inline Rational make_rational(Int num, Int den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<Int> coords) : c_(std::move(coords)) {}
  Coweight(std::initializer_list<Int> coords) : c_(coords) {}

  static Coweight zero(int n) { return Coweight(std::vector<Int>(n, 0)); }
  /// e_i - e_j
  static Coweight coroot(int n, int i, int j);

  int rank() const { return static_cast<int>(c_.size()); }
  Int operator[](int i) const { return c_[i]; }
  Int& operator[](int i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }
  Int sum() const;
  bool is_sl() const { return sum() == 0; }
  bool is_dominant() const;
  Coweight dominant() const;

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator-() const;
  Coweight operator*(Int k) const;

  auto operator<=>(const Coweight&) const = default;
  bool operator==(const Coweight&) const = default;

  std::string str() const;

 private:
  std::vector<Int> c_;
};

/// The root e_i - e_j (i != j). Positive iff i < j.
struct Root {
  int i = 0;
  int j = 1;

  bool positive() const { return i < j; }
  Root negated() const { return {j, i}; }
  Coweight coroot(int n) const { return Coweight::coroot(n, i, j); }
  /// <x, e_i - e_j>
  Int pair(const Coweight& x) const { return x[i] - x[j]; }

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

/// alpha_0 + k*delta; delta is kept symbolic.
struct AffineRoot {
  Root root;
  Int level = 0;

  bool positive() const { return level > 0 || (level == 0 && root.positive()); }

  auto operator<=>(const AffineRoot&) const = default;
  bool operator==(const AffineRoot&) const = default;
};

/// All roots e_i - e_j with i < j, in lexicographic order.
std::vector<Root> positive_roots(int n);

class MomentPoint;

class Perm {
 public:
  Perm() = default;
  /// images[i] = w(i), 0-based; throws DomainError unless bijective.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm transposition(int n, int i, int j);
  static Perm longest(int n);

  int rank() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i]; }
  const std::vector<int>& images() const { return w_; }

  Perm operator*(const Perm& o) const;  // (this * o)(i) = this(o(i))
  Perm inverse() const;
  bool is_identity() const;
  Int length() const;  // inversion count
  Coweight act(const Coweight& x) const;
  MomentPoint act(const MomentPoint& x) const;
  /// w.(e_i - e_j) = e_{w(i)} - e_{w(j)}
  Root act(const Root& r) const { return {w_[r.i], w_[r.j]}; }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> w_;
};

/// Strong Bruhat order on S_n (tableau criterion).
bool finite_bruhat_leq(const Perm& u, const Perm& v);

/// A point of t*_R in GL_n coordinates with exact rational entries.
class MomentPoint {
 public:
  MomentPoint() = default;
  explicit MomentPoint(std::vector<Rational> coords) : c_(std::move(coords)) {}
  explicit MomentPoint(const Coweight& x);

  int rank() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }
  Rational sum() const;
  /// Integral coordinates, if any.
  std::optional<Coweight> as_coweight() const;
  /// <x, e_i - e_j>
  Rational pair(const Root& r) const { return c_[r.i] - c_[r.j]; }

  MomentPoint operator+(const MomentPoint& o) const;
  MomentPoint operator-(const MomentPoint& o) const;
  MomentPoint operator*(const Rational& k) const;
  MomentPoint operator+(const Coweight& o) const;

  bool operator==(const MomentPoint& o) const { return c_ == o.c_; }
  bool operator<(const MomentPoint& o) const { return c_ < o.c_; }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// The pair (trans, fin) = t_trans * fin.
class AffineWeylElt {
 public:
  AffineWeylElt() = default;
  AffineWeylElt(Coweight trans, Perm fin);

  static AffineWeylElt identity(int n);
  static AffineWeylElt translation(const Coweight& lambda);
  static AffineWeylElt finite(const Perm& w);

  int rank() const { return trans_.rank(); }
  const Coweight& trans() const { return trans_; }
  const Perm& fin() const { return fin_; }
  bool is_identity() const;

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  Coweight act(const Coweight& x) const;
  MomentPoint act(const MomentPoint& x) const;

  auto operator<=>(const AffineWeylElt&) const = default;
  bool operator==(const AffineWeylElt&) const = default;

  std::string str() const;

 private:
  Coweight trans_;
  Perm fin_;
};

/// Group law; throws DomainError on rank mismatch.
AffineWeylElt compose(const AffineWeylElt& x, const AffineWeylElt& y);

/// Simple generator s_i, 0 <= i < n.
AffineWeylElt simple_reflection(int n, int i);
AffineWeylElt from_word(int n, std::span<const int> word);

/// t_{k alpha^vee} s_alpha: x -> x - (<x, alpha> - k) alpha^vee.
AffineWeylElt reflection(int n, const AffineRoot& gamma);

/// If x is an affine reflection, the affine root (positive ordinary part) it
/// reflects in.
std::optional<AffineRoot> as_reflection(const AffineWeylElt& x);

/// Hyperplanes H_{alpha,k} (alpha > 0) separating the fundamental alcove from
/// x.A_0; their number is the length of x.
std::vector<AffineRoot> inversion_hyperplanes(const AffineWeylElt& x);

/// Iwahori-Matsumoto length. Requires SL mode.
Int length(const AffineWeylElt& x);

/// A reduced word, with from_word(reduced_word(x)) == x.
std::vector<int> reduced_word(const AffineWeylElt& x);

/// Strong Bruhat order via downward reflection-cover search.
bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y);

/// The Bruhat lower ideal {z : z <= y}, sorted by (length, value).
std::vector<AffineWeylElt> bruhat_ideal(const AffineWeylElt& y);

/// All elements of length <= max_length, sorted by (length, value).
std::vector<AffineWeylElt> elements_up_to_length(int n, Int max_length);

/// Barycenter of the fundamental alcove, (1/n) sum_i omega_i^vee.
MomentPoint alcove_barycenter(int n);

/// lambda + w.b_0
MomentPoint moment_image(const AffineWeylElt& x);

void require_sl(const Coweight& x, const char* what);
void require_same_rank(int a, int b, const char* what);

}  // namespace afgr
