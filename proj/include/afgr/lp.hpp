#pragma once

// Exact two-phase simplex over the rationals (Bland's rule, dense tableau).

#include <vector>

#include "afgr/weyl.hpp"

namespace afgr {

using RatMatrix = std::vector<std::vector<Rational>>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  /// When infeasible: y with A^T y <= 0 and b^T y > 0.
  std::vector<Rational> farkas;
};

/// minimize c.x subject to A x = b, x >= 0.
LpResult solve_standard_lp(const RatMatrix& A, const std::vector<Rational>& b,
                           const std::vector<Rational>& c);

/// Checks a Farkas certificate for {A x = b, x >= 0} exactly.
bool verify_farkas(const RatMatrix& A, const std::vector<Rational>& b,
                   const std::vector<Rational>& y);

/// Small modelling layer: free or nonnegative variables, <=, =, >= rows.
class LinearProgram {
 public:
  enum class Sense { Le, Eq, Ge };

  int add_variable(bool nonnegative);
  void add_constraint(const std::vector<std::pair<int, Rational>>& terms, Sense sense,
                      const Rational& rhs);
  void set_objective(const std::vector<std::pair<int, Rational>>& terms, bool maximize);

  int num_variables() const { return static_cast<int>(nonneg_.size()); }

  struct Solution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    /// Standard form actually solved, and the certificate for it.
    RatMatrix A;
    std::vector<Rational> b;
    std::vector<Rational> farkas;
  };
  Solution solve() const;

 private:
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    Sense sense;
    Rational rhs;
  };
  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
  std::vector<std::pair<int, Rational>> objective_;
  bool maximize_ = false;
};

}  // namespace afgr
