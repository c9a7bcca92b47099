#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "znp/rational.hpp"

namespace znp {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Small exact linear programs: maximize c.x subject to linear (in)equalities.
/// Two-phase simplex over rationals with Bland's rule, so it terminates and
/// the reported optimum is exact.
class LpModel {
 public:
  enum class Relation { le, ge, eq };
  using Terms = std::vector<std::pair<std::size_t, Rational>>;

  /// Returns the variable index. Non-free variables are constrained to >= 0.
  std::size_t add_variable(bool free = false);
  std::size_t variable_count() const { return free_.size(); }

  void add_constraint(Terms terms, Relation relation, Rational rhs);
  void set_objective(Terms terms);

  LpResult maximize() const;
  /// Feasibility only; returns a feasible point when one exists.
  LpResult feasible_point() const;

 private:
  struct Row {
    Terms terms;
    Relation relation;
    Rational rhs;
  };
  std::vector<bool> free_;
  std::vector<Row> rows_;
  Terms objective_;
};

}  // namespace znp
