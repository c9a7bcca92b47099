#include "znp/lp.hpp"

#include <optional>
#include <stdexcept>

namespace znp {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Tableau over columns [structural | slack | artificial]. Row i reads
/// sum_j t[i][j] x_j = rhs[i] with basis[i] basic.
class Tableau {
 public:
  Tableau(const Matrix& a, const std::vector<Rational>& b) : m_(b.size()), n_(a.empty() ? 0 : a[0].size()) {
    cols_ = n_ + m_ + 1;
    artificial_ = n_ + m_;
    t_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
    rhs_ = b;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][artificial_] = -1;
      basis_[i] = n_ + i;
    }
    active_.assign(cols_, true);
  }

  LpResult solve(const std::vector<Rational>& c) {
    LpResult result;
    if (!phase_one()) {
      result.status = LpStatus::infeasible;
      return result;
    }
    std::vector<Rational> cost(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
    set_objective(cost);
    if (!run()) {
      result.status = LpStatus::unbounded;
      return result;
    }
    result.status = LpStatus::optimal;
    result.value = -obj_rhs_;
    result.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) result.x[basis_[i]] = rhs_[i];
    }
    return result;
  }

 private:
  bool phase_one() {
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs_[i] < 0 && (!worst || rhs_[i] < rhs_[*worst])) worst = i;
    }
    active_[artificial_] = false;
    if (!worst) return true;
    active_[artificial_] = true;
    std::vector<Rational> cost(cols_, Rational(0));
    cost[artificial_] = -1;
    set_objective(cost);
    pivot(*worst, artificial_);
    run();
    if (-obj_rhs_ < 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != artificial_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != artificial_ && t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row whose only nonzero is the artificial column is redundant;
      // leaving it basic at level zero is harmless once the column is off.
    }
    active_[artificial_] = false;
    return true;
  }

  void set_objective(const std::vector<Rational>& cost) {
    obj_ = cost;
    obj_rhs_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) obj_[j] -= cb * t_[i][j];
      obj_rhs_ -= cb * rhs_[i];
    }
  }

  // Bland's rule; returns false when unbounded.
  bool run() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (active_[j] && obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    const Rational inv = Rational(1) / t_[r][s];
    for (auto& v : t_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][s] == 0) continue;
      const Rational f = t_[i][s];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (obj_.size() == cols_ && obj_[s] != 0) {
      const Rational f = obj_[s];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (t_[r][j] != 0) obj_[j] -= f * t_[r][j];
      }
      obj_rhs_ -= f * rhs_[r];
    }
    basis_[r] = s;
  }

  std::size_t m_, n_, cols_ = 0, artificial_ = 0;
  Matrix t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::vector<Rational> obj_;
  Rational obj_rhs_;
};

}  // namespace

std::size_t LpModel::add_variable(bool free) {
  free_.push_back(free);
  return free_.size() - 1;
}

void LpModel::add_constraint(Terms terms, Relation relation, Rational rhs) {
  for (const auto& [var, coef] : terms) {
    if (var >= free_.size()) throw std::out_of_range("LP constraint references an unknown variable");
  }
  rows_.push_back({std::move(terms), relation, std::move(rhs)});
}

void LpModel::set_objective(Terms terms) { objective_ = std::move(terms); }

LpResult LpModel::maximize() const {
  // Column layout: each variable j gets column col[j]; free variables also
  // get a negative part at neg[j].
  std::vector<std::size_t> col(free_.size()), neg(free_.size(), 0);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < free_.size(); ++j) {
    col[j] = cols++;
    if (free_[j]) neg[j] = cols++;
  }
  Matrix a;
  std::vector<Rational> b;
  auto emit = [&](const Terms& terms, const Rational& rhs, const Rational& sign) {
    std::vector<Rational> row(cols, Rational(0));
    for (const auto& [var, coef] : terms) {
      row[col[var]] += sign * coef;
      if (free_[var]) row[neg[var]] -= sign * coef;
    }
    a.push_back(std::move(row));
    b.push_back(sign * rhs);
  };
  for (const auto& row : rows_) {
    if (row.relation != Relation::ge) emit(row.terms, row.rhs, Rational(1));
    if (row.relation != Relation::le) emit(row.terms, row.rhs, Rational(-1));
  }
  std::vector<Rational> c(cols, Rational(0));
  for (const auto& [var, coef] : objective_) {
    c[col[var]] += coef;
    if (free_[var]) c[neg[var]] -= coef;
  }
  if (a.empty()) {
    // No constraints: bounded only if the objective cannot increase.
    LpResult r;
    for (const auto& v : c) {
      if (v > 0) {
        r.status = LpStatus::unbounded;
        return r;
      }
    }
    r.status = LpStatus::optimal;
    r.value = 0;
    r.x.assign(free_.size(), Rational(0));
    return r;
  }
  Tableau tab(a, b);
  LpResult raw = tab.solve(c);
  LpResult out;
  out.status = raw.status;
  out.value = raw.value;
  if (raw.status == LpStatus::optimal) {
    out.x.resize(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) {
      out.x[j] = raw.x[col[j]];
      if (free_[j]) out.x[j] -= raw.x[neg[j]];
    }
  }
  return out;
}

LpResult LpModel::feasible_point() const {
  LpModel copy = *this;
  copy.objective_.clear();
  return copy.maximize();
}

}  // namespace znp
