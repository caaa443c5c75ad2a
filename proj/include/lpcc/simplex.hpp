// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Self-contained two-phase dense tableau simplex with native bounded
// variables. Built for the small, well-scaled LPs this toolkit produces
// (tens of variables), favoring robustness and determinism over speed:
// Dantzig pricing with a Bland's-rule fallback under prolonged degeneracy,
// free variables split internally, every tie broken by lowest index.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpcc/common.hpp"

namespace lpcc {

// min cost.x + cost_constant  s.t.  rows[i].x  (relation_i)  rhs[i],
// lower <= x <= upper (entries may be -inf / +inf).
struct LinearProgram {
  std::vector<double> cost;
  double cost_constant = 0.0;
  std::vector<std::vector<double>> rows;
  std::vector<Relation> relations;
  std::vector<double> rhs;
  std::vector<double> lower, upper;
  std::vector<std::string> names;

  LinearProgram() = default;
  explicit LinearProgram(int n)
      : cost(n, 0.0), lower(n, 0.0), upper(n, kInf), names(n) {
    for (int j = 0; j < n; ++j) names[j] = "v" + std::to_string(j + 1);
  }

  int num_vars() const { return static_cast<int>(cost.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_var(const std::string& name, double lo, double hi, double c = 0.0) {
    if (!rows.empty())
      throw std::logic_error("add_var after add_row would misalign rows");
    cost.push_back(c);
    lower.push_back(lo);
    upper.push_back(hi);
    names.push_back(name);
    return num_vars() - 1;
  }

  void add_row(std::vector<double> coeffs, Relation rel, double b) {
    if (static_cast<int>(coeffs.size()) != num_vars())
      throw std::invalid_argument("row length does not match variable count");
    rows.push_back(std::move(coeffs));
    relations.push_back(rel);
    rhs.push_back(b);
  }
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> x;  // primal vertex, only when Optimal
  double objective = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

namespace detail {

inline constexpr double kDualTol = 1e-9;   // reduced-cost optimality cutoff
inline constexpr double kPivotTol = 1e-9;  // smallest usable pivot magnitude
inline constexpr double kPhase1Tol = 1e-7;  // infeasibility threshold

// Bounded-variable two-phase simplex over an internal column space where
// every column j satisfies 0 <= z_j <= ubound_j. Original variables map to
// columns via value = shift + sign * z (split free variables own two
// columns).
class SimplexEngine {
 public:
  explicit SimplexEngine(const LinearProgram& lp) : lp_(lp) {}

  SolveResult run() {
    SolveResult early;
    if (!build(&early)) return early;
    if (!phase(/*phase1=*/true)) {
      // Phase 1 minimizes a sum of nonnegative artificials; an unbounded
      // ray would contradict that, so only numerical trouble lands here.
      throw std::runtime_error("simplex: phase-1 ray detected");
    }
    if (artificial_load() > kPhase1Tol) {
      SolveResult r;
      r.status = SolveStatus::Infeasible;
      r.iterations = iterations_;
      return r;
    }
    for (int j = 0; j < ncols_; ++j)
      if (columns_[j].artificial) ubound_[j] = 0.0;  // pin at zero
    if (!phase(/*phase1=*/false)) {
      SolveResult r;
      r.status = SolveStatus::Unbounded;
      r.iterations = iterations_;
      return r;
    }
    return extract();
  }

 private:
  enum ColState : unsigned char { kAtLower, kAtUpper, kBasic };

  struct Column {
    int orig = -1;       // original variable, -1 for slack/artificial
    double sign = 1.0;   // original value contribution: sign * z
    bool artificial = false;
  };

  static bool finite(double v) { return std::isfinite(v); }

  // Returns false (filling *early) for malformed or trivially empty input.
  // Throws std::invalid_argument on NaN/inf data per the solver contract.
  bool build(SolveResult* early) {
    const int n = lp_.num_vars();
    const int m = lp_.num_rows();
    if (static_cast<int>(lp_.lower.size()) != n ||
        static_cast<int>(lp_.upper.size()) != n ||
        static_cast<int>(lp_.relations.size()) != m ||
        static_cast<int>(lp_.rhs.size()) != m)
      throw std::invalid_argument("inconsistent LP dimensions");
    for (double c : lp_.cost)
      if (!finite(c)) throw std::invalid_argument("non-finite objective coefficient");
    for (const auto& row : lp_.rows) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("inconsistent LP dimensions");
      for (double a : row)
        if (!finite(a)) throw std::invalid_argument("non-finite row coefficient");
    }
    for (double b : lp_.rhs)
      if (!finite(b)) throw std::invalid_argument("non-finite right-hand side");
    for (int j = 0; j < n; ++j) {
      if (std::isnan(lp_.lower[j]) || std::isnan(lp_.upper[j]))
        throw std::invalid_argument("NaN variable bound");
      if (lp_.lower[j] > lp_.upper[j] || lp_.lower[j] == kInf ||
          lp_.upper[j] == -kInf) {
        early->status = SolveStatus::Infeasible;
        return false;
      }
    }

    // Columns for original variables: shift so lower bound becomes 0.
    base_.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const double lo = lp_.lower[j], hi = lp_.upper[j];
      if (lo > -kInf) {
        base_[j] = lo;
        push_column({j, +1.0, false}, hi - lo);
      } else if (hi < kInf) {
        base_[j] = hi;
        push_column({j, -1.0, false}, kInf);
      } else {
        push_column({j, +1.0, false}, kInf);  // free: z+ - z-
        push_column({j, -1.0, false}, kInf);
      }
    }
    const int nstruct = ncols_;

    // Shifted rows with nonnegative right-hand sides.
    std::vector<double> brow(m);
    std::vector<Relation> rel(m);
    std::vector<double> sgn(m, 1.0);
    for (int i = 0; i < m; ++i) {
      double b = lp_.rhs[i];
      for (int j = 0; j < n; ++j) b -= lp_.rows[i][j] * base_[j];
      rel[i] = lp_.relations[i];
      if (b < 0) {
        sgn[i] = -1.0;
        b = -b;
        if (rel[i] == Relation::LessEq)
          rel[i] = Relation::GreaterEq;
        else if (rel[i] == Relation::GreaterEq)
          rel[i] = Relation::LessEq;
      }
      brow[i] = b;
    }

    // Logical columns, then assemble the dense tableau.
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (int i = 0; i < m; ++i) {
      if (rel[i] == Relation::LessEq) {
        slack_col[i] = push_column({-1, 1.0, false}, kInf);
      } else if (rel[i] == Relation::GreaterEq) {
        slack_col[i] = push_column({-1, 1.0, false}, kInf);  // surplus
        art_col[i] = push_column({-1, 1.0, true}, kInf);
      } else {
        art_col[i] = push_column({-1, 1.0, true}, kInf);
      }
    }
    tab_.assign(m, std::vector<double>(ncols_, 0.0));
    for (int i = 0; i < m; ++i) {
      int k = 0;
      for (int j = 0; j < n; ++j) {
        const double a = sgn[i] * lp_.rows[i][j];
        if (lp_.lower[j] > -kInf) {
          tab_[i][k] = a;
          k += 1;
        } else if (lp_.upper[j] < kInf) {
          tab_[i][k] = -a;
          k += 1;
        } else {
          tab_[i][k] = a;
          tab_[i][k + 1] = -a;
          k += 2;
        }
      }
      if (rel[i] == Relation::LessEq) tab_[i][slack_col[i]] = 1.0;
      if (rel[i] == Relation::GreaterEq) tab_[i][slack_col[i]] = -1.0;
      if (art_col[i] >= 0) tab_[i][art_col[i]] = 1.0;
    }

    cost2_.assign(ncols_, 0.0);
    cost1_.assign(ncols_, 0.0);
    for (int k = 0; k < nstruct; ++k)
      cost2_[k] = columns_[k].sign * lp_.cost[columns_[k].orig];
    for (int k = nstruct; k < ncols_; ++k)
      if (columns_[k].artificial) cost1_[k] = 1.0;

    state_.assign(ncols_, kAtLower);
    basis_.assign(m, -1);
    beta_ = brow;
    for (int i = 0; i < m; ++i) {
      basis_[i] = (rel[i] == Relation::LessEq) ? slack_col[i] : art_col[i];
      state_[basis_[i]] = kBasic;
    }
    return true;
  }

  int push_column(Column c, double ub) {
    columns_.push_back(c);
    ubound_.push_back(ub);
    ncols_ += 1;
    return ncols_ - 1;
  }

  double column_value(int j) const {
    if (state_[j] == kBasic) {
      for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == j) return beta_[i];
    }
    return state_[j] == kAtUpper ? ubound_[j] : 0.0;
  }

  double artificial_load() const {
    double s = 0.0;
    for (int j = 0; j < ncols_; ++j)
      if (columns_[j].artificial) s += column_value(j);
    return s;
  }

  // Pivots until the phase objective is optimal. Returns false on an
  // unbounded descent ray.
  bool phase(bool phase1) {
    const std::vector<double>& c = phase1 ? cost1_ : cost2_;
    const int m = lp_.num_rows();
    const int dantzig_budget = 2 * (m + ncols_);
    int local_iter = 0;
    const int hard_cap = 10000 + 500 * (m + ncols_);

    std::vector<double> cb(m);
    for (;;) {
      if (++local_iter > hard_cap)
        throw std::runtime_error("simplex: iteration limit exceeded");
      const bool bland = local_iter > dantzig_budget;
      for (int i = 0; i < m; ++i) cb[i] = c[basis_[i]];

      // Pricing: most negative improvement direction (Dantzig), or the
      // lowest-index eligible column once Bland's rule is engaged.
      int q = -1;
      double best_score = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        if (state_[j] == kBasic) continue;
        if (ubound_[j] <= 0.0) continue;  // fixed or pinned column
        double r = c[j];
        for (int i = 0; i < m; ++i) r -= cb[i] * tab_[i][j];
        const bool up = state_[j] == kAtLower && r < -kDualTol;
        const bool down = state_[j] == kAtUpper && r > kDualTol;
        if (!up && !down) continue;
        if (bland) {
          q = j;
          break;
        }
        if (std::fabs(r) > best_score) {
          best_score = std::fabs(r);
          q = j;
        }
      }
      if (q < 0) return true;  // phase optimal
      const double s = state_[q] == kAtLower ? 1.0 : -1.0;

      // Ratio test: largest step t >= 0 keeping every basic variable inside
      // its bounds; the entering variable itself is capped by its own span.
      double t_row = kInf;
      int r_row = -1;
      for (int i = 0; i < m; ++i) {
        const double a = s * tab_[i][q];
        double t;
        if (a > kPivotTol) {
          t = beta_[i] / a;
        } else if (a < -kPivotTol && ubound_[basis_[i]] < kInf) {
          t = (ubound_[basis_[i]] - beta_[i]) / (-a);
        } else {
          continue;
        }
        if (t < 0.0) t = 0.0;  // degeneracy guard against tiny drift
        if (r_row < 0) {
          t_row = t;
          r_row = i;
          continue;
        }
        const double tie = 1e-9 * (1.0 + t_row);
        if (t < t_row - tie) {
          t_row = t;
          r_row = i;
        } else if (t <= t_row + tie) {
          const bool better =
              bland ? basis_[i] < basis_[r_row]
                    : std::fabs(tab_[i][q]) > std::fabs(tab_[r_row][q]);
          if (better) r_row = i;
        }
      }
      const double t_flip = ubound_[q];
      if (r_row < 0 && t_flip == kInf) {
        if (phase1) throw std::runtime_error("simplex: phase-1 ray detected");
        return false;  // unbounded
      }
      ++iterations_;
      if (t_flip <= t_row) {
        for (int i = 0; i < m; ++i) beta_[i] -= s * t_flip * tab_[i][q];
        state_[q] = state_[q] == kAtLower ? kAtUpper : kAtLower;
        continue;
      }
      const double t = t_row;
      for (int i = 0; i < m; ++i) beta_[i] -= s * t * tab_[i][q];
      const double enter_val = state_[q] == kAtLower ? t : ubound_[q] - t;
      const int leaving = basis_[r_row];
      state_[leaving] = (s * tab_[r_row][q] > 0) ? kAtLower : kAtUpper;

      const double piv = tab_[r_row][q];
      std::vector<double>& prow = tab_[r_row];
      for (int j = 0; j < ncols_; ++j) prow[j] /= piv;
      prow[q] = 1.0;
      for (int i = 0; i < m; ++i) {
        if (i == r_row) continue;
        const double f = tab_[i][q];
        if (f == 0.0) continue;
        std::vector<double>& row = tab_[i];
        for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
        row[q] = 0.0;
      }
      basis_[r_row] = q;
      state_[q] = kBasic;
      beta_[r_row] = enter_val;
    }
  }

  SolveResult extract() const {
    const int n = lp_.num_vars();
    SolveResult r;
    r.status = SolveStatus::Optimal;
    r.iterations = iterations_;
    r.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j) r.x[j] = base_[j];
    std::vector<double> zval(ncols_, 0.0);
    for (int j = 0; j < ncols_; ++j)
      if (state_[j] == kAtUpper) zval[j] = ubound_[j];
    for (size_t i = 0; i < basis_.size(); ++i) zval[basis_[i]] = beta_[i];
    for (int j = 0; j < ncols_; ++j) {
      const Column& col = columns_[j];
      if (col.orig >= 0) r.x[col.orig] += col.sign * zval[j];
    }
    double obj = lp_.cost_constant;
    for (int j = 0; j < n; ++j) obj += lp_.cost[j] * r.x[j];
    r.objective = obj;

    // Safety net: a returned vertex must satisfy the original rows. A
    // violation here means the pivoting went numerically wrong, which is an
    // internal failure rather than a property of the input.
    for (int i = 0; i < lp_.num_rows(); ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v += lp_.rows[i][j] * r.x[j];
      const double resid_tol = 1e-7 * (1.0 + std::fabs(lp_.rhs[i]));
      const double d = v - lp_.rhs[i];
      const bool ok = lp_.relations[i] == Relation::LessEq ? d <= resid_tol
                      : lp_.relations[i] == Relation::GreaterEq
                          ? d >= -resid_tol
                          : std::fabs(d) <= resid_tol;
      if (!ok) throw std::runtime_error("simplex: residual check failed");
    }
    return r;
  }

  const LinearProgram& lp_;
  std::vector<Column> columns_;
  std::vector<double> ubound_;
  std::vector<double> base_;      // per original variable
  std::vector<std::vector<double>> tab_;
  std::vector<double> beta_;      // values of basic variables, row order
  std::vector<int> basis_;
  std::vector<unsigned char> state_;
  std::vector<double> cost1_, cost2_;
  int ncols_ = 0;
  int iterations_ = 0;
};

}  // namespace detail

inline SolveResult solve_lp(const LinearProgram& lp) {
  return detail::SimplexEngine(lp).run();
}

// Solves lp with the given variables pinned to values. A fixing outside the
// variable's bounds makes the restricted problem empty, reported as
// Infeasible rather than an error.
inline SolveResult solve_lp_with_fixed(
    const LinearProgram& lp, const std::vector<std::pair<int, double>>& fixings) {
  LinearProgram restricted = lp;
  for (const auto& [var, value] : fixings) {
    if (var < 0 || var >= lp.num_vars())
      throw std::invalid_argument("fixing references unknown variable");
    if (value < lp.lower[var] - 1e-9 || value > lp.upper[var] + 1e-9) {
      SolveResult r;
      r.status = SolveStatus::Infeasible;
      return r;
    }
    restricted.lower[var] = value;
    restricted.upper[var] = value;
  }
  return solve_lp(restricted);
}

}  // namespace lpcc
