// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Penalty scalarizations. The complementarity requirement is dropped and the
// objective is charged for it instead, giving a plain LP over Gamma:
//
//   min  f(x, y) + sum_i L_i (y_i + g_i(x, y)) / 2,   L_i >= 0.
//
// Two interchangeable shapes are provided: a compact one over (x, y) and an
// expanded one over (x, y, u, v+, v-) whose bookkeeping rows force, at any
// feasible point, u_i = (y_i + g_i)/2, v+_i = y_i / 2 and v-_i = g_i / 2.
// The expanded shape makes near-complementarity directly observable as
// min(v+_i, v-_i) ~ 0 per pair (an SOS1-style condition on the halves).

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpcc/common.hpp"
#include "lpcc/model.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

// One penalty weight per complementarity pair. Weight 0 simply drops the
// pair from the objective (useful as the "ignore complementarity" baseline).
struct PenaltyScalarization {
  std::vector<double> weights;

  static PenaltyScalarization uniform(int n_y, double L) {
    PenaltyScalarization s;
    s.weights.assign(static_cast<size_t>(std::max(n_y, 0)), L);
    return s;
  }
};

namespace detail {

inline void validate_weights(const MpecProblem& p,
                             const PenaltyScalarization& s) {
  if (static_cast<int>(s.weights.size()) != p.n_y)
    throw std::invalid_argument("penalty weights: need one entry per pair");
  for (double w : s.weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument(
          "penalty weights must be finite and nonnegative");
  }
}

// Coefficients of an (x, y) expression laid out over the stacked LP variable
// order: x first, then y.
inline std::vector<double> stacked_coeffs(const MpecProblem& p,
                                          const AffineExpr& e) {
  std::vector<double> c(static_cast<size_t>(p.n_x + p.n_y), 0.0);
  for (int j = 0; j < p.n_x; ++j) c[j] = e.coeffs_x[j];
  for (int i = 0; i < p.n_y; ++i) c[p.n_x + i] = e.coeffs_y[i];
  return c;
}

inline void add_scaled(AffineExpr* dst, const AffineExpr& src, double w) {
  for (size_t j = 0; j < dst->coeffs_x.size(); ++j)
    dst->coeffs_x[j] += w * src.coeffs_x[j];
  for (size_t i = 0; i < dst->coeffs_y.size(); ++i)
    dst->coeffs_y[i] += w * src.coeffs_y[i];
  dst->constant += w * src.constant;
}

}  // namespace detail

// sum_i w_i (y_i + g_i(x, y)) / 2 as an affine expression over (x, y).
inline AffineExpr weighted_halfsum(const MpecProblem& p,
                                   const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != p.n_y)
    throw std::invalid_argument("weighted_halfsum: need one weight per pair");
  AffineExpr e(p.n_x, p.n_y);
  for (int i = 0; i < p.n_y; ++i) {
    e.coeffs_y[i] += w[i] / 2.0;
    detail::add_scaled(&e, p.g[i], w[i] / 2.0);
  }
  return e;
}

// f_pen as an affine expression (all weights 1).
inline AffineExpr fpen_expression(const MpecProblem& p) {
  return weighted_halfsum(p, std::vector<double>(p.n_y, 1.0));
}

// LP over Gamma with a zero objective. Variable order: x first, then y, with
// the problem's bounds. Rows: Omega rows first, then one g_i >= 0 row per
// pair, so pair i's surplus row sits at index omega.size() + i.
inline LinearProgram build_gamma_lp(const MpecProblem& p) {
  p.validate();
  LinearProgram lp(0);
  for (int j = 0; j < p.n_x; ++j)
    lp.add_var(p.x_names[j], p.x_lower[j], p.x_upper[j]);
  for (int i = 0; i < p.n_y; ++i)
    lp.add_var(p.y_names[i], p.y_lower[i], p.y_upper[i]);
  for (const LinearConstraint& c : p.omega)
    lp.add_row(detail::stacked_coeffs(p, c.expr), c.relation,
               -c.expr.constant);
  for (const AffineExpr& gi : p.g)
    lp.add_row(detail::stacked_coeffs(p, gi), Relation::GreaterEq,
               -gi.constant);
  return lp;
}

// Compact penalty LP over (x, y): min f + sum_i L_i (y_i + g_i)/2 on Gamma.
inline LinearProgram build_penalty_lp(const MpecProblem& p,
                                      const PenaltyScalarization& s) {
  detail::validate_weights(p, s);
  LinearProgram lp = build_gamma_lp(p);
  AffineExpr cost = p.objective;
  detail::add_scaled(&cost, weighted_halfsum(p, s.weights), 1.0);
  lp.cost = detail::stacked_coeffs(p, cost);
  lp.cost_constant = cost.constant;
  return lp;
}

// Expanded penalty LP over (x, y, u, v+, v-).
struct ExpandedPenaltyLp {
  LinearProgram lp;
  int n_x = 0, n_y = 0;
  int u_offset = 0, vplus_offset = 0, vminus_offset = 0;

  std::vector<double> u(const std::vector<double>& v) const {
    return slice(v, u_offset);
  }
  std::vector<double> vplus(const std::vector<double>& v) const {
    return slice(v, vplus_offset);
  }
  std::vector<double> vminus(const std::vector<double>& v) const {
    return slice(v, vminus_offset);
  }

 private:
  std::vector<double> slice(const std::vector<double>& v, int offset) const {
    if (v.size() < static_cast<size_t>(offset + n_y))
      throw std::invalid_argument("solution vector too short for this shape");
    return std::vector<double>(v.begin() + offset, v.begin() + offset + n_y);
  }
};

// Same optimal value and (x, y) face as build_penalty_lp, but with the pair
// averages u and the halves v+, v- exposed as variables:
//
//   u_i - v+_i - v-_i        = 0
//   u_i - (y_i + g_i)/2      = 0
//   v+_i - v-_i - (y_i-g_i)/2 = 0,   v+_i, v-_i >= 0, u_i free,
//
// objective f + sum_i L_i u_i. Together the three rows pin v+_i = y_i/2 and
// v-_i = g_i/2, and v+/v- >= 0 adds nothing beyond Gamma, so the projection
// onto (x, y) is exact.
inline ExpandedPenaltyLp build_penalty_expanded(const MpecProblem& p,
                                                const PenaltyScalarization& s) {
  detail::validate_weights(p, s);
  p.validate();
  ExpandedPenaltyLp out;
  out.n_x = p.n_x;
  out.n_y = p.n_y;
  LinearProgram lp(0);
  for (int j = 0; j < p.n_x; ++j)
    lp.add_var(p.x_names[j], p.x_lower[j], p.x_upper[j],
               p.objective.coeffs_x[j]);
  for (int i = 0; i < p.n_y; ++i)
    lp.add_var(p.y_names[i], p.y_lower[i], p.y_upper[i],
               p.objective.coeffs_y[i]);
  out.u_offset = lp.num_vars();
  for (int i = 0; i < p.n_y; ++i)
    lp.add_var("u_" + p.y_names[i], -kInf, kInf, s.weights[i]);
  out.vplus_offset = lp.num_vars();
  for (int i = 0; i < p.n_y; ++i)
    lp.add_var("vp_" + p.y_names[i], 0.0, kInf);
  out.vminus_offset = lp.num_vars();
  for (int i = 0; i < p.n_y; ++i)
    lp.add_var("vm_" + p.y_names[i], 0.0, kInf);
  lp.cost_constant = p.objective.constant;

  const int n = lp.num_vars();
  auto stacked = [&](const AffineExpr& e) {
    std::vector<double> c(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < p.n_x; ++j) c[j] = e.coeffs_x[j];
    for (int i = 0; i < p.n_y; ++i) c[p.n_x + i] = e.coeffs_y[i];
    return c;
  };
  for (const LinearConstraint& c : p.omega)
    lp.add_row(stacked(c.expr), c.relation, -c.expr.constant);
  for (const AffineExpr& gi : p.g)
    lp.add_row(stacked(gi), Relation::GreaterEq, -gi.constant);
  for (int i = 0; i < p.n_y; ++i) {
    std::vector<double> split(static_cast<size_t>(n), 0.0);
    split[out.u_offset + i] = 1.0;
    split[out.vplus_offset + i] = -1.0;
    split[out.vminus_offset + i] = -1.0;
    lp.add_row(std::move(split), Relation::Eq, 0.0);

    std::vector<double> average = stacked(p.g[i]);
    for (double& c : average) c *= -0.5;
    average[p.n_x + i] += -0.5;
    average[out.u_offset + i] += 1.0;
    lp.add_row(std::move(average), Relation::Eq, 0.5 * p.g[i].constant);

    std::vector<double> gap = stacked(p.g[i]);
    for (double& c : gap) c *= 0.5;
    gap[p.n_x + i] += -0.5;
    gap[out.vplus_offset + i] += 1.0;
    gap[out.vminus_offset + i] += -1.0;
    lp.add_row(std::move(gap), Relation::Eq, -0.5 * p.g[i].constant);
  }
  out.lp = std::move(lp);
  return out;
}

// First n_x + n_y coordinates of an LP solution in either penalty shape,
// mapped back to problem coordinates.
inline Point to_point(const MpecProblem& p, const std::vector<double>& v) {
  if (v.size() < static_cast<size_t>(p.n_x + p.n_y))
    throw std::invalid_argument("solution vector shorter than (x, y)");
  Point pt;
  pt.x.assign(v.begin(), v.begin() + p.n_x);
  pt.y.assign(v.begin() + p.n_x, v.begin() + p.n_x + p.n_y);
  return pt;
}

// Per-pair one-sided test on the expanded halves: pair i passes when
// min(v+_i, v-_i) <= tol, i.e. at most one half of the pair is active.
inline std::vector<bool> check_sos1(const std::vector<double>& vplus,
                                    const std::vector<double>& vminus,
                                    double tol) {
  if (vplus.size() != vminus.size())
    throw std::invalid_argument("check_sos1: half vectors differ in length");
  std::vector<bool> ok(vplus.size());
  for (size_t i = 0; i < vplus.size(); ++i)
    ok[i] = std::min(vplus[i], vminus[i]) <= tol;
  return ok;
}

}  // namespace lpcc
