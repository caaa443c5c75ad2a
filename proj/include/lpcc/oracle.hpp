// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Derivative-free reference minimizers. grid_minimize handles the one
// nonlinear instance in the corpus through a black-box interface;
// brute_force_complementary_min is an independent cross-check for the
// disposition-enumeration solver on small linear instances. Neither is a
// general NLP method; both trade speed for being easy to trust.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpcc/common.hpp"
#include "lpcc/model.hpp"

namespace lpcc {

// Objective plus constraint-violation residuals over a finite box. eval must
// be total on the box: it returns (value, residuals) where every residual is
// <= 0 exactly when the corresponding constraint holds.
struct BlackBoxProblem {
  int dimension = 0;
  std::function<std::pair<double, std::vector<double>>(
      const std::vector<double>&)>
      eval;
  std::vector<double> box_lower, box_upper;
};

struct GridRound {
  std::vector<double> lower, upper;  // window scanned in this round
  double best_value;                 // best feasible value seen so far
};

struct GridResult {
  std::vector<double> point;
  double value;
  std::vector<GridRound> trace;
};

namespace detail {

// Odometer over {0..pts-1}^dim; returns false after the last tuple.
inline bool next_index(std::vector<int>& idx, int pts) {
  for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
    if (++idx[k] < pts) return true;
    idx[k] = 0;
  }
  return false;
}

}  // namespace detail

// Multi-round grid refinement: scan a full grid over the current window,
// keep the best point whose residuals are all <= 1e-6 * scale (scale taken
// from the original box), then shrink the window around the incumbent by a
// factor 0.2 and re-grid. Ties go to the earliest point in scan order, so
// repeated runs return bit-identical results.
inline GridResult grid_minimize(const BlackBoxProblem& bb, int rounds,
                                int pts_per_axis) {
  if (rounds < 1) throw std::invalid_argument("grid_minimize: rounds < 1");
  if (pts_per_axis < 11)
    throw std::invalid_argument("grid_minimize: need at least 11 points per axis");
  const int d = bb.dimension;
  if (d <= 0 || static_cast<int>(bb.box_lower.size()) != d ||
      static_cast<int>(bb.box_upper.size()) != d)
    throw std::invalid_argument("grid_minimize: bad box");
  double scale = 1.0;
  for (int k = 0; k < d; ++k) {
    if (!std::isfinite(bb.box_lower[k]) || !std::isfinite(bb.box_upper[k]) ||
        bb.box_lower[k] > bb.box_upper[k])
      throw std::invalid_argument("grid_minimize: box must be finite");
    scale = std::max({scale, std::fabs(bb.box_lower[k]), std::fabs(bb.box_upper[k])});
  }
  const double feas_tol = 1e-6 * scale;

  GridResult out;
  out.value = kInf;
  std::vector<double> lo = bb.box_lower, hi = bb.box_upper;
  std::vector<double> pt(d);
  for (int round = 0; round < rounds; ++round) {
    std::vector<int> idx(d, 0);
    do {
      for (int k = 0; k < d; ++k) {
        const double t = static_cast<double>(idx[k]) / (pts_per_axis - 1);
        pt[k] = lo[k] + t * (hi[k] - lo[k]);
      }
      auto [value, residuals] = bb.eval(pt);
      bool feasible = true;
      for (double r : residuals)
        if (!(r <= feas_tol)) { feasible = false; break; }
      if (feasible && value < out.value) {
        out.value = value;
        out.point = pt;
      }
    } while (detail::next_index(idx, pts_per_axis));
    if (out.point.empty())
      throw std::runtime_error(
          "grid_minimize: no feasible point at this resolution");
    out.trace.push_back({lo, hi, out.value});
    for (int k = 0; k < d; ++k) {
      const double half = 0.2 * (hi[k] - lo[k]) / 2.0;
      double nlo = out.point[k] - half, nhi = out.point[k] + half;
      lo[k] = std::max(nlo, bb.box_lower[k]);
      hi[k] = std::min(nhi, bb.box_upper[k]);
    }
  }
  return out;
}

// Reference minimum of f over grid points of the (x, y) box that satisfy
// Gamma and complementarity at grid resolution. Slack is granted only where
// the grid forces it: equality rows and the g expressions get half a grid
// cell's variation of their expression (their zero sets have measure zero,
// so exact feasibility would reject every rounding of a true solution), and
// pair i counts as complementary when y_i or g_i is within half a cell of
// zero. Inequality rows are enforced as written; relaxing them too lets the
// scan buy objective through constraint violation, which would break the
// one-cell agreement with the enumeration solver that callers rely on.
// Infinite bounds are scanned up to +/-10.
inline double brute_force_complementary_min(const MpecProblem& p,
                                            int pts_per_axis) {
  if (pts_per_axis < 2)
    throw std::invalid_argument("brute force: need at least 2 points per axis");
  const int d = p.n_x + p.n_y;
  if (d == 0) throw std::invalid_argument("brute force: empty problem");
  double grid_points = 1.0;
  for (int k = 0; k < d; ++k) grid_points *= pts_per_axis;
  if (grid_points > 1e7)
    throw std::invalid_argument("brute force: grid larger than 1e7 points");

  const double cap = 10.0;
  std::vector<double> lo(d), hi(d), h(d);
  for (int j = 0; j < p.n_x; ++j) {
    lo[j] = std::max(p.x_lower[j], -cap);
    hi[j] = std::min(p.x_upper[j], cap);
  }
  for (int i = 0; i < p.n_y; ++i) {
    lo[p.n_x + i] = std::max(p.y_lower[i], -cap);
    hi[p.n_x + i] = std::min(p.y_upper[i], cap);
  }
  for (int k = 0; k < d; ++k) {
    if (lo[k] > hi[k]) throw std::runtime_error("brute force: empty box");
    h[k] = (hi[k] - lo[k]) / (pts_per_axis - 1);
  }

  // Half-cell slack per affine expression: sum_j |a_j| h_j / 2.
  const double base = 1e-9;
  auto half_cell = [&](const AffineExpr& e) {
    double s = base;
    for (int j = 0; j < p.n_x; ++j) s += std::fabs(e.coeffs_x[j]) * h[j] / 2.0;
    for (int i = 0; i < p.n_y; ++i)
      s += std::fabs(e.coeffs_y[i]) * h[p.n_x + i] / 2.0;
    return s;
  };
  std::vector<double> omega_tol, g_tol;
  for (const LinearConstraint& c : p.omega)
    omega_tol.push_back(c.relation == Relation::Eq ? half_cell(c.expr) : base);
  for (const AffineExpr& gi : p.g) g_tol.push_back(half_cell(gi));

  double best = kInf;
  Point pt;
  pt.x.assign(p.n_x, 0.0);
  pt.y.assign(p.n_y, 0.0);
  std::vector<int> idx(d, 0);
  do {
    for (int j = 0; j < p.n_x; ++j) pt.x[j] = lo[j] + idx[j] * h[j];
    for (int i = 0; i < p.n_y; ++i) pt.y[i] = lo[p.n_x + i] + idx[p.n_x + i] * h[p.n_x + i];
    bool ok = true;
    for (size_t r = 0; ok && r < p.omega.size(); ++r) {
      const double v = p.omega[r].expr.eval(pt);
      switch (p.omega[r].relation) {
        case Relation::LessEq: ok = v <= omega_tol[r]; break;
        case Relation::Eq: ok = std::fabs(v) <= omega_tol[r]; break;
        case Relation::GreaterEq: ok = v >= -omega_tol[r]; break;
      }
    }
    if (!ok) continue;
    for (int i = 0; ok && i < p.n_y; ++i) {
      const double gi = p.g[i].eval(pt);
      if (gi < -g_tol[i]) { ok = false; break; }
      const bool y_zero = pt.y[i] <= h[p.n_x + i] / 2.0 + base;
      const bool g_zero = gi <= g_tol[i];
      if (!y_zero && !g_zero) ok = false;
    }
    if (!ok) continue;
    const double f = p.objective.eval(pt);
    if (f < best) best = f;
  } while (detail::next_index(idx, pts_per_axis));
  if (best == kInf)
    throw std::runtime_error("brute force: no complementary feasible grid point");
  return best;
}

}  // namespace lpcc
