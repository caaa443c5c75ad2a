// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// In-memory representation of a linear program with complementarity
// constraints (LPCC):
//
//   min  f(x, y)
//   s.t. (x, y) in Omega (affine rows), bounds,
//        0 <= y_i  complementary to  g_i(x, y) >= 0   for each pair i,
//
// with f and every g_i affine. The feasible set without the complementarity
// requirement (Omega rows + bounds + g >= 0) is called Gamma throughout.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpcc/common.hpp"

namespace lpcc {

struct Point {
  std::vector<double> x;
  std::vector<double> y;
};

// coeffs_x . x + coeffs_y . y + constant
struct AffineExpr {
  std::vector<double> coeffs_x;
  std::vector<double> coeffs_y;
  double constant = 0.0;

  AffineExpr() = default;
  AffineExpr(int n_x, int n_y, double c = 0.0)
      : coeffs_x(n_x, 0.0), coeffs_y(n_y, 0.0), constant(c) {}

  double eval(const Point& pt) const {
    if (pt.x.size() != coeffs_x.size() || pt.y.size() != coeffs_y.size())
      throw std::invalid_argument("point dimensions do not match expression");
    double v = constant;
    for (size_t j = 0; j < coeffs_x.size(); ++j) v += coeffs_x[j] * pt.x[j];
    for (size_t i = 0; i < coeffs_y.size(); ++i) v += coeffs_y[i] * pt.y[i];
    return v;
  }
};

// Row "expr <relation> 0"; any right-hand side is folded into expr.constant.
struct LinearConstraint {
  AffineExpr expr;
  Relation relation = Relation::LessEq;
};

struct MpecProblem {
  std::string name;
  int n_x = 0;
  int n_y = 0;
  AffineExpr objective;                 // f
  std::vector<AffineExpr> g;            // n_y entries, g[i] pairs with y[i]
  std::vector<LinearConstraint> omega;  // joint affine rows
  std::vector<double> x_lower, x_upper;
  std::vector<double> y_lower, y_upper;
  std::vector<std::string> x_names, y_names;
  std::map<std::string, double> meta;   // free-form parameters (e.g. K)

  MpecProblem() = default;
  MpecProblem(std::string problem_name, int nx, int ny)
      : name(std::move(problem_name)),
        n_x(nx),
        n_y(ny),
        objective(nx, ny),
        g(ny, AffineExpr(nx, ny)),
        x_lower(nx, 0.0),
        x_upper(nx, kInf),
        y_lower(ny, 0.0),
        y_upper(ny, kInf) {
    x_names.reserve(nx);
    y_names.reserve(ny);
    for (int j = 0; j < nx; ++j) x_names.push_back("x" + std::to_string(j + 1));
    for (int i = 0; i < ny; ++i) y_names.push_back("y" + std::to_string(i + 1));
  }

  // Throws std::invalid_argument on structural defects.
  void validate() const {
    auto expect = [&](bool ok, const std::string& msg) {
      if (!ok) throw std::invalid_argument("problem '" + name + "': " + msg);
    };
    expect(n_x >= 0 && n_y >= 0, "negative dimension");
    expect(static_cast<int>(g.size()) == n_y,
           "need exactly one g expression per y variable");
    auto check_expr = [&](const AffineExpr& e, const std::string& what) {
      expect(static_cast<int>(e.coeffs_x.size()) == n_x &&
                 static_cast<int>(e.coeffs_y.size()) == n_y,
             what + " has wrong coefficient dimensions");
    };
    check_expr(objective, "objective");
    for (size_t i = 0; i < g.size(); ++i)
      check_expr(g[i], "g[" + std::to_string(i) + "]");
    for (size_t r = 0; r < omega.size(); ++r)
      check_expr(omega[r].expr, "omega[" + std::to_string(r) + "]");
    expect(static_cast<int>(x_lower.size()) == n_x &&
               static_cast<int>(x_upper.size()) == n_x &&
               static_cast<int>(y_lower.size()) == n_y &&
               static_cast<int>(y_upper.size()) == n_y,
           "bound vectors have wrong length");
    expect(static_cast<int>(x_names.size()) == n_x &&
               static_cast<int>(y_names.size()) == n_y,
           "name vectors have wrong length");
    for (int j = 0; j < n_x; ++j)
      expect(x_lower[j] <= x_upper[j], "x bound pair with lower > upper");
    for (int i = 0; i < n_y; ++i) {
      expect(y_lower[i] <= y_upper[i], "y bound pair with lower > upper");
      expect(y_lower[i] >= 0.0,
             "y variables need lower bound >= 0 (complementarity side)");
    }
  }
};

inline double eval_f(const MpecProblem& p, const Point& pt) {
  return p.objective.eval(pt);
}

inline std::vector<double> eval_g(const MpecProblem& p, const Point& pt) {
  std::vector<double> out;
  out.reserve(p.g.size());
  for (const AffineExpr& gi : p.g) out.push_back(gi.eval(pt));
  return out;
}

// Penalty term f_pen(x, y) = sum_i (y_i + g_i(x, y)) / 2. Over Gamma this is
// nonnegative and vanishes exactly at complementary points with y = g = 0.
inline double eval_fpen(const MpecProblem& p, const Point& pt) {
  if (pt.y.size() != static_cast<size_t>(p.n_y))
    throw std::invalid_argument("point dimensions do not match problem");
  double s = 0.0;
  for (int i = 0; i < p.n_y; ++i) s += (pt.y[i] + p.g[i].eval(pt)) / 2.0;
  return s;
}

// Membership in Gamma within tol: Omega rows, variable bounds, and g >= 0.
// Dimension mismatches and non-finite entries report false, never throw.
inline bool is_feasible(const MpecProblem& p, const Point& pt, double tol) {
  if (pt.x.size() != static_cast<size_t>(p.n_x) ||
      pt.y.size() != static_cast<size_t>(p.n_y))
    return false;
  for (int j = 0; j < p.n_x; ++j) {
    if (!(pt.x[j] >= p.x_lower[j] - tol && pt.x[j] <= p.x_upper[j] + tol))
      return false;
  }
  for (int i = 0; i < p.n_y; ++i) {
    if (!(pt.y[i] >= p.y_lower[i] - tol && pt.y[i] <= p.y_upper[i] + tol))
      return false;
  }
  for (const LinearConstraint& c : p.omega) {
    double v = c.expr.eval(pt);
    switch (c.relation) {
      case Relation::LessEq:
        if (!(v <= tol)) return false;
        break;
      case Relation::Eq:
        if (!(v >= -tol && v <= tol)) return false;
        break;
      case Relation::GreaterEq:
        if (!(v >= -tol)) return false;
        break;
    }
  }
  for (const AffineExpr& gi : p.g) {
    if (!(gi.eval(pt) >= -tol)) return false;
  }
  return true;
}

}  // namespace lpcc
