// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.

#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace lpcc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Sense of a linear constraint row.
enum class Relation { LessEq, Eq, GreaterEq };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::Eq: return "=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

enum class SolveStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
  }
  return "?";
}

// Default numeric tolerances, chosen once and reused everywhere so that
// golden outputs stay stable.
struct Tolerances {
  double eval = 1e-9;              // point-wise feasibility checks
  double solver_feasibility = 1e-7;  // LP residuals at termination
  double objective = 1e-6;         // objective value comparisons
  double complementarity = 1e-8;   // relative y_i*g_i test
  double dichotomic_line = 1e-7;   // relative supporting-line improvement
};

// Raised when a subproblem required to be solvable comes back infeasible or
// unbounded (e.g. an empty feasible set in a lexicographic stage).
class SolveError : public std::runtime_error {
 public:
  SolveError(SolveStatus status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  SolveStatus status() const { return status_; }

 private:
  SolveStatus status_;
};

}  // namespace lpcc
