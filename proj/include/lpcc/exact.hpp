// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Exact LPCC solve by disposition enumeration. A disposition picks, for each
// pair, which side must vanish (y_i = 0 or g_i = 0). The complementary
// feasible set is the union of the 2^n_y polyhedral pieces carved out of
// Gamma this way, so minimizing f over every piece and keeping the best
// optimum is exact. Cost grows exponentially in n_y; guarded accordingly.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpcc/common.hpp"
#include "lpcc/model.hpp"
#include "lpcc/reformulation.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

enum class PairChoice { YZero, GZero };

inline const char* to_string(PairChoice c) {
  return c == PairChoice::YZero ? "y=0" : "g=0";
}

// One side choice per pair, in pair order.
using Disposition = std::vector<PairChoice>;

struct DispositionOutcome {
  Disposition disposition;
  SolveStatus status = SolveStatus::Infeasible;
  double objective = std::numeric_limits<double>::quiet_NaN();
  Point point;  // meaningful only when Optimal
};

struct ExactResult {
  // Optimal: some piece has a finite optimum and none is unbounded.
  // Infeasible: every piece is empty. Unbounded: some piece is unbounded
  // below (the union then is too); disposition names the first such piece.
  SolveStatus status = SolveStatus::Infeasible;
  double objective = std::numeric_limits<double>::quiet_NaN();
  Point point;
  Disposition disposition;
  std::vector<DispositionOutcome> table;  // all pieces, enumeration order
};

inline constexpr int kMaxExactPairs = 20;

// Enumerates dispositions in lexicographic order with YZero < GZero and pair
// 0 as the most significant position, so the all-YZero piece comes first.
// Ties in the optimal value keep the earliest piece. Throws
// std::invalid_argument when n_y exceeds kMaxExactPairs.
inline ExactResult solve_exact(const MpecProblem& p) {
  p.validate();
  if (p.n_y > kMaxExactPairs)
    throw std::invalid_argument(
        "solve_exact enumerates 2^n_y pieces; refusing n_y > " +
        std::to_string(kMaxExactPairs));
  const LinearProgram base =
      build_penalty_lp(p, PenaltyScalarization::uniform(p.n_y, 0.0));

  ExactResult out;
  out.table.reserve(static_cast<size_t>(1) << p.n_y);
  int best = -1, first_unbounded = -1;
  const unsigned long masks = 1ul << p.n_y;
  for (unsigned long mask = 0; mask < masks; ++mask) {
    DispositionOutcome row;
    row.disposition.resize(p.n_y);
    LinearProgram piece = base;
    std::vector<std::pair<int, double>> fixings;
    for (int i = 0; i < p.n_y; ++i) {
      bool g_side = (mask >> (p.n_y - 1 - i)) & 1ul;
      row.disposition[i] = g_side ? PairChoice::GZero : PairChoice::YZero;
      if (g_side)
        piece.add_row(detail::stacked_coeffs(p, p.g[i]), Relation::Eq,
                      -p.g[i].constant);
      else
        fixings.emplace_back(p.n_x + i, 0.0);
    }
    SolveResult r = solve_lp_with_fixed(piece, fixings);
    row.status = r.status;
    if (r.status == SolveStatus::Optimal) {
      row.objective = r.objective;
      row.point = to_point(p, r.x);
      if (best < 0 || r.objective < out.table[best].objective)
        best = static_cast<int>(out.table.size());
    } else if (r.status == SolveStatus::Unbounded && first_unbounded < 0) {
      first_unbounded = static_cast<int>(out.table.size());
    }
    out.table.push_back(std::move(row));
  }
  if (first_unbounded >= 0) {
    out.status = SolveStatus::Unbounded;
    out.disposition = out.table[first_unbounded].disposition;
  } else if (best >= 0) {
    out.status = SolveStatus::Optimal;
    out.objective = out.table[best].objective;
    out.point = out.table[best].point;
    out.disposition = out.table[best].disposition;
  } else {
    out.status = SolveStatus::Infeasible;
  }
  return out;
}

}  // namespace lpcc
