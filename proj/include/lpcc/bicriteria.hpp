// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Bicriteria view of an LPCC: the objective f against the penalty measure
// f_pen, both minimized over Gamma. The weighted LPs min f + L f_pen, L >= 0,
// reach exactly the supported points of that trade-off; dichotomic search
// between the two lexicographic corners enumerates all of them with one LP
// per probe. The trade-off bound L_bar (the slope into the minimum-penalty
// corner) is what certificates about recovering complementarity hinge on:
// above it the weighted LP returns the corner, so whether complementarity is
// recovered for large weights is a property of that corner alone.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpcc/common.hpp"
#include "lpcc/exact.hpp"
#include "lpcc/model.hpp"
#include "lpcc/reformulation.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

struct ComplementarityReport {
  bool complementary = true;
  double max_violation = 0.0;     // largest scaled |y_i g_i|
  std::vector<double> products;   // raw y_i * g_i per pair
};

// Pair i passes when |y_i g_i| <= tol (1 + |y_i|)(1 + |g_i|). The relative
// scaling keeps the test meaningful for pairs of very different magnitude.
// Gamma-feasibility of pt is the caller's business.
inline ComplementarityReport check_complementarity(const MpecProblem& p,
                                                   const Point& pt,
                                                   double tol) {
  const std::vector<double> gv = eval_g(p, pt);
  ComplementarityReport rep;
  rep.products.resize(p.n_y);
  for (int i = 0; i < p.n_y; ++i) {
    const double prod = pt.y[i] * gv[i];
    rep.products[i] = prod;
    const double scaled = std::fabs(prod) /
        ((1.0 + std::fabs(pt.y[i])) * (1.0 + std::fabs(gv[i])));
    rep.max_violation = std::max(rep.max_violation, scaled);
    if (scaled > tol) rep.complementary = false;
  }
  return rep;
}

enum class LexOrder { F_FIRST, PEN_FIRST };

inline const char* to_string(LexOrder o) {
  return o == LexOrder::F_FIRST ? "f-first" : "pen-first";
}

struct LexminResult {
  SolveStatus status = SolveStatus::Infeasible;
  Point point;
  double f = std::numeric_limits<double>::quiet_NaN();
  double fpen = std::numeric_limits<double>::quiet_NaN();
};

// Two-stage lexicographic minimum over Gamma. Stage 1 minimizes the leading
// measure; stage 2 pins it with an equality row at the stage-1 optimum
// (honored to the solver's feasibility tolerance, so in effect a narrow
// band) and minimizes the trailing measure. A non-Optimal status from either
// stage is returned as-is with NaN values.
inline LexminResult lexmin(const MpecProblem& p, LexOrder order,
                           const Tolerances& tol = Tolerances{}) {
  (void)tol;  // tolerances live inside the LP engine for both stages
  const AffineExpr fpen = fpen_expression(p);
  const AffineExpr& first = (order == LexOrder::F_FIRST) ? p.objective : fpen;
  const AffineExpr& second = (order == LexOrder::F_FIRST) ? fpen : p.objective;

  LinearProgram stage1 = build_gamma_lp(p);
  stage1.cost = detail::stacked_coeffs(p, first);
  stage1.cost_constant = first.constant;
  const SolveResult r1 = solve_lp(stage1);
  LexminResult out;
  out.status = r1.status;
  if (r1.status != SolveStatus::Optimal) return out;

  LinearProgram stage2 = stage1;
  stage2.add_row(detail::stacked_coeffs(p, first), Relation::Eq,
                 r1.objective - first.constant);
  stage2.cost = detail::stacked_coeffs(p, second);
  stage2.cost_constant = second.constant;
  const SolveResult r2 = solve_lp(stage2);
  out.status = r2.status;
  if (r2.status != SolveStatus::Optimal) return out;
  out.point = to_point(p, r2.x);
  out.f = eval_f(p, out.point);
  out.fpen = eval_fpen(p, out.point);
  return out;
}

struct PenaltySolution {
  SolveStatus status = SolveStatus::Infeasible;
  Point point;
  double total = std::numeric_limits<double>::quiet_NaN();  // f + weighted pen
  double f = std::numeric_limits<double>::quiet_NaN();
  double fpen = std::numeric_limits<double>::quiet_NaN();
  ComplementarityReport comp;
};

// One weighted solve. f and f_pen are recomputed at the returned vertex, so
// they stay consistent with the point even when the LP optimum is degenerate.
inline PenaltySolution solve_penalty(const MpecProblem& p,
                                     const PenaltyScalarization& s,
                                     const Tolerances& tol = Tolerances{}) {
  const SolveResult r = solve_lp(build_penalty_lp(p, s));
  PenaltySolution out;
  out.status = r.status;
  if (r.status != SolveStatus::Optimal) return out;
  out.point = to_point(p, r.x);
  out.total = r.objective;
  out.f = eval_f(p, out.point);
  out.fpen = eval_fpen(p, out.point);
  out.comp = check_complementarity(p, out.point, tol.complementarity);
  return out;
}

inline PenaltySolution solve_penalty(const MpecProblem& p, double L,
                                     const Tolerances& tol = Tolerances{}) {
  return solve_penalty(p, PenaltyScalarization::uniform(p.n_y, L), tol);
}

// Baseline with the pairing ignored: minimize f over Gamma, refined to the
// minimum-f_pen vertex of the optimal face so the answer is deterministic
// and the complementarity report is the most favorable one available at the
// relaxed optimum.
struct RelaxedSolution {
  SolveStatus status = SolveStatus::Infeasible;
  Point point;
  double f = std::numeric_limits<double>::quiet_NaN();
  double fpen = std::numeric_limits<double>::quiet_NaN();
  ComplementarityReport comp;
};

inline RelaxedSolution drop_complementarity_solve(
    const MpecProblem& p, const Tolerances& tol = Tolerances{}) {
  const LexminResult lm = lexmin(p, LexOrder::F_FIRST, tol);
  RelaxedSolution out;
  out.status = lm.status;
  if (lm.status != SolveStatus::Optimal) return out;
  out.point = lm.point;
  out.f = lm.f;
  out.fpen = lm.fpen;
  out.comp = check_complementarity(p, out.point, tol.complementarity);
  return out;
}

struct FrontierPoint {
  double f = 0.0, fpen = 0.0;
  Point solution;
  bool complementary = false;
  // Half-open weight interval [L_lo, L_hi) whose weighted LP this point
  // answers; at a breakpoint the point with the smaller f_pen owns it.
  double L_lo = 0.0, L_hi = kInf;
};

struct FrontierProbe {
  double L = 0.0;                  // probe weight (slope between endpoints)
  double left_f = 0.0, left_fpen = 0.0;
  double right_f = 0.0, right_fpen = 0.0;
  double line_value = 0.0;         // endpoints' common weighted value at L
  double probe_value = 0.0;        // weighted value of the LP optimum
  double found_f = 0.0, found_fpen = 0.0;
  bool inserted = false;           // probe_value beat the line
};

struct Frontier {
  std::vector<FrontierPoint> points;  // sorted by increasing f
  std::vector<FrontierProbe> probes;  // in probe order (depth-first, left first)
};

namespace detail {

inline FrontierPoint make_frontier_point(const MpecProblem& p, Point pt,
                                         double f, double fpen,
                                         const Tolerances& tol) {
  FrontierPoint fp;
  fp.f = f;
  fp.fpen = fpen;
  fp.complementary =
      check_complementarity(p, pt, tol.complementarity).complementary;
  fp.solution = std::move(pt);
  return fp;
}

}  // namespace detail

// Enumerates every supported trade-off point between min f and min f_pen
// over Gamma. Endpoints are the two lexicographic corners; between any two
// adjacent known points the weighted LP at their connecting slope either
// confirms the segment or reveals a new vertex strictly below the line
// (relative improvement beyond tol.dichotomic_line), which is inserted and
// both gaps searched recursively, left side first. Throws SolveError when
// Gamma is empty or f is unbounded below on it.
inline Frontier dichotomic_frontier(const MpecProblem& p,
                                    const Tolerances& tol = Tolerances{}) {
  const LexminResult za = lexmin(p, LexOrder::F_FIRST, tol);
  if (za.status != SolveStatus::Optimal)
    throw SolveError(za.status,
                     std::string("frontier needs the f-first corner, got ") +
                         to_string(za.status));
  const LexminResult zb = lexmin(p, LexOrder::PEN_FIRST, tol);
  if (zb.status != SolveStatus::Optimal)
    throw SolveError(zb.status,
                     std::string("frontier needs the pen-first corner, got ") +
                         to_string(zb.status));

  Frontier out;
  FrontierPoint a = detail::make_frontier_point(p, za.point, za.f, za.fpen, tol);
  auto near = [&](double u, double v) {
    return std::fabs(u - v) <=
           tol.objective * (1.0 + std::max(std::fabs(u), std::fabs(v)));
  };
  if (near(za.f, zb.f) && near(za.fpen, zb.fpen)) {
    out.points.push_back(std::move(a));  // both objectives agree already
    return out;
  }
  FrontierPoint b = detail::make_frontier_point(p, zb.point, zb.f, zb.fpen, tol);

  std::function<void(const FrontierPoint&, const FrontierPoint&, int)> expand =
      [&](const FrontierPoint& left, const FrontierPoint& right, int depth) {
        if (depth > 64)
          throw std::runtime_error("frontier recursion depth exceeded");
        const double denom = left.fpen - right.fpen;
        if (denom <= tol.objective * (1.0 + std::fabs(left.fpen))) return;
        const double L = std::max((right.f - left.f) / denom, 0.0);
        const PenaltySolution probe = solve_penalty(p, L, tol);
        if (probe.status != SolveStatus::Optimal)
          throw SolveError(probe.status, "weighted probe LP failed");
        FrontierProbe rec;
        rec.L = L;
        rec.left_f = left.f;
        rec.left_fpen = left.fpen;
        rec.right_f = right.f;
        rec.right_fpen = right.fpen;
        rec.line_value = left.f + L * left.fpen;
        rec.probe_value = probe.f + L * probe.fpen;
        rec.found_f = probe.f;
        rec.found_fpen = probe.fpen;
        rec.inserted = rec.probe_value <
            rec.line_value -
                tol.dichotomic_line * (1.0 + std::fabs(rec.line_value));
        out.probes.push_back(rec);
        if (!rec.inserted) return;
        FrontierPoint mid = detail::make_frontier_point(
            p, probe.point, probe.f, probe.fpen, tol);
        expand(left, mid, depth + 1);
        out.points.push_back(mid);
        expand(mid, right, depth + 1);
      };
  out.points.push_back(a);
  expand(a, b, 0);
  out.points.push_back(b);

  // Weight intervals follow from adjacent slopes once the point set is known.
  for (size_t i = 0; i + 1 < out.points.size(); ++i) {
    FrontierPoint& cur = out.points[i];
    const FrontierPoint& nxt = out.points[i + 1];
    const double slope = (nxt.f - cur.f) / (cur.fpen - nxt.fpen);
    cur.L_hi = slope;
    out.points[i + 1].L_lo = slope;
  }
  return out;
}

// Slope into the minimum-penalty corner: for any L > L_bar the weighted LP
// answers with that corner. A single-point frontier gives 0 (every weight
// already lands there).
inline double compute_L_bar(const Frontier& frontier) {
  if (frontier.points.empty())
    throw std::invalid_argument("compute_L_bar: empty frontier");
  return frontier.points.back().L_lo;
}

enum class RecoveryVerdict {
  RECOVERS_FOR_L_GT_LBAR,      // corner complementary: weights above L_bar work
  NEVER_RECOVERS_AT_MIN_PEN,   // no minimum-penalty point is complementary
  INCONCLUSIVE
};

inline const char* to_string(RecoveryVerdict v) {
  switch (v) {
    case RecoveryVerdict::RECOVERS_FOR_L_GT_LBAR:
      return "RECOVERS_FOR_L_GT_LBAR";
    case RecoveryVerdict::NEVER_RECOVERS_AT_MIN_PEN:
      return "NEVER_RECOVERS_AT_MIN_PEN";
    case RecoveryVerdict::INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "?";
}

struct TradeoffCertificate {
  RecoveryVerdict verdict = RecoveryVerdict::INCONCLUSIVE;
  double L_bar = 0.0;
  FrontierPoint pen_first;     // minimum-penalty corner of the frontier
  SolveStatus exact_status = SolveStatus::Infeasible;
  double exact_f = std::numeric_limits<double>::quiet_NaN();
  // Minimum of sum_i min(y_i, g_i) over the corner face
  // {f = corner.f, f_pen = corner.fpen} of Gamma; NaN when not needed.
  // Zero means some point of that face is complementary.
  double face_gap = std::numeric_limits<double>::quiet_NaN();
  std::string detail;
};

namespace detail {

// Exact minimum of sum_i min(y_i, g_i) over a polyhedron: minimizing each of
// the 2^n_y per-pair member selections is enough, because at any fixed point
// the inner min distributes over pairs. Face must be nonempty.
inline double min_pairwise_small_side(const MpecProblem& p,
                                      const LinearProgram& face) {
  double best = kInf;
  const unsigned long selections = 1ul << p.n_y;
  for (unsigned long mask = 0; mask < selections; ++mask) {
    AffineExpr cost(p.n_x, p.n_y);
    for (int i = 0; i < p.n_y; ++i) {
      if ((mask >> (p.n_y - 1 - i)) & 1ul)
        add_scaled(&cost, p.g[i], 1.0);
      else
        cost.coeffs_y[i] += 1.0;
    }
    LinearProgram lp = face;
    lp.cost = stacked_coeffs(p, cost);
    lp.cost_constant = cost.constant;
    const SolveResult r = solve_lp(lp);
    if (r.status != SolveStatus::Optimal)
      throw SolveError(r.status, "face selection LP failed on a nonempty face");
    best = std::min(best, r.objective);
  }
  return best;
}

}  // namespace detail

// Decides what penalty weights beyond the trade-off bound deliver. The claim
// certified is about the minimum-penalty corner: weights above L_bar always
// return it, so either it is complementary (recovery) or no point of its
// face is (no recovery at large weights). The exact optimum is solved
// alongside as a reference for the f gap. Pair count is capped like
// solve_exact. INCONCLUSIVE covers the honest leftovers: no complementary
// point exists at all, or the face holds one that the deterministic corner
// refinement did not surface.
inline TradeoffCertificate certify_recovery(const MpecProblem& p,
                                            const Tolerances& tol = Tolerances{}) {
  const Frontier frontier = dichotomic_frontier(p, tol);
  TradeoffCertificate cert;
  cert.L_bar = compute_L_bar(frontier);
  cert.pen_first = frontier.points.back();

  const ExactResult exact = solve_exact(p);
  cert.exact_status = exact.status;
  cert.exact_f = exact.objective;

  std::ostringstream why;
  if (cert.pen_first.complementary) {
    cert.verdict = RecoveryVerdict::RECOVERS_FOR_L_GT_LBAR;
    why << "minimum-penalty corner (f = " << cert.pen_first.f
        << ", fpen = " << cert.pen_first.fpen
        << ") is complementary; every weight above " << cert.L_bar
        << " returns it";
    if (exact.status == SolveStatus::Optimal)
      why << " (exact optimum f = " << exact.objective << ")";
    cert.detail = why.str();
    return cert;
  }

  if (exact.status == SolveStatus::Infeasible) {
    cert.verdict = RecoveryVerdict::INCONCLUSIVE;
    cert.detail =
        "no complementary point exists at all; there is nothing for the "
        "penalty to recover";
    return cert;
  }

  const AffineExpr fpen = fpen_expression(p);
  LinearProgram face = build_gamma_lp(p);
  face.add_row(detail::stacked_coeffs(p, fpen), Relation::Eq,
               cert.pen_first.fpen - fpen.constant);
  face.add_row(detail::stacked_coeffs(p, p.objective), Relation::Eq,
               cert.pen_first.f - p.objective.constant);
  cert.face_gap = detail::min_pairwise_small_side(p, face);

  const double threshold =
      tol.solver_feasibility * (1.0 + std::fabs(cert.pen_first.fpen));
  if (cert.face_gap > threshold) {
    cert.verdict = RecoveryVerdict::NEVER_RECOVERS_AT_MIN_PEN;
    why << "every minimum-penalty point keeps both pair sides positive "
           "(face gap "
        << cert.face_gap << "); no weight above " << cert.L_bar
        << " can return a complementary point";
    if (exact.status == SolveStatus::Optimal)
      why << ", although the exact optimum f = " << exact.objective
          << " is complementary by construction";
    cert.detail = why.str();
    return cert;
  }

  cert.verdict = RecoveryVerdict::INCONCLUSIVE;
  why << "the minimum-penalty face contains a complementary point (face gap "
      << cert.face_gap
      << ") but the reported corner is not complementary; a different "
         "vertex choice would recover";
  cert.detail = why.str();
  return cert;
}

}  // namespace lpcc
