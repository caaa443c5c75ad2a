// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Acceptance gate. Each check pins an externally sourced target value at a
// fixed tolerance and prints exactly one PASS/FAIL line; the process exits
// with the number of failing checks. Targets are pinned, not recomputed: a
// check that disagrees with the implementation fails loudly instead of
// being retargeted. Check 5 carries one such pinned target that does not
// match the value implied by its own pinned point; see the note there.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpcc/lpcc.hpp"

namespace {

int g_failures = 0;

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

void report(int id, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("check %d: %s %s%s\n", id, pass ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : (" [" + detail + "]").c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// Collects sub-assertion failures for one check's detail string.
struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }
  std::string str() const { return detail.str(); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Three pinned operating points of the weighted solve on the parametric
// instance: complementary at small weights, not in the middle, again at
// large weights.
void check1() {
  const lpcc::MpecProblem p = lpcc::build_ex1(10.0);
  const struct {
    double L, f, fpen;
    bool comp;
  } rows[] = {{0.1, 0.0, 17.0, true}, {1.0, 3.0, 3.5, false},
              {3.0, 6.0, 2.0, true}};
  Check c;
  for (const auto& row : rows) {
    const lpcc::PenaltySolution s = lpcc::solve_penalty(p, row.L);
    c.expect(s.status == lpcc::SolveStatus::Optimal,
             "L=" + fmt(row.L) + " not optimal");
    if (s.status != lpcc::SolveStatus::Optimal) continue;
    c.expect(near(s.f, row.f, 1e-6) && near(s.fpen, row.fpen, 1e-6),
             "L=" + fmt(row.L) + " got (" + fmt(s.f) + ", " + fmt(s.fpen) +
                 "), want (" + fmt(row.f) + ", " + fmt(row.fpen) + ")");
    c.expect(s.comp.complementary == row.comp,
             "L=" + fmt(row.L) + " complementary flag " +
                 (s.comp.complementary ? "true" : "false"));
  }
  report(1, "weighted solves hit the three pinned operating points", c.pass,
         c.str());
}

// Frontier enumeration: exactly the three pinned points, first probe at
// weight 0.4, closing probes at the breakpoints 2/9 and 2.
void check2() {
  const lpcc::Frontier fr = lpcc::dichotomic_frontier(lpcc::build_ex1(10.0));
  Check c;
  c.expect(fr.points.size() == 3,
           "got " + std::to_string(fr.points.size()) + " points, want 3");
  const double want[3][2] = {{0.0, 17.0}, {3.0, 3.5}, {6.0, 2.0}};
  for (size_t k = 0; k < fr.points.size() && k < 3; ++k)
    c.expect(near(fr.points[k].f, want[k][0], 1e-6) &&
                 near(fr.points[k].fpen, want[k][1], 1e-6),
             "point " + std::to_string(k) + " is (" + fmt(fr.points[k].f) +
                 ", " + fmt(fr.points[k].fpen) + ")");
  c.expect(fr.probes.size() == 3,
           "got " + std::to_string(fr.probes.size()) + " probes, want 3");
  if (fr.probes.size() == 3) {
    c.expect(near(fr.probes[0].L, 0.4, 1e-9),
             "first probe at L=" + fmt(fr.probes[0].L) + ", want 0.4");
    c.expect(near(fr.probes[1].L, 2.0 / 9.0, 1e-9),
             "second probe at L=" + fmt(fr.probes[1].L) + ", want 2/9");
    c.expect(near(fr.probes[2].L, 2.0, 1e-9),
             "third probe at L=" + fmt(fr.probes[2].L) + ", want 2");
  }
  report(2, "frontier enumeration pins the three points and probe weights",
         c.pass, c.str());
}

// The mid-range weight leaves the first pair wide open: y1 * g1 = 9.
void check3() {
  const lpcc::MpecProblem p = lpcc::build_ex1(10.0);
  const lpcc::PenaltySolution s = lpcc::solve_penalty(p, 1.0);
  Check c;
  c.expect(s.status == lpcc::SolveStatus::Optimal, "solve not optimal");
  if (s.status == lpcc::SolveStatus::Optimal) {
    const double prod = s.point.y[0] * lpcc::eval_g(p, s.point)[0];
    c.expect(near(prod, 9.0, 1e-6), "y1*g1 = " + fmt(prod) + ", want 9");
    c.expect(!s.comp.complementary, "flagged complementary");
  }
  report(3, "mid-range weight keeps y1*g1 = 9 on the parametric instance",
         c.pass, c.str());
}

// No finite weight moves the single-pair instance off y = 4, and the
// certificate says so.
void check4() {
  const lpcc::MpecProblem p = lpcc::build_ex2();
  Check c;
  for (double L : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    const lpcc::PenaltySolution s = lpcc::solve_penalty(p, L);
    c.expect(s.status == lpcc::SolveStatus::Optimal,
             "L=" + fmt(L) + " not optimal");
    if (s.status != lpcc::SolveStatus::Optimal) continue;
    const double y = s.point.y[0];
    const double prod = y * lpcc::eval_g(p, s.point)[0];
    c.expect(near(y, 4.0, 1e-6), "L=" + fmt(L) + " y = " + fmt(y));
    c.expect(near(prod, 8.0, 1e-6), "L=" + fmt(L) + " y*g = " + fmt(prod));
  }
  const lpcc::TradeoffCertificate cert = lpcc::certify_recovery(p);
  c.expect(cert.verdict == lpcc::RecoveryVerdict::NEVER_RECOVERS_AT_MIN_PEN,
           std::string("verdict ") + lpcc::to_string(cert.verdict));
  report(4, "single-pair instance sticks at y = 4 and certifies no recovery",
         c.pass, c.str());
}

// Threshold at 2 on the two-pair instance; the pinned point above it is
// complementary, the pinned point below it is not.
//
// The pinned fpen target below (15) does not match the value implied by the
// check's own pinned point: at x=(0,10,20), y=(0,10) the pairs give
// (0 + 0)/2 + (10 + 10)/2 = 10. The target is kept as pinned and the
// mismatch reported honestly rather than silently retargeted; every other
// part of this check passes. docs/known-discrepancies.md has the analysis.
void check5() {
  const lpcc::MpecProblem p = lpcc::build_ex3();
  Check c;
  const lpcc::Frontier fr = lpcc::dichotomic_frontier(p);
  c.expect(near(lpcc::compute_L_bar(fr), 2.0, 1e-9),
           "threshold " + fmt(lpcc::compute_L_bar(fr)) + ", want 2");

  const lpcc::PenaltySolution above = lpcc::solve_penalty(p, 2.002);
  c.expect(above.status == lpcc::SolveStatus::Optimal, "L=2.002 not optimal");
  if (above.status == lpcc::SolveStatus::Optimal) {
    const double wx[3] = {0.0, 10.0, 10.0};
    for (int j = 0; j < 3; ++j)
      c.expect(near(above.point.x[j], wx[j], 1e-6),
               "L=2.002 x" + std::to_string(j + 1) + " = " +
                   fmt(above.point.x[j]));
    for (int i = 0; i < 2; ++i)
      c.expect(near(above.point.y[i], 0.0, 1e-6),
               "L=2.002 y" + std::to_string(i + 1) + " = " +
                   fmt(above.point.y[i]));
    c.expect(above.comp.complementary, "L=2.002 not complementary");
  }

  const lpcc::PenaltySolution below = lpcc::solve_penalty(p, 1.0);
  c.expect(below.status == lpcc::SolveStatus::Optimal, "L=1 not optimal");
  if (below.status == lpcc::SolveStatus::Optimal) {
    const double wx[3] = {0.0, 10.0, 20.0};
    const double wy[2] = {0.0, 10.0};
    for (int j = 0; j < 3; ++j)
      c.expect(near(below.point.x[j], wx[j], 1e-6),
               "L=1 x" + std::to_string(j + 1) + " = " + fmt(below.point.x[j]));
    for (int i = 0; i < 2; ++i)
      c.expect(near(below.point.y[i], wy[i], 1e-6),
               "L=1 y" + std::to_string(i + 1) + " = " + fmt(below.point.y[i]));
    c.expect(!below.comp.complementary, "L=1 flagged complementary");
    c.expect(near(below.fpen, 15.0, 1e-6),
             "L=1 fpen = " + fmt(below.fpen) +
                 ", pinned target 15 (inconsistent with the pinned point, "
                 "whose pair halves sum to 10; kept as pinned, see "
                 "docs/known-discrepancies.md)");
  }
  report(5, "two-pair instance: threshold 2 with pinned points on both sides",
         c.pass, c.str());
}

// Grid oracle reproduces the four pinned nonlinear rows at oracle scale.
void check6() {
  const lpcc::CorpusEntry& e = lpcc::corpus_entry(lpcc::CorpusId::EX4);
  Check c;
  for (double L : {0.0, 1.0, 10.0, 100.0}) {
    const lpcc::GroundTruthRow* row = nullptr;
    for (const lpcc::GroundTruthRow& r : e.table)
      for (double sample : r.L_samples)
        if (sample == L) row = &r;
    c.expect(row != nullptr, "no pinned row for L=" + fmt(L));
    if (!row) continue;
    const lpcc::GridResult gr =
        lpcc::grid_minimize(lpcc::build_ex4(L), 4, 101);
    const double f = lpcc::ex4_f(gr.point);
    const double fpen = lpcc::ex4_fpen(gr.point);
    const std::vector<double> g = lpcc::ex4_g(gr.point);
    c.expect(near(f, row->f, 0.05),
             "L=" + fmt(L) + " f = " + fmt(f) + ", want " + fmt(row->f));
    c.expect(near(fpen, row->fpen, 0.05),
             "L=" + fmt(L) + " fpen = " + fmt(fpen) + ", want " +
                 fmt(row->fpen));
    c.expect(near(gr.point[0], row->x[0], 0.05),
             "L=" + fmt(L) + " x = " + fmt(gr.point[0]) + ", want " +
                 fmt(row->x[0]));
    for (size_t i = 0; i < g.size(); ++i) {
      c.expect(std::fabs(g[i]) <= 0.02, "L=" + fmt(L) + " g" +
                                            std::to_string(i + 1) + " = " +
                                            fmt(g[i]));
      const double y = gr.point[1 + i];
      c.expect(std::fabs(y * g[i]) <=
                   0.05 * (1.0 + std::fabs(y)) * (1.0 + std::fabs(g[i])),
               "L=" + fmt(L) + " pair " + std::to_string(i + 1) +
                   " not complementary at oracle scale");
    }
  }
  report(6, "grid oracle reproduces the four pinned nonlinear rows", c.pass,
         c.str());
}

// Exact solver versus the grid reference across the frozen random family:
// every optimum within one grid cell's objective variation, every point
// complementary at 1e-8.
void check7() {
  std::mt19937 rng(lpcc::kSelftestSeed);
  Check c;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const lpcc::MpecProblem p =
        lpcc::random_lpcc(rng, "rand" + std::to_string(t));
    const lpcc::ExactResult r = lpcc::solve_exact(p);
    if (r.status != lpcc::SolveStatus::Optimal) {
      c.expect(false, "instance " + std::to_string(t) + " " +
                          lpcc::to_string(r.status));
      continue;
    }
    const int pts = lpcc::cross_check_pts(p.n_x + p.n_y);
    const double reference = lpcc::brute_force_complementary_min(p, pts);
    const double cell = lpcc::one_cell_objective_variation(p, pts);
    const double gap = std::fabs(r.objective - reference);
    if (cell > 0) worst = std::max(worst, gap / cell);
    c.expect(gap <= cell + 1e-9,
             "instance " + std::to_string(t) + " gap " + fmt(gap) +
                 " exceeds one cell " + fmt(cell));
    c.expect(lpcc::check_complementarity(p, r.point, 1e-8).complementary,
             "instance " + std::to_string(t) + " point not complementary");
  }
  report(7,
         "exact solver agrees with the grid reference on 200 frozen "
         "instances (worst cell ratio " +
             fmt(worst) + ")",
         c.pass, c.str());
}

// Four structural properties: weighted solutions trade f for fpen
// monotonically in L, the compact and expanded forms agree, the pairwise-min
// identity is exact on dyadic inputs, and frontier trade-off rates fall.
void check8() {
  Check c;
  const std::vector<lpcc::MpecProblem> instances = {
      lpcc::build_ex1(10.0), lpcc::build_ex2(), lpcc::build_ex3()};

  for (const lpcc::MpecProblem& p : instances) {
    double prev_f = 0.0, prev_fpen = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double L = 0.3 * k;
      const lpcc::PenaltySolution s = lpcc::solve_penalty(p, L);
      c.expect(s.status == lpcc::SolveStatus::Optimal,
               p.name + " L=" + fmt(L) + " not optimal");
      if (s.status != lpcc::SolveStatus::Optimal) break;
      if (k > 0) {
        c.expect(s.fpen <= prev_fpen + 1e-9,
                 p.name + " fpen rose from " + fmt(prev_fpen) + " to " +
                     fmt(s.fpen) + " at L=" + fmt(L));
        c.expect(s.f >= prev_f - 1e-9, p.name + " f fell from " + fmt(prev_f) +
                                           " to " + fmt(s.f) + " at L=" +
                                           fmt(L));
      }
      prev_f = s.f;
      prev_fpen = s.fpen;

      const lpcc::PenaltyScalarization w =
          lpcc::PenaltyScalarization::uniform(p.n_y, L);
      const lpcc::SolveResult compact =
          lpcc::solve_lp(lpcc::build_penalty_lp(p, w));
      const lpcc::SolveResult expanded =
          lpcc::solve_lp(lpcc::build_penalty_expanded(p, w).lp);
      c.expect(compact.status == lpcc::SolveStatus::Optimal &&
                   expanded.status == lpcc::SolveStatus::Optimal &&
                   near(compact.objective, expanded.objective, 1e-6),
               p.name + " L=" + fmt(L) + " compact " + fmt(compact.objective) +
                   " vs expanded " + fmt(expanded.objective));
    }
  }

  // Dyadic inputs keep every step of the identity exact in binary floating
  // point, so equality is required bit for bit.
  std::mt19937 rng(lpcc::kSelftestSeed);
  std::uniform_int_distribution<int> numerator(0, 8192);
  for (int t = 0; t < 1000; ++t) {
    const double y = numerator(rng) / 1024.0;
    const double g = numerator(rng) / 1024.0;
    const double identity = (y + g) / 2.0 - std::fabs(y - g) / 2.0;
    if (std::min(y, g) != identity) {
      c.expect(false, "pairwise-min identity broke at y=" + fmt(y) +
                          ", g=" + fmt(g));
      break;
    }
  }

  for (const lpcc::MpecProblem& p : instances) {
    const lpcc::Frontier fr = lpcc::dichotomic_frontier(p);
    double prev_rate = lpcc::kInf;
    for (size_t k = 0; k + 1 < fr.points.size(); ++k) {
      const double rate = (fr.points[k].fpen - fr.points[k + 1].fpen) /
                          (fr.points[k + 1].f - fr.points[k].f);
      c.expect(rate < prev_rate, p.name + " trade-off rate " + fmt(rate) +
                                     " did not fall below " + fmt(prev_rate));
      prev_rate = rate;
    }
  }
  report(8,
         "monotone trade-off, form equivalence, exact pairwise-min identity, "
         "falling frontier rates",
         c.pass, c.str());
}

// Recovery is not optimality: the certified corner has f = 6, the exact
// optimum f = 0.
void check9() {
  const lpcc::MpecProblem p = lpcc::build_ex1(10.0);
  Check c;
  const lpcc::TradeoffCertificate cert = lpcc::certify_recovery(p);
  c.expect(cert.verdict == lpcc::RecoveryVerdict::RECOVERS_FOR_L_GT_LBAR,
           std::string("verdict ") + lpcc::to_string(cert.verdict));
  c.expect(near(cert.pen_first.f, 6.0, 1e-6),
           "recovered corner f = " + fmt(cert.pen_first.f) + ", want 6");
  const lpcc::ExactResult exact = lpcc::solve_exact(p);
  c.expect(exact.status == lpcc::SolveStatus::Optimal &&
               near(exact.objective, 0.0, 1e-6),
           "exact optimum f = " + fmt(exact.objective) + ", want 0");
  report(9, "recovered corner value 6 versus exact optimum 0", c.pass,
         c.str());
}

}  // namespace

int main() {
  check1();
  check2();
  check3();
  check4();
  check5();
  check6();
  check7();
  check8();
  check9();
  std::printf("%d/9 checks pass\n", 9 - g_failures);
  return g_failures;
}
