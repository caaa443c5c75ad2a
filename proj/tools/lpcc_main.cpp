// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Command-line front end. Subcommands: solve, sweep, frontier, certify,
// exact, corpus, selftest. Exit codes: 0 on success, 1 when the model is
// infeasible or unbounded (or a selftest check fails), 2 on input errors.
// CSV output follows the fixed schema from io.hpp; --format json emits a
// run record carrying the command line, the input hash, every solver
// result, and the wall time, so a run can be replayed and audited.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpcc/lpcc.hpp"

namespace {

using nlohmann::json;

// Input errors beyond the parser's own diagnostics (unreadable files,
// malformed weight lists, unknown corpus ids).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::vector<double> parse_weight_list(const std::string& s) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    const char* begin = item.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
      throw InputError("bad weight '" + item + "' in --L-list");
    if (!(v >= 0))
      throw InputError("weights must be nonnegative, got '" + item + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.empty()) throw InputError("--L-list is empty");
  return out;
}

// NaN is not representable in JSON; the record uses null instead.
json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

json problem_json(const lpcc::MpecProblem& p) {
  return {{"name", p.name},
          {"n_x", p.n_x},
          {"n_y", p.n_y},
          {"x_names", p.x_names},
          {"y_names", p.y_names}};
}

json point_json(const lpcc::MpecProblem& p, const lpcc::Point& pt) {
  return {{"x", pt.x}, {"y", pt.y}, {"g", lpcc::eval_g(p, pt)}};
}

json solution_json(const lpcc::MpecProblem& p, double L,
                   const lpcc::PenaltySolution& s) {
  json j{{"L", L}, {"status", lpcc::to_string(s.status)}};
  if (s.status == lpcc::SolveStatus::Optimal) {
    j["f"] = s.f;
    j["fpen"] = s.fpen;
    j["total"] = s.total;
    j["complementary"] = s.comp.complementary;
    j["max_violation"] = s.comp.max_violation;
    j["point"] = point_json(p, s.point);
  }
  return j;
}

json frontier_json(const lpcc::MpecProblem& p, const lpcc::Frontier& fr) {
  json points = json::array();
  for (const lpcc::FrontierPoint& pt : fr.points)
    points.push_back({{"f", pt.f},
                      {"fpen", pt.fpen},
                      {"complementary", pt.complementary},
                      {"L_lo", pt.L_lo},
                      {"L_hi", pt.L_hi == lpcc::kInf ? json(nullptr)
                                                     : json(pt.L_hi)},
                      {"point", point_json(p, pt.solution)}});
  json probes = json::array();
  for (const lpcc::FrontierProbe& pr : fr.probes)
    probes.push_back({{"L", pr.L},
                      {"line_value", pr.line_value},
                      {"probe_value", pr.probe_value},
                      {"found_f", pr.found_f},
                      {"found_fpen", pr.found_fpen},
                      {"inserted", pr.inserted}});
  return {{"points", points},
          {"probes", probes},
          {"L_bar", lpcc::compute_L_bar(fr)}};
}

json record_header(const char* command, int argc, char** argv) {
  json j{{"command", command}, {"argv", json::array()}};
  for (int i = 0; i < argc; ++i) j["argv"].push_back(argv[i]);
  return j;
}

void attach_input(json& record, const std::string& path,
                  const std::string& bytes) {
  record["input"] = {{"path", path}, {"fnv1a64", lpcc::fnv1a64_hex(bytes)}};
}

std::string dump(const json& record) { return record.dump(2) + "\n"; }

// Options shared by the problem-file subcommands.
struct CommonOpts {
  std::string path;
  std::string out;
  std::string format = "csv";
  double tol_complementarity = -1.0;

  lpcc::Tolerances tolerances() const {
    lpcc::Tolerances t;
    if (tol_complementarity >= 0) t.complementarity = tol_complementarity;
    return t;
  }
  bool json_mode() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
  cmd->add_option("problem", o.path, "problem file to read")->required();
  cmd->add_option("--out", o.out, "write output to this file, not stdout");
  if (with_format)
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  cmd->add_option("--tol", o.tol_complementarity,
                  "complementarity tolerance for flagging solutions");
}

int run_solve_or_sweep(const char* command, const CommonOpts& opts,
                       const std::vector<double>& weights, int argc,
                       char** argv) {
  const std::string bytes = read_file(opts.path);
  const lpcc::MpecProblem p = lpcc::parse_problem(bytes);
  const lpcc::Tolerances tol = opts.tolerances();
  Clock clock;
  std::vector<lpcc::SweepRow> rows;
  for (double L : weights) rows.push_back({L, lpcc::solve_penalty(p, L, tol)});

  if (opts.json_mode()) {
    json record = record_header(command, argc, argv);
    attach_input(record, opts.path, bytes);
    record["problem"] = problem_json(p);
    record["L_values"] = weights;
    record["results"] = json::array();
    for (const lpcc::SweepRow& r : rows)
      record["results"].push_back(solution_json(p, r.L, r.solution));
    record["wall_time_seconds"] = clock.seconds();
    write_output(opts.out, dump(record));
    for (const lpcc::SweepRow& r : rows)
      if (r.solution.status != lpcc::SolveStatus::Optimal) {
        std::fprintf(stderr, "%s: %s at L = %s\n", command,
                     lpcc::to_string(r.solution.status),
                     lpcc::format_g9(r.L).c_str());
        return 1;
      }
    return 0;
  }
  for (const lpcc::SweepRow& r : rows)
    if (r.solution.status != lpcc::SolveStatus::Optimal) {
      std::fprintf(stderr, "%s: %s at L = %s\n", command,
                   lpcc::to_string(r.solution.status),
                   lpcc::format_g9(r.L).c_str());
      return 1;
    }
  write_output(opts.out, lpcc::sweep_csv(p, rows));
  return 0;
}

int run_frontier(const CommonOpts& opts, int argc, char** argv) {
  const std::string bytes = read_file(opts.path);
  const lpcc::MpecProblem p = lpcc::parse_problem(bytes);
  Clock clock;
  const lpcc::Frontier fr = lpcc::dichotomic_frontier(p, opts.tolerances());
  if (opts.json_mode()) {
    json record = record_header("frontier", argc, argv);
    attach_input(record, opts.path, bytes);
    record["problem"] = problem_json(p);
    record["frontier"] = frontier_json(p, fr);
    record["wall_time_seconds"] = clock.seconds();
    write_output(opts.out, dump(record));
    return 0;
  }
  write_output(opts.out, lpcc::frontier_csv(p, fr));
  return 0;
}

int run_certify(const CommonOpts& opts, int argc, char** argv) {
  const std::string bytes = read_file(opts.path);
  const lpcc::MpecProblem p = lpcc::parse_problem(bytes);
  Clock clock;
  const lpcc::TradeoffCertificate cert =
      lpcc::certify_recovery(p, opts.tolerances());
  if (opts.json_mode()) {
    json record = record_header("certify", argc, argv);
    attach_input(record, opts.path, bytes);
    record["problem"] = problem_json(p);
    record["certificate"] = {
        {"verdict", lpcc::to_string(cert.verdict)},
        {"L_bar", cert.L_bar},
        {"pen_first",
         {{"f", cert.pen_first.f},
          {"fpen", cert.pen_first.fpen},
          {"complementary", cert.pen_first.complementary},
          {"point", point_json(p, cert.pen_first.solution)}}},
        {"exact_status", lpcc::to_string(cert.exact_status)},
        {"exact_f", number_or_null(cert.exact_f)},
        {"face_gap", number_or_null(cert.face_gap)},
        {"detail", cert.detail}};
    record["wall_time_seconds"] = clock.seconds();
    write_output(opts.out, dump(record));
    return 0;
  }
  std::string text;
  text += "verdict: " + std::string(lpcc::to_string(cert.verdict)) + "\n";
  text += "L_bar: " + lpcc::format_g9(cert.L_bar) + "\n";
  text += "min-penalty corner: f = " + lpcc::format_g9(cert.pen_first.f) +
          ", fpen = " + lpcc::format_g9(cert.pen_first.fpen) +
          ", complementary = " +
          (cert.pen_first.complementary ? "true" : "false") + "\n";
  text += "exact: " + std::string(lpcc::to_string(cert.exact_status)) +
          ", f = " + lpcc::format_g9(cert.exact_f) + "\n";
  if (!std::isnan(cert.face_gap))
    text += "face_gap: " + lpcc::format_g9(cert.face_gap) + "\n";
  text += "detail: " + cert.detail + "\n";
  write_output(opts.out, text);
  return 0;
}

int run_exact(const CommonOpts& opts, int argc, char** argv) {
  const std::string bytes = read_file(opts.path);
  const lpcc::MpecProblem p = lpcc::parse_problem(bytes);
  Clock clock;
  const lpcc::ExactResult r = lpcc::solve_exact(p);

  auto disposition_json = [](const lpcc::Disposition& d) {
    json a = json::array();
    for (lpcc::PairChoice c : d) a.push_back(lpcc::to_string(c));
    return a;
  };
  if (opts.json_mode()) {
    json record = record_header("exact", argc, argv);
    attach_input(record, opts.path, bytes);
    record["problem"] = problem_json(p);
    json res{{"status", lpcc::to_string(r.status)},
             {"f", number_or_null(r.objective)}};
    if (r.status == lpcc::SolveStatus::Optimal) {
      res["point"] = point_json(p, r.point);
      res["disposition"] = disposition_json(r.disposition);
    }
    res["table"] = json::array();
    for (const lpcc::DispositionOutcome& o : r.table)
      res["table"].push_back({{"disposition", disposition_json(o.disposition)},
                              {"status", lpcc::to_string(o.status)},
                              {"f", number_or_null(o.objective)}});
    record["result"] = res;
    record["wall_time_seconds"] = clock.seconds();
    write_output(opts.out, dump(record));
    return r.status == lpcc::SolveStatus::Optimal ? 0 : 1;
  }
  if (r.status != lpcc::SolveStatus::Optimal) {
    std::fprintf(stderr, "exact: %s\n", lpcc::to_string(r.status));
    return 1;
  }
  std::string text = "f: " + lpcc::format_g9(r.objective) + "\n";
  auto append_vec = [&text](const char* label, const std::vector<double>& v) {
    text += label;
    for (size_t i = 0; i < v.size(); ++i)
      text += (i ? " " : "") + lpcc::format_g9(v[i]);
    text += "\n";
  };
  append_vec("x: ", r.point.x);
  append_vec("y: ", r.point.y);
  append_vec("g: ", lpcc::eval_g(p, r.point));
  text += "disposition:";
  for (lpcc::PairChoice c : r.disposition)
    text += std::string(" ") + lpcc::to_string(c);
  text += "\n";
  for (const lpcc::DispositionOutcome& o : r.table) {
    text += "piece [";
    for (size_t i = 0; i < o.disposition.size(); ++i)
      text += std::string(i ? " " : "") + lpcc::to_string(o.disposition[i]);
    text += "]: " + std::string(lpcc::to_string(o.status));
    if (o.status == lpcc::SolveStatus::Optimal)
      text += ", f = " + lpcc::format_g9(o.objective);
    text += "\n";
  }
  write_output(opts.out, text);
  return 0;
}

int run_corpus(const std::string& id, double K, const std::string& out,
               const std::string& format, int argc, char** argv) {
  if (id.empty()) {
    std::string text;
    for (lpcc::CorpusId cid : {lpcc::CorpusId::EX1, lpcc::CorpusId::EX2,
                               lpcc::CorpusId::EX3, lpcc::CorpusId::EX4}) {
      const lpcc::CorpusEntry& e = lpcc::corpus_entry(cid);
      text += e.name + std::string(": ") + e.provenance + "\n";
    }
    write_output(out, text);
    return 0;
  }
  lpcc::CorpusId cid;
  if (id == "ex1") cid = lpcc::CorpusId::EX1;
  else if (id == "ex2") cid = lpcc::CorpusId::EX2;
  else if (id == "ex3") cid = lpcc::CorpusId::EX3;
  else if (id == "ex4")
    throw InputError(
        "ex4 is nonlinear and has no problem-file form; its rows are checked "
        "through the grid oracle");
  else
    throw InputError("unknown corpus id '" + id + "' (ex1, ex2, ex3, ex4)");
  const std::string text =
      lpcc::serialize_problem(lpcc::build_corpus_problem(cid, K));
  if (format == "json") {
    json record = record_header("corpus", argc, argv);
    record["id"] = id;
    record["K"] = K;
    record["problem_text"] = text;
    write_output(out, dump(record));
    return 0;
  }
  write_output(out, text);
  return 0;
}

int run_selftest(unsigned seed, int count, const std::string& out,
                 const std::string& format, int argc, char** argv) {
  Clock clock;
  std::mt19937 rng(seed);
  json failures = json::array();
  double worst_ratio = 0.0;
  std::string worst_name = "-";
  for (int t = 0; t < count; ++t) {
    const lpcc::MpecProblem p =
        lpcc::random_lpcc(rng, "rand" + std::to_string(t));
    const lpcc::ExactResult r = lpcc::solve_exact(p);
    const int pts = lpcc::cross_check_pts(p.n_x + p.n_y);
    const double reference = lpcc::brute_force_complementary_min(p, pts);
    const double cell = lpcc::one_cell_objective_variation(p, pts);
    const double gap = std::fabs(r.objective - reference);
    const double ratio = gap / cell;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_name = p.name;
    }
    bool pass = r.status == lpcc::SolveStatus::Optimal && gap <= cell + 1e-9;
    if (pass) {
      const lpcc::ComplementarityReport rep =
          lpcc::check_complementarity(p, r.point, 1e-8);
      pass = rep.complementary;
    }
    if (!pass)
      failures.push_back({{"index", t},
                          {"status", lpcc::to_string(r.status)},
                          {"exact_f", number_or_null(r.objective)},
                          {"grid_f", reference},
                          {"one_cell_bound", cell}});
  }
  const bool ok = failures.empty();
  if (format == "json") {
    json record = record_header("selftest", argc, argv);
    record["seed"] = seed;
    record["count"] = count;
    record["failures"] = failures;
    record["worst_ratio"] = worst_ratio;
    record["worst_instance"] = worst_name;
    record["wall_time_seconds"] = clock.seconds();
    write_output(out, dump(record));
  } else {
    std::string text;
    for (const json& f : failures)
      text += "FAIL " + f.dump() + "\n";
    text += "selftest: " +
            std::to_string(count - static_cast<int>(failures.size())) + "/" +
            std::to_string(count) +
            " instances agree with the grid reference within one cell (seed " +
            std::to_string(seed) + ", worst ratio " +
            lpcc::format_g9(worst_ratio) + ")\n";
    write_output(out, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lpcc: penalty scalarization toolkit for linear programs with "
      "complementarity constraints"};
  app.require_subcommand(1);

  CommonOpts solve_opts, sweep_opts, frontier_opts, certify_opts, exact_opts;
  double L = 1.0;
  std::string L_list;

  CLI::App* solve =
      app.add_subcommand("solve", "minimize f + L * fpen over the relaxation");
  add_common(solve, solve_opts);
  solve->add_option("--L", L, "penalty weight")->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "solve one weighted problem per listed L");
  add_common(sweep, sweep_opts);
  sweep->add_option("--L-list", L_list, "comma-separated penalty weights")
      ->required();

  CLI::App* frontier = app.add_subcommand(
      "frontier", "enumerate the (f, fpen) trade-off frontier");
  add_common(frontier, frontier_opts);

  CLI::App* certify = app.add_subcommand(
      "certify", "decide whether large weights recover complementarity");
  add_common(certify, certify_opts);

  CLI::App* exact = app.add_subcommand(
      "exact", "exact optimum by enumerating complementarity dispositions");
  add_common(exact, exact_opts);

  std::string corpus_id, corpus_out, corpus_format = "csv";
  double K = 10.0;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "list built-in instances or print one as a problem file");
  corpus->add_option("id", corpus_id, "instance id (ex1, ex2, ex3)");
  corpus->add_option("--K", K, "parameter for ex1")->capture_default_str();
  corpus->add_option("--out", corpus_out, "write output to this file");
  corpus->add_option("--format", corpus_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  unsigned seed = lpcc::kSelftestSeed;
  int count = 200;
  std::string selftest_out, selftest_format = "csv";
  CLI::App* selftest = app.add_subcommand(
      "selftest", "cross-check the exact solver against the grid reference "
                  "on the frozen random family");
  selftest->add_option("--seed", seed, "generator seed")
      ->capture_default_str();
  selftest->add_option("--count", count, "number of instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  selftest->add_option("--out", selftest_out, "write output to this file");
  selftest->add_option("--format", selftest_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed())
      return run_solve_or_sweep("solve", solve_opts, {L}, argc, argv);
    if (sweep->parsed())
      return run_solve_or_sweep("sweep", sweep_opts, parse_weight_list(L_list),
                                argc, argv);
    if (frontier->parsed()) return run_frontier(frontier_opts, argc, argv);
    if (certify->parsed()) return run_certify(certify_opts, argc, argv);
    if (exact->parsed()) return run_exact(exact_opts, argc, argv);
    if (corpus->parsed())
      return run_corpus(corpus_id, K, corpus_out, corpus_format, argc, argv);
    if (selftest->parsed())
      return run_selftest(seed, count, selftest_out, selftest_format, argc,
                          argv);
  } catch (const lpcc::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const lpcc::SolveError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
