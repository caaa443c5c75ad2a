// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Problem-file text format and result serialization. The format is line
// oriented: one directive per line, '#' starts a comment, numbers survive a
// serialize/parse round trip bit for bit. The grammar is documented in
// docs/problem-format.md; parse_problem and serialize_problem are the two
// ends of it, and the CSV writers fix the column schema that downstream
// plots and golden files rely on.

#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpcc/bicriteria.hpp"
#include "lpcc/common.hpp"
#include "lpcc/model.hpp"

namespace lpcc {

// Parse failure with its location; line and column are 1-based, and column 0
// means the whole line (or, with line 0, the whole document).
struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line_, int column_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) +
                           (column_ > 0 ? ":" + std::to_string(column_) : "") +
                           ": " + message),
        line(line_),
        column(column_) {}
};

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based offset in the source line
};

inline bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

// Splits one line into tokens: names, numbers (strtod syntax, so exponents
// keep their sign), the operators + - * :, and the relations <= = >=.
// Signs are always their own token; the expression grammar applies them.
inline std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '#') break;
    const int column = static_cast<int>(i) + 1;
    if (is_name_start(c)) {
      size_t j = i + 1;
      while (j < line.size() && is_name_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), column});
      i = j;
      continue;
    }
    if (is_number_start(c)) {
      const char* begin = line.c_str() + i;
      char* end = nullptr;
      std::strtod(begin, &end);
      if (end == begin)
        throw ParseError(line_no, column, "malformed number");
      out.push_back(
          {std::string(begin, static_cast<size_t>(end - begin)), column});
      i += static_cast<size_t>(end - begin);
      continue;
    }
    if (c == '<' || c == '>') {
      if (i + 1 >= line.size() || line[i + 1] != '=')
        throw ParseError(line_no, column,
                         std::string("expected '") + c + "='");
      out.push_back({std::string(1, c) + "=", column});
      i += 2;
      continue;
    }
    if (c == '=' || c == '+' || c == '-' || c == '*' || c == ':') {
      out.push_back({std::string(1, c), column});
      ++i;
      continue;
    }
    throw ParseError(line_no, column,
                     "unexpected character '" + std::string(1, c) + "'");
  }
  return out;
}

inline double parse_number_token(const Token& t, int line_no) {
  const char* begin = t.text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.text.size())
    throw ParseError(line_no, t.column, "expected a number, got '" + t.text + "'");
  return v;
}

// Bound syntax: [+|-] (inf | number). Consumes from tokens[i].
inline double parse_bound(const std::vector<Token>& toks, size_t& i,
                          int line_no) {
  if (i >= toks.size())
    throw ParseError(line_no, 0, "missing bound");
  double sign = 1.0;
  if (toks[i].text == "+" || toks[i].text == "-") {
    if (toks[i].text == "-") sign = -1.0;
    ++i;
    if (i >= toks.size())
      throw ParseError(line_no, toks[i - 1].column, "dangling sign in bound");
  }
  const Token& t = toks[i++];
  if (t.text == "inf") return sign * kInf;
  return sign * parse_number_token(t, line_no);
}

struct NameTable {
  std::map<std::string, int> x, y;  // name -> block index
};

// expr := [sign] term { sign term }; term := number [['*'] name] | name.
// Repeated variables accumulate. half-open token range [begin, end).
inline AffineExpr parse_expr(const std::vector<Token>& toks, size_t begin,
                             size_t end, const NameTable& names, int n_x,
                             int n_y, int line_no) {
  AffineExpr e(n_x, n_y);
  if (begin >= end)
    throw ParseError(line_no, 0, "empty expression");
  size_t i = begin;
  bool first = true;
  while (i < end) {
    double sign = 1.0;
    if (toks[i].text == "+" || toks[i].text == "-") {
      if (toks[i].text == "-") sign = -1.0;
      ++i;
    } else if (!first) {
      throw ParseError(line_no, toks[i].column,
                       "expected '+' or '-' before '" + toks[i].text + "'");
    }
    first = false;
    if (i >= end)
      throw ParseError(line_no, toks[i - 1].column, "dangling sign");

    double coeff = 1.0;
    bool have_coeff = false;
    if (is_number_start(toks[i].text[0])) {
      coeff = parse_number_token(toks[i], line_no);
      have_coeff = true;
      ++i;
      if (i < end && toks[i].text == "*") {
        ++i;
        if (i >= end || !is_name_start(toks[i].text[0]))
          throw ParseError(line_no, toks[i - 1].column,
                           "expected a variable after '*'");
      }
    }
    if (i < end && is_name_start(toks[i].text[0])) {
      const Token& name = toks[i++];
      if (name.text == "inf")
        throw ParseError(line_no, name.column, "'inf' is not a variable");
      if (auto it = names.x.find(name.text); it != names.x.end()) {
        e.coeffs_x[it->second] += sign * coeff;
      } else if (auto it2 = names.y.find(name.text); it2 != names.y.end()) {
        e.coeffs_y[it2->second] += sign * coeff;
      } else {
        throw ParseError(line_no, name.column,
                         "unknown variable '" + name.text + "'");
      }
    } else if (have_coeff) {
      e.constant += sign * coeff;
    } else {
      throw ParseError(line_no, i < end ? toks[i].column : toks[i - 1].column,
                       "expected a term");
    }
  }
  return e;
}

inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_bound(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return format_full(v);
}

// Canonical expression text: x-block terms, then y-block terms, then the
// constant; unit coefficients drop the multiplier; all-zero prints "0".
inline std::string format_expr(const AffineExpr& e,
                               const std::vector<std::string>& x_names,
                               const std::vector<std::string>& y_names) {
  std::string out;
  auto term = [&out](double c, const std::string& name) {
    if (c == 0.0) return;
    const double mag = std::fabs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += format_full(mag);
    } else {
      if (mag != 1.0) {
        out += format_full(mag);
        out += " ";
      }
      out += name;
    }
  };
  for (size_t j = 0; j < x_names.size(); ++j) term(e.coeffs_x[j], x_names[j]);
  for (size_t i = 0; i < y_names.size(); ++i) term(e.coeffs_y[i], y_names[i]);
  term(e.constant, "");
  return out.empty() ? "0" : out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return s != "inf";
}

}  // namespace detail

// Parses the line-oriented problem format into a validated model. Lines may
// arrive in any order; variables are declared with `var`, referenced by name
// everywhere else, and every y variable needs exactly one `g` line.
inline MpecProblem parse_problem(const std::string& text) {
  using detail::Token;
  struct Line {
    int no;
    std::vector<Token> toks;
  };
  std::vector<Line> lines;
  {
    int no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t eol = text.find('\n', pos);
      const std::string raw =
          text.substr(pos, eol == std::string::npos ? eol : eol - pos);
      ++no;
      std::vector<Token> toks = detail::tokenize(raw, no);
      if (!toks.empty()) lines.push_back({no, std::move(toks)});
      if (eol == std::string::npos) break;
      pos = eol + 1;
    }
  }

  // First pass: declarations. Bounds and block tags are positional.
  std::string name = "unnamed";
  bool saw_problem = false;
  detail::NameTable names;
  std::vector<std::string> x_names, y_names;
  std::vector<double> x_lo, x_hi, y_lo, y_hi;
  for (const Line& line : lines) {
    const std::string& kind = line.toks[0].text;
    if (kind == "problem") {
      if (saw_problem)
        throw ParseError(line.no, line.toks[0].column, "duplicate problem line");
      if (line.toks.size() != 2)
        throw ParseError(line.no, 0, "expected: problem <name>");
      saw_problem = true;
      name = line.toks[1].text;
    } else if (kind == "var") {
      if (line.toks.size() < 3)
        throw ParseError(line.no, 0, "expected: var <name> x|y <lo> <hi>");
      const Token& vn = line.toks[1];
      if (!detail::valid_name(vn.text))
        throw ParseError(line.no, vn.column,
                         "bad variable name '" + vn.text + "'");
      if (names.x.count(vn.text) || names.y.count(vn.text))
        throw ParseError(line.no, vn.column,
                         "duplicate variable name '" + vn.text + "'");
      const std::string& block = line.toks[2].text;
      if (block != "x" && block != "y")
        throw ParseError(line.no, line.toks[2].column,
                         "block must be 'x' or 'y'");
      size_t i = 3;
      const double lo = detail::parse_bound(line.toks, i, line.no);
      const double hi = detail::parse_bound(line.toks, i, line.no);
      if (i != line.toks.size())
        throw ParseError(line.no, line.toks[i].column,
                         "trailing tokens after bounds");
      if (block == "x") {
        names.x[vn.text] = static_cast<int>(x_names.size());
        x_names.push_back(vn.text);
        x_lo.push_back(lo);
        x_hi.push_back(hi);
      } else {
        names.y[vn.text] = static_cast<int>(y_names.size());
        y_names.push_back(vn.text);
        y_lo.push_back(lo);
        y_hi.push_back(hi);
      }
    }
  }

  const int n_x = static_cast<int>(x_names.size());
  const int n_y = static_cast<int>(y_names.size());
  MpecProblem p(name, n_x, n_y);
  p.x_names = x_names;
  p.y_names = y_names;
  p.x_lower = x_lo;
  p.x_upper = x_hi;
  p.y_lower = y_lo;
  p.y_upper = y_hi;

  // Second pass: everything that references variables.
  bool saw_objective = false;
  std::vector<int> g_line(n_y, 0);
  for (const Line& line : lines) {
    const std::string& kind = line.toks[0].text;
    if (kind == "problem" || kind == "var") continue;
    if (kind == "meta") {
      if (line.toks.size() < 3)
        throw ParseError(line.no, 0, "expected: meta <key> <value>");
      const std::string& key = line.toks[1].text;
      if (!detail::is_name_start(key[0]))
        throw ParseError(line.no, line.toks[1].column, "bad meta key");
      if (p.meta.count(key))
        throw ParseError(line.no, line.toks[1].column,
                         "duplicate meta key '" + key + "'");
      size_t i = 2;
      const double v = detail::parse_bound(line.toks, i, line.no);
      if (i != line.toks.size())
        throw ParseError(line.no, line.toks[i].column,
                         "trailing tokens after meta value");
      p.meta[key] = v;
    } else if (kind == "objective") {
      if (saw_objective)
        throw ParseError(line.no, line.toks[0].column,
                         "duplicate objective line");
      saw_objective = true;
      p.objective = detail::parse_expr(line.toks, 1, line.toks.size(), names,
                                       n_x, n_y, line.no);
    } else if (kind == "g") {
      if (line.toks.size() < 4 || line.toks[2].text != ":")
        throw ParseError(line.no, 0, "expected: g <yname> : <expr>");
      const Token& yn = line.toks[1];
      auto it = names.y.find(yn.text);
      if (it == names.y.end())
        throw ParseError(line.no, yn.column,
                         "'" + yn.text + "' is not a y variable");
      if (g_line[it->second] != 0)
        throw ParseError(line.no, yn.column,
                         "duplicate g row for '" + yn.text + "'");
      g_line[it->second] = line.no;
      p.g[it->second] = detail::parse_expr(line.toks, 3, line.toks.size(),
                                           names, n_x, n_y, line.no);
    } else if (kind == "row") {
      size_t rel = 0;
      for (size_t i = 1; i < line.toks.size(); ++i) {
        const std::string& t = line.toks[i].text;
        if (t == "<=" || t == "=" || t == ">=") {
          if (rel != 0)
            throw ParseError(line.no, line.toks[i].column,
                             "second relation in one row");
          rel = i;
        }
      }
      if (rel == 0)
        throw ParseError(line.no, 0, "row needs a relation (<=, =, >=)");
      LinearConstraint c;
      const AffineExpr lhs = detail::parse_expr(line.toks, 1, rel, names, n_x,
                                                n_y, line.no);
      const AffineExpr rhs = detail::parse_expr(
          line.toks, rel + 1, line.toks.size(), names, n_x, n_y, line.no);
      c.expr = AffineExpr(n_x, n_y, lhs.constant - rhs.constant);
      for (int j = 0; j < n_x; ++j)
        c.expr.coeffs_x[j] = lhs.coeffs_x[j] - rhs.coeffs_x[j];
      for (int i = 0; i < n_y; ++i)
        c.expr.coeffs_y[i] = lhs.coeffs_y[i] - rhs.coeffs_y[i];
      const std::string& r = line.toks[rel].text;
      c.relation = r == "<=" ? Relation::LessEq
                 : r == "="  ? Relation::Eq
                             : Relation::GreaterEq;
      p.omega.push_back(c);
    } else {
      throw ParseError(line.no, line.toks[0].column,
                       "unknown directive '" + kind + "'");
    }
  }
  if (!saw_objective) throw ParseError(0, 0, "missing objective line");
  for (int i = 0; i < n_y; ++i)
    if (g_line[i] == 0)
      throw ParseError(0, 0, "missing g row for '" + p.y_names[i] + "'");

  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, 0, std::string("invalid problem: ") + e.what());
  }
  return p;
}

// Canonical text for a problem; parse_problem(serialize_problem(p)) equals p
// field for field, with every double printed at full precision.
inline std::string serialize_problem(const MpecProblem& p) {
  p.validate();
  for (const std::string& n : p.x_names)
    if (!detail::valid_name(n))
      throw std::invalid_argument("unserializable variable name: " + n);
  for (const std::string& n : p.y_names)
    if (!detail::valid_name(n))
      throw std::invalid_argument("unserializable variable name: " + n);
  if (p.name.empty() || p.name.find_first_of(" \t#\n") != std::string::npos)
    throw std::invalid_argument("unserializable problem name");

  std::string out = "problem " + p.name + "\n";
  for (const auto& [key, value] : p.meta)
    out += "meta " + key + " " + detail::format_full(value) + "\n";
  for (int j = 0; j < p.n_x; ++j)
    out += "var " + p.x_names[j] + " x " + detail::format_bound(p.x_lower[j]) +
           " " + detail::format_bound(p.x_upper[j]) + "\n";
  for (int i = 0; i < p.n_y; ++i)
    out += "var " + p.y_names[i] + " y " + detail::format_bound(p.y_lower[i]) +
           " " + detail::format_bound(p.y_upper[i]) + "\n";
  out += "objective " + detail::format_expr(p.objective, p.x_names, p.y_names) +
         "\n";
  for (int i = 0; i < p.n_y; ++i)
    out += "g " + p.y_names[i] + " : " +
           detail::format_expr(p.g[i], p.x_names, p.y_names) + "\n";
  for (const LinearConstraint& c : p.omega) {
    AffineExpr lhs = c.expr;
    const double rhs = -lhs.constant;
    lhs.constant = 0.0;
    const char* rel = c.relation == Relation::LessEq ? "<="
                    : c.relation == Relation::Eq     ? "="
                                                     : ">=";
    out += "row " + detail::format_expr(lhs, p.x_names, p.y_names) + " " +
           rel + " " + detail::format_full(rhs) + "\n";
  }
  return out;
}

// Output-side number format: 9 significant digits, the toolkit's stable
// precision for CSV and logs.
inline std::string format_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Shared CSV column schema: L,f,fpen,complementary,x...,y...,g... with one
// g column per pair, named after its y variable.
inline std::string csv_header(const MpecProblem& p) {
  std::string out = "L,f,fpen,complementary";
  for (const std::string& n : p.x_names) out += "," + n;
  for (const std::string& n : p.y_names) out += "," + n;
  for (const std::string& n : p.y_names) out += ",g_" + n;
  return out;
}

namespace detail {

inline std::string csv_row(const MpecProblem& p, double L, double f,
                           double fpen, bool complementary, const Point& pt) {
  std::string out = format_g9(L) + "," + format_g9(f) + "," + format_g9(fpen) +
                    "," + (complementary ? "true" : "false");
  for (double v : pt.x) out += "," + format_g9(v);
  for (double v : pt.y) out += "," + format_g9(v);
  for (double v : eval_g(p, pt)) out += "," + format_g9(v);
  return out;
}

}  // namespace detail

struct SweepRow {
  double L;
  PenaltySolution solution;
};

// One CSV line per solved weight, in the order given.
inline std::string sweep_csv(const MpecProblem& p,
                             const std::vector<SweepRow>& rows) {
  std::string out = csv_header(p) + "\n";
  for (const SweepRow& r : rows) {
    if (r.solution.status != SolveStatus::Optimal)
      throw std::invalid_argument("sweep_csv: non-optimal row at L = " +
                                  format_g9(r.L));
    out += detail::csv_row(p, r.L, r.solution.f, r.solution.fpen,
                           r.solution.comp.complementary, r.solution.point) +
           "\n";
  }
  return out;
}

// Frontier export: the data rows are the nondominated points (the L column
// holds each point's window start), the comments carry the weight windows
// and the probe history so the search is auditable from the file alone.
inline std::string frontier_csv(const MpecProblem& p, const Frontier& fr) {
  if (fr.points.empty())
    throw std::invalid_argument("frontier_csv: empty frontier");
  std::string out;
  out += "# frontier: " + std::to_string(fr.points.size()) + " points, L_bar = " +
         format_g9(compute_L_bar(fr)) + "\n";
  for (size_t k = 0; k < fr.points.size(); ++k) {
    const FrontierPoint& pt = fr.points[k];
    out += "# segment " + std::to_string(k + 1) + ": L in [" +
           format_g9(pt.L_lo) + ", " + format_g9(pt.L_hi) + ")\n";
  }
  for (const FrontierProbe& pr : fr.probes) {
    out += "# probe L=" + format_g9(pr.L) + " line=" +
           format_g9(pr.line_value) + " value=" + format_g9(pr.probe_value) +
           " found=(" + format_g9(pr.found_f) + ", " + format_g9(pr.found_fpen) +
           ") inserted=" + (pr.inserted ? "true" : "false") + "\n";
  }
  out += csv_header(p) + "\n";
  for (const FrontierPoint& pt : fr.points)
    out += detail::csv_row(p, pt.L_lo, pt.f, pt.fpen, pt.complementary,
                           pt.solution) +
           "\n";
  return out;
}

// FNV-1a over the raw bytes; used to stamp run records with their input.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

}  // namespace lpcc
