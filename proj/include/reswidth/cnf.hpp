#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "reswidth/error.hpp"
#include "reswidth/literal.hpp"

namespace reswidth {

/// A CNF formula: an ordered clause list over variables 1..num_vars.
/// Never contains the empty clause.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(Var num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) {
      if (c.empty()) throw InvalidArgument("CNF formula contains the empty clause");
      if (c.max_var() > num_vars_)
        throw InvalidArgument("literal variable " + std::to_string(c.max_var()) + " exceeds " +
                              std::to_string(num_vars_));
      max_width_ = std::max(max_width_, c.size());
    }
  }

  Var num_vars() const noexcept { return num_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  std::size_t max_width() const noexcept { return max_width_; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  Var num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::size_t max_width_ = 0;
};

inline std::size_t width(const CnfFormula& f) { return f.max_width(); }

struct DimacsOptions {
  // Clause lists fed to `negconf` may legitimately contain the empty clause.
  bool allow_empty_clause = false;
};

/// Raw result of reading a DIMACS stream, before CnfFormula validation.
struct DimacsClauses {
  Var num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> warnings;
};

inline DimacsClauses read_dimacs_clauses(std::istream& in, const DimacsOptions& opts = {}) {
  DimacsClauses out;
  bool have_header = false;
  long long declared = 0;
  std::vector<Literal> current;
  std::size_t clause_line = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    if (line[first] == 'p') {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      std::istringstream hs(line.substr(first + 1));
      std::string fmt;
      long long n = -1, m = -1;
      std::string extra;
      if (!(hs >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0 || (hs >> extra))
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      out.num_vars = static_cast<Var>(n);
      declared = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected integer literal, got '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(lineno, "expected integer literal, got '" + tok + "'");
      if (current.empty()) clause_line = lineno;
      if (v == 0) {
        auto c = Clause::make(std::move(current));
        current.clear();
        if (!c) throw ParseError(clause_line, "trivial clause");
        if (c->empty() && !opts.allow_empty_clause) throw ParseError(clause_line, "empty clause");
        out.clauses.push_back(std::move(*c));
        continue;
      }
      const auto var = static_cast<unsigned long long>(v < 0 ? -v : v);
      if (var > out.num_vars) throw ParseError(lineno, "literal " + tok + " out of range");
      current.push_back(Literal::from_dimacs(v));
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(clause_line, "unterminated clause");
  if (static_cast<long long>(out.clauses.size()) != declared)
    out.warnings.push_back("header declares " + std::to_string(declared) + " clauses, found " +
                           std::to_string(out.clauses.size()));
  return out;
}

/// Parses DIMACS CNF. A clause-count mismatch is reported through `warnings`.
inline CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  auto raw = read_dimacs_clauses(in);
  if (warnings) *warnings = std::move(raw.warnings);
  return CnfFormula(raw.num_vars, std::move(raw.clauses));
}

inline CnfFormula parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

inline void write_clause_line(std::ostream& out, const Clause& c) {
  for (auto l : c) out << l.to_dimacs() << ' ';
  out << "0\n";
}

inline void write_dimacs(std::ostream& out, Var num_vars, std::span<const Clause> clauses) {
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) write_clause_line(out, c);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
  write_dimacs(out, f.num_vars(), f.clauses());
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  write_dimacs(os, f);
  return os.str();
}

}  // namespace reswidth
