#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "reswidth/error.hpp"
#include "reswidth/trace.hpp"

// Line-oriented rtrace format:
//
//   p rtrace <nvars> <r>
//   d <formula>                 axiom download
//   r<r> <id1> <id2> <formula>  r-cut (resolution when r = 1)
//   ai <id1> <id2> <formula>    and-introduction
//   ae <id> <formula>           and-elimination
//   w <id> <formula>            weakening
//   e <id>                      erasure
//
// For r = 1 a formula is a clause: literals terminated by 0. For r > 1 it
// is a list of terms, each terminated by 0, closed by one more 0; the empty
// formula is a lone 0 in both cases. Lines starting with 'c' are comments.

namespace reswidth {

namespace detail {

inline std::string cut_keyword(unsigned r) { return "r" + std::to_string(r); }

inline const char* keyword(StepKind k) {
  switch (k) {
    case StepKind::Download: return "d";
    case StepKind::AndIntro: return "ai";
    case StepKind::AndElim: return "ae";
    case StepKind::Weakening: return "w";
    case StepKind::Erasure: return "e";
    case StepKind::Cut: return "";
  }
  return "";
}

class TokenReader {
 public:
  TokenReader(const std::string& line, std::size_t lineno) : in_(line), lineno_(lineno) {}

  bool next(std::string& tok) { return static_cast<bool>(in_ >> tok); }

  long long integer(const char* what) {
    std::string tok;
    if (!next(tok)) throw ParseError(lineno_, std::string("missing ") + what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(lineno_, std::string("expected ") + what + ", got '" + tok + "'");
  }

  std::size_t id() {
    long long v = integer("step id");
    if (v <= 0) throw ParseError(lineno_, "step ids are positive");
    return static_cast<std::size_t>(v);
  }

  Literal literal_or_zero(long long v, Var num_vars) {
    const auto var = static_cast<unsigned long long>(v < 0 ? -v : v);
    if (var > num_vars) throw ParseError(lineno_, "literal " + std::to_string(v) + " out of range");
    return Literal::from_dimacs(v);
  }

  RDnfFormula formula(Var num_vars, unsigned r) {
    if (r == 1) {
      std::vector<Literal> lits;
      for (;;) {
        long long v = integer("literal");
        if (v == 0) break;
        lits.push_back(literal_or_zero(v, num_vars));
      }
      auto c = Clause::make(std::move(lits));
      if (!c) throw ParseError(lineno_, "trivial clause");
      return RDnfFormula::from_clause(*c);
    }
    std::vector<Term> terms;
    for (;;) {
      std::vector<Literal> lits;
      for (;;) {
        long long v = integer("literal");
        if (v == 0) break;
        lits.push_back(literal_or_zero(v, num_vars));
      }
      if (lits.empty()) break;
      auto t = Term::make(std::move(lits));
      if (!t) throw ParseError(lineno_, "trivial term");
      terms.push_back(std::move(*t));
    }
    return RDnfFormula(std::move(terms));
  }

  void finish() {
    std::string tok;
    if (next(tok)) throw ParseError(lineno_, "trailing token '" + tok + "'");
  }

 private:
  std::istringstream in_;
  std::size_t lineno_;
};

}  // namespace detail

inline Trace parse_trace(std::istream& in) {
  Trace trace;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c') continue;
    detail::TokenReader rd(line, lineno);
    std::string kw;
    rd.next(kw);
    if (kw == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string fmt;
      if (!rd.next(fmt) || fmt != "rtrace") throw ParseError(lineno, "expected 'p rtrace <nvars> <r>'");
      long long n = rd.integer("variable count");
      long long r = rd.integer("r bound");
      if (n < 0 || r < 1) throw ParseError(lineno, "bad header values");
      rd.finish();
      trace.num_vars = static_cast<Var>(n);
      trace.r_bound = static_cast<unsigned>(r);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "step before 'p rtrace' header");

    Step step;
    if (kw == "d") {
      step.kind = StepKind::Download;
    } else if (kw == detail::cut_keyword(trace.r_bound)) {
      step.kind = StepKind::Cut;
    } else if (kw == "ai") {
      step.kind = StepKind::AndIntro;
    } else if (kw == "ae") {
      step.kind = StepKind::AndElim;
    } else if (kw == "w") {
      step.kind = StepKind::Weakening;
    } else if (kw == "e") {
      step.kind = StepKind::Erasure;
    } else {
      throw ParseError(lineno, "unknown step keyword '" + kw + "'");
    }
    for (std::size_t k = 0; k < premise_count(step.kind); ++k) step.premises.push_back(rd.id());
    if (produces_formula(step.kind)) step.result = rd.formula(trace.num_vars, trace.r_bound);
    rd.finish();
    trace.steps.push_back(std::move(step));
  }
  if (!have_header) throw ParseError(0, "missing 'p rtrace' header");
  return trace;
}

inline Trace parse_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

/// Parses a single formula body in the syntax used for r-bound `r`.
inline RDnfFormula parse_formula(const std::string& text, Var num_vars, unsigned r) {
  detail::TokenReader rd(text, 0);
  auto f = rd.formula(num_vars, r);
  rd.finish();
  return f;
}

inline void write_formula(std::ostream& out, const RDnfFormula& f, unsigned r) {
  if (r == 1) {
    auto c = f.as_clause();
    if (!c) throw InvalidArgument("r = 1 trace holds a non-clause formula");
    for (auto l : *c) out << ' ' << l.to_dimacs();
    out << " 0";
    return;
  }
  for (const auto& t : f.terms()) {
    for (auto l : t) out << ' ' << l.to_dimacs();
    out << " 0";
  }
  out << " 0";
}

inline void write_trace(std::ostream& out, const Trace& trace) {
  out << "p rtrace " << trace.num_vars << ' ' << trace.r_bound << '\n';
  for (const auto& s : trace.steps) {
    out << (s.kind == StepKind::Cut ? detail::cut_keyword(trace.r_bound) : detail::keyword(s.kind));
    for (auto id : s.premises) out << ' ' << id;
    if (produces_formula(s.kind)) write_formula(out, s.result, trace.r_bound);
    out << '\n';
  }
}

inline std::string emit_trace(const Trace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

}  // namespace reswidth
