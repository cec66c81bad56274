#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reswidth/cnf.hpp"
#include "reswidth/error.hpp"
#include "reswidth/rdnf.hpp"

namespace reswidth {

enum class StepKind { Download, Cut, AndIntro, AndElim, Weakening, Erasure };

inline std::size_t premise_count(StepKind k) {
  switch (k) {
    case StepKind::Download: return 0;
    case StepKind::Cut:
    case StepKind::AndIntro: return 2;
    default: return 1;
  }
}

inline bool produces_formula(StepKind k) { return k != StepKind::Erasure; }

/// One line of a space-annotated derivation. Every step except Erasure
/// produces a formula and receives the next id (ids start at 1). Erasure's
/// single premise is the id being removed.
struct Step {
  StepKind kind = StepKind::Download;
  std::vector<std::size_t> premises;
  RDnfFormula result;

  static Step download(const Clause& c) { return {StepKind::Download, {}, RDnfFormula::from_clause(c)}; }
  static Step resolve(std::size_t a, std::size_t b, const Clause& c) {
    return {StepKind::Cut, {a, b}, RDnfFormula::from_clause(c)};
  }
  static Step weaken(std::size_t a, const Clause& c) {
    return {StepKind::Weakening, {a}, RDnfFormula::from_clause(c)};
  }
  static Step erase(std::size_t id) { return {StepKind::Erasure, {id}, {}}; }

  friend bool operator==(const Step&, const Step&) = default;
};

struct Trace {
  Var num_vars = 0;
  unsigned r_bound = 1;
  std::vector<Step> steps;

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct Measures {
  std::size_t length = 0;  // downloads + inferences
  std::size_t space = 0;   // max distinct live formulas after any step
  std::optional<std::size_t> width;  // resolution (r = 1) traces only
};

struct VerifyResult {
  Measures measures;
  bool refutation = false;
};

/// A configuration: the set of live formulas, canonically ordered.
using Configuration = std::vector<RDnfFormula>;

namespace rules {

// Each checker returns nullopt for a legal application, otherwise a reason.

inline std::optional<std::string> check_cut(const RDnfFormula& p1, const RDnfFormula& p2,
                                            const RDnfFormula& r, unsigned r_bound) {
  for (int orientation = 0; orientation < 2; ++orientation) {
    const auto& a = orientation ? p2 : p1;
    const auto& b = orientation ? p1 : p2;
    for (const auto& t : a.terms()) {
      if (t.size() > r_bound) continue;
      std::vector<Term> negs;
      bool present = true;
      for (auto lit : t) {
        Term n{~lit};
        if (!b.contains(n)) {
          present = false;
          break;
        }
        negs.push_back(std::move(n));
      }
      if (!present) continue;
      RDnfFormula rest_b = b;
      for (const auto& n : negs) rest_b = rest_b.without(n);
      const RDnfFormula lower = a.without(t).united(rest_b);
      if (lower.subset_of(r) && r.subset_of(a.united(b))) return std::nullopt;
    }
  }
  return "result is not an r-cut of the premises";
}

inline std::optional<std::string> check_and_intro(const RDnfFormula& p1, const RDnfFormula& p2,
                                                  const RDnfFormula& r, unsigned r_bound) {
  for (const auto& t : p1.terms()) {
    for (const auto& t2 : p2.terms()) {
      auto u = t.merged(t2);
      if (!u || u->size() > r_bound) continue;
      for (int keep = 0; keep < 2; ++keep) {
        const RDnfFormula g = keep ? p1 : p1.without(t);
        if (g.united(RDnfFormula{t2}) != p2) continue;
        if (g.united(RDnfFormula{*u}) == r) return std::nullopt;
      }
    }
  }
  return "result is not an and-introduction of the premises";
}

inline std::optional<std::string> check_and_elim(const RDnfFormula& p, const RDnfFormula& r) {
  for (const auto& t : p.terms()) {
    for (int keep = 0; keep < 2; ++keep) {
      const RDnfFormula g = keep ? p : p.without(t);
      if (!g.subset_of(r)) continue;
      std::vector<Term> extra;
      for (const auto& x : r.terms())
        if (!g.contains(x)) extra.push_back(x);
      if (extra.size() > 1) continue;
      if (extra.size() == 1) {
        if (!extra[0].empty() && extra[0].subset_of(t)) return std::nullopt;
        continue;
      }
      for (const auto& x : g.terms())
        if (!x.empty() && x.subset_of(t)) return std::nullopt;
    }
  }
  return "result is not an and-elimination of the premise";
}

inline std::optional<std::string> check_weakening(const RDnfFormula& p, const RDnfFormula& r) {
  if (p.subset_of(r)) return std::nullopt;
  return "result does not contain the premise";
}

}  // namespace rules

namespace detail {

/// Replays a trace, checking every step, and calls `visit(index, live)`
/// after each step with the multiset of live formulas.
template <class Visitor>
VerifyResult walk_trace(const CnfFormula& formula, const Trace& trace, Visitor&& visit) {
  if (trace.r_bound < 1) throw InvalidArgument("r bound must be at least 1");
  std::set<RDnfFormula> axioms;
  for (const auto& c : formula.clauses()) axioms.insert(RDnfFormula::from_clause(c));

  std::vector<std::size_t> id_step;   // id - 1 -> step index
  std::vector<bool> alive;            // id - 1 -> live?
  std::map<RDnfFormula, std::size_t> live;  // formula -> number of live ids

  VerifyResult res;
  std::size_t width = 0;
  const bool resolution = trace.r_bound == 1;

  auto premise = [&](std::size_t index, std::size_t id) -> const RDnfFormula& {
    if (id == 0 || id > alive.size() || !alive[id - 1]) throw DeadReference(index, id);
    return trace.steps[id_step[id - 1]].result;
  };

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& step = trace.steps[i];
    if (step.premises.size() != premise_count(step.kind))
      throw IllegalStep(i, "wrong number of premises");

    if (step.kind == StepKind::Erasure) {
      const std::size_t id = step.premises[0];
      const RDnfFormula& f = premise(i, id);
      alive[id - 1] = false;
      auto it = live.find(f);
      if (--it->second == 0) live.erase(it);
      visit(i, live);
      continue;
    }

    const RDnfFormula& r = step.result;
    if (r.max_var() > trace.num_vars) throw IllegalStep(i, "variable out of range");
    if (r.max_term_size() > trace.r_bound) throw IllegalStep(i, "term exceeds the r bound");
    if (r.trivial()) throw IllegalStep(i, "trivial result");
    for (const auto& t : r.terms())
      if (t.empty()) throw IllegalStep(i, "empty term in result");

    std::optional<std::string> bad;
    switch (step.kind) {
      case StepKind::Download:
        if (!axioms.count(r)) bad = "downloaded formula is not a clause of the formula";
        break;
      case StepKind::Cut:
        bad = rules::check_cut(premise(i, step.premises[0]), premise(i, step.premises[1]), r, trace.r_bound);
        break;
      case StepKind::AndIntro:
        bad = rules::check_and_intro(premise(i, step.premises[0]), premise(i, step.premises[1]), r,
                                     trace.r_bound);
        break;
      case StepKind::AndElim:
        bad = rules::check_and_elim(premise(i, step.premises[0]), r);
        break;
      case StepKind::Weakening:
        bad = rules::check_weakening(premise(i, step.premises[0]), r);
        break;
      case StepKind::Erasure:
        break;
    }
    if (bad) throw IllegalStep(i, *bad);

    id_step.push_back(i);
    alive.push_back(true);
    ++live[r];
    ++res.measures.length;
    if (resolution) width = std::max(width, r.size());
    visit(i, live);
  }

  for (const auto& [f, n] : live)
    if (f.empty()) res.refutation = true;
  if (resolution) res.measures.width = width;
  return res;
}

}  // namespace detail

/// Checks every step and computes length, space and (for r = 1) width.
/// Throws IllegalStep / DeadReference on the first bad step; a legal
/// derivation that does not end with the empty formula is reported through
/// VerifyResult::refutation.
inline VerifyResult verify(const CnfFormula& formula, const Trace& trace) {
  std::size_t space = 0;
  auto res = detail::walk_trace(formula, trace, [&](std::size_t, const auto& live) {
    space = std::max(space, live.size());
  });
  res.measures.space = space;
  return res;
}

/// Configurations C_0 (empty) through C_tau; one more entry than steps.
inline std::vector<Configuration> replay(const CnfFormula& formula, const Trace& trace) {
  std::vector<Configuration> out;
  out.emplace_back();
  detail::walk_trace(formula, trace, [&](std::size_t, const auto& live) {
    Configuration c;
    c.reserve(live.size());
    for (const auto& [f, n] : live) c.push_back(f);
    out.push_back(std::move(c));
  });
  return out;
}

/// Width of a resolution trace (max clause size over every formula that
/// appears, axioms included).
inline std::size_t width(const CnfFormula& formula, const Trace& trace) {
  auto m = verify(formula, trace).measures;
  if (!m.width) throw InvalidArgument("width is defined for resolution traces only");
  return *m.width;
}

inline bool has_empty_formula(const Configuration& c) {
  for (const auto& f : c)
    if (f.empty()) return true;
  return false;
}

/// Clause view of a resolution configuration.
inline std::vector<Clause> as_clauses(const Configuration& c) {
  std::vector<Clause> out;
  out.reserve(c.size());
  for (const auto& f : c) {
    auto cl = f.as_clause();
    if (!cl) throw InvalidArgument("configuration holds a formula that is not a clause");
    out.push_back(std::move(*cl));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formula-addressed steps. Under set semantics a premise can be named by its
// formula instead of its id; normalization and the proof rewriters work at
// this level and convert back with TraceBuilder.

struct SetStep {
  StepKind kind = StepKind::Download;
  RDnfFormula result;  // for Erasure: the erased formula
  std::vector<RDnfFormula> premises;
};

/// Emits a trace from formula-addressed operations, keeping at most one live
/// id per formula. Producing a formula that is already live emits nothing;
/// so does erasing one that is not.
class TraceBuilder {
 public:
  TraceBuilder(Var num_vars, unsigned r_bound) {
    trace_.num_vars = num_vars;
    trace_.r_bound = r_bound;
  }

  bool live(const RDnfFormula& f) const { return live_.count(f) != 0; }
  bool live(const Clause& c) const { return live(RDnfFormula::from_clause(c)); }
  std::size_t id_of(const RDnfFormula& f) const {
    auto it = live_.find(f);
    if (it == live_.end()) throw std::logic_error("formula is not live: " + f.to_string());
    return it->second;
  }
  std::size_t live_size() const { return live_.size(); }
  const std::map<RDnfFormula, std::size_t>& live_formulas() const { return live_; }

  bool produce(StepKind kind, const RDnfFormula& result, const std::vector<RDnfFormula>& premises) {
    if (live(result)) return false;
    Step s{kind, {}, result};
    for (const auto& p : premises) s.premises.push_back(id_of(p));
    trace_.steps.push_back(std::move(s));
    live_.emplace(result, next_id_++);
    return true;
  }

  bool download(const Clause& c) { return produce(StepKind::Download, RDnfFormula::from_clause(c), {}); }
  bool resolve(const Clause& a, const Clause& b, const Clause& r) {
    auto fa = RDnfFormula::from_clause(a), fb = RDnfFormula::from_clause(b);
    if (id_of(fa) > id_of(fb)) std::swap(fa, fb);
    return produce(StepKind::Cut, RDnfFormula::from_clause(r), {fa, fb});
  }
  bool weaken(const Clause& from, const Clause& to) {
    return produce(StepKind::Weakening, RDnfFormula::from_clause(to), {RDnfFormula::from_clause(from)});
  }

  bool erase(const RDnfFormula& f) {
    auto it = live_.find(f);
    if (it == live_.end()) return false;
    trace_.steps.push_back(Step::erase(it->second));
    live_.erase(it);
    return true;
  }
  bool erase(const Clause& c) { return erase(RDnfFormula::from_clause(c)); }

  void apply(const SetStep& s) {
    if (s.kind == StepKind::Erasure)
      erase(s.result);
    else
      produce(s.kind, s.result, s.premises);
  }

  const Trace& trace() const noexcept { return trace_; }
  Trace take() { return std::move(trace_); }

 private:
  Trace trace_;
  std::map<RDnfFormula, std::size_t> live_;
  std::size_t next_id_ = 1;
};

/// Converts a verified trace to formula-addressed steps, dropping steps that
/// leave the configuration (as a set) unchanged: re-derivations of a live
/// formula and erasures of a duplicate id. Each remaining step changes the
/// configuration size by exactly one.
inline std::vector<SetStep> to_set_steps(const Trace& trace) {
  std::vector<SetStep> out;
  std::vector<const RDnfFormula*> by_id;
  std::map<RDnfFormula, std::size_t> count;
  for (const auto& step : trace.steps) {
    if (step.kind == StepKind::Erasure) {
      const RDnfFormula& f = *by_id.at(step.premises[0] - 1);
      auto it = count.find(f);
      if (--it->second == 0) {
        count.erase(it);
        out.push_back({StepKind::Erasure, f, {}});
      }
      continue;
    }
    by_id.push_back(&step.result);
    if (count[step.result]++ > 0) continue;
    SetStep s{step.kind, step.result, {}};
    for (auto id : step.premises) s.premises.push_back(*by_id.at(id - 1));
    out.push_back(std::move(s));
  }
  return out;
}

inline Trace from_set_steps(Var num_vars, unsigned r_bound, const std::vector<SetStep>& steps) {
  TraceBuilder b(num_vars, r_bound);
  for (const auto& s : steps) b.apply(s);
  return b.take();
}

}  // namespace reswidth
