#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "reswidth/negation.hpp"
#include "reswidth/normalize.hpp"
#include "reswidth/trace.hpp"

namespace reswidth {

struct TransformReport {
  std::size_t input_space = 0;
  std::size_t formula_width = 0;
  unsigned r_bound = 1;
  std::size_t output_width = 0;
  std::size_t output_length = 0;
  std::size_t output_space = 0;
  std::size_t claimed_bound = 0;
  // Gap filling.
  std::size_t weakenings = 0;         // clauses obtained by a single weakening
  std::size_t chains = 0;             // clauses obtained by a resolution chain through an axiom
  std::size_t chain_resolutions = 0;  // resolution steps inside those chains
  std::size_t downloads = 0;

  bool within_bound() const { return output_width <= claimed_bound; }
};

struct TransformResult {
  Trace trace;
  TransformReport report;
  /// checkpoints[j]: number of output steps after which the live clauses are
  /// exactly the negated configuration of input configuration tau - j.
  std::vector<std::size_t> checkpoints;
};

/// s + k - 3 for resolution, (s - 2) r + k - 1 for r-DNF input.
inline std::size_t claimed_width_bound(std::size_t space, std::size_t k, unsigned r) {
  const long long s = static_cast<long long>(space), kk = static_cast<long long>(k);
  const long long b = r == 1 ? s + kk - 3 : (s - 2) * static_cast<long long>(r) + kk - 1;
  return static_cast<std::size_t>(std::max(0LL, b));
}

namespace detail {

struct GapFiller {
  TraceBuilder out;
  TransformReport& report;

  std::optional<Clause> live_subsumer(const Clause& c) const {
    for (const auto& [f, id] : out.live_formulas()) {
      auto lc = f.as_clause();
      if (lc && lc->subset_of(c)) return lc;
    }
    return std::nullopt;
  }

  // Makes c live by weakening a live clause contained in it.
  void weaken_into(const Clause& c) {
    if (out.live(c)) return;
    auto from = live_subsumer(c);
    if (!from) throw std::logic_error("no live clause subsumes " + c.to_string());
    out.weaken(*from, c);
    ++report.weakenings;
  }

  // Derives c from the live clauses plus axiom a: resolve a successively
  // with c v ~a_i for every literal a_i of a outside c.
  void chain(const Clause& a, const Clause& c, const std::set<Clause>& keep) {
    if (live_subsumer(c)) {
      weaken_into(c);
      return;
    }
    Clause current = a;
    bool temporary = false;
    for (auto lit : a) {
      if (c.contains(lit)) continue;
      Clause h = c.with(~lit);
      weaken_into(h);
      Clause next = *current.without(lit).merged(c);
      const bool fresh = out.resolve(current, h, next);
      report.chain_resolutions += fresh;
      if (temporary && !keep.count(current)) out.erase(current);
      current = std::move(next);
      temporary = fresh;
    }
    ++report.chains;
  }

  void erase_outside(const std::vector<Clause>& target) {
    std::set<Clause> want(target.begin(), target.end());
    std::vector<RDnfFormula> drop;
    for (const auto& [f, id] : out.live_formulas()) {
      auto c = f.as_clause();
      if (!c || !want.count(*c)) drop.push_back(f);
    }
    for (const auto& f : drop) out.erase(f);
  }
};

inline std::vector<Clause> negate_live(const std::set<RDnfFormula>& config, unsigned r) {
  std::vector<RDnfFormula> fs(config.begin(), config.end());
  if (r == 1) return negate_configuration(as_clauses(fs));
  return negate_configuration_rdnf(fs);
}

}  // namespace detail

/// Runs a space-s refutation backwards through its negated configurations and
/// fills every gap with weakenings or resolution chains through the
/// downloaded axiom. Accepts r-DNF input; the output is always a resolution
/// refutation.
inline TransformResult space_to_width_rdnf(const CnfFormula& formula, const Trace& trace) {
  const auto vr = verify(formula, trace);
  if (!vr.refutation) throw NotARefutation();

  const Trace normalized = normalize_for_transform(formula, trace);
  const auto steps = to_set_steps(normalized);

  // D_0 .. D_tau.
  std::vector<std::vector<Clause>> negated;
  {
    std::set<RDnfFormula> config;
    negated.push_back(detail::negate_live(config, trace.r_bound));
    for (const auto& s : steps) {
      if (s.kind == StepKind::Erasure)
        config.erase(s.result);
      else
        config.insert(s.result);
      negated.push_back(detail::negate_live(config, trace.r_bound));
    }
  }
  if (!negated.back().empty()) throw std::logic_error("final negated configuration is not empty");

  TransformResult result;
  TransformReport& rep = result.report;
  rep.input_space = vr.measures.space;
  rep.formula_width = formula.max_width();
  rep.r_bound = trace.r_bound;
  rep.claimed_bound = claimed_width_bound(rep.input_space, rep.formula_width, trace.r_bound);

  detail::GapFiller fill{TraceBuilder(formula.num_vars(), 1), rep};
  result.checkpoints.push_back(0);
  for (std::size_t t = steps.size(); t-- > 0;) {
    const auto& target = negated[t];
    const std::set<Clause> keep(target.begin(), target.end());
    if (steps[t].kind == StepKind::Download) {
      const Clause a = *steps[t].result.as_clause();
      if (fill.out.download(a)) ++rep.downloads;
      for (const auto& c : target)
        if (!fill.out.live(c)) fill.chain(a, c, keep);
    } else {
      for (const auto& c : target) fill.weaken_into(c);
    }
    fill.erase_outside(target);
    result.checkpoints.push_back(fill.out.trace().steps.size());
  }

  result.trace = fill.out.take();
  const auto out = verify(formula, result.trace);
  if (!out.refutation) throw std::logic_error("transformed trace is not a refutation");
  rep.output_width = out.measures.width.value_or(0);
  rep.output_length = out.measures.length;
  rep.output_space = out.measures.space;
  return result;
}

/// Resolution input only; same construction as the r-DNF entry point.
inline TransformResult space_to_width(const CnfFormula& formula, const Trace& trace) {
  if (trace.r_bound != 1) throw InvalidArgument("space_to_width expects a resolution trace (r = 1)");
  return space_to_width_rdnf(formula, trace);
}

/// Rewrites a resolution trace with weakening steps into one without: each
/// formula is represented by a clause contained in it, and a resolution whose
/// representative premise lacks the pivot reuses that premise instead.
inline Trace strip_weakenings(const CnfFormula& formula, const Trace& trace) {
  if (trace.r_bound != 1) throw InvalidArgument("strip_weakenings expects a resolution trace");
  verify(formula, trace);

  TraceBuilder b(trace.num_vars, 1);
  std::vector<Clause> rep;             // id - 1 -> representative
  std::map<Clause, std::size_t> refs;  // representative -> live ids using it

  auto hold = [&](const Clause& c) { ++refs[c]; };
  for (const auto& step : trace.steps) {
    if (step.kind == StepKind::Erasure) {
      const Clause& c = rep.at(step.premises[0] - 1);
      if (--refs[c] == 0) {
        refs.erase(c);
        b.erase(c);
      }
      continue;
    }
    const Clause result = *step.result.as_clause();
    Clause r;
    switch (step.kind) {
      case StepKind::Download:
        r = result;
        b.download(r);
        break;
      case StepKind::Weakening:
        r = rep.at(step.premises[0] - 1);
        break;
      case StepKind::Cut: {
        const Clause& r1 = rep.at(step.premises[0] - 1);
        const Clause& r2 = rep.at(step.premises[1] - 1);
        std::optional<Literal> pivot;
        for (auto l : r1)
          if (r2.contains(~l)) pivot = l;
        if (pivot) {
          r = *r1.without(*pivot).merged(r2.without(~*pivot));
          b.resolve(r1, r2, r);
        } else {
          // One representative misses the pivot; keep whichever is inside the result.
          r = r1.subset_of(result) ? r1 : r2;
        }
        break;
      }
      default:
        throw InvalidArgument("strip_weakenings: unsupported rule");
    }
    hold(r);
    rep.push_back(std::move(r));
  }
  auto out = b.take();
  verify(formula, out);
  return out;
}

}  // namespace reswidth
