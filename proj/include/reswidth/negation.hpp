#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "reswidth/oracle.hpp"
#include "reswidth/packed.hpp"
#include "reswidth/rdnf.hpp"
#include "reswidth/trace.hpp"

namespace reswidth {

namespace detail {

// Keeps the subset-minimal clauses, in (width, lex) order.
inline std::vector<Clause> minimize(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end(), ByWidthThenLex{});
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Clause> kept;
  kept.reserve(cs.size());
  for (auto& c : cs) {
    bool subsumed = false;
    for (const auto& k : kept) {
      if (k.size() >= c.size()) break;
      if (k.subset_of(c)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(std::move(c));
  }
  return kept;
}

// One inductive step: every clause D of `acc` is extended by one negated
// option; trivial results are dropped and the result is minimized.
inline std::vector<Clause> extend(const std::vector<Clause>& acc, const std::vector<Clause>& options) {
  std::vector<Clause> next;
  next.reserve(acc.size() * options.size());
  for (const auto& d : acc)
    for (const auto& o : options)
      if (auto m = d.merged(o)) next.push_back(std::move(*m));
  return minimize(std::move(next));
}

}  // namespace detail

/// The negated configuration: starting from {0}, each clause C of the
/// configuration replaces every D by the clauses D v ~a for a in C. Trivial
/// and subsumed clauses are pruned after every step, which yields the same
/// final set as pruning once at the end. Output is sorted by (width, lex).
inline std::vector<Clause> negate_configuration(std::span<const Clause> config) {
  std::vector<Clause> acc{Clause{}};
  std::vector<Clause> sorted(config.begin(), config.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& c : sorted) {
    std::vector<Clause> options;
    for (auto l : c) options.push_back(Clause{~l});
    acc = detail::extend(acc, options);
    if (acc.empty()) break;
  }
  return acc;
}

/// The r-DNF analogue: each formula contributes the negation of one of its
/// terms, a clause of at most r literals.
inline std::vector<Clause> negate_configuration_rdnf(std::span<const RDnfFormula> config) {
  std::vector<Clause> acc{Clause{}};
  std::vector<RDnfFormula> sorted(config.begin(), config.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& f : sorted) {
    std::vector<Clause> options;
    for (const auto& t : f.terms()) options.push_back(negate(t));
    acc = detail::extend(acc, options);
    if (acc.empty()) break;
  }
  return acc;
}

/// Brute-force minimal implicants: every non-trivial clause C over the
/// configuration's variables, by increasing width, such that the term ~C
/// implies all formulas and no smaller kept clause is contained in C.
/// Implication is checked by enumerating the assignments of the subcube ~C.
inline std::vector<Clause> minimal_implicants_oracle(const Configuration& config,
                                                     unsigned cap = packed::kDefaultOracleCap) {
  packed::Support sup(packed::variables_of(config));
  sup.require_within(cap);
  const std::size_t n = sup.size();
  const auto compiled = packed::compile(config, sup);

  // Truth table of the configuration.
  std::vector<bool> models(std::size_t{1} << n);
  for (std::uint64_t a = 0; a < models.size(); ++a) models[a] = packed::all_true(compiled, a);

  const auto& vars = sup.vars();
  std::vector<Clause> kept;
  // Each non-trivial clause over the support is a vector over {absent, neg, pos}.
  for (std::size_t w = 0; w <= n; ++w) {
    std::vector<std::size_t> chosen(w);
    for (std::size_t i = 0; i < w; ++i) chosen[i] = i;
    for (;;) {
      for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << w); ++signs) {
        std::vector<Literal> lits;
        std::uint64_t fixed_mask = 0, fixed_val = 0;
        for (std::size_t i = 0; i < w; ++i) {
          const bool positive = (signs >> (w - 1 - i)) & 1;
          const Var v = vars[chosen[i]];
          lits.push_back(Literal(v, positive));
          fixed_mask |= sup.bit(v);
          if (!positive) fixed_val |= sup.bit(v);  // ~C makes negative literals true
        }
        Clause c(std::move(lits));
        bool subsumed = false;
        for (const auto& k : kept)
          if (k.subset_of(c)) {
            subsumed = true;
            break;
          }
        if (subsumed) continue;
        // Walk the subcube: all assignments agreeing with fixed_val on fixed_mask.
        const std::uint64_t free = ~fixed_mask & ((std::uint64_t{1} << n) - 1);
        bool implied = true;
        std::uint64_t sub = 0;
        do {
          if (!models[fixed_val | sub]) {
            implied = false;
            break;
          }
          sub = (sub - free) & free;
        } while (sub != 0);
        if (implied) kept.push_back(std::move(c));
      }
      // Next combination.
      std::size_t i = w;
      while (i > 0 && chosen[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < w; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  std::sort(kept.begin(), kept.end(), ByWidthThenLex{});
  return kept;
}

inline std::vector<Clause> minimal_implicants_oracle(std::span<const Clause> config,
                                                     unsigned cap = packed::kDefaultOracleCap) {
  return minimal_implicants_oracle(detail::as_formulas(config), cap);
}

}  // namespace reswidth
