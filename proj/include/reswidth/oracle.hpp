#pragma once

#include <algorithm>
#include <bit>
#include <deque>
#include <future>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "reswidth/cnf.hpp"
#include "reswidth/packed.hpp"
#include "reswidth/trace.hpp"

// Exhaustive semantic ground truth: satisfiability, implication and
// width-bounded saturation. Everything here is exponential on purpose and
// guarded by an explicit variable cap.

namespace reswidth {

struct SatResult {
  bool satisfiable = false;
  std::vector<Var> support;     // variables enumerated, ascending
  std::vector<bool> assignment;  // parallel to `support`; first in lexicographic order
};

struct OracleOptions {
  unsigned cap = packed::kDefaultOracleCap;
  unsigned jobs = 1;
};

namespace detail {

// Smallest a in [0, 2^n) with pred(a), split across `jobs` workers.
template <class Pred>
std::optional<std::uint64_t> first_match(std::size_t nbits, unsigned jobs, const Pred& pred) {
  const std::uint64_t total = std::uint64_t{1} << nbits;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
    for (std::uint64_t a = lo; a < hi; ++a)
      if (pred(a)) return a;
    return std::nullopt;
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 4096) return scan(0, total);
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  std::vector<std::future<std::optional<std::uint64_t>>> parts;
  for (std::uint64_t lo = 0; lo < total; lo += chunk)
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(total, lo + chunk)));
  std::optional<std::uint64_t> best;
  for (auto& p : parts) {
    auto r = p.get();
    if (r && !best) best = r;
  }
  return best;
}

inline SatResult sat_over(const std::vector<RDnfFormula>& fs, const packed::Support& sup,
                          const OracleOptions& opts) {
  sup.require_within(opts.cap);
  const auto compiled = packed::compile(fs, sup);
  auto hit = first_match(sup.size(), opts.jobs, [&](std::uint64_t a) { return packed::all_true(compiled, a); });
  SatResult res;
  res.support = sup.vars();
  if (hit) {
    res.satisfiable = true;
    for (auto v : sup.vars()) res.assignment.push_back(sup.value(*hit, v));
  }
  return res;
}

inline std::vector<RDnfFormula> as_formulas(std::span<const Clause> cs) {
  std::vector<RDnfFormula> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(RDnfFormula::from_clause(c));
  return out;
}

}  // namespace detail

/// Exhaustive satisfiability over variables 1..num_vars.
inline SatResult sat_enumerate(const CnfFormula& f, const OracleOptions& opts = {}) {
  return detail::sat_over(detail::as_formulas(f.clauses()), packed::Support::range(f.num_vars()), opts);
}

/// Exhaustive satisfiability of a configuration over the variables it mentions.
inline SatResult sat_enumerate(const Configuration& c, const OracleOptions& opts = {}) {
  return detail::sat_over(c, packed::Support(packed::variables_of(c)), opts);
}

/// c |= c2: no assignment satisfies every formula of c and falsifies one of c2.
inline bool implies(const Configuration& c, const Configuration& c2, const OracleOptions& opts = {}) {
  auto vars = packed::variables_of(c);
  auto more = packed::variables_of(c2);
  vars.insert(vars.end(), more.begin(), more.end());
  packed::Support sup(std::move(vars));
  sup.require_within(opts.cap);
  const auto lhs = packed::compile(c, sup);
  const auto rhs = packed::compile(c2, sup);
  auto counter = detail::first_match(sup.size(), opts.jobs, [&](std::uint64_t a) {
    return packed::all_true(lhs, a) && !packed::all_true(rhs, a);
  });
  return !counter;
}

inline bool implies(std::span<const Clause> c, std::span<const Clause> c2, const OracleOptions& opts = {}) {
  return implies(detail::as_formulas(c), detail::as_formulas(c2), opts);
}

inline Configuration to_configuration(std::span<const Clause> cs) {
  auto fs = detail::as_formulas(cs);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

struct SaturationOptions {
  std::size_t max_clauses = 1u << 20;
};

namespace detail {

inline Clause clause_from_masks(std::uint64_t pos, std::uint64_t neg) {
  std::vector<Literal> lits;
  for (std::uint64_t m = pos | neg; m; m &= m - 1) {
    const int b = std::countr_zero(m);
    lits.push_back(Literal(static_cast<Var>(b + 1), (pos >> b) & 1));
  }
  return Clause(std::move(lits));
}

}  // namespace detail

/// Closes the clauses of width <= w under resolution, keeping only resolvents
/// of width <= w (given-clause loop, FIFO queue, forward subsumption). If the
/// empty clause appears, returns a refutation that downloads each axiom just
/// before its first use and erases every clause after its last use;
/// otherwise nullopt, which certifies that no width-w refutation exists.
inline std::optional<Trace> saturate_width(const CnfFormula& f, std::size_t w,
                                           const SaturationOptions& opts = {}) {
  if (f.num_vars() > 64) throw CapExceeded("saturation supports at most 64 variables");

  struct Node {
    Clause clause;
    int p1 = -1;
    int p2 = -1;
  };
  std::vector<Node> nodes;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::deque<int> queue;
  std::vector<int> processed;
  int empty_node = -1;

  auto add = [&](Clause c, int p1, int p2) {
    if (!seen.insert({c.pos_mask(), c.neg_mask()}).second) return;
    if (nodes.size() >= opts.max_clauses) throw CapExceeded("saturation clause limit reached");
    nodes.push_back({std::move(c), p1, p2});
    const int id = static_cast<int>(nodes.size() - 1);
    queue.push_back(id);
    if (nodes.back().clause.empty()) empty_node = id;
  };

  for (const auto& c : f.clauses())
    if (c.size() <= w) add(c, -1, -1);

  while (!queue.empty() && empty_node < 0) {
    const int g = queue.front();
    queue.pop_front();
    const Clause given = nodes[g].clause;
    bool subsumed = false;
    for (int p : processed)
      if (nodes[p].clause.subset_of(given)) {
        subsumed = true;
        break;
      }
    if (subsumed) continue;
    for (int p : processed) {
      const Clause& other = nodes[p].clause;
      const std::uint64_t clash = (given.pos_mask() & other.neg_mask()) | (given.neg_mask() & other.pos_mask());
      if (std::popcount(clash) != 1) continue;
      const std::uint64_t pos = (given.pos_mask() | other.pos_mask()) & ~clash;
      const std::uint64_t neg = (given.neg_mask() | other.neg_mask()) & ~clash;
      if (static_cast<std::size_t>(std::popcount(pos | neg)) > w) continue;
      add(detail::clause_from_masks(pos, neg), p, g);
      if (empty_node >= 0) break;
    }
    processed.push_back(g);
  }
  if (empty_node < 0) return std::nullopt;

  // Collect the derivation of the empty clause.
  std::vector<bool> needed(nodes.size(), false);
  std::vector<int> stack{empty_node};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    if (needed[n]) continue;
    needed[n] = true;
    if (nodes[n].p1 >= 0) {
      stack.push_back(nodes[n].p1);
      stack.push_back(nodes[n].p2);
    }
  }
  std::vector<int> order;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (needed[n] && nodes[n].p1 >= 0) order.push_back(static_cast<int>(n));

  std::vector<std::size_t> last_use(nodes.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    last_use[nodes[order[i]].p1] = i;
    last_use[nodes[order[i]].p2] = i;
  }

  TraceBuilder b(f.num_vars(), 1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Node& n = nodes[order[i]];
    for (int p : {n.p1, n.p2})
      if (nodes[p].p1 < 0 && !b.live(nodes[p].clause)) b.download(nodes[p].clause);
    b.resolve(nodes[n.p1].clause, nodes[n.p2].clause, n.clause);
    for (int p : {n.p1, n.p2})
      if (last_use[p] == i) b.erase(nodes[p].clause);
  }
  return b.take();
}

/// Smallest w <= max_width admitting a refutation, with that refutation.
inline std::optional<std::pair<std::size_t, Trace>> min_refutation_width(const CnfFormula& f, std::size_t max_width,
                                                                         const SaturationOptions& opts = {}) {
  for (std::size_t w = 0; w <= max_width; ++w)
    if (auto t = saturate_width(f, w, opts)) return std::make_pair(w, std::move(*t));
  return std::nullopt;
}

}  // namespace reswidth
