#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "reswidth/cnf.hpp"
#include "reswidth/graph.hpp"
#include "reswidth/trace.hpp"

namespace reswidth {

inline constexpr std::size_t kTseitinDegreeCap = 20;

/// Parity clauses of one vertex: for every assignment beta to the incident
/// edges (lowest edge variable most significant) with the wrong parity, the
/// clause falsified by beta.
inline std::vector<Clause> parity_clauses(const ChargedGraph& g, Vertex v) {
  const auto& es = g.incident(v);
  const std::size_t d = es.size();
  if (d > kTseitinDegreeCap) throw CapExceeded("vertex degree exceeds 20");
  if (d == 0) {
    if (g.charge(v)) throw InvalidArgument("isolated vertex " + std::to_string(v) + " has charge 1");
    return {};
  }
  std::vector<Clause> out;
  for (std::uint32_t beta = 0; beta < (1u << d); ++beta) {
    if (static_cast<unsigned>(std::popcount(beta) % 2) == g.charge(v)) continue;
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < d; ++i) lits.push_back(Literal(es[i], !((beta >> (d - 1 - i)) & 1)));
    out.emplace_back(std::move(lits));
  }
  return out;
}

/// Tseitin formula: parity clauses of vertices 1..n in order.
inline CnfFormula tseitin(const ChargedGraph& g) {
  std::vector<Clause> cs;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    auto p = parity_clauses(g, v);
    cs.insert(cs.end(), p.begin(), p.end());
  }
  return CnfFormula(static_cast<Var>(g.num_edges()), std::move(cs));
}

inline Clause pebbling_axiom(const PebblingDag& dag, Vertex v) {
  std::vector<Literal> lits;
  for (auto p : dag.predecessors(v)) lits.push_back(neg(p));
  lits.push_back(pos(v));
  return Clause(std::move(lits));
}

/// Source axioms and pebbling axioms in vertex order, then the sink axiom.
inline CnfFormula pebbling(const PebblingDag& dag) {
  std::vector<Clause> cs;
  for (Vertex v = 1; v <= dag.num_vertices(); ++v) cs.push_back(pebbling_axiom(dag, v));
  cs.push_back(Clause{neg(dag.sink())});
  return CnfFormula(dag.num_vertices(), std::move(cs));
}

enum class PebblingStyle { BottomUp, TopDown };

namespace detail {

inline Trace bottom_up(const PebblingDag& dag) {
  TraceBuilder b(dag.num_vertices(), 1);
  const auto& order = dag.topological_order();
  std::vector<std::size_t> position(dag.num_vertices() + 1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  auto last_successor = [&](Vertex v) {
    Vertex last = 0;
    for (auto s : dag.successors(v))
      if (!last || position[s] > position[last]) last = s;
    return last;
  };

  for (auto v : order)
    if (dag.is_source(v)) b.download(Clause{pos(v)});
  for (auto v : order) {
    if (dag.is_source(v)) continue;
    Clause current = pebbling_axiom(dag, v);
    b.download(current);
    for (auto p : dag.predecessors(v)) {
      Clause next = current.without(neg(p));
      b.resolve(Clause{pos(p)}, current, next);
      b.erase(current);
      current = std::move(next);
    }
    for (auto p : dag.predecessors(v))
      if (last_successor(p) == v) b.erase(Clause{pos(p)});
  }
  const Clause sink{neg(dag.sink())};
  b.download(sink);
  b.resolve(Clause{pos(dag.sink())}, sink, Clause{});
  return b.take();
}

inline Trace top_down(const PebblingDag& dag) {
  TraceBuilder b(dag.num_vertices(), 1);
  Clause current{neg(dag.sink())};
  b.download(current);
  while (!current.empty()) {
    const Vertex v = current.max_var();
    const Clause axiom = pebbling_axiom(dag, v);
    b.download(axiom);
    Clause next = *current.without(neg(v)).merged(axiom.without(pos(v)));
    b.resolve(current, axiom, next);
    if (!next.empty()) {
      b.erase(current);
      b.erase(axiom);
    }
    current = std::move(next);
  }
  return b.take();
}

}  // namespace detail

/// Canonical refutations of pebbling(dag).
///
/// Bottom-up downloads every source axiom, then derives the unit clause of
/// each remaining vertex in topological order and finishes against the sink
/// axiom. Consumed non-unit clauses are erased at once, a unit after the
/// chain of its last successor.
///
/// Top-down starts from the sink axiom and keeps one all-negative clause,
/// always replacing its highest-numbered vertex by that vertex's predecessors.
inline Trace pebbling_refutation(const PebblingDag& dag, PebblingStyle style) {
  return style == PebblingStyle::BottomUp ? detail::bottom_up(dag) : detail::top_down(dag);
}

/// m clauses, each over k distinct variables drawn uniformly from 1..n with
/// uniform signs.
inline CnfFormula random_kcnf(Var n, std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > n) throw InvalidArgument("random k-CNF needs 1 <= k <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Var> var(1, n);
  std::bernoulli_distribution sign(0.5);
  std::vector<Clause> cs;
  cs.reserve(m);
  while (cs.size() < m) {
    std::vector<Var> vs;
    while (vs.size() < k) {
      Var v = var(rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    std::vector<Literal> lits;
    for (auto v : vs) lits.push_back(Literal(v, sign(rng)));
    cs.emplace_back(std::move(lits));
  }
  return CnfFormula(n, std::move(cs));
}

}  // namespace reswidth
