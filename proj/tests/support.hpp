#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reswidth/reswidth.hpp"

#ifndef RESWIDTH_TEST_DATA
#define RESWIDTH_TEST_DATA "tests/data"
#endif

namespace testing_support {

using namespace reswidth;

inline std::string data_path(const std::string& name) { return std::string(RESWIDTH_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Clause cl(std::initializer_list<long long> lits) { return Clause::from_dimacs(lits); }
inline Term term_of(std::initializer_list<long long> lits) { return Term::from_dimacs(lits); }

inline ChargedGraph triangle() { return ChargedGraph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 0, 0}); }

/// Random configuration: up to `max_clauses` clauses of width 1..3 over
/// variables 1..vars.
inline std::vector<Clause> random_configuration(std::mt19937_64& rng, Var vars, std::size_t max_clauses) {
  std::uniform_int_distribution<std::size_t> count(0, max_clauses);
  std::uniform_int_distribution<std::size_t> width(1, std::min<std::size_t>(3, vars));
  std::uniform_int_distribution<Var> var(1, vars);
  std::vector<Clause> out;
  const std::size_t m = count(rng);
  while (out.size() < m) {
    std::vector<Literal> lits;
    const std::size_t w = width(rng);
    while (lits.size() < w) {
      Literal l(var(rng), rng() & 1);
      bool clash = false;
      for (auto x : lits) clash |= x.var() == l.var();
      if (!clash) lits.push_back(l);
    }
    out.emplace_back(std::move(lits));
  }
  return out;
}

/// Unsatisfiable random 3-CNF over n variables (rejection sampling).
inline CnfFormula random_unsat_3cnf(std::mt19937_64& rng, Var n) {
  for (;;) {
    auto f = random_kcnf(n, static_cast<std::size_t>(n * 11 / 2), 3, rng());
    if (!sat_enumerate(f).satisfiable) return f;
  }
}

/// Minimum-width saturation refutation, with just-in-time downloads and
/// last-use erasures.
inline Trace saturation_refutation(const CnfFormula& f) {
  auto r = min_refutation_width(f, f.num_vars());
  if (!r) throw std::runtime_error("formula is satisfiable");
  return std::move(r->second);
}

/// Random DAG on n vertices with sink n and fan-in at most `fan_in`.
inline PebblingDag random_dag(std::mt19937_64& rng, Vertex n, std::size_t fan_in) {
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<std::size_t> indeg(n + 1), outdeg(n + 1);
    for (Vertex v = 2; v <= n; ++v) {
      const std::size_t k = rng() % (fan_in + 1);
      std::vector<Vertex> preds;
      for (std::size_t i = 0; i < k; ++i) {
        Vertex p = 1 + static_cast<Vertex>(rng() % (v - 1));
        if (std::find(preds.begin(), preds.end(), p) == preds.end()) preds.push_back(p);
      }
      for (auto p : preds) {
        arcs.emplace_back(p, v);
        ++indeg[v];
        ++outdeg[p];
      }
    }
    bool ok = true;
    for (Vertex v = 1; v < n && ok; ++v) {
      if (outdeg[v]) continue;
      ok = false;
      for (Vertex s = v + 1; s <= n; ++s)
        if (indeg[s] < fan_in) {
          arcs.emplace_back(v, s);
          ++indeg[s];
          ++outdeg[v];
          ok = true;
          break;
        }
    }
    if (ok) return PebblingDag(n, arcs);
  }
}

/// Semantic check of a negated configuration: an assignment satisfies every
/// formula of c iff it falsifies every literal of some clause in `negated`.
inline bool negation_is_exact(const Configuration& c, const std::vector<Clause>& negated) {
  auto vars = packed::variables_of(c);
  for (const auto& d : negated)
    for (auto l : d) vars.push_back(l.var());
  packed::Support sup(vars);
  const auto compiled = packed::compile(c, sup);
  std::vector<packed::Cube> cubes;
  for (const auto& d : negated) cubes.push_back(packed::pack(negate(d), sup));
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << sup.size()); ++a) {
    const bool lhs = packed::all_true(compiled, a);
    const bool rhs = std::any_of(cubes.begin(), cubes.end(), [&](const auto& t) { return packed::term_true(t, a); });
    if (lhs != rhs) return false;
  }
  return true;
}

/// The 2-DNF refutation of the pyramid(2) pebbling formula kept in tests/data.
inline Trace pyramid2_r2() { return parse_trace(read_file("pyramid2_r2.rtrace")); }

}  // namespace testing_support
