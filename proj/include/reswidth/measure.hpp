#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <span>
#include <vector>

#include "reswidth/generators.hpp"
#include "reswidth/graph.hpp"
#include "reswidth/negation.hpp"
#include "reswidth/oracle.hpp"
#include "reswidth/trace.hpp"

namespace reswidth {

inline constexpr unsigned kMeasureVertexCap = 16;
inline constexpr unsigned kMeasureEdgeCap = 20;

/// mu of a term or configuration over a charged graph. An empty `value` means
/// unbounded: no vertex set makes the term contradictory.
struct MeasureResult {
  std::optional<std::size_t> value;
  Term witness_term;
  std::vector<Vertex> witness_vertices;

  bool bounded() const { return value.has_value(); }
};

/// Orders unbounded above every finite value.
inline bool measure_le(const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
  if (!b) return true;
  return a && *a <= *b;
}

namespace detail {

inline void require_measure_caps(const ChargedGraph& g) {
  if (g.num_vertices() > kMeasureVertexCap || g.num_edges() > kMeasureEdgeCap)
    throw CapExceeded("measure supports at most 16 vertices and 20 edges");
}

// T and the parity constraints of the chosen vertices have no common model.
inline bool contradicts(const Term& t, const ChargedGraph& g, const std::vector<Vertex>& chosen) {
  // Local indices for the free edge variables around the chosen vertices.
  std::vector<Var> free;
  for (auto v : chosen)
    for (auto e : g.incident(v))
      if (!t.contains(pos(e)) && !t.contains(neg(e))) free.push_back(e);
  std::sort(free.begin(), free.end());
  free.erase(std::unique(free.begin(), free.end()), free.end());

  struct Row {
    std::uint32_t mask = 0;
    unsigned parity = 0;  // required parity of the free part
  };
  std::vector<Row> rows;
  for (auto v : chosen) {
    Row r;
    unsigned fixed = 0;
    for (auto e : g.incident(v)) {
      if (t.contains(pos(e))) {
        fixed ^= 1;
      } else if (!t.contains(neg(e))) {
        const auto i = std::lower_bound(free.begin(), free.end(), e) - free.begin();
        r.mask |= std::uint32_t{1} << i;
      }
    }
    r.parity = g.charge(v) ^ fixed;
    rows.push_back(r);
  }
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << free.size()); ++a) {
    bool ok = true;
    for (const auto& r : rows)
      if (static_cast<unsigned>(std::popcount(a & r.mask) & 1) != r.parity) {
        ok = false;
        break;
      }
    if (ok) return false;
  }
  return true;
}

}  // namespace detail

/// Smallest vertex set V' (first in (size, lex) order) such that T together
/// with the parity constraints of V' is unsatisfiable.
inline MeasureResult term_measure(const Term& t, const ChargedGraph& g) {
  detail::require_measure_caps(g);
  if (t.max_var() > g.num_edges()) throw InvalidArgument("term mentions a variable that is not an edge");
  MeasureResult res;
  res.witness_term = t;
  const Vertex n = g.num_vertices();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i + 1);
    for (;;) {
      if (detail::contradicts(t, g, pick)) {
        res.value = k;
        res.witness_vertices = pick;
        return res;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return res;
}

/// Max of term_measure over the minimal terms implying the configuration,
/// which are the negations of its negated-configuration clauses. A
/// contradictory configuration has measure 0.
inline MeasureResult config_measure(std::span<const Clause> config, const ChargedGraph& g) {
  detail::require_measure_caps(g);
  const auto negated = negate_configuration(config);
  MeasureResult best;
  if (negated.empty()) {
    best.value = 0;
    return best;
  }
  bool first = true;
  for (const auto& d : negated) {
    auto m = term_measure(negate(d), g);
    if (first || !measure_le(m.value, best.value)) best = std::move(m);
    first = false;
    if (!best.value) break;
  }
  return best;
}

inline MeasureResult config_measure(const Configuration& config, const ChargedGraph& g) {
  const auto cs = as_clauses(config);
  return config_measure(std::span<const Clause>(cs), g);
}

/// mu(c) <= mu(c2), given c |= c2.
inline bool check_monotonicity(std::span<const Clause> c, std::span<const Clause> c2, const ChargedGraph& g,
                               const OracleOptions& opts = {}) {
  if (!implies(c, c2, opts)) throw PreconditionFailed("first configuration does not imply the second");
  return measure_le(config_measure(c, g).value, config_measure(c2, g).value);
}

struct DownloadBound {
  std::optional<std::size_t> lhs;  // d * mu(c + A) + 1
  std::optional<std::size_t> rhs;  // mu(c)
  bool holds = false;
};

/// mu(c) <= d * mu(c + {A}) + 1 with d the maximum degree.
inline DownloadBound check_axiom_download_bound(std::span<const Clause> c, const Clause& a, const ChargedGraph& g) {
  const auto f = tseitin(g);
  if (std::find(f.clauses().begin(), f.clauses().end(), a) == f.clauses().end())
    throw InvalidArgument("clause " + a.to_string() + " is not an axiom of the Tseitin formula");
  std::vector<Clause> with(c.begin(), c.end());
  with.push_back(a);
  DownloadBound b;
  const auto after = config_measure(with, g).value;
  if (after) b.lhs = g.max_degree() * *after + 1;
  b.rhs = config_measure(c, g).value;
  b.holds = measure_le(b.rhs, b.lhs);
  return b;
}

struct ProfileEntry {
  std::size_t step = 0;  // configuration index: 0 is the empty start
  std::optional<std::size_t> mu;
  std::size_t config_size = 0;
};

struct MeasureScan {
  std::vector<ProfileEntry> profile;
  std::optional<std::size_t> certificate;  // first index with r/d <= mu <= r
  std::optional<std::size_t> violation;    // first step breaking a per-step bound
  bool per_step_bounds_hold() const { return !violation; }
};

/// mu of every configuration of a verified refutation of tseitin(g). Checks
/// mu(C_t) <= mu(C_t+1) across inferences and erasures and
/// mu(C_t) <= d * mu(C_t+1) + 1 across downloads, and locates the first
/// configuration with r <= d * mu <= d * r.
inline MeasureScan scan_refutation_measures(const Trace& trace, const ChargedGraph& g, std::size_t r) {
  detail::require_measure_caps(g);
  const auto f = tseitin(g);
  const auto configs = replay(f, trace);
  const std::size_t d = g.max_degree();
  MeasureScan scan;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ProfileEntry e{i, config_measure(configs[i], g).value, configs[i].size()};
    if (!scan.certificate && e.mu && r <= d * *e.mu && *e.mu <= r) scan.certificate = i;
    if (i > 0 && !scan.violation) {
      const auto& prev = scan.profile.back().mu;
      const auto& kind = trace.steps[i - 1].kind;
      bool ok;
      if (kind == StepKind::Download)
        ok = measure_le(prev, e.mu ? std::optional<std::size_t>(d * *e.mu + 1) : std::nullopt);
      else
        ok = measure_le(prev, e.mu);
      if (!ok) scan.violation = i - 1;
    }
    scan.profile.push_back(e);
  }
  return scan;
}

struct SpaceBound {
  std::size_t config_size = 0;
  Rational bound;  // delta * mu
  bool holds = false;
};

/// |c| >= delta * mu(c) for a certified (size_bound, delta)-edge expander and
/// mu(c) <= size_bound.
inline SpaceBound check_space_bound(std::span<const Clause> c, const ChargedGraph& g, std::size_t size_bound,
                                    Rational delta) {
  if (!edge_expansion_check(g, size_bound, delta).holds)
    throw PreconditionFailed("graph is not a (size_bound, delta)-edge expander");
  const auto mu = config_measure(c, g).value;
  if (!mu || *mu > size_bound) throw PreconditionFailed("configuration measure exceeds size_bound");
  std::vector<Clause> distinct(c.begin(), c.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  SpaceBound s;
  s.config_size = distinct.size();
  s.bound = delta * static_cast<long long>(*mu);
  s.holds = Rational(static_cast<long long>(s.config_size)) >= s.bound;
  return s;
}

}  // namespace reswidth
