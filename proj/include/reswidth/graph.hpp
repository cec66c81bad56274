#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "reswidth/error.hpp"
#include "reswidth/literal.hpp"

namespace reswidth {

using Vertex = std::uint32_t;  // 1-based
using Rational = boost::rational<long long>;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with a 0/1 charge per vertex. Edges are numbered
/// lexicographically by (min endpoint, max endpoint); edge i carries
/// variable i + 1.
class ChargedGraph {
 public:
  ChargedGraph() = default;
  ChargedGraph(Vertex num_vertices, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<std::uint8_t> charge = {})
      : n_(num_vertices), charge_(std::move(charge)) {
    if (charge_.empty()) charge_.assign(n_, 0);
    if (charge_.size() != n_) throw InvalidArgument("charge vector length differs from vertex count");
    for (auto c : charge_)
      if (c > 1) throw InvalidArgument("charges are 0 or 1");
    for (auto [a, b] : edges) {
      if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
      if (a < 1 || b < 1 || a > n_ || b > n_) throw InvalidArgument("edge endpoint out of range");
      edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    incident_.assign(n_ + 1, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(static_cast<Var>(i + 1));
      incident_[edges_[i].v].push_back(static_cast<Var>(i + 1));
    }
  }

  Vertex num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint8_t charge(Vertex v) const { return charge_.at(v - 1); }
  const std::vector<std::uint8_t>& charges() const noexcept { return charge_; }

  /// Edge variables incident to v, ascending.
  const std::vector<Var>& incident(Vertex v) const { return incident_.at(v); }
  std::size_t degree(Vertex v) const { return incident(v).size(); }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::optional<Var> edge_var(Vertex a, Vertex b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<Var>(it - edges_.begin() + 1);
  }

  ChargedGraph with_charge(std::vector<std::uint8_t> charge) const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto e : edges_) es.emplace_back(e.u, e.v);
    return ChargedGraph(n_, std::move(es), std::move(charge));
  }

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const {
    std::vector<Vertex> parent(n_ + 1);
    for (Vertex v = 0; v <= n_; ++v) parent[v] = v;
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto e : edges_) parent[find(e.u)] = find(e.v);
    std::vector<std::vector<Vertex>> out;
    std::vector<int> slot(n_ + 1, -1);
    for (Vertex v = 1; v <= n_; ++v) {
      Vertex r = find(v);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(v);
    }
    return out;
  }

  bool connected() const { return components().size() <= 1; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> charge_;
  std::vector<std::vector<Var>> incident_;
};

enum class Parity { Even, Odd };

inline Parity total_charge(const ChargedGraph& g) {
  unsigned sum = 0;
  for (auto c : g.charges()) sum += c;
  return sum % 2 ? Parity::Odd : Parity::Even;
}

/// The Tseitin formula is satisfiable iff every connected component has even charge.
inline bool tseitin_satisfiable(const ChargedGraph& g) {
  for (const auto& comp : g.components()) {
    unsigned sum = 0;
    for (auto v : comp) sum += g.charge(v);
    if (sum % 2) return false;
  }
  return true;
}

/// Charge vector with chi(1) = 1 and every other vertex 0.
inline std::vector<std::uint8_t> odd_at_first_vertex(Vertex n) {
  std::vector<std::uint8_t> c(n, 0);
  if (n > 0) c[0] = 1;
  return c;
}

// --- named graphs ----------------------------------------------------------

/// d-star: center 1 joined to petals 2..d+1; center charge 1, petals 0.
inline ChargedGraph star_graph(unsigned d) {
  if (d < 1) throw InvalidArgument("star needs d >= 1");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 2; i <= d + 1; ++i) es.emplace_back(1, i);
  return ChargedGraph(d + 1, std::move(es), odd_at_first_vertex(d + 1));
}

inline ChargedGraph cycle_graph(unsigned n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 1; i <= n; ++i) es.emplace_back(i, i % n + 1);
  return ChargedGraph(n, std::move(es), odd_at_first_vertex(n));
}

inline ChargedGraph path_graph(unsigned n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return ChargedGraph(n, std::move(es), odd_at_first_vertex(n));
}

inline ChargedGraph complete_graph(unsigned n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  return ChargedGraph(n, std::move(es), odd_at_first_vertex(n));
}

/// rows x cols grid, vertices numbered row-major from 1.
inline ChargedGraph grid_graph(unsigned rows, unsigned cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("grid needs positive dimensions");
  std::vector<std::pair<Vertex, Vertex>> es;
  auto id = [&](unsigned r, unsigned c) { return static_cast<Vertex>(r * cols + c + 1); };
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
    }
  return ChargedGraph(rows * cols, std::move(es), odd_at_first_vertex(rows * cols));
}

/// Edge-list file: header "n <count>", then one "u v" pair per line
/// (1-based). Blank lines and lines starting with 'c' or '#' are skipped.
inline std::pair<Vertex, std::vector<std::pair<Vertex, Vertex>>> read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<Vertex> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    std::istringstream ls(line);
    if (line[first] == 'n') {
      std::string kw;
      long long count = -1;
      if (n || !(ls >> kw >> count) || kw != "n" || count < 0) throw ParseError(lineno, "bad 'n <count>' header");
      n = static_cast<Vertex>(count);
      continue;
    }
    if (!n) throw ParseError(lineno, "edge before 'n <count>' header");
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(lineno, "expected 'u v'");
    if (a < 1 || b < 1 || a > *n || b > *n) throw ParseError(lineno, "vertex out of range");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!n) throw ParseError(0, "missing 'n <count>' header");
  return {*n, std::move(edges)};
}

inline void write_edge_list(std::ostream& out, Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  out << "n " << n << '\n';
  for (auto [a, b] : edges) out << a << ' ' << b << '\n';
}

// --- expansion --------------------------------------------------------------

struct ExpansionResult {
  bool holds = true;
  std::vector<Vertex> counterexample;  // first violating U in (size, lex) order
  std::size_t boundary = 0;            // |boundary(U)| of the counterexample
};

inline constexpr unsigned kExpansionVertexCap = 20;

/// |boundary(U)|: edges with exactly one endpoint in U (bit v-1 of `u`).
inline std::size_t boundary_size(const ChargedGraph& g, std::uint64_t u) {
  std::size_t n = 0;
  for (auto e : g.edges()) n += ((u >> (e.u - 1)) & 1) != ((u >> (e.v - 1)) & 1);
  return n;
}

/// Checks the (size_bound, delta)-edge-expander property by trying every
/// non-empty U with |U| <= size_bound.
inline ExpansionResult edge_expansion_check(const ChargedGraph& g, std::size_t size_bound, Rational delta) {
  const Vertex n = g.num_vertices();
  if (n > kExpansionVertexCap) throw CapExceeded("expansion check supports at most 20 vertices");
  ExpansionResult res;
  for (std::size_t k = 1; k <= std::min<std::size_t>(size_bound, n); ++k) {
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i + 1);
    for (;;) {
      std::uint64_t mask = 0;
      for (auto v : pick) mask |= std::uint64_t{1} << (v - 1);
      const auto cut = boundary_size(g, mask);
      if (Rational(static_cast<long long>(cut)) < delta * static_cast<long long>(k)) {
        res.holds = false;
        res.counterexample = pick;
        res.boundary = cut;
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

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    const std::string frac = s.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const long long whole = std::stoll(s.substr(0, dot).empty() ? "0" : s.substr(0, dot));
    const long long f = frac.empty() ? 0 : std::stoll(frac);
    return Rational(whole * den + (s[0] == '-' ? -f : f), den);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse rational '" + s + "'");
  }
}

// --- pebbling DAGs -----------------------------------------------------------

/// Directed acyclic graph with a unique sink; vertex v carries variable v.
class PebblingDag {
 public:
  PebblingDag() = default;
  PebblingDag(Vertex n, std::vector<std::pair<Vertex, Vertex>> arcs) : n_(n) {
    if (n < 1) throw InvalidArgument("DAG needs at least one vertex");
    preds_.assign(n + 1, {});
    succs_.assign(n + 1, {});
    for (auto [a, b] : arcs) {
      if (a == b) throw InvalidArgument("self-loop in DAG");
      if (a < 1 || b < 1 || a > n || b > n) throw InvalidArgument("arc endpoint out of range");
      preds_[b].push_back(a);
      succs_[a].push_back(b);
    }
    for (Vertex v = 1; v <= n; ++v) {
      std::sort(preds_[v].begin(), preds_[v].end());
      preds_[v].erase(std::unique(preds_[v].begin(), preds_[v].end()), preds_[v].end());
      std::sort(succs_[v].begin(), succs_[v].end());
      succs_[v].erase(std::unique(succs_[v].begin(), succs_[v].end()), succs_[v].end());
    }
    // Kahn's algorithm, smallest ready vertex first.
    std::vector<std::size_t> indeg(n + 1);
    for (Vertex v = 1; v <= n; ++v) indeg[v] = preds_[v].size();
    std::vector<Vertex> ready;
    for (Vertex v = n; v >= 1; --v)
      if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      std::sort(ready.begin(), ready.end(), std::greater<>());
      Vertex v = ready.back();
      ready.pop_back();
      topo_.push_back(v);
      for (auto s : succs_[v])
        if (--indeg[s] == 0) ready.push_back(s);
    }
    if (topo_.size() != n) throw InvalidArgument("graph has a cycle");
    std::vector<Vertex> sinks;
    for (Vertex v = 1; v <= n; ++v)
      if (succs_[v].empty()) sinks.push_back(v);
    if (sinks.size() != 1) throw InvalidArgument("DAG must have exactly one sink");
    sink_ = sinks[0];
  }

  Vertex num_vertices() const noexcept { return n_; }
  Vertex sink() const noexcept { return sink_; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return preds_.at(v); }
  const std::vector<Vertex>& successors(Vertex v) const { return succs_.at(v); }
  bool is_source(Vertex v) const { return predecessors(v).empty(); }
  const std::vector<Vertex>& topological_order() const noexcept { return topo_; }
  std::size_t fan_in() const {
    std::size_t m = 0;
    for (Vertex v = 1; v <= n_; ++v) m = std::max(m, preds_[v].size());
    return m;
  }

 private:
  Vertex n_ = 0;
  Vertex sink_ = 0;
  std::vector<std::vector<Vertex>> preds_;
  std::vector<std::vector<Vertex>> succs_;
  std::vector<Vertex> topo_;
};

/// Pyramid of height h: row 0 (bottom) has h + 1 vertices, each higher row one
/// fewer; vertices are numbered bottom-up, left to right. Vertex j of row i
/// has predecessors j and j + 1 of row i - 1.
inline PebblingDag pyramid(unsigned height) {
  std::vector<std::vector<Vertex>> rows;
  Vertex next = 1;
  for (unsigned i = 0; i <= height; ++i) {
    rows.emplace_back();
    for (unsigned j = 0; j <= height - i; ++j) rows.back().push_back(next++);
  }
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (unsigned i = 1; i <= height; ++i)
    for (unsigned j = 0; j < rows[i].size(); ++j) {
      arcs.emplace_back(rows[i - 1][j], rows[i][j]);
      arcs.emplace_back(rows[i - 1][j + 1], rows[i][j]);
    }
  return PebblingDag(next - 1, std::move(arcs));
}

/// Path 1 -> 2 -> ... -> n.
inline PebblingDag path_dag(unsigned n) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex i = 1; i < n; ++i) arcs.emplace_back(i, i + 1);
  return PebblingDag(n, std::move(arcs));
}

/// Undirected version of a DAG, for Tseitin formulas over pyramid graphs.
inline ChargedGraph undirected(const PebblingDag& dag) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex v = 1; v <= dag.num_vertices(); ++v)
    for (auto p : dag.predecessors(v)) es.emplace_back(p, v);
  return ChargedGraph(dag.num_vertices(), std::move(es), odd_at_first_vertex(dag.num_vertices()));
}

}  // namespace reswidth
