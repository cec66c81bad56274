// reswidth: command-line front end for the reswidth library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reswidth/reswidth.hpp"

using namespace reswidth;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

// Raised for bad flag values and unreadable files.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string slurp(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw Usage("cannot open " + path);
  return read_all(in);
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << text;
}

// A bundle is DIMACS text followed by an rtrace starting at its "p rtrace" line.
struct Bundle {
  std::string cnf;
  std::string trace;
};

Bundle split_bundle(const std::string& text) {
  std::size_t at = 0;
  while (at < text.size()) {
    const std::size_t eol = text.find('\n', at);
    const std::size_t first = text.find_first_not_of(" \t", at);
    if (first != std::string::npos && text.compare(first, 8, "p rtrace") == 0) return {text.substr(0, at), text.substr(at)};
    if (eol == std::string::npos) break;
    at = eol + 1;
  }
  return {text, {}};
}

// Formula and trace from --cnf/--trace, falling back to a bundle on stdin.
struct Inputs {
  CnfFormula formula;
  std::optional<Trace> trace;
};

Inputs load(const std::string& cnf_path, const std::string& trace_path, bool need_trace) {
  Inputs in;
  std::optional<std::string> stdin_text;
  auto from_stdin = [&]() -> const std::string& {
    if (!stdin_text) stdin_text = read_all(std::cin);
    return *stdin_text;
  };
  std::string cnf_text, trace_text;
  if (!cnf_path.empty()) {
    cnf_text = slurp(cnf_path);
  } else {
    auto b = split_bundle(from_stdin());
    cnf_text = b.cnf;
    if (trace_path.empty()) trace_text = b.trace;
  }
  if (!trace_path.empty())
    trace_text = trace_path == "-" ? from_stdin() : slurp(trace_path);
  else if (!cnf_path.empty() && need_trace)
    trace_text = from_stdin();
  std::vector<std::string> warnings;
  in.formula = parse_dimacs(cnf_text, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (need_trace) {
    if (trace_text.empty()) throw Usage("no trace given (use --trace or pipe a bundle)");
    in.trace = parse_trace(trace_text);
  }
  return in;
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

unsigned to_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw Usage("bad " + what + " '" + s + "'");
  }
}

std::vector<std::uint8_t> parse_charge(const std::string& spec, Vertex n) {
  if (spec.empty() || spec == "odd") return odd_at_first_vertex(n);
  std::vector<std::uint8_t> c;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "0" && tok != "1") throw Usage("charge entries must be 0 or 1");
    c.push_back(tok == "1");
  }
  if (c.size() != n) throw Usage("charge list has " + std::to_string(c.size()) + " entries for " +
                                 std::to_string(n) + " vertices");
  return c;
}

ChargedGraph parse_graph(const std::string& spec, const std::string& charge) {
  auto [kind, arg] = split_spec(spec);
  ChargedGraph g;
  if (kind == "star") {
    g = star_graph(to_count(arg, "star size"));
  } else if (kind == "cycle") {
    g = cycle_graph(to_count(arg, "cycle length"));
  } else if (kind == "path") {
    g = path_graph(to_count(arg, "path length"));
  } else if (kind == "complete") {
    g = complete_graph(to_count(arg, "vertex count"));
  } else if (kind == "triangle" && arg.empty()) {
    g = cycle_graph(3);
  } else if (kind == "grid") {
    const auto x = arg.find('x');
    if (x == std::string::npos) throw Usage("grid spec is grid:RxC");
    g = grid_graph(to_count(arg.substr(0, x), "grid rows"), to_count(arg.substr(x + 1), "grid columns"));
  } else if (kind == "pyramid") {
    g = undirected(pyramid(to_count(arg, "pyramid height")));
  } else {
    std::istringstream in(slurp(spec));
    auto [n, edges] = read_edge_list(in);
    g = ChargedGraph(n, edges);
  }
  return g.with_charge(parse_charge(charge, g.num_vertices()));
}

PebblingDag parse_dag(const std::string& spec) {
  auto [kind, arg] = split_spec(spec);
  if (kind == "pyramid") return pyramid(to_count(arg, "pyramid height"));
  if (kind == "path") return path_dag(to_count(arg, "path length"));
  std::istringstream in(slurp(spec));
  auto [n, arcs] = read_edge_list(in);
  return PebblingDag(n, arcs);
}

// Clause list: optional "p cnf" line, literals terminated by 0, 'c' comments.
std::vector<Clause> parse_clause_list(const std::string& text) {
  std::vector<Clause> out;
  std::vector<Literal> cur;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == 'p') continue;
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v == 0) {
        auto c = Clause::make(std::move(cur));
        if (!c) throw ParseError(lineno, "trivial clause");
        out.push_back(std::move(*c));
        cur.clear();
      } else {
        cur.push_back(Literal::from_dimacs(v));
      }
    }
    if (!ls.eof()) throw ParseError(lineno, "expected integer literals");
  }
  if (!cur.empty()) throw ParseError(lineno, "unterminated clause");
  return out;
}

std::string clause_line(const Clause& c) {
  std::ostringstream os;
  write_clause_line(os, c);
  return os.str();
}

unsigned oracle_cap() {
  if (const char* env = std::getenv("RESWIDTH_ORACLE_CAP")) return to_count(env, "RESWIDTH_ORACLE_CAP");
  return packed::kDefaultOracleCap;
}

std::string mu_text(const std::optional<std::size_t>& mu) { return mu ? std::to_string(*mu) : "unbounded"; }
json mu_json(const std::optional<std::size_t>& mu) { return mu ? json(*mu) : json("unbounded"); }

void print_report(bool as_json, const json& j) {
  if (as_json) {
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

std::string rational_text(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space and width of resolution refutations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned jobs = 1;
  app.add_flag("--json", as_json, "Emit reports as a single JSON object");
  app.add_option("--jobs", jobs, "Worker threads for oracle enumeration")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate formulas (DIMACS)");
  gen->require_subcommand(1);
  std::string graph_spec, charge_spec = "odd", dag_spec, out_path;
  unsigned rnd_vars = 10, rnd_k = 3;
  std::size_t rnd_clauses = 43;
  std::uint64_t seed = 0;
  auto* gen_ts = gen->add_subcommand("tseitin", "Tseitin formula of a charged graph");
  gen_ts->add_option("--graph", graph_spec, "star:d, cycle:n, path:n, complete:n, grid:RxC, pyramid:h or an edge-list file")
      ->required();
  gen_ts->add_option("--charge", charge_spec, "'odd' (vertex 1 charged) or a comma list");
  gen_ts->add_option("--out", out_path);
  auto* gen_peb = gen->add_subcommand("pebbling", "Pebbling contradiction of a DAG");
  gen_peb->add_option("--dag", dag_spec, "pyramid:h, path:n or an arc-list file")->required();
  gen_peb->add_option("--out", out_path);
  auto* gen_rnd = gen->add_subcommand("random", "Uniform random k-CNF");
  gen_rnd->add_option("--vars", rnd_vars)->check(CLI::PositiveNumber);
  gen_rnd->add_option("--clauses", rnd_clauses);
  gen_rnd->add_option("--k", rnd_k)->check(CLI::PositiveNumber);
  gen_rnd->add_option("--seed", seed);
  gen_rnd->add_option("--out", out_path);

  // check / stats
  std::string cnf_path, trace_path;
  auto* check = app.add_subcommand("check", "Verify a trace and print its measures");
  check->add_option("--cnf", cnf_path);
  check->add_option("--trace", trace_path);
  auto* stats = app.add_subcommand("stats", "Formula metadata");
  bool want_sat = false;
  stats->add_option("--cnf", cnf_path);
  stats->add_flag("--sat", want_sat, "Decide satisfiability by enumeration");

  // negconf
  std::string config_path;
  bool cross_check = false;
  auto* negconf = app.add_subcommand("negconf", "Negated configuration of a clause list");
  negconf->add_option("--config", config_path)->required();
  negconf->add_flag("--oracle", cross_check, "Compare against brute-force minimal implicants");

  // space2width
  std::string report_path;
  bool strip = false;
  auto* s2w = app.add_subcommand("space2width", "Turn a space-s refutation into a narrow one");
  s2w->add_option("--cnf", cnf_path);
  s2w->add_option("--trace", trace_path);
  s2w->add_option("--out", out_path);
  s2w->add_option("--report", report_path);
  s2w->add_flag("--strip-weakenings", strip);

  // measure
  auto* measure = app.add_subcommand("measure", "Configuration measure over a charged graph");
  std::string term_text;
  measure->add_option("--cnf", cnf_path, "Tseitin formula (optional, checked against the graph)");
  measure->add_option("--graph", graph_spec)->required();
  measure->add_option("--charge", charge_spec);
  measure->add_option("--config", config_path, "Clause list; empty configuration if omitted");
  measure->add_option("--term", term_text, "Measure a single term given as DIMACS literals ('0' for the empty term)");
  auto* scan = measure->add_subcommand("scan", "Measure profile of a refutation (CSV)");
  std::size_t scan_r = 0;
  scan->add_option("--trace", trace_path)->required();
  scan->add_option("--r", scan_r, "Target for the intermediate configuration (default |V|/2 rounded up)");

  // expander-check
  std::size_t size_bound = 1;
  std::string delta_text = "1";
  auto* expander = app.add_subcommand("expander-check", "Exhaustive edge-expansion check");
  expander->add_option("--graph", graph_spec)->required();
  expander->add_option("--size-bound", size_bound)->required();
  expander->add_option("--delta", delta_text, "Rational, e.g. 3/2 or 1.5")->required();

  // peb-refute
  std::string style = "bottomup", cnf_out;
  auto* pebref = app.add_subcommand("peb-refute", "Canonical pebbling refutation");
  pebref->add_option("--dag", dag_spec)->required();
  pebref->add_option("--style", style)->check(CLI::IsMember({"bottomup", "topdown"}));
  pebref->add_option("--out", out_path, "Trace file; without it a DIMACS+rtrace bundle goes to stdout");
  pebref->add_option("--cnf-out", cnf_out);

  // search-width
  std::size_t max_width = 0;
  std::string emit_path;
  auto* search = app.add_subcommand("search-width", "Smallest refutation width by saturation");
  search->add_option("--cnf", cnf_path);
  search->add_option("--max-width", max_width)->required();
  search->add_option("--emit-trace", emit_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const OracleOptions oracle{oracle_cap(), jobs};

  try {
    if (*gen) {
      CnfFormula f;
      if (*gen_ts) f = tseitin(parse_graph(graph_spec, charge_spec));
      if (*gen_peb) f = pebbling(parse_dag(dag_spec));
      if (*gen_rnd) f = random_kcnf(rnd_vars, rnd_clauses, rnd_k, seed);
      spill(out_path, to_dimacs(f));
      return kOk;
    }

    if (*check) {
      auto in = load(cnf_path, trace_path, true);
      VerifyResult r;
      try {
        r = verify(in.formula, *in.trace);
      } catch (const IllegalStep& e) {
        std::cerr << "illegal trace: " << e.what() << '\n';
        return kFailure;
      }
      json j{{"length", r.measures.length}, {"space", r.measures.space}, {"refutation", r.refutation}};
      if (r.measures.width) j["width"] = *r.measures.width;
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "length " << r.measures.length << "\nspace " << r.measures.space << '\n';
        if (r.measures.width) std::cout << "width " << *r.measures.width << '\n';
        std::cout << "refutation " << (r.refutation ? "yes" : "no") << '\n';
      }
      return kOk;
    }

    if (*stats) {
      auto in = load(cnf_path, "", false);
      const auto& f = in.formula;
      json j{{"n", f.num_vars()}, {"m", f.size()}, {"k", f.max_width()}};
      if (want_sat) j["satisfiable"] = sat_enumerate(f, oracle).satisfiable;
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "n=" << f.num_vars() << " m=" << f.size() << " k=" << f.max_width() << '\n';
        if (want_sat) std::cout << (j["satisfiable"].get<bool>() ? "satisfiable" : "unsatisfiable") << '\n';
      }
      return kOk;
    }

    if (*negconf) {
      const auto config = parse_clause_list(slurp(config_path));
      const auto negated = negate_configuration(config);
      bool agree = true;
      if (cross_check) agree = negated == minimal_implicants_oracle(config, oracle.cap);
      if (as_json) {
        json cl = json::array();
        for (const auto& c : negated) {
          json lits = json::array();
          for (auto l : c) lits.push_back(l.to_dimacs());
          cl.push_back(lits);
        }
        json j{{"clauses", cl}, {"count", negated.size()}};
        if (cross_check) j["oracle_agrees"] = agree;
        std::cout << j.dump() << '\n';
      } else {
        for (const auto& c : negated) std::cout << clause_line(c);
        if (cross_check) std::cerr << (agree ? "oracle agrees\n" : "oracle disagrees\n");
      }
      return agree ? kOk : kFailure;
    }

    if (*s2w) {
      auto in = load(cnf_path, trace_path, true);
      TransformResult res;
      try {
        res = space_to_width_rdnf(in.formula, *in.trace);
      } catch (const IllegalStep& e) {
        std::cerr << "illegal trace: " << e.what() << '\n';
        return kFailure;
      } catch (const NotARefutation& e) {
        std::cerr << e.what() << '\n';
        return kFailure;
      }
      Trace out = strip ? strip_weakenings(in.formula, res.trace) : res.trace;
      const auto& rep = res.report;
      json j{{"input_space", rep.input_space},
             {"formula_width", rep.formula_width},
             {"r", rep.r_bound},
             {"output_width", rep.output_width},
             {"claimed_bound", rep.claimed_bound},
             {"within_bound", rep.within_bound()},
             {"output_length", verify(in.formula, out).measures.length},
             {"weakenings", rep.weakenings},
             {"chains", rep.chains},
             {"chain_resolutions", rep.chain_resolutions},
             {"downloads", rep.downloads},
             {"weakenings_stripped", strip}};
      if (!report_path.empty()) spill(report_path, j.dump(2) + "\n");
      if (out_path.empty()) {
        std::cout << emit_trace(out);
      } else {
        spill(out_path, emit_trace(out));
        print_report(as_json, j);
      }
      if (!rep.within_bound() && rep.input_space >= 3) {
        std::cerr << "width " << rep.output_width << " exceeds bound " << rep.claimed_bound << '\n';
        return kFailure;
      }
      return kOk;
    }

    if (*measure) {
      const auto g = parse_graph(graph_spec, charge_spec);
      if (!cnf_path.empty() && !(parse_dimacs(slurp(cnf_path)) == tseitin(g)))
        throw Usage("--cnf does not match the Tseitin formula of --graph");
      if (*scan) {
        const auto trace = parse_trace(slurp(trace_path));
        const std::size_t r = scan_r ? scan_r : (g.num_vertices() + 1) / 2;
        const auto s = scan_refutation_measures(trace, g, r);
        std::cout << "step,mu,config_size\n";
        for (const auto& e : s.profile) std::cout << e.step << ',' << mu_text(e.mu) << ',' << e.config_size << '\n';
        if (s.certificate) std::cerr << "configuration " << *s.certificate << " has r/d <= mu <= r for r = " << r << '\n';
        if (s.violation) std::cerr << "per-step bound violated at step " << *s.violation + 1 << '\n';
        return s.violation || !s.certificate ? kFailure : kOk;
      }
      MeasureResult m;
      if (!term_text.empty()) {
        const auto lits = parse_clause_list(term_text + " 0").at(0);
        m = term_measure(Term(std::vector<Literal>(lits.begin(), lits.end())), g);
      } else {
        const auto config = config_path.empty() ? std::vector<Clause>{} : parse_clause_list(slurp(config_path));
        m = config_measure(config, g);
      }
      json verts = json::array();
      for (auto v : m.witness_vertices) verts.push_back(v);
      json term = json::array();
      for (auto l : m.witness_term) term.push_back(l.to_dimacs());
      json j{{"mu", mu_json(m.value)}, {"witness_term", term}, {"witness_vertices", verts}};
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "mu " << mu_text(m.value) << "\nwitness_term " << m.witness_term.to_string()
                  << "\nwitness_vertices";
        for (auto v : m.witness_vertices) std::cout << ' ' << v;
        std::cout << '\n';
      }
      return kOk;
    }

    if (*expander) {
      const auto g = parse_graph(graph_spec, charge_spec);
      const auto delta = parse_rational(delta_text);
      const auto r = edge_expansion_check(g, size_bound, delta);
      json u = json::array();
      for (auto v : r.counterexample) u.push_back(v);
      json j{{"holds", r.holds}, {"size_bound", size_bound}, {"delta", rational_text(delta)}};
      if (!r.holds) {
        j["counterexample"] = u;
        j["boundary"] = r.boundary;
      }
      if (as_json) {
        std::cout << j.dump() << '\n';
      } else if (r.holds) {
        std::cout << "holds\n";
      } else {
        std::cout << "counterexample";
        for (auto v : r.counterexample) std::cout << ' ' << v;
        std::cout << " (boundary " << r.boundary << ")\n";
      }
      return r.holds ? kOk : kFailure;
    }

    if (*pebref) {
      const auto dag = parse_dag(dag_spec);
      const auto f = pebbling(dag);
      const auto t = pebbling_refutation(dag, style == "topdown" ? PebblingStyle::TopDown : PebblingStyle::BottomUp);
      if (!cnf_out.empty()) spill(cnf_out, to_dimacs(f));
      if (out_path.empty())
        std::cout << to_dimacs(f) << emit_trace(t);
      else
        spill(out_path, emit_trace(t));
      return kOk;
    }

    if (*search) {
      auto in = load(cnf_path, "", false);
      auto found = min_refutation_width(in.formula, max_width);
      json j{{"refutable", found.has_value()}, {"max_width", max_width}};
      if (found) {
        j["width"] = found->first;
        if (!emit_path.empty()) spill(emit_path, emit_trace(found->second));
      }
      if (as_json)
        std::cout << j.dump() << '\n';
      else if (found)
        std::cout << "width " << found->first << '\n';
      else
        std::cout << "no refutation of width <= " << max_width << '\n';
      return kOk;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
