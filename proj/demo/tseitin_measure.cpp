// Progress measure along a minimum-width refutation of a Tseitin formula.
// Usage: demo_tseitin_measure [triangle|cycle:N|complete:N|grid:RxC]

#include <cstdio>
#include <iostream>
#include <string>

#include "reswidth/reswidth.hpp"

using namespace reswidth;

static ChargedGraph pick(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cycle") return cycle_graph(std::stoul(arg));
  if (kind == "complete") return complete_graph(std::stoul(arg));
  if (kind == "grid") {
    const auto x = arg.find('x');
    return grid_graph(std::stoul(arg.substr(0, x)), std::stoul(arg.substr(x + 1)));
  }
  return ChargedGraph(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 0, 0});
}

int main(int argc, char** argv) {
  try {
    const auto g = pick(argc > 1 ? argv[1] : "triangle");
    const auto f = tseitin(g);
    const auto found = min_refutation_width(f, f.num_vars());
    if (!found) {
      std::cerr << "no refutation found\n";
      return 1;
    }
    const auto& [w, trace] = *found;
    const auto m = verify(f, trace).measures;
    std::printf("|V|=%u |E|=%zu d=%zu  width %zu  space %zu  length %zu\n", g.num_vertices(), g.num_edges(),
                g.max_degree(), w, m.space, m.length);

    const auto scan = scan_refutation_measures(trace, g, 2);
    std::printf("per-step bounds %s\n", scan.per_step_bounds_hold() ? "hold" : "VIOLATED");
    std::printf("step  mu  |C|\n");
    for (const auto& e : scan.profile)
      std::printf("%4zu  %2s  %3zu\n", e.step, e.mu ? std::to_string(*e.mu).c_str() : "inf", e.config_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
