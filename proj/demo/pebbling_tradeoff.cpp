// Bottom-up and top-down pebbling refutations of pyramids, and what the
// space-to-width transformation makes of each.

#include <cstdio>

#include "reswidth/reswidth.hpp"

using namespace reswidth;

int main() {
  std::printf("%-3s %-9s %6s %6s %6s | %6s %6s %6s\n", "h", "style", "length", "space", "width", "out_w", "bound",
              "out_len");
  for (unsigned h = 1; h <= 6; ++h) {
    const auto dag = pyramid(h);
    const auto f = pebbling(dag);
    for (auto style : {PebblingStyle::BottomUp, PebblingStyle::TopDown}) {
      const auto t = pebbling_refutation(dag, style);
      const auto m = verify(f, t).measures;
      const auto r = space_to_width(f, t).report;
      std::printf("%-3u %-9s %6zu %6zu %6zu | %6zu %6zu %6zu\n", h,
                  style == PebblingStyle::BottomUp ? "bottom-up" : "top-down", m.length, m.space, *m.width,
                  r.output_width, r.claimed_bound, r.output_length);
    }
  }
}
