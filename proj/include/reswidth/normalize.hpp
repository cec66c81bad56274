#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "reswidth/trace.hpp"

namespace reswidth {

namespace detail {

inline std::size_t set_steps_space(const std::vector<SetStep>& steps) {
  std::size_t size = 0, space = 0;
  for (const auto& s : steps) {
    size = s.kind == StepKind::Erasure ? size - 1 : size + 1;
    space = std::max(space, size);
  }
  return space;
}

inline bool downloads_have_headroom(const std::vector<SetStep>& steps, std::size_t space) {
  std::size_t size = 0;
  for (const auto& s : steps) {
    if (s.kind == StepKind::Download && size + 2 > space) return false;
    size = s.kind == StepKind::Erasure ? size - 1 : size + 1;
  }
  return true;
}

// Drops (produce X, erase X) pairs at adjacent positions; they leave the
// configuration unchanged.
inline bool drop_noop_pairs(std::vector<SetStep>& steps) {
  bool changed = false;
  for (std::size_t i = 0; i + 1 < steps.size();) {
    if (steps[i].kind != StepKind::Erasure && steps[i + 1].kind == StepKind::Erasure &&
        steps[i].result == steps[i + 1].result) {
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i), steps.begin() + static_cast<std::ptrdiff_t>(i + 2));
      changed = true;
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return changed;
}

}  // namespace detail

/// True iff every axiom download starts from a configuration holding at
/// most space - 2 distinct formulas.
inline bool download_headroom(const Trace& trace) {
  auto steps = to_set_steps(trace);
  return detail::downloads_have_headroom(steps, detail::set_steps_space(steps));
}

/// Reorders a verified trace of space s so that every download happens from
/// a configuration of at most s - 2 formulas. A download made at s - 1 is
/// necessarily followed by an erasure; that erasure is hoisted above the
/// download, or, if it erases the downloaded axiom itself, the pair is dropped. Traces that already satisfy
/// the property are returned unchanged.
inline Trace normalize_for_transform(const CnfFormula& formula, const Trace& trace) {
  const std::size_t space = verify(formula, trace).measures.space;
  if (download_headroom(trace)) return trace;

  std::vector<SetStep> steps = to_set_steps(trace);
  while (!detail::downloads_have_headroom(steps, space)) {
    std::size_t size = 0;
    for (std::size_t i = 0; i < steps.size();) {
      if (steps[i].kind == StepKind::Download && size + 2 > space) {
        if (i + 1 == steps.size()) {
          steps.pop_back();
          break;
        }
        if (steps[i + 1].kind != StepKind::Erasure)
          throw std::logic_error("download at full space is not followed by an erasure");
        if (steps[i + 1].result == steps[i].result) {
          steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i),
                      steps.begin() + static_cast<std::ptrdiff_t>(i + 2));
          continue;
        }
        std::swap(steps[i], steps[i + 1]);
      }
      size = steps[i].kind == StepKind::Erasure ? size - 1 : size + 1;
      ++i;
    }
    detail::drop_noop_pairs(steps);
  }
  auto out = from_set_steps(trace.num_vars, trace.r_bound, steps);
  verify(formula, out);
  return out;
}

}  // namespace reswidth
