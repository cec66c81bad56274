#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "reswidth/error.hpp"
#include "reswidth/rdnf.hpp"

// Bit-parallel evaluation of formulas over a small variable support, shared by
// the brute-force oracles.

namespace reswidth::packed {

inline constexpr unsigned kDefaultOracleCap = 24;

/// Maps the variables of a support to bit positions so that counting an
/// integer upward walks assignments in lexicographic order (the smallest
/// variable is the most significant bit).
class Support {
 public:
  explicit Support(std::vector<Var> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = i;
  }

  static Support range(Var n) {
    std::vector<Var> v(n);
    for (Var i = 0; i < n; ++i) v[i] = i + 1;
    return Support(std::move(v));
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<Var>& vars() const noexcept { return vars_; }
  bool contains(Var v) const { return index_.count(v) != 0; }

  std::uint64_t bit(Var v) const {
    return std::uint64_t{1} << (vars_.size() - 1 - index_.at(v));
  }

  void require_within(unsigned cap) const {
    if (vars_.size() > cap || vars_.size() > 62)
      throw CapExceeded("support of " + std::to_string(vars_.size()) + " variables exceeds oracle cap " +
                        std::to_string(cap));
  }

  /// Value of variable v in the assignment with index `a`.
  bool value(std::uint64_t a, Var v) const { return a & bit(v); }

 private:
  std::vector<Var> vars_;
  std::map<Var, std::size_t> index_;
};

struct Cube {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

template <class Tag>
Cube pack(const LiteralSet<Tag>& s, const Support& sup) {
  Cube c;
  for (auto l : s) (l.positive() ? c.pos : c.neg) |= sup.bit(l.var());
  return c;
}

inline bool clause_true(const Cube& c, std::uint64_t a) { return (a & c.pos) | (~a & c.neg); }
inline bool term_true(const Cube& t, std::uint64_t a) { return (a & t.pos) == t.pos && (a & t.neg) == 0; }

/// A DNF formula compiled against a support; clause-shaped formulas are
/// evaluated with a single mask test.
class Formula {
 public:
  Formula(const RDnfFormula& f, const Support& sup) {
    if (auto c = f.as_clause()) {
      is_clause_ = true;
      clause_ = pack(*c, sup);
      return;
    }
    for (const auto& t : f.terms()) terms_.push_back(pack(t, sup));
  }

  bool operator()(std::uint64_t a) const {
    if (is_clause_) return clause_true(clause_, a);
    for (const auto& t : terms_)
      if (term_true(t, a)) return true;
    return false;
  }

 private:
  bool is_clause_ = false;
  Cube clause_;
  std::vector<Cube> terms_;
};

inline std::vector<Var> variables_of(const std::vector<RDnfFormula>& fs) {
  std::vector<Var> vars;
  for (const auto& f : fs)
    for (const auto& t : f.terms())
      for (auto l : t) vars.push_back(l.var());
  return vars;
}

inline std::vector<Formula> compile(const std::vector<RDnfFormula>& fs, const Support& sup) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.emplace_back(f, sup);
  return out;
}

inline bool all_true(const std::vector<Formula>& fs, std::uint64_t a) {
  for (const auto& f : fs)
    if (!f(a)) return false;
  return true;
}

}  // namespace reswidth::packed
