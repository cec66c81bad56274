#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reswidth/error.hpp"

namespace reswidth {

using Var = std::uint32_t;

// A literal is stored as 2*var + polarity, so the natural order on codes is
// "by variable, negative before positive".
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool positive) : code_(2 * var + (positive ? 1u : 0u)) {}

  // From the signed DIMACS encoding (v or -v, v >= 1).
  static Literal from_dimacs(long long value) {
    if (value == 0) throw InvalidArgument("literal 0 is not a literal");
    const auto var = static_cast<Var>(value < 0 ? -value : value);
    return Literal(var, value > 0);
  }

  constexpr Var var() const noexcept { return code_ >> 1; }
  constexpr bool positive() const noexcept { return code_ & 1u; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr Literal operator~() const noexcept { return from_code(code_ ^ 1u); }
  long long to_dimacs() const noexcept {
    return positive() ? static_cast<long long>(var()) : -static_cast<long long>(var());
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  static constexpr Literal from_code(std::uint32_t c) {
    Literal l;
    l.code_ = c;
    return l;
  }
  std::uint32_t code_ = 2;
};

inline Literal pos(Var v) { return Literal(v, true); }
inline Literal neg(Var v) { return Literal(v, false); }

struct ClauseTag {};
struct TermTag {};

/// A canonically ordered, duplicate-free, non-trivial set of literals.
///
/// Instantiated as Clause (disjunction) and Term (conjunction). The two share
/// storage and set algebra but are distinct types, so a clause is never
/// silently used where a term is meant. For variables <= 64 a pair of
/// bitmasks is kept alongside the sorted array, which turns subset tests into
/// two word operations.
template <class Tag>
class LiteralSet {
 public:
  LiteralSet() = default;

  /// Canonicalizes `lits`; throws TrivialFormula if it contains x and ~x.
  explicit LiteralSet(std::vector<Literal> lits) {
    if (!assign(std::move(lits))) throw TrivialFormula("set contains a literal and its negation");
  }
  LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::vector<Literal>(lits)) {}

  /// Same as the constructor, but reports triviality as nullopt.
  static std::optional<LiteralSet> make(std::vector<Literal> lits) {
    LiteralSet s;
    if (!s.assign(std::move(lits))) return std::nullopt;
    return s;
  }

  static LiteralSet from_dimacs(std::initializer_list<long long> values) {
    std::vector<Literal> lits;
    for (auto v : values) lits.push_back(Literal::from_dimacs(v));
    return LiteralSet(std::move(lits));
  }

  std::span<const Literal> literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }
  const Literal& operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const {
    if (packed_) {
      if (l.var() > 64) return false;
      const std::uint64_t bit = std::uint64_t{1} << (l.var() - 1);
      return (l.positive() ? pos_ : neg_) & bit;
    }
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  Var max_var() const noexcept { return lits_.empty() ? 0 : lits_.back().var(); }

  /// True iff every literal of *this occurs in `other`.
  bool subset_of(const LiteralSet& other) const {
    if (size() > other.size()) return false;
    if (packed_ && other.packed_) return (pos_ & ~other.pos_) == 0 && (neg_ & ~other.neg_) == 0;
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
  }

  /// Union; nullopt if the union is trivial.
  std::optional<LiteralSet> merged(const LiteralSet& other) const {
    if (packed_ && other.packed_ && ((pos_ & other.neg_) | (neg_ & other.pos_))) return std::nullopt;
    std::vector<Literal> out;
    out.reserve(size() + other.size());
    std::set_union(lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
                   std::back_inserter(out));
    return make(std::move(out));
  }

  LiteralSet with(Literal l) const {
    auto r = merged(LiteralSet{l});
    if (!r) throw TrivialFormula("adding literal makes the set trivial");
    return *r;
  }

  LiteralSet without(Literal l) const {
    std::vector<Literal> out;
    out.reserve(size());
    for (auto x : lits_)
      if (x != l) out.push_back(x);
    LiteralSet s;
    s.assign(std::move(out));
    return s;
  }

  /// True iff some literal of *this is the negation of a literal of `other`.
  bool clashes_with(const LiteralSet& other) const {
    if (packed_ && other.packed_) return (pos_ & other.neg_) | (neg_ & other.pos_);
    for (auto l : lits_)
      if (other.contains(~l)) return true;
    return false;
  }

  bool packed() const noexcept { return packed_; }
  std::uint64_t pos_mask() const noexcept { return pos_; }
  std::uint64_t neg_mask() const noexcept { return neg_; }

  std::string to_string() const {
    std::string s;
    for (auto l : lits_) {
      if (!s.empty()) s += ' ';
      s += std::to_string(l.to_dimacs());
    }
    return s;
  }

  friend bool operator==(const LiteralSet& a, const LiteralSet& b) { return a.lits_ == b.lits_; }
  friend auto operator<=>(const LiteralSet& a, const LiteralSet& b) { return a.lits_ <=> b.lits_; }

 private:
  bool assign(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i].var() == lits[i - 1].var()) return false;
    lits_ = std::move(lits);
    pos_ = neg_ = 0;
    packed_ = max_var() <= 64;
    if (packed_)
      for (auto l : lits_) (l.positive() ? pos_ : neg_) |= std::uint64_t{1} << (l.var() - 1);
    return true;
  }

  std::vector<Literal> lits_;
  std::uint64_t pos_ = 0;
  std::uint64_t neg_ = 0;
  bool packed_ = true;
};

using Clause = LiteralSet<ClauseTag>;
using Term = LiteralSet<TermTag>;

namespace detail {
template <class To, class From>
To negate_set(const From& s) {
  std::vector<Literal> out;
  out.reserve(s.size());
  for (auto l : s) out.push_back(~l);
  return To(std::move(out));
}
}  // namespace detail

/// The term of negated literals.
inline Term negate(const Clause& c) { return detail::negate_set<Term>(c); }
/// The clause of negated literals.
inline Clause negate(const Term& t) { return detail::negate_set<Clause>(t); }

inline bool subsumes(const Clause& c1, const Clause& c2) { return c1.subset_of(c2); }

inline std::size_t width(const Clause& c) { return c.size(); }

/// Ordering used for printed configurations: by width, then lexicographically.
struct ByWidthThenLex {
  template <class Tag>
  bool operator()(const LiteralSet<Tag>& a, const LiteralSet<Tag>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace reswidth
