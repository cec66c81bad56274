#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reswidth/literal.hpp"

namespace reswidth {

/// A DNF formula as a canonically ordered set of terms. The formula with no
/// terms is the contradiction 0. The r bound is a property of the proof
/// system, not of the value; see max_term_size().
class RDnfFormula {
 public:
  RDnfFormula() = default;
  explicit RDnfFormula(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  }
  RDnfFormula(std::initializer_list<Term> terms) : RDnfFormula(std::vector<Term>(terms)) {}

  /// The clause a1 v ... v ak as the 1-DNF {a1} v ... v {ak}.
  static RDnfFormula from_clause(const Clause& c) {
    std::vector<Term> terms;
    terms.reserve(c.size());
    for (auto l : c) terms.push_back(Term{l});
    RDnfFormula f;
    f.terms_ = std::move(terms);  // already sorted: singleton order follows literal order
    return f;
  }

  /// The clause this formula denotes if every term is a single literal.
  std::optional<Clause> as_clause() const {
    std::vector<Literal> lits;
    lits.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.size() != 1) return std::nullopt;
      lits.push_back(t[0]);
    }
    return Clause::make(std::move(lits));
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  bool contains(const Term& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }

  std::size_t max_term_size() const {
    std::size_t m = 0;
    for (const auto& t : terms_) m = std::max(m, t.size());
    return m;
  }

  std::size_t literal_count() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.size();
    return n;
  }

  Var max_var() const {
    Var m = 0;
    for (const auto& t : terms_) m = std::max(m, t.max_var());
    return m;
  }

  /// Trivial means it contains both singleton terms x and ~x, which extends
  /// clause triviality to the r-DNF setting.
  bool trivial() const {
    for (const auto& t : terms_)
      if (t.size() == 1 && t[0].positive() && contains(Term{~t[0]})) return true;
    return false;
  }

  /// True iff every term of *this is a term of `other`.
  bool subset_of(const RDnfFormula& other) const {
    return std::includes(other.terms_.begin(), other.terms_.end(), terms_.begin(), terms_.end());
  }

  RDnfFormula without(const Term& t) const {
    RDnfFormula f;
    f.terms_.reserve(terms_.size());
    for (const auto& x : terms_)
      if (x != t) f.terms_.push_back(x);
    return f;
  }

  RDnfFormula united(const RDnfFormula& other) const {
    RDnfFormula f;
    std::set_union(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                   std::back_inserter(f.terms_));
    return f;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " | ";
      s += "(" + t.to_string() + ")";
    }
    return s;
  }

  friend bool operator==(const RDnfFormula&, const RDnfFormula&) = default;
  friend auto operator<=>(const RDnfFormula& a, const RDnfFormula& b) { return a.terms_ <=> b.terms_; }

 private:
  std::vector<Term> terms_;
};

}  // namespace reswidth
