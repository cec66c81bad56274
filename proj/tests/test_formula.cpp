#include <gtest/gtest.h>

#include "support.hpp"

using namespace reswidth;
using testing_support::cl;
using testing_support::term_of;

TEST(Literal, DimacsRoundTrip) {
  for (long long v : {1LL, -1LL, 7LL, -64LL, 65LL}) EXPECT_EQ(Literal::from_dimacs(v).to_dimacs(), v);
  EXPECT_THROW(Literal::from_dimacs(0), InvalidArgument);
}

TEST(Literal, OrderIsByVariableNegativeFirst) {
  EXPECT_LT(neg(1), pos(1));
  EXPECT_LT(pos(1), neg(2));
  EXPECT_EQ(~pos(3), neg(3));
}

TEST(Clause, CanonicalForm) {
  Clause c{pos(3), neg(1), pos(3), pos(2)};
  EXPECT_EQ(c.to_string(), "-1 2 3");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.max_var(), 3u);
}

TEST(Clause, TrivialSetsAreRejected) {
  EXPECT_THROW(cl({1, -1}), TrivialFormula);
  EXPECT_FALSE(Clause::make({pos(2), neg(2)}).has_value());
  EXPECT_FALSE(cl({1, 2}).merged(cl({-2})).has_value());
}

TEST(Clause, SubsetMatchesBetweenPackedAndUnpacked) {
  const Clause small = cl({1, -70});
  const Clause big = cl({1, 5, -70});
  EXPECT_FALSE(small.packed());
  EXPECT_TRUE(small.subset_of(big));
  EXPECT_FALSE(big.subset_of(small));
  EXPECT_TRUE(cl({1, -3}).subset_of(cl({-3, 1, 4})));
  EXPECT_FALSE(cl({1, 3}).subset_of(cl({-3, 1, 4})));
  EXPECT_TRUE(Clause{}.subset_of(cl({2})));
}

TEST(Clause, NegationSwapsKinds) {
  const Term t = negate(cl({1, -2}));
  EXPECT_EQ(t, term_of({-1, 2}));
  EXPECT_EQ(negate(t), cl({1, -2}));
}

TEST(Clause, WidthThenLexOrder) {
  std::vector<Clause> cs{cl({1, 2}), cl({3}), cl({-1, 2}), Clause{}};
  std::sort(cs.begin(), cs.end(), ByWidthThenLex{});
  EXPECT_EQ(cs[0], Clause{});
  EXPECT_EQ(cs[1], cl({3}));
  EXPECT_EQ(cs[2], cl({-1, 2}));
  EXPECT_EQ(cs[3], cl({1, 2}));
}

TEST(RDnf, ClauseEmbedding) {
  const auto f = RDnfFormula::from_clause(cl({2, -1}));
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.as_clause(), cl({-1, 2}));
  EXPECT_FALSE(RDnfFormula{term_of({1, 2})}.as_clause().has_value());
  EXPECT_TRUE(RDnfFormula{}.empty());
}

TEST(RDnf, TrivialityNeedsOpposedSingletons) {
  EXPECT_TRUE((RDnfFormula{term_of({1}), term_of({-1})}).trivial());
  EXPECT_FALSE((RDnfFormula{term_of({1, 2}), term_of({-1})}).trivial());
}

TEST(RDnf, SetAlgebra) {
  const RDnfFormula a{term_of({1, 2}), term_of({3})};
  const RDnfFormula b{term_of({3}), term_of({-4})};
  EXPECT_EQ(a.united(b).size(), 3u);
  EXPECT_TRUE(RDnfFormula{term_of({3})}.subset_of(a));
  EXPECT_EQ(a.without(term_of({3})), RDnfFormula{term_of({1, 2})});
  EXPECT_EQ(a.max_term_size(), 2u);
  EXPECT_EQ(a.literal_count(), 3u);
}

TEST(Dimacs, ParsesCommentsAndPercentTerminator) {
  const auto f = parse_dimacs("c hello\np cnf 3 2\n1 -2 0\n  3\n 0\n%\n0\n");
  EXPECT_EQ(f.num_vars(), 3u);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.clauses()[1], cl({3}));
  EXPECT_EQ(f.max_width(), 2u);
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf x 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 a 0\n"), ParseError);
}

TEST(Dimacs, ParseErrorsCarryLineNumbers) {
  try {
    parse_dimacs("p cnf 2 2\n1 0\n1 -1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Dimacs, CountMismatchIsAWarning) {
  std::vector<std::string> w;
  parse_dimacs("p cnf 2 3\n1 0\n", &w);
  EXPECT_EQ(w.size(), 1u);
}

TEST(Dimacs, EmptyClauseOnlyWhenAllowed) {
  std::istringstream in("p cnf 1 1\n0\n");
  const auto raw = read_dimacs_clauses(in, {.allow_empty_clause = true});
  ASSERT_EQ(raw.clauses.size(), 1u);
  EXPECT_TRUE(raw.clauses[0].empty());
  EXPECT_THROW(CnfFormula(1, {Clause{}}), InvalidArgument);
}

TEST(Dimacs, CanonicalOutputRoundTrips) {
  const std::string text = testing_support::read_file("pyramid2.cnf");
  EXPECT_EQ(to_dimacs(parse_dimacs(text)), text);
  EXPECT_EQ(to_dimacs(parse_dimacs("p cnf 3 1\n3 -1 0\n")), "p cnf 3 1\n-1 3 0\n");
}
