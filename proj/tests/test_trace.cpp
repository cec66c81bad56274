#include <gtest/gtest.h>

#include "support.hpp"

using namespace reswidth;
using namespace testing_support;

namespace {

CnfFormula pyramid2_formula() { return parse_dimacs(read_file("pyramid2.cnf")); }

Trace trace_of(const std::string& text) { return parse_trace(text); }

}  // namespace

TEST(Verify, PebblingGoldenTracesAreRefutations) {
  const auto f = pyramid2_formula();
  const auto bu = verify(f, trace_of(read_file("pyramid2_bottomup.rtrace")));
  EXPECT_TRUE(bu.refutation);
  EXPECT_EQ(bu.measures.length, 14u);
  EXPECT_EQ(bu.measures.width, 3u);
  EXPECT_EQ(bu.measures.space, 5u);

  const auto td = verify(f, trace_of(read_file("pyramid2_topdown.rtrace")));
  EXPECT_TRUE(td.refutation);
  EXPECT_EQ(td.measures.length, 13u);
  EXPECT_EQ(td.measures.space, 3u);
}

TEST(Verify, DownloadThenEraseIsLegalButNotARefutation) {
  const auto r = verify(pyramid2_formula(), trace_of("p rtrace 6 1\nd 1 0\ne 1\n"));
  EXPECT_FALSE(r.refutation);
  EXPECT_EQ(r.measures.length, 1u);
  EXPECT_EQ(r.measures.space, 1u);
}

TEST(Verify, TrivialResolventIsIllegal) {
  const CnfFormula f(2, {cl({1, 2}), cl({-1, -2})});
  Trace t{2, 1, {Step::download(cl({1, 2})), Step::download(cl({-1, -2}))}};
  t.steps.push_back({StepKind::Cut, {1, 2}, RDnfFormula{term_of({2}), term_of({-2})}});
  try {
    verify(f, t);
    FAIL();
  } catch (const IllegalStep& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(Verify, DownloadMustMatchAnAxiomExactly) {
  const CnfFormula f(2, {cl({1})});
  EXPECT_THROW(verify(f, Trace{2, 1, {Step::download(cl({1, 2}))}}), IllegalStep);
}

TEST(Verify, DeadAndUnknownReferences) {
  const CnfFormula f(2, {cl({1}), cl({-1})});
  EXPECT_THROW(verify(f, trace_of("p rtrace 2 1\nd 1 0\ne 1\nd -1 0\nr1 1 2 0\n")), DeadReference);
  EXPECT_THROW(verify(f, trace_of("p rtrace 2 1\nd 1 0\nw 5 1 2 0\n")), DeadReference);
  EXPECT_THROW(verify(f, trace_of("p rtrace 2 1\ne 1\n")), DeadReference);
}

TEST(Verify, ResolutionAcceptsEitherPremiseOrder) {
  const CnfFormula f(2, {cl({1, 2}), cl({-1})});
  for (const char* step : {"r1 1 2 2 0\n", "r1 2 1 2 0\n"}) {
    const auto r = verify(f, trace_of(std::string("p rtrace 2 1\nd 1 2 0\nd -1 0\n") + step));
    EXPECT_EQ(r.measures.width, 2u);
  }
  EXPECT_THROW(verify(f, trace_of("p rtrace 2 1\nd 1 2 0\nd -1 0\nr1 1 2 1 0\n")), IllegalStep);
}

TEST(Verify, SpaceCountsDistinctFormulas) {
  const CnfFormula f(1, {cl({1})});
  const auto r = verify(f, trace_of("p rtrace 1 1\nd 1 0\nd 1 0\nw 1 1 0\n"));
  EXPECT_EQ(r.measures.space, 1u);
  EXPECT_EQ(r.measures.length, 3u);
}

TEST(Verify, WeakeningNeedsSuperset) {
  const CnfFormula f(3, {cl({1})});
  EXPECT_NO_THROW(verify(f, trace_of("p rtrace 3 1\nd 1 0\nw 1 1 -3 0\n")));
  EXPECT_THROW(verify(f, trace_of("p rtrace 3 1\nd 1 0\nw 1 2 0\n")), IllegalStep);
}

TEST(Rules, CutOnATerm) {
  // (x1 ^ x2) v x3 and ~x1 v ~x2 v x4 give x3 v x4.
  const RDnfFormula p1{term_of({1, 2}), term_of({3})};
  const RDnfFormula p2{term_of({-1}), term_of({-2}), term_of({4})};
  EXPECT_FALSE(rules::check_cut(p1, p2, RDnfFormula{term_of({3}), term_of({4})}, 2));
  EXPECT_FALSE(rules::check_cut(p2, p1, RDnfFormula{term_of({3}), term_of({4})}, 2));
  EXPECT_TRUE(rules::check_cut(p1, p2, RDnfFormula{term_of({3}), term_of({4})}, 1));
  EXPECT_TRUE(rules::check_cut(p1, p2, RDnfFormula{term_of({3})}, 2));
  // Superfluous parts of the premises may be kept.
  EXPECT_FALSE(rules::check_cut(p1, p2, RDnfFormula{term_of({3}), term_of({4}), term_of({-1})}, 2));
}

TEST(Rules, AndIntroduction) {
  const RDnfFormula p1{term_of({1}), term_of({3})};
  const RDnfFormula p2{term_of({2}), term_of({3})};
  EXPECT_FALSE(rules::check_and_intro(p1, p2, RDnfFormula{term_of({1, 2}), term_of({3})}, 2));
  EXPECT_TRUE(rules::check_and_intro(p1, p2, RDnfFormula{term_of({1, 2}), term_of({3})}, 1));
  EXPECT_TRUE(rules::check_and_intro(p1, RDnfFormula{term_of({2}), term_of({4})}, RDnfFormula{term_of({1, 2}), term_of({3})}, 2));
}

TEST(Rules, AndElimination) {
  const RDnfFormula p{term_of({1, 2}), term_of({3})};
  EXPECT_FALSE(rules::check_and_elim(p, RDnfFormula{term_of({1}), term_of({3})}));
  EXPECT_FALSE(rules::check_and_elim(p, RDnfFormula{term_of({2}), term_of({3})}));
  EXPECT_TRUE(rules::check_and_elim(p, RDnfFormula{term_of({4}), term_of({3})}));
  EXPECT_TRUE(rules::check_and_elim(p, RDnfFormula{term_of({3})}));
}

TEST(Verify, TwoDnfFixtureIsARefutation) {
  const auto r = verify(pyramid2_formula(), pyramid2_r2());
  EXPECT_TRUE(r.refutation);
  EXPECT_EQ(r.measures.space, 4u);
  EXPECT_FALSE(r.measures.width.has_value());
}

TEST(Verify, RBoundIsEnforced) {
  const CnfFormula f(3, {cl({1}), cl({2}), cl({3})});
  EXPECT_THROW(verify(f, trace_of("p rtrace 3 2\nd 1 0 0\nd 2 0 0\nai 1 2 1 2 0 0\nd 3 0 0\nai 3 4 1 2 3 0 0\n")),
               IllegalStep);
}

TEST(Verify, MutatedTracesNeverCrash) {
  const auto f = pyramid2_formula();
  const auto base = trace_of(read_file("pyramid2_bottomup.rtrace"));
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    Trace t = base;
    auto& s = t.steps[rng() % t.steps.size()];
    switch (rng() % 3) {
      case 0:
        if (!s.premises.empty()) s.premises[0] = 1 + rng() % 16;
        break;
      case 1:
        if (s.kind != StepKind::Erasure) s.result = RDnfFormula::from_clause(cl({static_cast<long long>(1 + rng() % 6)}));
        break;
      default:
        t.steps.erase(t.steps.begin() + static_cast<std::ptrdiff_t>(rng() % t.steps.size()));
    }
    try {
      verify(f, t);
    } catch (const IllegalStep&) {
    }
  }
}

TEST(Replay, ConfigurationCount) {
  const CnfFormula f(1, {cl({1}), cl({-1})});
  EXPECT_EQ(replay(f, Trace{1, 1, {}}).size(), 1u);
  const auto cs = replay(f, trace_of("p rtrace 1 1\nd 1 0\n"));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_TRUE(cs[0].empty());
  EXPECT_EQ(cs[1], Configuration{RDnfFormula::from_clause(cl({1}))});
}

TEST(Replay, BottomUpEndsWithEmptyClause) {
  const auto cs = replay(pyramid2_formula(), trace_of(read_file("pyramid2_bottomup.rtrace")));
  EXPECT_TRUE(has_empty_formula(cs.back()));
}

TEST(TraceIo, ParsesSteps) {
  const auto t = trace_of("p rtrace 3 1\nc comment\nd 1 0\ne 1\n");
  EXPECT_EQ(t.num_vars, 3u);
  ASSERT_EQ(t.steps.size(), 2u);
  EXPECT_EQ(t.steps[0].kind, StepKind::Download);
  EXPECT_EQ(t.steps[1].kind, StepKind::Erasure);
  EXPECT_EQ(t.steps[1].premises, std::vector<std::size_t>{1});
}

TEST(TraceIo, TwoDnfFormulaBodies) {
  EXPECT_EQ(parse_formula("1 2 0 0", 2, 2), RDnfFormula{term_of({1, 2})});
  EXPECT_EQ(parse_formula("1 0 -2 0 0", 2, 2), (RDnfFormula{term_of({1}), term_of({-2})}));
  EXPECT_TRUE(parse_formula("0", 2, 2).empty());
  EXPECT_TRUE(parse_formula("0", 2, 1).empty());
}

TEST(TraceIo, SyntaxErrorsReportLines) {
  const std::vector<std::pair<std::string, std::size_t>> bad{
      {"d 1 0\n", 1},
      {"p rtrace 2 1\nd 1 0\nx 1\n", 3},
      {"p rtrace 2 1\nd 3 0\n", 2},
      {"p rtrace 2 1\nd 1 -1 0\n", 2},
      {"p rtrace 2 1\nr2 1 2 0\n", 2},
      {"p rtrace 2 1\ne 0\n", 2},
      {"p rtrace 2 1\nd 1 0 5\n", 2},
      {"p rtrace 2 1\nd 1\n", 2},
  };
  for (const auto& [text, line] : bad) {
    try {
      parse_trace(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(TraceIo, GoldenFilesRoundTrip) {
  for (const char* name : {"pyramid2_bottomup.rtrace", "pyramid2_topdown.rtrace", "pyramid2_r2.rtrace"}) {
    const auto text = read_file(name);
    EXPECT_EQ(emit_trace(parse_trace(text)), text) << name;
  }
}

TEST(SetSteps, DropsDuplicateWork) {
  const auto t = trace_of("p rtrace 1 1\nd 1 0\nd 1 0\ne 1\ne 2\n");
  const auto s = to_set_steps(t);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].kind, StepKind::Download);
  EXPECT_EQ(s[1].kind, StepKind::Erasure);
}

TEST(Normalize, HoistsErasureOfAnotherFormula) {
  const CnfFormula f(2, {cl({1}), cl({2})});
  const auto t = trace_of("p rtrace 2 1\nd 1 0\nd 2 0\ne 1\n");
  const auto n = normalize_for_transform(f, t);
  EXPECT_EQ(emit_trace(n), "p rtrace 2 1\nd 2 0\n");
}

TEST(Normalize, DropsDownloadEraseOfTheSameAxiom) {
  const CnfFormula f(2, {cl({1}), cl({2})});
  const auto t = trace_of("p rtrace 2 1\nd 1 0\nd 2 0\ne 2\n");
  EXPECT_EQ(emit_trace(normalize_for_transform(f, t)), "p rtrace 2 1\nd 1 0\n");
}

TEST(Normalize, NormalizedTracesAreUnchanged) {
  const auto f = pyramid2_formula();
  const auto td = trace_of(read_file("pyramid2_topdown.rtrace"));
  EXPECT_TRUE(download_headroom(td));
  EXPECT_EQ(normalize_for_transform(f, td), td);
}

TEST(Normalize, RandomRefutationsGainHeadroom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_unsat_3cnf(rng, 6 + static_cast<Var>(rng() % 5));
    const auto t = saturation_refutation(f);
    const auto before = verify(f, t);
    const auto n = normalize_for_transform(f, t);
    const auto after = verify(f, n);
    EXPECT_TRUE(after.refutation);
    EXPECT_LE(after.measures.space, before.measures.space);
    const auto steps = to_set_steps(n);
    EXPECT_TRUE(detail::downloads_have_headroom(steps, before.measures.space));
  }
}
