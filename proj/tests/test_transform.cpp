#include <gtest/gtest.h>

#include "support.hpp"

using namespace reswidth;
using namespace testing_support;

namespace {

std::set<Clause> clause_set(const std::vector<Clause>& cs) { return {cs.begin(), cs.end()}; }

std::vector<Clause> downloads(const Trace& t) {
  std::vector<Clause> out;
  for (const auto& s : t.steps)
    if (s.kind == StepKind::Download) out.push_back(*s.result.as_clause());
  return out;
}

// The live set at every checkpoint of the output is the negation of the
// matching input configuration.
void expect_checkpoints(const CnfFormula& f, const Trace& input, const TransformResult& res) {
  const auto normalized = normalize_for_transform(f, input);
  const auto in = replay(f, normalized);
  const auto out = replay(f, res.trace);
  const std::size_t tau = in.size() - 1;
  ASSERT_EQ(res.checkpoints.size(), tau + 1);
  for (std::size_t j = 0; j <= tau; ++j) {
    const auto expected = input.r_bound == 1 ? negate_configuration(as_clauses(in[tau - j]))
                                             : negate_configuration_rdnf(in[tau - j]);
    EXPECT_EQ(clause_set(as_clauses(out.at(res.checkpoints[j]))), clause_set(expected)) << "checkpoint " << j;
  }
}

void expect_sound(const CnfFormula& f, const Trace& t) {
  const auto res = space_to_width_rdnf(f, t);
  const auto v = verify(f, res.trace);
  EXPECT_TRUE(v.refutation);
  EXPECT_EQ(res.trace.r_bound, 1u);
  EXPECT_EQ(*v.measures.width, res.report.output_width);
  EXPECT_TRUE(res.report.within_bound()) << res.report.output_width << " > " << res.report.claimed_bound;
  expect_checkpoints(f, t, res);
}

}  // namespace

TEST(Bound, Formula) {
  EXPECT_EQ(claimed_width_bound(3, 2, 1), 2u);
  EXPECT_EQ(claimed_width_bound(4, 3, 1), 4u);
  EXPECT_EQ(claimed_width_bound(4, 3, 2), 6u);
  EXPECT_EQ(claimed_width_bound(5, 3, 3), 11u);
  EXPECT_EQ(claimed_width_bound(1, 1, 1), 0u);
}

TEST(Transform, RejectsNonRefutations) {
  const auto f = parse_dimacs(read_file("triangle.cnf"));
  Trace t{3, 1, {Step::download(cl({1, 2}))}};
  EXPECT_THROW(space_to_width(f, t), NotARefutation);
}

TEST(Transform, RejectsDnfInputOnTheResolutionEntryPoint) {
  EXPECT_THROW(space_to_width(pebbling(pyramid(2)), pyramid2_r2()), InvalidArgument);
}

TEST(Transform, PyramidBottomUpIsReversed) {
  const auto dag = pyramid(2);
  const auto f = pebbling(dag);
  const auto in = pebbling_refutation(dag, PebblingStyle::BottomUp);
  const auto res = space_to_width(f, in);
  auto rev = downloads(in);
  std::reverse(rev.begin(), rev.end());
  EXPECT_EQ(downloads(res.trace), rev);
  EXPECT_EQ(res.report.output_width, 4u);
  EXPECT_EQ(res.report.claimed_bound, 5u);
  expect_checkpoints(f, in, res);
}

TEST(Transform, PyramidTopDown) {
  const auto dag = pyramid(2);
  const auto res = space_to_width(pebbling(dag), pebbling_refutation(dag, PebblingStyle::TopDown));
  EXPECT_EQ(res.report.input_space, 3u);
  EXPECT_EQ(res.report.output_width, 3u);
  EXPECT_TRUE(res.report.within_bound());
}

TEST(Transform, PyramidsBothStyles) {
  for (unsigned h = 1; h <= 4; ++h)
    for (auto style : {PebblingStyle::BottomUp, PebblingStyle::TopDown})
      expect_sound(pebbling(pyramid(h)), pebbling_refutation(pyramid(h), style));
}

TEST(Transform, RandomDags) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto dag = random_dag(rng, 2 + rng() % 9, 2);
    for (auto style : {PebblingStyle::BottomUp, PebblingStyle::TopDown})
      expect_sound(pebbling(dag), pebbling_refutation(dag, style));
  }
}

TEST(Transform, RandomUnsatisfiable3Cnf) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_unsat_3cnf(rng, 5 + static_cast<Var>(rng() % 4));
    expect_sound(f, saturation_refutation(f));
  }
}

TEST(Transform, TseitinRefutations) {
  for (const auto& g : {triangle(), cycle_graph(4), complete_graph(4)}) {
    const auto f = tseitin(g);
    expect_sound(f, saturation_refutation(f));
  }
}

TEST(Transform, DnfFixture) {
  const auto f = pebbling(pyramid(2));
  const auto t = pyramid2_r2();
  const auto res = space_to_width_rdnf(f, t);
  EXPECT_EQ(res.report.input_space, 4u);
  EXPECT_EQ(res.report.claimed_bound, 6u);
  EXPECT_LE(res.report.output_width, 6u);
  expect_sound(f, t);
}

TEST(Transform, ResolutionEntryPointsAgree) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_unsat_3cnf(rng, 6);
    const auto t = saturation_refutation(f);
    EXPECT_EQ(space_to_width(f, t).trace, space_to_width_rdnf(f, t).trace);
  }
}

TEST(Transform, ReportCountsAreConsistent) {
  const auto dag = pyramid(3);
  const auto res = space_to_width(pebbling(dag), pebbling_refutation(dag, PebblingStyle::BottomUp));
  EXPECT_EQ(res.report.downloads, downloads(res.trace).size());
  EXPECT_GE(res.report.chain_resolutions, res.report.chains);
  EXPECT_EQ(res.report.output_length, verify(pebbling(dag), res.trace).measures.length);
}

TEST(StripWeakenings, RemovesEveryWeakening) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_unsat_3cnf(rng, 5 + static_cast<Var>(rng() % 3));
    const auto transformed = space_to_width(f, saturation_refutation(f)).trace;
    const auto stripped = strip_weakenings(f, transformed);
    for (const auto& s : stripped.steps) EXPECT_NE(s.kind, StepKind::Weakening);
    const auto a = verify(f, transformed), b = verify(f, stripped);
    EXPECT_TRUE(b.refutation);
    EXPECT_LE(*b.measures.width, *a.measures.width);
    EXPECT_LE(b.measures.length, a.measures.length);
    EXPECT_LE(b.measures.space, a.measures.space);
  }
}

TEST(StripWeakenings, ReusesPremiseMissingThePivot) {
  // Weaken {x1} to {x1, x2}, then cut on x2 with {~x2}: the stripped trace
  // keeps {x1} and resolves it with {~x1} directly.
  const CnfFormula f(2, {cl({1}), cl({-1}), cl({-2})});
  TraceBuilder b(2, 1);
  b.download(cl({1}));
  b.weaken(cl({1}), cl({1, 2}));
  b.erase(cl({1}));
  b.download(cl({-2}));
  b.resolve(cl({1, 2}), cl({-2}), cl({1}));
  b.download(cl({-1}));
  b.resolve(cl({1}), cl({-1}), Clause{});
  const auto t = b.take();
  ASSERT_TRUE(verify(f, t).refutation);
  const auto s = strip_weakenings(f, t);
  EXPECT_TRUE(verify(f, s).refutation);
  for (const auto& step : s.steps) EXPECT_NE(step.kind, StepKind::Weakening);
}
