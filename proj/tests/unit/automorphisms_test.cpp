#include "egr/automorphisms.hpp"

#include <gtest/gtest.h>

#include "egr/families.hpp"
#include "egr/lcg.hpp"

namespace egr {
namespace {

Vertex make(const Field& f, Side side, std::vector<std::uint64_t> values) {
  Vertex v{side, {}};
  for (const auto x : values) v.coords.push_back(f.from_int(x));
  return v;
}

Vertex zero_vertex(const RelationSet& rel, Side side) {
  return Vertex{side, std::vector<FieldElement>(static_cast<std::size_t>(rel.dimension()), rel.field().zero())};
}

TEST(ApplySigma, Examples) {
  const Field f(5, 1);
  const Vertex p = make(f, Side::Point, {1, 2, 3});
  EXPECT_EQ(apply_sigma(SigmaMap{2, f.from_int(4), 2}, p, f), make(f, Side::Point, {1, 3, 3}));

  const Field f3(3, 1);
  const Vertex l = make(f3, Side::Line, {2, 1});
  EXPECT_EQ(apply_sigma(SigmaMap{1, f3.one(), 1}, l, f3), make(f3, Side::Line, {0, 1}));
}

TEST(ApplySigma, ZeroShiftIsIdentity) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=4"));
  const Field& f = rel.field();
  for (VertexId id = 0; id < vertex_count(rel); ++id) {
    const Vertex v = vertex_from_id(id, rel);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(apply_sigma(SigmaMap{i, f.zero(), 2}, v, f), v);
  }
}

TEST(ApplySigma, RejectsBadInput) {
  const Field f(3, 1);
  EXPECT_THROW(apply_sigma(SigmaMap{1, f.one(), 2}, make(f, Side::Point, {0, 0}), f), GraphError);
  EXPECT_THROW(apply_sigma(SigmaMap{4, f.one(), 2}, make(f, Side::Point, {0, 0, 0}), f), GraphError);
}

// sigma_{i,x} then sigma_{i,y} equals sigma_{i,x+y}; in particular x and -x cancel.
TEST(ApplySigma, ShiftsCompose) {
  for (const char* text : {"lwenger:m=1,q=4", "lwenger:m=2,q=3", "lwenger:m=2,q=4"}) {
    const FamilySpec spec = parse_family(text);
    const RelationSet rel = relations(spec);
    const Field& f = rel.field();
    for (int i = 0; i <= spec.index + 1; ++i) {
      for (const auto& x : f.elements()) {
        for (const auto& y : f.elements()) {
          const SigmaSequence seq{SigmaMap{i, x, spec.index}, SigmaMap{i, y, spec.index}};
          const SigmaMap sum{i, f.add(x, y), spec.index};
          const SigmaSequence inverse{SigmaMap{i, x, spec.index}, SigmaMap{i, f.neg(x), spec.index}};
          for (VertexId id = 0; id < vertex_count(rel); ++id) {
            const Vertex v = vertex_from_id(id, rel);
            ASSERT_EQ(apply_sequence(seq, v, f), apply_sigma(sum, v, f));
            ASSERT_EQ(apply_sequence(inverse, v, f), v);
          }
        }
      }
    }
  }
}

class ExhaustiveSigmaTest : public ::testing::TestWithParam<const char*> {};

TEST_P(ExhaustiveSigmaTest, EveryMapIsAnAutomorphism) {
  const FamilySpec spec = parse_family(GetParam());
  const RelationSet rel = relations(spec);
  for (const SigmaMap& s : all_sigma_maps(spec, rel.field())) {
    const auto check = verify_automorphism(s, rel, CheckMode::Exhaustive);
    EXPECT_TRUE(check.ok) << "i=" << s.i << " x=" << rel.field().index_of(s.x);
    EXPECT_EQ(check.edges_checked, edge_count(rel));
  }
}

TEST_P(ExhaustiveSigmaTest, EveryEdgeReachesTheBase) {
  const RelationSet rel = relations(parse_family(GetParam()));
  const Vertex p0 = zero_vertex(rel, Side::Point);
  const Vertex l0 = zero_vertex(rel, Side::Line);
  std::uint64_t edges = 0;
  for_each_edge(rel, [&](const Vertex& p, const Vertex& l) {
    const SigmaSequence seq = edge_to_base(p, l, rel);
    EXPECT_EQ(apply_sequence(seq, p, rel.field()), p0);
    EXPECT_EQ(apply_sequence(seq, l, rel.field()), l0);
    ++edges;
  });
  EXPECT_EQ(edges, edge_count(rel));
}

INSTANTIATE_TEST_SUITE_P(Small, ExhaustiveSigmaTest,
                         ::testing::Values("lwenger:m=1,q=3", "lwenger:m=1,q=4", "lwenger:m=2,q=2", "lwenger:m=2,q=3",
                                           "lwenger:m=2,q=4", "lwenger:m=3,q=3"));

TEST(VerifyAutomorphism, IdentityPasses) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=3"));
  const auto check = verify_automorphism([](const Vertex& v) { return v; }, rel, CheckMode::Exhaustive);
  EXPECT_TRUE(check.ok);
  EXPECT_FALSE(check.counterexample.has_value());
}

TEST(VerifyAutomorphism, CorruptedMapFailsWithWitness) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=3"));
  const Field& f = rel.field();
  // Adds x to the point coordinate instead of subtracting it.
  const VertexMap corrupted = [&](const Vertex& v) {
    Vertex out = v;
    out.coords[1] = f.add(out.coords[1], f.one());
    return out;
  };
  const auto check = verify_automorphism(corrupted, rel, CheckMode::Exhaustive);
  ASSERT_FALSE(check.ok);
  ASSERT_TRUE(check.counterexample.has_value());
  const auto& w = *check.counterexample;
  EXPECT_TRUE(adjacent(w.point, w.line, rel));
  EXPECT_FALSE(adjacent(corrupted(w.point), corrupted(w.line), rel));

  const auto sampled = verify_automorphism(corrupted, rel, CheckMode::Sampled, 3, 50);
  EXPECT_FALSE(sampled.ok);
}

TEST(VerifyAutomorphism, SampledModeCountsSamples) {
  const FamilySpec spec = parse_family("lwenger:m=3,q=8");
  const RelationSet rel = relations(spec);
  const auto check = verify_automorphism(SigmaMap{1, rel.field().from_int(5), 3}, rel, CheckMode::Sampled, 9, 300);
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.edges_checked, 300u);
}

TEST(EdgeToBase, BaseEdgeIsFixed) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=4"));
  const Vertex p0 = zero_vertex(rel, Side::Point);
  const Vertex l0 = zero_vertex(rel, Side::Line);
  const SigmaSequence seq = edge_to_base(p0, l0, rel);
  EXPECT_EQ(apply_sequence(seq, p0, rel.field()), p0);
  EXPECT_EQ(apply_sequence(seq, l0, rel.field()), l0);
}

TEST(EdgeToBase, SmallExample) {
  const RelationSet rel = relations(parse_family("lwenger:m=1,q=3"));
  const Field& f = rel.field();
  const Vertex p = make(f, Side::Point, {1, 0});
  const Vertex l = make(f, Side::Line, {0, 0});
  ASSERT_TRUE(adjacent(p, l, rel));
  const SigmaSequence seq = edge_to_base(p, l, rel);
  EXPECT_EQ(apply_sequence(seq, p, f), make(f, Side::Point, {0, 0}));
  EXPECT_EQ(apply_sequence(seq, l, f), make(f, Side::Line, {0, 0}));
}

TEST(EdgeToBase, SeededRandomEdges) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=4"));
  const Field& f = rel.field();
  Lcg rng(2024);
  for (int t = 0; t < 50; ++t) {
    const Vertex p = vertex_from_id(rng.below(side_size(rel)), rel);
    const Vertex l = neighbors(p, rel)[rng.below(rel.q())];
    const SigmaSequence seq = edge_to_base(p, l, rel);
    EXPECT_EQ(apply_sequence(seq, p, f), zero_vertex(rel, Side::Point));
    EXPECT_EQ(apply_sequence(seq, l, f), zero_vertex(rel, Side::Line));
  }
}

TEST(EdgeToBase, RejectsNonEdge) {
  const RelationSet rel = relations(parse_family("lwenger:m=1,q=3"));
  const Field& f = rel.field();
  EXPECT_THROW(edge_to_base(make(f, Side::Point, {1, 1}), make(f, Side::Line, {1, 1}), rel), GraphError);
}

TEST(AllSigmaMaps, OnlyForLinearized) {
  const Field f(3, 1);
  EXPECT_EQ(all_sigma_maps(parse_family("lwenger:m=2,q=3"), f).size(), 4u * 3u);
  EXPECT_THROW(all_sigma_maps(parse_family("wenger:n=2,q=3"), f), Error);
}

}  // namespace
}  // namespace egr
