#include "egr/families.hpp"

#include <gtest/gtest.h>

#include "egr/census.hpp"

namespace egr {
namespace {

bool same_adjacency(const RelationSet& a, const RelationSet& b) {
  const Adjacency x(a);
  const Adjacency y(b);
  if (x.vertex_count() != y.vertex_count()) return false;
  for (std::uint32_t v = 0; v < x.vertex_count(); ++v) {
    const auto rx = x.row(v);
    const auto ry = y.row(v);
    if (!std::equal(rx.begin(), rx.end(), ry.begin(), ry.end())) return false;
  }
  return true;
}

TEST(ParseFamily, RoundTrip) {
  for (const char* text : {"wenger:n=2,q=3", "wenger-alt:n=3,q=4", "lwenger:m=2,q=8", "lie:M1,q=5", "lie:M2,q=7",
                           "lie:M3,q=5"}) {
    const FamilySpec spec = parse_family(text);
    EXPECT_EQ(parse_family(format_family(spec)), spec) << text;
  }
  const FamilySpec w = parse_family("wenger:n=2,q=3");
  EXPECT_EQ(w.kind, FamilyKind::Wenger);
  EXPECT_EQ(w.q, 3u);
  EXPECT_EQ(w.index, 2);
  EXPECT_EQ(parse_family("lie:M3,q=5").kind, FamilyKind::LieM3);
  EXPECT_EQ(parse_family("lwenger:m=2,q=4").kind, FamilyKind::LinearizedWenger);
}

TEST(ParseFamily, RejectsBadInput) {
  for (const char* text : {"wenger:n=2,q=6", "wenger:n=0,q=3", "wenger:q=3", "wenger:n=2", "nope:n=1,q=3",
                           "wenger n=1 q=3", "lie:M4,q=5", "lwenger:n=2,q=4", "wenger:n=x,q=3"}) {
    EXPECT_THROW(parse_family(text), Error) << text;
  }
}

TEST(ParseFamily, KindNames) {
  for (const auto kind : {FamilyKind::Wenger, FamilyKind::WengerAlt, FamilyKind::LinearizedWenger, FamilyKind::LieM1,
                          FamilyKind::LieM2, FamilyKind::LieM3}) {
    EXPECT_EQ(parse_family_kind(family_kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_family_kind("cage"), Error);
}

TEST(Relations, Dimensions) {
  EXPECT_EQ(family_dimension(parse_family("wenger:n=3,q=3")), 4);
  EXPECT_EQ(family_dimension(parse_family("lwenger:m=2,q=4")), 3);
  EXPECT_EQ(family_dimension(parse_family("lie:M1,q=3")), 2);
  EXPECT_EQ(family_dimension(parse_family("lie:M2,q=3")), 3);
  EXPECT_EQ(family_dimension(parse_family("lie:M3,q=5")), 5);
  EXPECT_EQ(relations(parse_family("lie:M3,q=5")).dimension(), 5);
}

TEST(Relations, WengerOneIsPointTimesLine) {
  const RelationSet rel = relations(parse_family("wenger:n=1,q=3"));
  const Field& f = rel.field();
  for (const auto& p1 : f.elements()) {
    for (const auto& l1 : f.elements()) {
      const std::vector<FieldElement> p{p1, f.zero()};
      const std::vector<FieldElement> l{l1, f.zero()};
      EXPECT_EQ(rel.evaluate(1, p, l), f.mul(p1, l1));
    }
  }
}

TEST(Relations, LinearizedUsesFrobenius) {
  const RelationSet rel = relations(parse_family("lwenger:m=2,q=4"));
  const Field& f = rel.field();
  for (const auto& p1 : f.elements()) {
    for (const auto& l1 : f.elements()) {
      const std::vector<FieldElement> p{p1, f.zero(), f.zero()};
      const std::vector<FieldElement> l{l1, f.zero(), f.zero()};
      EXPECT_EQ(rel.evaluate(1, p, l), f.mul(p1, l1));
      EXPECT_EQ(rel.evaluate(2, p, l), f.mul(f.frobenius(p1, 1), l1));
    }
  }
}

// Over a prime field every Frobenius power is the identity.
TEST(Relations, LinearizedOverPrimeFieldIsConstantProduct) {
  const auto field = std::make_shared<const Field>(3, 1);
  std::vector<Relation> rs;
  for (int i = 0; i < 2; ++i) {
    rs.push_back({[](const Field& f, std::span<const FieldElement> p, std::span<const FieldElement> l) {
                    return f.mul(p[0], l[0]);
                  },
                  std::nullopt, std::nullopt});
  }
  EXPECT_TRUE(same_adjacency(relations(parse_family("lwenger:m=2,q=3")), RelationSet(field, rs)));
}

TEST(Relations, LieOneAndTwoAreWenger) {
  for (const std::uint64_t q : {2u, 3u, 4u, 5u}) {
    EXPECT_TRUE(same_adjacency(relations(FamilySpec{FamilyKind::LieM1, q, 0}),
                               relations(FamilySpec{FamilyKind::Wenger, q, 1})));
    EXPECT_TRUE(same_adjacency(relations(FamilySpec{FamilyKind::LieM2, q, 0}),
                               relations(FamilySpec{FamilyKind::Wenger, q, 2})));
  }
}

TEST(Relations, RepresentationsCoincideAtNOne) {
  const auto [a, b] = representation_pair(1, 5);
  EXPECT_TRUE(same_adjacency(a, b));
}

TEST(Relations, RepresentationPairCertifiesEqually) {
  for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {3, 3}, {2, 4}}) {
    const auto [a, b] = representation_pair(n, q);
    CensusOptions opts;
    const auto ca = certify(FamilySpec{FamilyKind::Wenger, q, n}, Adjacency(a), opts);
    const auto cb = certify(FamilySpec{FamilyKind::Wenger, q, n}, Adjacency(b), opts);
    EXPECT_EQ(ca.g, cb.g);
    EXPECT_EQ(ca.lambda, cb.lambda);
    EXPECT_EQ(ca.total_girth_cycles, cb.total_girth_cycles);
  }
  const auto [a, b] = representation_pair(2, 3);
  const Adjacency adj(a);
  const auto cert = certify(FamilySpec{FamilyKind::Wenger, 3, 2}, adj, CensusOptions{});
  EXPECT_EQ(cert.v, 54u);
  EXPECT_EQ(cert.k, 3u);
  EXPECT_EQ(cert.g, 8);
  EXPECT_EQ(cert.lambda, 8u);
}

TEST(Warnings, LieThreeInSmallCharacteristic) {
  EXPECT_FALSE(family_warnings(parse_family("lie:M3,q=3")).empty());
  EXPECT_FALSE(family_warnings(parse_family("lie:M3,q=4")).empty());
  EXPECT_TRUE(family_warnings(parse_family("lie:M3,q=5")).empty());
  EXPECT_TRUE(family_warnings(parse_family("wenger:n=2,q=2")).empty());
}

}  // namespace
}  // namespace egr
