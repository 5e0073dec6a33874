#include "egr/predictions.hpp"

#include <gtest/gtest.h>

#include "egr/families.hpp"

namespace egr {
namespace {

Prediction pr(int g, std::uint64_t lambda) { return Prediction{g, lambda}; }

TEST(PredictWenger, Examples) {
  EXPECT_EQ(predict_wenger(1, 3), pr(6, 4));
  EXPECT_EQ(predict_wenger(2, 5), pr(8, 192));
  EXPECT_EQ(predict_wenger(3, 3), pr(8, 8));
  EXPECT_EQ(predict_wenger(2, 4), pr(8, 45));
  EXPECT_EQ(predict_wenger(2, 3), pr(8, 8));
}

TEST(PredictWenger, CharacteristicTwoBaseCase) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(predict_wenger(n, 2), pr(8, 1));
}

TEST(PredictWenger, Errors) {
  EXPECT_THROW(predict_wenger(2, 6), Error);
  EXPECT_THROW(predict_wenger(0, 3), Error);
}

TEST(PredictLinearized, Examples) {
  EXPECT_EQ(predict_linearized(2, 3), pr(6, 4));
  EXPECT_EQ(predict_linearized(1, 4), pr(6, 18));
  EXPECT_EQ(predict_linearized(2, 2), pr(8, 1));
  EXPECT_EQ(predict_linearized(2, 9), pr(6, 64));
  EXPECT_EQ(predict_linearized(1, 5), pr(6, 48));
  EXPECT_THROW(predict_linearized(2, 10), Error);
}

TEST(Predict, Dispatch) {
  EXPECT_EQ(predict(parse_family("lie:M1,q=5")), predict_wenger(1, 5));
  EXPECT_EQ(predict(parse_family("lie:M2,q=4")), predict_wenger(2, 4));
  EXPECT_EQ(predict(parse_family("wenger-alt:n=3,q=4")), predict_wenger(3, 4));
  const auto lie3 = predict(parse_family("lie:M3,q=5"));
  ASSERT_TRUE(lie3.has_value());
  EXPECT_EQ(lie3->girth, 12);
  EXPECT_FALSE(lie3->lambda.has_value());
  EXPECT_FALSE(predict(parse_family("lie:M3,q=9")).has_value());
}

TEST(MooreBound, Examples) {
  EXPECT_EQ(moore_bound(3, 6), 14u);
  EXPECT_EQ(moore_bound(3, 5), 10u);
  EXPECT_EQ(moore_bound(5, 8), 170u);
  EXPECT_THROW(moore_bound(1, 6), Error);
}

TEST(ExtremalBounds, Examples) {
  EXPECT_EQ(extremal_lower_bounds(3, 6, 4).extremal_bipartite, 18u);
  EXPECT_EQ(extremal_lower_bounds(3, 8, 8).extremal_bipartite, 36u);
  for (std::uint64_t k = 3; k <= 6; ++k) {
    std::uint64_t full = 1;
    for (int i = 0; i < 3; ++i) full *= k - 1;
    EXPECT_EQ(extremal_lower_bounds(k, 6, full).extremal_bipartite, moore_bound(k, 6));
  }
  EXPECT_FALSE(extremal_lower_bounds(3, 5, 2).extremal_bipartite.has_value());
}

TEST(ExtremalBounds, RangeErrors) {
  EXPECT_THROW(extremal_lower_bounds(3, 6, 0), Error);
  EXPECT_THROW(extremal_lower_bounds(3, 6, 9), Error);
  EXPECT_THROW(extremal_lower_bounds(3, 5, 5), Error);
  EXPECT_THROW(extremal_lower_bounds(2, 6, 1), Error);
}

TEST(ExtremalBounds, Ordering) {
  for (std::uint64_t k = 3; k <= 9; ++k) {
    for (const int g : {5, 6, 7, 8}) {
      std::uint64_t cap = 1;
      for (int i = 0; i < g / 2; ++i) cap *= k - 1;
      for (std::uint64_t lambda = 1; lambda <= cap; ++lambda) {
        const auto b = extremal_lower_bounds(k, g, lambda);
        ASSERT_GE(b.extremal_general, b.moore);
        if (b.extremal_bipartite) ASSERT_GE(*b.extremal_bipartite, b.extremal_general);
      }
    }
  }
}

TEST(Sandwich, Examples) {
  const auto s36 = sandwich(3, 6);
  EXPECT_EQ(s36.lower, 18u);
  EXPECT_EQ(s36.upper, 18u);
  EXPECT_TRUE(s36.ordered);
  const auto s56 = sandwich(5, 6);
  EXPECT_EQ(s56.lower, 50u);
  EXPECT_EQ(s56.upper, 50u);
  const auto s38 = sandwich(3, 8);
  EXPECT_EQ(s38.lower, 36u);
  EXPECT_EQ(s38.upper, 54u);
  EXPECT_THROW(sandwich(3, 10), Error);
  EXPECT_THROW(sandwich(4, 6), Error);
}

TEST(Turan, Examples) {
  EXPECT_EQ(turan_lower_bound(3, 3), 18u);
  EXPECT_EQ(turan_lower_bound(4, 3), 81u);
  EXPECT_EQ(turan_lower_bound(3, 5), 1000u);
  EXPECT_THROW(turan_lower_bound(3, 4), Error);
  EXPECT_THROW(turan_lower_bound(5, 3), Error);
}

TEST(Turan, Asymptotics) {
  const auto t3 = turan_asymptotic(3, 100.0);
  EXPECT_EQ(t3.coefficient, "1/48");
  EXPECT_DOUBLE_EQ(t3.coefficient_value, 1.0 / 48.0);
  EXPECT_NEAR(t3.leading_term, 1e6 / 48.0, 1e-6);
  const auto t4 = turan_asymptotic(4, 8.0);
  EXPECT_EQ(t4.coefficient, "2^(-17/3)");
  EXPECT_NEAR(t4.coefficient_value, 0.0196862, 1e-6);
  EXPECT_THROW(turan_asymptotic(2, 5.0), Error);
}

// Every odd prime power q <= 100.
std::vector<std::uint64_t> odd_prime_powers() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q <= 100; q += 2) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

TEST(Identities, TuranNumeratorsAreDivisible) {
  for (const auto q : odd_prime_powers()) {
    const std::uint64_t q1 = q - 1;
    EXPECT_EQ(q * q * q * q1 * q1 * (q - 2) % 6, 0u) << q;
    EXPECT_EQ(q * q * q * q * q1 * q1 * q1 * (q - 2) % 8, 0u) << q;
    EXPECT_NO_THROW(turan_lower_bound(3, q));
    EXPECT_NO_THROW(turan_lower_bound(4, q));
  }
}

TEST(Identities, OddCaseSum) {
  for (std::int64_t q = 2; q <= 100; ++q) {
    const std::int64_t a = (q - 1) * (q - 1);
    EXPECT_EQ(a + a * (q - 3) + a * (q - 2) + a * (q - 2) * (q - 3), (q - 1) * a * (q - 2)) << q;
  }
}

TEST(Identities, EvenCaseSum) {
  for (std::int64_t q = 2; q <= 64; q += 2) {
    const std::int64_t a = (q - 1) * (q - 1);
    EXPECT_EQ(a + 2 * a * (q - 2) + a * (q - 2) * (q - 4), (q - 1) * a * (q - 3) + 2 * a) << q;
  }
}

}  // namespace
}  // namespace egr
