#include "egr/predictions.hpp"

#include <cmath>
#include <string>

namespace egr {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in bound arithmetic");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in bound arithmetic");
  return r;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

void require_prime_power(std::uint64_t q) {
  if (!is_prime_power(q)) throw Error("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace

Prediction predict_wenger(int n, std::uint64_t q) {
  require_prime_power(q);
  if (n < 1) throw Error("n must be >= 1");
  if (q == 2) return {8, 1};
  const std::uint64_t a = q - 1;
  if (n == 1) return {6, checked_mul(a * a, q - 2)};
  if (n == 2) {
    if (q % 2 == 1) return {8, checked_mul(ipow(a, 3), q - 2)};
    return {8, checked_add(checked_mul(ipow(a, 3), q - 3), 2 * a * a)};
  }
  return {8, ipow(a, 3)};
}

Prediction predict_linearized(int m, std::uint64_t q) {
  require_prime_power(q);
  if (m < 1) throw Error("m must be >= 1");
  const auto [p, e] = factor_prime_power(q);
  const std::uint64_t a = q - 1;
  if (p != 2) {
    if (m == 1) return {6, checked_mul(a * a, q - 2)};
    return {6, checked_mul(a * a, p - 2)};
  }
  if (e >= 2 && m == 1) return {6, checked_mul(a * a, q - 2)};
  return {8, checked_add(ipow(a, 3), checked_mul(a * a, q - 2))};
}

std::optional<Prediction> predict(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::Wenger:
    case FamilyKind::WengerAlt: return predict_wenger(spec.index, spec.q);
    case FamilyKind::LinearizedWenger: return predict_linearized(spec.index, spec.q);
    case FamilyKind::LieM1: return predict_wenger(1, spec.q);
    case FamilyKind::LieM2: return predict_wenger(2, spec.q);
    case FamilyKind::LieM3: {
      const auto p = factor_prime_power(spec.q).first;
      if (p == 2 || p == 3) return std::nullopt;
      return Prediction{12, std::nullopt};
    }
  }
  return std::nullopt;
}

std::uint64_t moore_bound(std::uint64_t k, int g) {
  if (k < 2 || g < 3) throw Error("Moore bound needs k >= 2 and g >= 3");
  std::uint64_t sum = 0;
  if (g % 2 == 0) {
    for (int i = 0; i <= (g - 2) / 2; ++i) sum = checked_add(sum, ipow(k - 1, i));
    return checked_mul(2, sum);
  }
  for (int i = 0; i <= (g - 3) / 2; ++i) sum = checked_add(sum, ipow(k - 1, i));
  return checked_add(1, checked_mul(k, sum));
}

BoundsReport extremal_lower_bounds(std::uint64_t k, int g, std::uint64_t lambda) {
  if (k < 3 || g < 3) throw Error("extremal bounds need k >= 3 and g >= 3");
  const std::uint64_t cap = g % 2 == 0 ? ipow(k - 1, g / 2) : ipow(k - 1, (g - 1) / 2);
  if (lambda < 1 || lambda > cap) {
    throw Error("lambda = " + std::to_string(lambda) + " is outside [1, " + std::to_string(cap) + "]");
  }
  BoundsReport report;
  report.moore = moore_bound(k, g);
  const std::uint64_t slack = cap - lambda;
  if (g % 2 == 0) {
    report.extremal_general = checked_add(report.moore, ceil_div(checked_mul(2, slack), k));
    report.extremal_bipartite = checked_add(report.moore, checked_mul(2, ceil_div(slack, k)));
  } else {
    report.extremal_general = checked_add(report.moore, slack);
  }
  return report;
}

Sandwich sandwich(std::uint64_t q, int g) {
  if (g != 6 && g != 8) throw Error("sandwich is stated for g in {6, 8}");
  require_prime_power(q);
  if (q % 2 == 0) throw Error("sandwich needs odd q");
  const int h = (g - 2) / 2;
  const std::uint64_t lambda = checked_mul(ipow(q - 1, h), q - 2);
  Sandwich s;
  s.lower = *extremal_lower_bounds(q, g, lambda).extremal_bipartite;
  s.upper = checked_mul(2, ipow(q, h));
  s.ordered = s.lower <= s.upper;
  return s;
}

std::uint64_t turan_lower_bound(int ell, std::uint64_t q) {
  require_prime_power(q);
  if (q % 2 == 0) throw Error("Turan bound needs odd q");
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  if (ell == 3) {
    numerator = checked_mul(checked_mul(ipow(q, 3), ipow(q - 1, 2)), q - 2);
    denominator = 6;
  } else if (ell == 4) {
    numerator = checked_mul(checked_mul(ipow(q, 4), ipow(q - 1, 3)), q - 2);
    denominator = 8;
  } else {
    throw Error("Turan bound is available for ell in {3, 4}");
  }
  if (numerator % denominator != 0) throw Error("Turan numerator not divisible");
  return numerator / denominator;
}

TuranAsymptotic turan_asymptotic(int ell, double n) {
  TuranAsymptotic t;
  if (ell == 3) {
    t.coefficient = "1/48";
    t.coefficient_value = 1.0 / 48.0;
    t.exponent = "3";
    t.exponent_value = 3.0;
  } else if (ell == 4) {
    t.coefficient = "2^(-17/3)";
    t.coefficient_value = std::pow(2.0, -17.0 / 3.0);
    t.exponent = "8/3";
    t.exponent_value = 8.0 / 3.0;
  } else {
    throw Error("Turan asymptotics are available for ell in {3, 4}");
  }
  t.leading_term = t.coefficient_value * std::pow(n, t.exponent_value);
  return t;
}

}  // namespace egr
