#pragma once

// Closed-form girth and lambda for the Wenger and linearized Wenger
// families, plus the order bounds they are compared against. All
// arithmetic is exact; anything that would overflow 64 bits throws.

#include <cstdint>
#include <optional>
#include <string>

#include "egr/families.hpp"

namespace egr {

struct Prediction {
  int girth = 0;
  /// Absent where no closed form is known (Lie M3).
  std::optional<std::uint64_t> lambda;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// W_n(q). q = 2 is 2-regular of girth 8 with lambda 1 for every n.
Prediction predict_wenger(int n, std::uint64_t q);

/// L_m(q), q = p^e:
///   p odd:                     girth 6, lambda (q-1)^2 (q-2) if m = 1 else (q-1)^2 (p-2)
///   p = 2, e >= 2, m = 1:      girth 6, lambda (q-1)^2 (q-2)
///   p = 2, e = m = 1 or m >= 2: girth 8, lambda (q-1)^3 + (q-1)^2 (q-2)
Prediction predict_linearized(int m, std::uint64_t q);

/// Dispatch on the family. Lie M1/M2 are W_1/W_2. Lie M3 has girth 12 when
/// q is not a power of 2 or 3 and no lambda; otherwise nothing is predicted.
std::optional<Prediction> predict(const FamilySpec& spec);

/// M(k, g). Requires k >= 2, g >= 3.
std::uint64_t moore_bound(std::uint64_t k, int g);

struct Sandwich {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  /// lower <= upper. Only asymptotically guaranteed, so reported, not enforced.
  bool ordered = true;
};

struct BoundsReport {
  std::uint64_t moore = 0;
  /// n(k, g, lambda) >= this, for any egr graph.
  std::uint64_t extremal_general = 0;
  /// Bipartite egr graphs; defined for even g only.
  std::optional<std::uint64_t> extremal_bipartite;
  std::optional<Sandwich> sandwich;
};

/// Requires k >= 3, g >= 3, 1 <= lambda <= (k-1)^(g/2) (even g) or
/// (k-1)^((g-1)/2) (odd g). Throws Error otherwise.
BoundsReport extremal_lower_bounds(std::uint64_t k, int g, std::uint64_t lambda);

/// Order of an extremal egr(v, q, g, (q-1)^((g-2)/2) (q-2)) graph, for odd
/// prime powers q and g in {6, 8}: (bipartite lower bound, 2 q^((g-2)/2)).
Sandwich sandwich(std::uint64_t q, int g);

/// Copies of C_{2 ell} in the Wenger graph on 2 q^(ell-1) vertices:
///   ell = 3: q^3 (q-1)^2 (q-2) / 6,   ell = 4: q^4 (q-1)^3 (q-2) / 8.
/// Requires an odd prime power q.
std::uint64_t turan_lower_bound(int ell, std::uint64_t q);

struct TuranAsymptotic {
  std::string coefficient;  // "1/48" or "2^(-17/3)"
  double coefficient_value = 0;
  std::string exponent;  // "3" or "8/3"
  double exponent_value = 0;
  /// coefficient * n^exponent, ignoring the o(1) term.
  double leading_term = 0;
};

TuranAsymptotic turan_asymptotic(int ell, double n);

}  // namespace egr
