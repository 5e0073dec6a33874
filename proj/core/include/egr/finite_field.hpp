#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace egr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Largest supported extension degree; q = p^e is capped at 2^20.
inline constexpr int kMaxDegree = 20;
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

/// An element of GF(p^e) in the polynomial basis, constant term first.
///
/// Elements remember (p, e) so that operands from different fields are
/// rejected. Since the modulus is a deterministic function of (p, e), the
/// pair identifies the field.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::span<const std::uint32_t> coeffs() const { return {coeffs_.data(), static_cast<std::size_t>(e_)}; }

  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend class Field;

  std::uint32_t p_ = 0;
  int e_ = 0;
  std::array<std::uint32_t, kMaxDegree> coeffs_{};
};

/// GF(p^e) with a fixed modulus: the smallest monic irreducible polynomial
/// of degree e, comparing coefficient vectors lexicographically with the
/// constant term first. For e = 1 the modulus is x.
///
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class Field {
 public:
  /// Throws FieldError if p is not prime, e < 1 or p^e exceeds kMaxOrder.
  Field(std::uint32_t p, int e);

  std::uint32_t p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }

  /// Modulus coefficients c_0..c_e (c_e = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;

  /// Element whose coefficient vector is the base-p digits of index,
  /// least significant digit first. Index 0 is zero, index 1 is one.
  FieldElement element(std::uint32_t index) const;
  std::uint32_t index_of(const FieldElement& a) const;

  /// Embeds an integer through Z -> Z/pZ -> F_q.
  FieldElement from_int(std::int64_t value) const;
  /// Builds an element from explicit coefficients (constant term first).
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Extended Euclid on polynomials. Throws FieldError on zero.
  FieldElement inv(const FieldElement& a) const;
  /// Square-and-multiply; pow(0, 0) is one.
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;
  /// a^(p^i). frobenius(a, 0) is a.
  FieldElement frobenius(const FieldElement& a, std::uint64_t i) const;

  /// All q elements in canonical index order.
  std::vector<FieldElement> elements() const;

  bool contains(const FieldElement& a) const { return a.p_ == p_ && a.e_ == e_; }

  std::string describe() const;

 private:
  void check(const FieldElement& a) const;

  std::uint32_t p_;
  int e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or throws FieldError if q is not a prime
/// power (q >= 2, trial division).
std::pair<std::uint32_t, int> factor_prime_power(std::uint64_t q);

bool is_prime_power(std::uint64_t q);

/// Irreducibility over Z/pZ of a monic polynomial given low degree first.
/// Uses gcd(f, x^(p^i) - x) = 1 for every i <= deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace egr
