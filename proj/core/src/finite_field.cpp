#include "egr/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace egr {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// Returns (quotient, remainder) of a / b; b must be non-zero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const std::uint32_t lead_inv = mod_inv(b.back(), p);
  Poly quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a[k]} * lead_inv % p);
    const std::size_t shift = k - (b.size() - 1);
    quot[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - std::uint64_t{c} * b[j] % p) % p);
      }
    }
    if (k == 0) break;
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& mod, std::uint32_t p) {
  Poly result{1};
  base = poly_divmod(base, mod, p).second;
  while (exp > 0) {
    if (exp & 1) result = poly_divmod(poly_mul(result, base, p), mod, p).second;
    base = poly_divmod(poly_mul(base, base, p), mod, p).second;
    exp >>= 1;
  }
  return result;
}

// Smallest monic irreducible of degree e, lexicographic on (c_0, ..., c_{e-1}).
std::vector<std::uint32_t> find_modulus(std::uint32_t p, int e) {
  std::vector<std::uint32_t> lower(static_cast<std::size_t>(e), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < e; ++i) total *= p;
  for (std::uint64_t n = 0; n < total; ++n) {
    // c_0 is the most significant digit of n.
    std::uint64_t rest = n;
    for (int i = e - 1; i >= 0; --i) {
      lower[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    std::vector<std::uint32_t> monic = lower;
    monic.push_back(1);
    if (is_irreducible(monic, p)) return monic;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, int> factor_prime_power(std::uint64_t q) {
  if (q < 2 || q > kMaxOrder) {
    throw FieldError("field order " + std::to_string(q) + " is outside [2, 2^20]");
  }
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw FieldError(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

bool is_prime_power(std::uint64_t q) {
  try {
    factor_prime_power(q);
    return true;
  } catch (const FieldError&) {
    return false;
  }
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  if (deg <= 3) {
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
      if (acc == 0) return false;
    }
    return true;
  }
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

Field::Field(std::uint32_t p, int e) : p_(p), e_(e), q_(0) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (e < 1) throw FieldError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = find_modulus(p, e);
}

void Field::check(const FieldElement& a) const {
  if (!contains(a)) {
    throw FieldError("operand belongs to GF(" + std::to_string(a.p_) + "^" + std::to_string(a.e_) +
                     "), expected " + describe());
  }
}

FieldElement Field::zero() const {
  FieldElement z;
  z.p_ = p_;
  z.e_ = e_;
  return z;
}

FieldElement Field::one() const {
  FieldElement o = zero();
  o.coeffs_[0] = 1;
  return o;
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) throw FieldError("element index out of range");
  FieldElement a = zero();
  for (int i = 0; i < e_; ++i) {
    a.coeffs_[static_cast<std::size_t>(i)] = index % p_;
    index /= p_;
  }
  return a;
}

std::uint32_t Field::index_of(const FieldElement& a) const {
  check(a);
  std::uint32_t index = 0;
  for (int i = e_; i-- > 0;) index = index * p_ + a.coeffs_[static_cast<std::size_t>(i)];
  return index;
}

FieldElement Field::from_int(std::int64_t value) const {
  const std::int64_t p = p_;
  FieldElement a = zero();
  a.coeffs_[0] = static_cast<std::uint32_t>(((value % p) + p) % p);
  return a;
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(e_)) throw FieldError("too many coefficients");
  FieldElement a = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
    a.coeffs_[i] = coeffs[i];
  }
  return a;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.coeffs_[k] = (a.coeffs_[k] + b.coeffs_[k]) % p_;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.coeffs_[k] = (a.coeffs_[k] + p_ - b.coeffs_[k]) % p_;
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < e_; ++i) {
    const std::uint64_t ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < e_; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + ai * b.coeffs_[static_cast<std::size_t>(j)]) % p_;
    }
  }
  // Reduce by the monic modulus: x^e = -(c_0 + ... + c_{e-1} x^{e-1}).
  for (int k = 2 * e_ - 2; k >= e_; --k) {
    const std::uint64_t c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int j = 0; j < e_; ++j) {
      auto& slot = prod[static_cast<std::size_t>(k - e_ + j)];
      slot = (slot + (p_ - c) * modulus_[static_cast<std::size_t>(j)]) % p_;
    }
  }
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) r.coeffs_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)]);
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw FieldError("inverse of zero");
  // Invariant: s_i * a == r_i (mod modulus).
  Poly r0(modulus_.begin(), modulus_.end());
  Poly r1(a.coeffs_.begin(), a.coeffs_.begin() + e_);
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (r1.size() > 1) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a non-zero constant since the modulus is irreducible.
  const std::uint32_t scale = mod_inv(r1[0], p_);
  FieldElement result = zero();
  for (std::size_t i = 0; i < s1.size(); ++i) {
    result.coeffs_[i] = static_cast<std::uint32_t>(std::uint64_t{s1[i]} * scale % p_);
  }
  return result;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t k) const {
  check(a);
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement Field::frobenius(const FieldElement& a, std::uint64_t i) const {
  check(a);
  FieldElement result = a;
  for (std::uint64_t step = 0; step < i % static_cast<std::uint64_t>(e_); ++step) result = pow(result, p_);
  return result;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (e_ > 1) os << "^" << e_;
  os << ")";
  return os.str();
}

}  // namespace egr
