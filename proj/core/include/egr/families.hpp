#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egr/adg.hpp"

namespace egr {

enum class FamilyKind { Wenger, WengerAlt, LinearizedWenger, LieM1, LieM2, LieM3 };

/// A concrete graph: family, field order and (where applicable) the index n
/// of W_n(q) or m of L_m(q).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Wenger;
  std::uint64_t q = 0;
  int index = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "wenger:n=2,q=3", "wenger-alt:n=2,q=3", "lwenger:m=2,q=4",
/// "lie:M3,q=5". Throws Error on malformed input.
FamilySpec parse_family(std::string_view text);
/// Inverse of parse_family.
std::string format_family(const FamilySpec& spec);

std::string_view family_kind_name(FamilyKind kind);
/// Accepts the same names format_family produces ("wenger", "lie-m3", ...).
FamilyKind parse_family_kind(std::string_view name);

bool family_uses_index(FamilyKind kind);

/// Throws Error if q is not a prime power or the index is invalid.
void validate(const FamilySpec& spec);

/// Number of coordinates: n+1, m+1, 2, 3 or 5.
int family_dimension(const FamilySpec& spec);

/// Non-fatal remarks, e.g. Lie M3 over characteristic 2 or 3.
std::vector<std::string> family_warnings(const FamilySpec& spec);

/// The defining relations of the family over GF(q).
RelationSet relations(const FamilySpec& spec);

/// The two equation representations of W_n(q): (Wenger, WengerAlt).
std::pair<RelationSet, RelationSet> representation_pair(int n, std::uint64_t q);

}  // namespace egr
