#pragma once

// Explicit automorphisms sigma_{i,x} of the linearized Wenger graph L_m(q),
// and the composite that carries any edge onto the all-zero edge.
//
//   sigma_{0,x}: (p) -> (p_1 + x, p_2, ..., p_{m+1})
//                [l] -> [l_1, l_2 + l_1 x, l_3 + l_1 x^p, ..., l_{m+1} + l_1 x^(p^(m-1))]
//   sigma_{1,x}: (p) -> (p_1, p_2 + p_1 x, p_3 + p_1^p x, ..., p_{m+1} + p_1^(p^(m-1)) x)
//                [l] -> [l_1 + x, l_2, ..., l_{m+1}]
//   sigma_{i,x}, 2 <= i <= m+1: subtracts x from p_i and adds x to l_i.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "egr/adg.hpp"
#include "egr/families.hpp"

namespace egr {

struct SigmaMap {
  int i = 0;
  FieldElement x;
  int m = 1;
};

/// Throws GraphError if v does not have m+1 coordinates or i is out of range.
Vertex apply_sigma(const SigmaMap& map, const Vertex& v, const Field& field);

/// A composite applied left to right: maps[0] acts first.
using SigmaSequence = std::vector<SigmaMap>;

Vertex apply_sequence(const SigmaSequence& maps, const Vertex& v, const Field& field);

using VertexMap = std::function<Vertex(const Vertex&)>;

enum class CheckMode { Exhaustive, Sampled };

struct EdgeWitness {
  Vertex point;
  Vertex line;
};

struct AutomorphismCheck {
  bool ok = true;
  std::uint64_t edges_checked = 0;
  /// An edge whose image is not an edge, or (exhaustive only) a pair of
  /// vertices with the same image reported as the edge through the first.
  std::optional<EdgeWitness> counterexample;
};

/// Checks that map sends every checked edge to an edge. Exhaustive mode
/// also checks that the map is injective on vertices. Sampled mode draws
/// `samples` edges with the seeded LCG.
AutomorphismCheck verify_automorphism(const VertexMap& map, const RelationSet& rel, CheckMode mode,
                                      std::uint64_t seed = 0, std::uint64_t samples = 2000);
AutomorphismCheck verify_automorphism(const SigmaMap& map, const RelationSet& rel, CheckMode mode,
                                      std::uint64_t seed = 0, std::uint64_t samples = 2000);

/// The composite sigma_{1,-l_1}, sigma_{2,-l_2}, ..., sigma_{m+1,-l_{m+1}},
/// sigma_{0,-p'_1} (in application order) carrying point~line to (0)~[0].
/// Throws GraphError if point~line is not an edge.
SigmaSequence edge_to_base(const Vertex& point, const Vertex& line, const RelationSet& rel);

/// Every sigma_{i,x} for 0 <= i <= m+1 and x in F_q.
std::vector<SigmaMap> all_sigma_maps(const FamilySpec& spec, const Field& field);

/// Exhaustive graphs up to this many vertices; larger ones are sampled by
/// default.
inline constexpr std::uint64_t kExhaustiveVertexLimit = 10000;

}  // namespace egr
