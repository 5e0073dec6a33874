#include "egr/automorphisms.hpp"

#include <string>

#include "egr/lcg.hpp"

namespace egr {

Vertex apply_sigma(const SigmaMap& map, const Vertex& v, const Field& field) {
  const auto dim = static_cast<std::size_t>(map.m + 1);
  if (v.coords.size() != dim) {
    throw GraphError("sigma map on L_" + std::to_string(map.m) + " needs " + std::to_string(dim) + " coordinates");
  }
  if (map.i < 0 || map.i > map.m + 1) throw GraphError("sigma index out of range");
  Vertex out = v;
  auto& c = out.coords;
  const bool point = v.side == Side::Point;
  if (map.i == 0) {
    if (point) {
      c[0] = field.add(c[0], map.x);
    } else {
      for (std::size_t k = 1; k < dim; ++k) c[k] = field.add(c[k], field.mul(v.coords[0], field.frobenius(map.x, k - 1)));
    }
  } else if (map.i == 1) {
    if (point) {
      for (std::size_t k = 1; k < dim; ++k) c[k] = field.add(c[k], field.mul(field.frobenius(v.coords[0], k - 1), map.x));
    } else {
      c[0] = field.add(c[0], map.x);
    }
  } else {
    const auto k = static_cast<std::size_t>(map.i - 1);
    c[k] = point ? field.sub(c[k], map.x) : field.add(c[k], map.x);
  }
  return out;
}

Vertex apply_sequence(const SigmaSequence& maps, const Vertex& v, const Field& field) {
  Vertex out = v;
  for (const SigmaMap& s : maps) out = apply_sigma(s, out, field);
  return out;
}

AutomorphismCheck verify_automorphism(const VertexMap& map, const RelationSet& rel, CheckMode mode,
                                      std::uint64_t seed, std::uint64_t samples) {
  AutomorphismCheck result;
  auto check_edge = [&](const Vertex& point, const Vertex& line) {
    ++result.edges_checked;
    const Vertex a = map(point);
    const Vertex b = map(line);
    if (a.side != Side::Point || b.side != Side::Line || !adjacent(a, b, rel)) {
      result.ok = false;
      result.counterexample = EdgeWitness{point, line};
      return false;
    }
    return true;
  };

  if (mode == CheckMode::Sampled) {
    Lcg rng(seed);
    const std::uint64_t half = side_size(rel);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Vertex point = vertex_from_id(rng.below(half), rel);
      const Vertex line = neighbor_with_first(point, rel.field().element(static_cast<std::uint32_t>(rng.below(rel.q()))), rel);
      if (!check_edge(point, line)) return result;
    }
    return result;
  }

  const std::uint64_t half = side_size(rel);
  for (VertexId id = 0; id < half; ++id) {
    const Vertex point = vertex_from_id(id, rel);
    for (const Vertex& line : neighbors(point, rel)) {
      if (!check_edge(point, line)) return result;
    }
  }
  // Injectivity; with adjacency preserved on a finite graph this makes the map an automorphism.
  std::vector<std::uint8_t> hit(2 * half, 0);
  for (VertexId id = 0; id < 2 * half; ++id) {
    const Vertex v = vertex_from_id(id, rel);
    const VertexId image = vertex_id(map(v), rel);
    if (hit[image]) {
      result.ok = false;
      const Vertex point = v.side == Side::Point ? v : neighbors(v, rel).front();
      const Vertex line = v.side == Side::Point ? neighbors(v, rel).front() : v;
      result.counterexample = EdgeWitness{point, line};
      return result;
    }
    hit[image] = 1;
  }
  return result;
}

AutomorphismCheck verify_automorphism(const SigmaMap& map, const RelationSet& rel, CheckMode mode,
                                      std::uint64_t seed, std::uint64_t samples) {
  const Field& field = rel.field();
  return verify_automorphism([&](const Vertex& v) { return apply_sigma(map, v, field); }, rel, mode, seed, samples);
}

SigmaSequence edge_to_base(const Vertex& point, const Vertex& line, const RelationSet& rel) {
  if (!adjacent(point, line, rel)) throw GraphError("edge_to_base needs an edge");
  const Field& field = rel.field();
  const int m = rel.dimension() - 1;
  SigmaSequence seq;
  for (int i = 1; i <= m + 1; ++i) {
    seq.push_back({i, field.neg(line.coords[static_cast<std::size_t>(i - 1)]), m});
  }
  const Vertex moved = apply_sequence(seq, point, field);
  seq.push_back({0, field.neg(moved.coords[0]), m});
  return seq;
}

std::vector<SigmaMap> all_sigma_maps(const FamilySpec& spec, const Field& field) {
  if (spec.kind != FamilyKind::LinearizedWenger) throw Error("sigma maps are defined for lwenger families only");
  std::vector<SigmaMap> maps;
  for (int i = 0; i <= spec.index + 1; ++i) {
    for (const FieldElement& x : field.elements()) maps.push_back({i, x, spec.index});
  }
  return maps;
}

}  // namespace egr
