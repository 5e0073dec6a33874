#include "egr/adg.hpp"

#include <algorithm>
#include <string>

namespace egr {
namespace {

void check_vertex(const Vertex& v, const RelationSet& rel) {
  if (static_cast<int>(v.coords.size()) != rel.dimension()) {
    throw GraphError("vertex has " + std::to_string(v.coords.size()) + " coordinates, expected " +
                     std::to_string(rel.dimension()));
  }
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

RelationSet::RelationSet(std::shared_ptr<const Field> field, std::vector<Relation> relations)
    : field_(std::move(field)) {
  if (!field_) throw GraphError("relation set needs a field");
  for (auto& r : relations) {
    if (!r.f) throw GraphError("empty relation function");
    Units u{r.point_unit.value_or(field_->one()), r.line_unit.value_or(field_->one()), {}, {}};
    if (u.a.is_zero() || u.b.is_zero()) throw GraphError("relation coefficients must be units");
    u.a_inv = field_->inv(u.a);
    u.b_inv = field_->inv(u.b);
    relations_.push_back(std::move(r.f));
    units_.push_back(u);
  }
}

FieldElement RelationSet::evaluate(int k, std::span<const FieldElement> point,
                                   std::span<const FieldElement> line) const {
  const auto n = static_cast<std::size_t>(k);
  return relations_[n - 1](*field_, point.first(n), line.first(n));
}

bool adjacent(const Vertex& point, const Vertex& line, const RelationSet& rel) {
  check_vertex(point, rel);
  check_vertex(line, rel);
  if (point.side != Side::Point || line.side != Side::Line) {
    throw GraphError("adjacency is tested between a point and a line");
  }
  const Field& f = rel.field();
  for (int k = 1; k < rel.dimension(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    const FieldElement lhs =
        f.add(f.mul(rel.point_unit(k), point.coords[i]), f.mul(rel.line_unit(k), line.coords[i]));
    if (!(lhs == rel.evaluate(k, point.coords, line.coords))) return false;
  }
  return true;
}

Vertex neighbor_with_first(const Vertex& v, const FieldElement& x, const RelationSet& rel) {
  check_vertex(v, rel);
  const Field& f = rel.field();
  Vertex w;
  w.side = v.side == Side::Point ? Side::Line : Side::Point;
  w.coords.resize(v.coords.size(), f.zero());
  w.coords[0] = x;
  const bool from_point = v.side == Side::Point;
  const auto& point = from_point ? v.coords : w.coords;
  const auto& line = from_point ? w.coords : v.coords;
  for (int k = 1; k < rel.dimension(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    const FieldElement rhs = rel.evaluate(k, point, line);
    if (from_point) {
      // b l_i = f - a p_i
      w.coords[i] = f.mul(rel.line_unit_inv(k), f.sub(rhs, f.mul(rel.point_unit(k), v.coords[i])));
    } else {
      w.coords[i] = f.mul(rel.point_unit_inv(k), f.sub(rhs, f.mul(rel.line_unit(k), v.coords[i])));
    }
  }
  return w;
}

std::vector<Vertex> neighbors(const Vertex& v, const RelationSet& rel) {
  std::vector<Vertex> out;
  out.reserve(rel.q());
  for (std::uint32_t j = 0; j < rel.q(); ++j) out.push_back(neighbor_with_first(v, rel.field().element(j), rel));
  return out;
}

std::uint64_t side_size(const RelationSet& rel) { return power(rel.q(), rel.dimension()); }
std::uint64_t vertex_count(const RelationSet& rel) { return 2 * side_size(rel); }
std::uint64_t edge_count(const RelationSet& rel) { return side_size(rel) * rel.q(); }

VertexId vertex_id(const Vertex& v, const RelationSet& rel) {
  check_vertex(v, rel);
  VertexId id = 0;
  for (std::size_t i = v.coords.size(); i-- > 0;) id = id * rel.q() + rel.field().index_of(v.coords[i]);
  if (v.side == Side::Line) id += side_size(rel);
  return id;
}

Vertex vertex_from_id(VertexId id, const RelationSet& rel) {
  const std::uint64_t half = side_size(rel);
  if (id >= 2 * half) throw GraphError("vertex id " + std::to_string(id) + " out of range");
  Vertex v;
  v.side = id >= half ? Side::Line : Side::Point;
  id %= half;
  v.coords.reserve(static_cast<std::size_t>(rel.dimension()));
  for (int i = 0; i < rel.dimension(); ++i) {
    v.coords.push_back(rel.field().element(static_cast<std::uint32_t>(id % rel.q())));
    id /= rel.q();
  }
  return v;
}

void for_each_edge(const RelationSet& rel, const std::function<void(const Vertex&, const Vertex&)>& fn,
                   VertexId first_point, VertexId last_point) {
  const VertexId end = std::min(last_point, side_size(rel));
  for (VertexId id = first_point; id < end; ++id) {
    const Vertex point = vertex_from_id(id, rel);
    for (const Vertex& line : neighbors(point, rel)) fn(point, line);
  }
}

Adjacency::Adjacency(const RelationSet& rel) : degree_(rel.q()), side_size_(egr::side_size(rel)) {
  if (side_size_ > kMaxSideSize) {
    throw GraphError("graph too large to materialise (q^d = " + std::to_string(side_size_) + ")");
  }
  neighbors_.resize(2 * side_size_ * degree_);
  const std::vector<FieldElement> elems = rel.field().elements();
  for (VertexId id = 0; id < 2 * side_size_; ++id) {
    const Vertex v = vertex_from_id(id, rel);
    for (std::uint32_t j = 0; j < degree_; ++j) {
      neighbors_[id * degree_ + j] = static_cast<std::uint32_t>(vertex_id(neighbor_with_first(v, elems[j], rel), rel));
    }
  }
}

}  // namespace egr
