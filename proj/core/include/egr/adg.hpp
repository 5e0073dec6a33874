#pragma once

// Algebraically defined bipartite graphs over a finite field.
//
// Points (p_1..p_d) and lines [l_1..l_d] are adjacent iff for i = 2..d
//   a_i p_i + b_i l_i = f_i(p_1, l_1, ..., p_{i-1}, l_{i-1}).
// Coordinates are 1-indexed in comments and 0-indexed in storage.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egr/finite_field.hpp"

namespace egr {

class GraphError : public Error {
 public:
  using Error::Error;
};

enum class Side : std::uint8_t { Point = 0, Line = 1 };

using VertexId = std::uint64_t;

struct Vertex {
  Side side = Side::Point;
  std::vector<FieldElement> coords;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// f_i sees only the first i coordinates of the point and of the line.
using RelationFn = std::function<FieldElement(const Field&, std::span<const FieldElement> point,
                                              std::span<const FieldElement> line)>;

struct Relation {
  RelationFn f;
  /// Units a_i, b_i; left empty they default to one.
  std::optional<FieldElement> point_unit;
  std::optional<FieldElement> line_unit;
};

/// The defining system f_2..f_d together with its field.
class RelationSet {
 public:
  /// relations[k] is the relation for coordinate k + 2, so relations.size() == d - 1.
  RelationSet(std::shared_ptr<const Field> field, std::vector<Relation> relations);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  int dimension() const { return static_cast<int>(relations_.size()) + 1; }
  std::uint32_t q() const { return field_->q(); }

  /// f for coordinate index k (0-based, k >= 1) using prefixes of length k.
  FieldElement evaluate(int k, std::span<const FieldElement> point, std::span<const FieldElement> line) const;

  const FieldElement& point_unit(int k) const { return units_[static_cast<std::size_t>(k - 1)].a; }
  const FieldElement& line_unit(int k) const { return units_[static_cast<std::size_t>(k - 1)].b; }
  const FieldElement& point_unit_inv(int k) const { return units_[static_cast<std::size_t>(k - 1)].a_inv; }
  const FieldElement& line_unit_inv(int k) const { return units_[static_cast<std::size_t>(k - 1)].b_inv; }

 private:
  struct Units {
    FieldElement a, b, a_inv, b_inv;
  };

  std::shared_ptr<const Field> field_;
  std::vector<RelationFn> relations_;
  std::vector<Units> units_;
};

/// True iff the point and line satisfy every relation.
/// Throws GraphError on a dimension or side mismatch.
bool adjacent(const Vertex& point, const Vertex& line, const RelationSet& rel);

/// The q neighbours of v, ordered by the canonical index of their first
/// coordinate. Remaining coordinates are solved in increasing order.
std::vector<Vertex> neighbors(const Vertex& v, const RelationSet& rel);

/// The unique neighbour of v whose first coordinate is x.
Vertex neighbor_with_first(const Vertex& v, const FieldElement& x, const RelationSet& rel);

/// 2 q^d.
std::uint64_t vertex_count(const RelationSet& rel);
/// q^(d+1).
std::uint64_t edge_count(const RelationSet& rel);
/// q^d, the size of each side.
std::uint64_t side_size(const RelationSet& rel);

/// side * q^d + sum_i index(c_i) q^(i-1), coordinate 1 least significant.
VertexId vertex_id(const Vertex& v, const RelationSet& rel);
Vertex vertex_from_id(VertexId id, const RelationSet& rel);

/// Calls fn(point, line) for every edge exactly once: points in id order
/// within [first_point, last_point), each point's neighbours in canonical
/// order.
void for_each_edge(const RelationSet& rel, const std::function<void(const Vertex&, const Vertex&)>& fn,
                   VertexId first_point = 0, VertexId last_point = ~VertexId{0});

/// Materialised adjacency: vertex ids are canonical ids and row(v)[j] is
/// the neighbour whose first coordinate has index j.
class Adjacency {
 public:
  /// Largest q^d accepted for materialisation.
  static constexpr std::uint64_t kMaxSideSize = std::uint64_t{1} << 20;

  explicit Adjacency(const RelationSet& rel);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(2 * side_size_); }
  std::uint32_t side_size() const { return static_cast<std::uint32_t>(side_size_); }
  std::uint64_t edge_count() const { return side_size_ * degree_; }

  std::span<const std::uint32_t> row(std::uint32_t v) const {
    return {neighbors_.data() + std::size_t{v} * degree_, degree_};
  }
  /// O(1): rows are indexed by the neighbour's first coordinate, which is the
  /// lowest base-q digit of its id.
  bool has_edge(std::uint32_t u, std::uint32_t w) const { return neighbors_[std::size_t{u} * degree_ + w % degree_] == w; }

  bool is_point(std::uint32_t v) const { return v < side_size_; }

  /// Edge number e = point * q + j maps to (point, row(point)[j]).
  std::pair<std::uint32_t, std::uint32_t> edge(std::uint64_t e) const {
    const auto point = static_cast<std::uint32_t>(e / degree_);
    return {point, neighbors_[e]};
  }

 private:
  std::uint32_t degree_;
  std::uint64_t side_size_;
  std::vector<std::uint32_t> neighbors_;
};

}  // namespace egr
