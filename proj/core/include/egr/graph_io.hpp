#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "egr/adg.hpp"

namespace egr {

/// "P<point id> L<line id>\n" for every edge, sorted by point id then line
/// id. Ids are canonical vertex ids, so line ids start at q^d.
void write_edge_list(const Adjacency& adj, std::ostream& out);

/// Largest vertex count accepted by write_graph6.
inline constexpr std::uint64_t kMaxGraph6Vertices = 1u << 15;

/// graph6 encoding of the undirected graph with vertex i = canonical id i
/// (points first, then lines), followed by a newline.
void write_graph6(const Adjacency& adj, std::ostream& out);
std::string graph6(const Adjacency& adj);

}  // namespace egr
