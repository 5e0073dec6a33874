#include "egr/graph_io.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace egr {

void write_edge_list(const Adjacency& adj, std::ostream& out) {
  std::vector<std::uint32_t> lines;
  std::string buffer;
  for (std::uint32_t point = 0; point < adj.side_size(); ++point) {
    const auto row = adj.row(point);
    lines.assign(row.begin(), row.end());
    std::sort(lines.begin(), lines.end());
    buffer.clear();
    for (const std::uint32_t line : lines) {
      buffer += 'P';
      buffer += std::to_string(point);
      buffer += " L";
      buffer += std::to_string(line);
      buffer += '\n';
    }
    out << buffer;
  }
}

std::string graph6(const Adjacency& adj) {
  const std::uint64_t n = adj.vertex_count();
  if (n > kMaxGraph6Vertices) throw GraphError("graph too large for graph6 export");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  // Upper triangle, column by column: bit for (i, j) with i < j.
  int filled = 0;
  unsigned group = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      const bool bit = adj.is_point(i) != adj.is_point(j) && adj.has_edge(i, j);
      group = (group << 1) | (bit ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + group);
        filled = 0;
        group = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (group << (6 - filled)));
  out += '\n';
  return out;
}

void write_graph6(const Adjacency& adj, std::ostream& out) { out << graph6(adj); }

}  // namespace egr
