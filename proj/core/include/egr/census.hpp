#pragma once

// Exact girth and girth-cycle counting.
//
// A cycle of length L through the edge u~w is a simple path of length L-1
// from u to w that does not use the edge itself, so every count below is a
// path count. The certificate summarises a whole graph as egr(v, k, g, lambda).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egr/adg.hpp"
#include "egr/families.hpp"

namespace egr {

class CensusError : public Error {
 public:
  using Error::Error;
};

enum class CensusMode { BaseEdgeOnly, Sampled, Exhaustive };

std::string_view census_mode_name(CensusMode mode);
CensusMode parse_census_mode(std::string_view name);

enum class PathStrategy {
  /// Depth-bounded DFS with an on-path set; valid for any length.
  Dfs,
  /// Joins non-backtracking half-walks from both endpoints. Only valid when
  /// the requested length equals the girth.
  MeetInMiddle,
};

struct EdgeRef {
  std::uint32_t point = 0;
  std::uint32_t line = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct EdgeCount {
  EdgeRef edge;
  std::uint64_t count = 0;

  friend bool operator==(const EdgeCount&, const EdgeCount&) = default;
};

/// Thrown when two checked edges lie on different numbers of girth cycles.
class NonUniformError : public CensusError {
 public:
  NonUniformError(EdgeCount first, EdgeCount second);

  const EdgeCount& first() const { return first_; }
  const EdgeCount& second() const { return second_; }

 private:
  EdgeCount first_;
  EdgeCount second_;
};

struct CensusOptions {
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 256;
  unsigned workers = 1;
  PathStrategy strategy = PathStrategy::Dfs;
  /// Caps the girth search; the graph must contain a cycle of at most this length.
  std::optional<int> girth_hint;
};

struct EgrCertificate {
  FamilySpec family;
  std::uint64_t v = 0;
  std::uint32_t k = 0;
  int g = 0;
  std::uint64_t lambda = 0;
  CensusMode mode = CensusMode::BaseEdgeOnly;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  /// Counts for every edge actually checked, in the order they were drawn.
  std::vector<EdgeCount> per_edge_counts;
  /// v k lambda / (2g).
  std::uint64_t total_girth_cycles = 0;
  double elapsed_ms = 0;
  unsigned workers = 1;
};

/// Certificates agree on everything except timing and worker count.
bool same_measurement(const EgrCertificate& a, const EgrCertificate& b);

/// Shortest cycle length, by BFS from every point. Throws CensusError if the
/// graph is acyclic, or has no cycle of length <= hint when a hint is given.
int girth(const Adjacency& adj, std::optional<int> hint = std::nullopt, unsigned workers = 1);
int girth(const FamilySpec& spec, std::optional<int> hint = std::nullopt);

/// Reusable per-thread scratch for cycle counting on one graph.
class CycleCounter {
 public:
  explicit CycleCounter(const Adjacency& adj);

  /// Number of cycles of the given length through u~w, walking from u.
  /// Throws CensusError if u~w is not an edge or the length is odd or < 4.
  std::uint64_t through_edge(std::uint32_t u, std::uint32_t w, int length,
                             PathStrategy strategy = PathStrategy::Dfs);

 private:
  std::uint64_t dfs(std::uint32_t x, int remaining);
  std::uint64_t meet_in_middle(std::uint32_t u, std::uint32_t w, int length);

  const Adjacency& adj_;
  std::vector<std::uint8_t> on_path_;
  std::uint32_t target_ = 0;
};

std::uint64_t count_cycles_through_edge(const Adjacency& adj, std::uint32_t u, std::uint32_t w, int length,
                                        PathStrategy strategy = PathStrategy::Dfs);
/// Vertex-level overload; materialises the family's graph.
std::uint64_t count_cycles_through_edge(const FamilySpec& spec, const Vertex& a, const Vertex& b, int length);

/// Per-edge counts for every edge, indexed by edge number (point * q + j).
std::vector<std::uint64_t> count_all_edges(const Adjacency& adj, int length, unsigned workers,
                                           PathStrategy strategy = PathStrategy::Dfs);

/// Total number of cycles of the given length: the sum of per-edge counts
/// divided by the length. Throws CensusError if the division is not exact.
std::uint64_t count_cycles_total(const Adjacency& adj, int length, unsigned workers = 1);
std::uint64_t count_cycles_total(const FamilySpec& spec, int length, unsigned workers = 1);

/// v k lambda / (2g); throws CensusError unless the division is exact.
std::uint64_t girth_cycle_total(std::uint64_t v, std::uint64_t k, std::uint64_t lambda, int g);

/// Measures (v, k, g, lambda). In Sampled and Exhaustive mode every checked
/// edge must give the same count or NonUniformError is thrown.
EgrCertificate certify(const FamilySpec& spec, const CensusOptions& options);
EgrCertificate certify(const FamilySpec& spec, const Adjacency& adj, const CensusOptions& options);

}  // namespace egr
