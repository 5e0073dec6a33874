#include "egr/census.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "egr/lcg.hpp"
#include "egr/parallel.hpp"

namespace egr {
namespace {

constexpr std::uint64_t kEdgeChunk = 16;

std::string edge_text(const EdgeCount& e) {
  return "P" + std::to_string(e.edge.point) + "~L" + std::to_string(e.edge.line) + " (" + std::to_string(e.count) +
         " cycles)";
}

// Shortest cycle through a cycle reachable from root, or best if none is
// shorter. dist/touched are caller-owned scratch.
int bfs_shortest_cycle(const Adjacency& adj, std::uint32_t root, int max_depth, int best,
                       std::vector<std::int32_t>& dist, std::vector<std::uint32_t>& parent,
                       std::vector<std::uint32_t>& queue) {
  queue.clear();
  queue.push_back(root);
  dist[root] = 0;
  parent[root] = root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    const int dx = dist[x];
    // Any new cycle found from x has length >= 2 dx + 1.
    if (2 * dx + 1 >= best || dx >= max_depth) break;
    for (const std::uint32_t y : adj.row(x)) {
      if (y == parent[x]) continue;
      if (dist[y] >= 0) {
        best = std::min(best, dx + dist[y] + 1);
      } else {
        dist[y] = dx + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  for (const std::uint32_t v : queue) dist[v] = -1;
  return best;
}

}  // namespace

std::string_view census_mode_name(CensusMode mode) {
  switch (mode) {
    case CensusMode::BaseEdgeOnly: return "base-edge";
    case CensusMode::Sampled: return "sampled";
    case CensusMode::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

CensusMode parse_census_mode(std::string_view name) {
  if (name == "base-edge" || name == "base") return CensusMode::BaseEdgeOnly;
  if (name == "sampled") return CensusMode::Sampled;
  if (name == "exhaustive") return CensusMode::Exhaustive;
  throw Error("unknown census mode '" + std::string(name) + "'");
}

NonUniformError::NonUniformError(EdgeCount first, EdgeCount second)
    : CensusError("girth-cycle counts differ: " + edge_text(first) + " vs " + edge_text(second)),
      first_(first),
      second_(second) {}

bool same_measurement(const EgrCertificate& a, const EgrCertificate& b) {
  return a.family == b.family && a.v == b.v && a.k == b.k && a.g == b.g && a.lambda == b.lambda && a.mode == b.mode &&
         a.seed == b.seed && a.samples == b.samples && a.per_edge_counts == b.per_edge_counts &&
         a.total_girth_cycles == b.total_girth_cycles;
}

int girth(const Adjacency& adj, std::optional<int> hint, unsigned workers) {
  if (hint && (*hint < 4 || *hint % 2 != 0)) throw CensusError("girth hint must be an even integer >= 4");
  const int max_depth = hint ? *hint / 2 : std::numeric_limits<int>::max();
  const int unbounded = std::numeric_limits<int>::max();
  std::atomic<int> best{unbounded};
  workers = std::max(1u, workers);
  struct Scratch {
    std::vector<std::int32_t> dist;
    std::vector<std::uint32_t> parent, queue;
  };
  std::vector<Scratch> scratch(workers);
  parallel_chunks(adj.side_size(), workers, 64, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    Scratch& s = scratch[worker];
    if (s.dist.empty()) {
      s.dist.assign(adj.vertex_count(), -1);
      s.parent.assign(adj.vertex_count(), 0);
    }
    for (std::uint64_t root = begin; root < end; ++root) {
      int current = best.load();
      if (current <= 4) return;  // bipartite: nothing shorter exists
      const int found =
          bfs_shortest_cycle(adj, static_cast<std::uint32_t>(root), max_depth, current, s.dist, s.parent, s.queue);
      while (found < current && !best.compare_exchange_weak(current, found)) {
      }
    }
  });
  const int g = best.load();
  if (g == unbounded) {
    throw CensusError(hint ? "no cycle of length <= " + std::to_string(*hint) : std::string("graph is acyclic"));
  }
  if (hint && g > *hint) throw CensusError("no cycle of length <= " + std::to_string(*hint));
  return g;
}

int girth(const FamilySpec& spec, std::optional<int> hint) {
  const Adjacency adj(relations(spec));
  return girth(adj, hint, 1);
}

CycleCounter::CycleCounter(const Adjacency& adj) : adj_(adj), on_path_(adj.vertex_count(), 0) {}

std::uint64_t CycleCounter::dfs(std::uint32_t x, int remaining) {
  if (remaining == 1) return adj_.has_edge(x, target_) ? 1 : 0;
  std::uint64_t total = 0;
  for (const std::uint32_t y : adj_.row(x)) {
    if (y == target_ || on_path_[y]) continue;
    on_path_[y] = 1;
    total += dfs(y, remaining - 1);
    on_path_[y] = 0;
  }
  return total;
}

std::uint64_t CycleCounter::meet_in_middle(std::uint32_t u, std::uint32_t w, int length) {
  // Walk h steps from u and h-1 steps from w without backtracking, then join
  // at a common endpoint reached through different predecessors. At the girth
  // every such closed non-backtracking walk is a cycle.
  const int half = length / 2;
  using Tally = std::unordered_map<std::uint64_t, std::uint64_t>;
  auto walk = [&](std::uint32_t start, std::uint32_t forbidden_first, int steps, Tally& by_end, Tally& by_end_pred) {
    struct Frame {
      std::uint32_t vertex, prev;
      int depth;
    };
    std::vector<Frame> stack{{start, forbidden_first, 0}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.depth == steps) {
        ++by_end[f.vertex];
        ++by_end_pred[(std::uint64_t{f.vertex} << 32) | f.prev];
        continue;
      }
      for (const std::uint32_t y : adj_.row(f.vertex)) {
        if (y == f.prev) continue;
        stack.push_back({y, f.vertex, f.depth + 1});
      }
    }
  };
  Tally u_end, u_pred, w_end, w_pred;
  walk(u, w, half, u_end, u_pred);
  walk(w, u, half - 1, w_end, w_pred);
  std::uint64_t total = 0;
  for (const auto& [x, n] : u_end) {
    if (const auto it = w_end.find(x); it != w_end.end()) total += n * it->second;
  }
  for (const auto& [key, n] : u_pred) {
    if (const auto it = w_pred.find(key); it != w_pred.end()) total -= n * it->second;
  }
  return total;
}

std::uint64_t CycleCounter::through_edge(std::uint32_t u, std::uint32_t w, int length, PathStrategy strategy) {
  if (length < 4 || length % 2 != 0) throw CensusError("cycle length must be even and >= 4");
  if (u >= adj_.vertex_count() || w >= adj_.vertex_count() || !adj_.has_edge(u, w)) {
    throw CensusError("P" + std::to_string(u) + "~L" + std::to_string(w) + " is not an edge");
  }
  if (strategy == PathStrategy::MeetInMiddle) return meet_in_middle(u, w, length);
  target_ = w;
  on_path_[u] = 1;
  const std::uint64_t total = dfs(u, length - 1);
  on_path_[u] = 0;
  return total;
}

std::uint64_t count_cycles_through_edge(const Adjacency& adj, std::uint32_t u, std::uint32_t w, int length,
                                        PathStrategy strategy) {
  CycleCounter counter(adj);
  return counter.through_edge(u, w, length, strategy);
}

std::uint64_t count_cycles_through_edge(const FamilySpec& spec, const Vertex& a, const Vertex& b, int length) {
  const RelationSet rel = relations(spec);
  const Adjacency adj(rel);
  return count_cycles_through_edge(adj, static_cast<std::uint32_t>(vertex_id(a, rel)),
                                   static_cast<std::uint32_t>(vertex_id(b, rel)), length);
}

std::vector<std::uint64_t> count_all_edges(const Adjacency& adj, int length, unsigned workers, PathStrategy strategy) {
  std::vector<std::uint64_t> counts(adj.edge_count(), 0);
  workers = std::max(1u, workers);
  std::vector<std::unique_ptr<CycleCounter>> counters(workers);
  parallel_chunks(adj.edge_count(), workers, kEdgeChunk, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    if (!counters[worker]) counters[worker] = std::make_unique<CycleCounter>(adj);
    for (std::uint64_t e = begin; e < end; ++e) {
      const auto [point, line] = adj.edge(e);
      counts[e] = counters[worker]->through_edge(point, line, length, strategy);
    }
  });
  return counts;
}

std::uint64_t count_cycles_total(const Adjacency& adj, int length, unsigned workers) {
  std::uint64_t sum = 0;
  for (const std::uint64_t c : count_all_edges(adj, length, workers)) sum += c;
  if (sum % static_cast<std::uint64_t>(length) != 0) {
    throw CensusError("sum of per-edge counts " + std::to_string(sum) + " is not divisible by " +
                      std::to_string(length));
  }
  return sum / static_cast<std::uint64_t>(length);
}

std::uint64_t count_cycles_total(const FamilySpec& spec, int length, unsigned workers) {
  const Adjacency adj(relations(spec));
  return count_cycles_total(adj, length, workers);
}

std::uint64_t girth_cycle_total(std::uint64_t v, std::uint64_t k, std::uint64_t lambda, int g) {
  const unsigned __int128 numerator = static_cast<unsigned __int128>(v) * k * lambda;
  const auto denominator = static_cast<unsigned __int128>(2 * g);
  if (numerator % denominator != 0) {
    throw CensusError("v k lambda / 2g is not an integer for v=" + std::to_string(v) + " k=" + std::to_string(k) +
                      " lambda=" + std::to_string(lambda) + " g=" + std::to_string(g));
  }
  return static_cast<std::uint64_t>(numerator / denominator);
}

EgrCertificate certify(const FamilySpec& spec, const CensusOptions& options) {
  const Adjacency adj(relations(spec));
  return certify(spec, adj, options);
}

EgrCertificate certify(const FamilySpec& spec, const Adjacency& adj, const CensusOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1u, options.workers);

  EgrCertificate cert;
  cert.family = spec;
  cert.v = adj.vertex_count();
  cert.k = adj.degree();
  cert.mode = options.mode;
  cert.workers = workers;
  cert.g = girth(adj, options.girth_hint, workers);

  std::vector<EdgeRef> edges;
  switch (options.mode) {
    case CensusMode::BaseEdgeOnly: {
      // All-zero point and all-zero line when adjacent, else the zero point's first neighbour.
      const std::uint32_t zero_line = adj.side_size();
      edges.push_back({0, adj.has_edge(0, zero_line) ? zero_line : adj.row(0)[0]});
      break;
    }
    case CensusMode::Sampled: {
      if (options.samples == 0) throw CensusError("sampled census needs at least one sample");
      cert.seed = options.seed;
      cert.samples = options.samples;
      Lcg rng(options.seed);
      for (std::uint64_t s = 0; s < options.samples; ++s) {
        const auto point = static_cast<std::uint32_t>(rng.below(adj.side_size()));
        const auto j = rng.below(adj.degree());
        edges.push_back({point, adj.row(point)[j]});
      }
      break;
    }
    case CensusMode::Exhaustive: {
      edges.reserve(adj.edge_count());
      for (std::uint64_t e = 0; e < adj.edge_count(); ++e) {
        const auto [point, line] = adj.edge(e);
        edges.push_back({point, line});
      }
      break;
    }
  }

  std::vector<std::uint64_t> counts(edges.size(), 0);
  std::vector<std::unique_ptr<CycleCounter>> counters(workers);
  parallel_chunks(edges.size(), workers, kEdgeChunk, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    if (!counters[worker]) counters[worker] = std::make_unique<CycleCounter>(adj);
    for (std::uint64_t i = begin; i < end; ++i) {
      counts[i] = counters[worker]->through_edge(edges[i].point, edges[i].line, cert.g, options.strategy);
    }
  });

  cert.per_edge_counts.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) cert.per_edge_counts.push_back({edges[i], counts[i]});
  for (const EdgeCount& ec : cert.per_edge_counts) {
    if (ec.count != cert.per_edge_counts.front().count) throw NonUniformError(cert.per_edge_counts.front(), ec);
  }
  cert.lambda = cert.per_edge_counts.front().count;
  if (cert.lambda == 0) throw CensusError("girth edge lies on no girth cycle");
  cert.total_girth_cycles = girth_cycle_total(cert.v, cert.k, cert.lambda, cert.g);

  if (options.mode == CensusMode::Exhaustive) {
    // Handshake: every girth cycle has g edges.
    std::uint64_t sum = 0;
    for (const std::uint64_t c : counts) sum += c;
    if (sum != static_cast<std::uint64_t>(cert.g) * cert.total_girth_cycles) {
      throw CensusError("handshake identity failed: sum " + std::to_string(sum) + " != g * total");
    }
  }

  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return cert;
}

}  // namespace egr
