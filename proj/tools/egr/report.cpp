#include "report.hpp"

namespace egr::cli {

json field_json(const Field& field) {
  return {{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

json vertex_json(const Vertex& v, const Field& field) {
  json coords = json::array();
  for (const auto& c : v.coords) coords.push_back(field.index_of(c));
  return {{"side", v.side == Side::Point ? "point" : "line"}, {"coords", coords}};
}

json edge_count_json(const EdgeCount& ec) {
  return {{"point", ec.edge.point}, {"line", ec.edge.line}, {"count", ec.count}};
}

json certificate_json(const EgrCertificate& cert, const Field& field) {
  json j;
  j["family"] = format_family(cert.family);
  j["q"] = cert.family.q;
  j["index"] = cert.family.index;
  j["v"] = cert.v;
  j["k"] = cert.k;
  j["g"] = cert.g;
  j["lambda"] = cert.lambda;
  j["mode"] = census_mode_name(cert.mode);
  j["total_girth_cycles"] = cert.total_girth_cycles;
  j["elapsed_ms"] = cert.elapsed_ms;
  j["workers"] = cert.workers;
  j["field"] = field_json(field);
  j["edges_checked"] = cert.per_edge_counts.size();
  if (cert.mode == CensusMode::Sampled) {
    j["seed"] = cert.seed;
    j["samples"] = cert.samples;
  }
  return j;
}

json bounds_json(const BoundsReport& bounds) {
  json j;
  j["moore"] = bounds.moore;
  j["extremal_general"] = bounds.extremal_general;
  j["extremal_bipartite"] = bounds.extremal_bipartite ? json(*bounds.extremal_bipartite) : json(nullptr);
  return j;
}

}  // namespace egr::cli
