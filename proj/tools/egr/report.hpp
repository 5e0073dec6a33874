#pragma once

#include <json.hpp>

#include "egr/adg.hpp"
#include "egr/census.hpp"
#include "egr/predictions.hpp"

namespace egr::cli {

using json = nlohmann::ordered_json;

json field_json(const Field& field);
/// Coordinates as canonical element indices.
json vertex_json(const Vertex& v, const Field& field);
json edge_count_json(const EdgeCount& ec);

/// {family, q, index, v, k, g, lambda, mode, total_girth_cycles, elapsed_ms, workers, ...}
json certificate_json(const EgrCertificate& cert, const Field& field);

json bounds_json(const BoundsReport& bounds);

}  // namespace egr::cli
