#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "egr/automorphisms.hpp"
#include "egr/census.hpp"
#include "egr/families.hpp"
#include "egr/graph_io.hpp"
#include "egr/lcg.hpp"
#include "egr/parallel.hpp"
#include "egr/predictions.hpp"
#include "report.hpp"

namespace egr::cli {
namespace {

// Writes text to the output path, or to out when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing " << path << "\n";
    return false;
  }
  return true;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CensusMode choose_mode(const std::string& mode, std::uint64_t vertices, std::uint64_t cutoff) {
  if (mode == "auto") return vertices <= cutoff ? CensusMode::Exhaustive : CensusMode::BaseEdgeOnly;
  return parse_census_mode(mode);
}

json prediction_json(const std::optional<Prediction>& p) {
  json j;
  j["girth"] = p ? json(p->girth) : json(nullptr);
  j["lambda"] = p && p->lambda ? json(*p->lambda) : json(nullptr);
  return j;
}

}  // namespace

unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("EGR_WORKERS"); env != nullptr) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return default_workers();
}

Expectation parse_expectation(const std::string& text) {
  Expectation e;
  bool have_g = false;
  bool have_lambda = false;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("expected key=value in --expect, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    try {
      if (key == "g") {
        e.girth = std::stoi(value);
        have_g = true;
      } else if (key == "lambda") {
        e.lambda = std::stoull(value);
        have_lambda = true;
      } else {
        throw Error("unknown key '" + key + "' in --expect");
      }
    } catch (const std::logic_error&) {
      throw Error("invalid number '" + value + "' in --expect");
    }
  }
  if (!have_g || !have_lambda) throw Error("--expect needs both g and lambda");
  return e;
}

int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const FamilySpec spec = parse_family(opts.family);
    const Adjacency adj(relations(spec));
    std::ostringstream text;
    if (opts.format == "edges") {
      write_edge_list(adj, text);
    } else if (opts.format == "g6") {
      write_graph6(adj, text);
    } else {
      err << "error: unknown format '" << opts.format << "' (expected edges or g6)\n";
      return kFailure;
    }
    return emit(opts.output, text.str(), out, err) ? kOk : kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run_certify(const CertifyOptions& opts, std::ostream& out, std::ostream& err) {
  FamilySpec spec;
  try {
    spec = parse_family(opts.family);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  for (const auto& w : family_warnings(spec)) err << "warning: " << w << "\n";

  try {
    const RelationSet rel = relations(spec);
    const Adjacency adj(rel);
    CensusOptions census;
    census.mode = choose_mode(opts.mode, adj.vertex_count(), opts.exhaustive_cutoff);
    census.samples = opts.samples;
    census.seed = opts.seed;
    census.workers = std::max(1u, opts.workers);
    census.strategy = opts.meet_in_middle ? PathStrategy::MeetInMiddle : PathStrategy::Dfs;

    std::optional<Expectation> expected = opts.expect;
    std::string source = opts.expect ? "flag" : "";
    bool lambda_known = true;
    if (opts.expect_paper && !expected) {
      const auto prediction = predict(spec);
      if (!prediction) {
        err << "error: no closed-form prediction for " << format_family(spec) << "\n";
        return kFailure;
      }
      expected = Expectation{prediction->girth, prediction->lambda.value_or(0)};
      lambda_known = prediction->lambda.has_value();
      source = "closed-form";
    }

    EgrCertificate cert;
    try {
      cert = certify(spec, adj, census);
    } catch (const NonUniformError& e) {
      json j;
      j["family"] = format_family(spec);
      j["error"] = "non-uniform";
      j["message"] = e.what();
      j["first"] = edge_count_json(e.first());
      j["second"] = edge_count_json(e.second());
      emit(opts.output, dump(j), out, err);
      err << "error: " << e.what() << "\n";
      return kNonUniform;
    }

    json j = certificate_json(cert, rel.field());
    int code = kOk;
    if (expected) {
      const bool match = cert.g == expected->girth && (!lambda_known || cert.lambda == expected->lambda);
      j["expected"] = {{"g", expected->girth},
                       {"lambda", lambda_known ? json(expected->lambda) : json(nullptr)},
                       {"source", source}};
      j["match"] = match;
      if (!match) {
        err << "mismatch: measured (g=" << cert.g << ", lambda=" << cert.lambda << "), expected (g="
            << expected->girth << ", lambda=" << (lambda_known ? std::to_string(expected->lambda) : "?") << ")\n";
        code = kMismatch;
      }
    }
    if (!emit(opts.output, dump(j), out, err)) return kFailure;
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run_predict(const PredictOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const FamilySpec spec = parse_family(opts.family);
    const auto prediction = predict(spec);
    json j;
    j["family"] = format_family(spec);
    const json pj = prediction_json(prediction);
    j["girth"] = pj["girth"];
    j["lambda"] = pj["lambda"];
    if (opts.bounds) {
      if (prediction && prediction->lambda && spec.q >= 3) {
        const BoundsReport bounds = extremal_lower_bounds(spec.q, prediction->girth, *prediction->lambda);
        j.update(bounds_json(bounds));
        if (spec.q % 2 == 1 && (prediction->girth == 6 || prediction->girth == 8)) {
          const Sandwich s = sandwich(spec.q, prediction->girth);
          j["sandwich"] = {{"lower", s.lower}, {"upper", s.upper}, {"ordered", s.ordered}};
          if (!s.ordered) err << "note: sandwich lower bound exceeds upper bound at q=" << spec.q << "\n";
        } else {
          j["sandwich"] = nullptr;
        }
        j["order"] = 2 * side_size(relations(spec));
      } else {
        j["moore"] = nullptr;
        j["extremal_general"] = nullptr;
        j["extremal_bipartite"] = nullptr;
        j["sandwich"] = nullptr;
        err << "note: bounds need k = q >= 3 and a known lambda\n";
      }
    }
    if (opts.turan) {
      if (spec.q % 2 == 1) {
        json rows = json::array();
        for (const int ell : {3, 4}) {
          const double n = 2.0 * std::pow(static_cast<double>(spec.q), ell - 1);
          const TuranAsymptotic a = turan_asymptotic(ell, n);
          rows.push_back({{"ell", ell},
                          {"cycle", "C" + std::to_string(2 * ell)},
                          {"n", static_cast<std::uint64_t>(n)},
                          {"lower_bound", turan_lower_bound(ell, spec.q)},
                          {"asymptotic_coefficient", a.coefficient},
                          {"asymptotic_coefficient_value", a.coefficient_value},
                          {"asymptotic_exponent", a.exponent}});
        }
        j["turan"] = rows;
      } else {
        j["turan"] = nullptr;
        err << "note: Turan bounds need odd q\n";
      }
    }
    return emit(opts.output, dump(j), out, err) ? kOk : kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  FamilyKind kind;
  try {
    kind = parse_family_kind(opts.family_kind);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  std::vector<FamilySpec> grid;
  const std::vector<int> indices = family_uses_index(kind) ? opts.indices : std::vector<int>{0};
  for (const int index : indices) {
    for (const std::uint64_t q : opts.qs) grid.push_back({kind, q, index});
  }

  struct Row {
    std::string family;
    std::uint64_t q = 0, v = 0, k = 0;
    int g = 0;
    std::string measured, predicted, mode, match;
  };
  std::vector<Row> rows;
  int code = kOk;
  json records = json::array();
  for (const FamilySpec& spec : grid) {
    Row row;
    row.family = format_family(spec);
    row.q = spec.q;
    try {
      const RelationSet rel = relations(spec);
      const Adjacency adj(rel);
      CensusOptions census;
      census.mode = adj.vertex_count() <= opts.exhaustive_cutoff ? CensusMode::Exhaustive : CensusMode::BaseEdgeOnly;
      census.workers = std::max(1u, opts.workers);
      const auto prediction = predict(spec);
      row.predicted = prediction && prediction->lambda ? std::to_string(*prediction->lambda) : "-";
      row.mode = std::string(census_mode_name(census.mode));
      try {
        const EgrCertificate cert = certify(spec, adj, census);
        row.v = cert.v;
        row.k = cert.k;
        row.g = cert.g;
        row.measured = std::to_string(cert.lambda);
        if (prediction && prediction->lambda) {
          const bool ok = prediction->girth == cert.g && *prediction->lambda == cert.lambda;
          row.match = ok ? "yes" : "NO";
          if (!ok && code == kOk) code = kMismatch;
        } else {
          row.match = "n/a";
        }
      } catch (const NonUniformError& e) {
        row.v = adj.vertex_count();
        row.k = adj.degree();
        row.measured = "non-uniform";
        row.match = "NO";
        code = kNonUniform;
        err << row.family << ": " << e.what() << "\n";
      }
    } catch (const Error& e) {
      err << "error: " << row.family << ": " << e.what() << "\n";
      row.measured = "error";
      row.match = "NO";
      if (code == kOk) code = kFailure;
    }
    records.push_back({{"family", row.family},
                       {"q", row.q},
                       {"v", row.v},
                       {"k", row.k},
                       {"g", row.g},
                       {"lambda_measured", row.measured},
                       {"lambda_predicted", row.predicted},
                       {"mode", row.mode},
                       {"match", row.match}});
    rows.push_back(std::move(row));
  }

  if (opts.json) {
    out << dump(records);
    return code;
  }
  const std::vector<std::string> header{"family", "q", "v", "k", "g", "lambda_measured", "lambda_predicted", "mode",
                                        "match"};
  std::vector<std::vector<std::string>> cells;
  for (const Row& r : rows) {
    cells.push_back({r.family, std::to_string(r.q), std::to_string(r.v), std::to_string(r.k), std::to_string(r.g),
                     r.measured, r.predicted, r.mode, r.match});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      out << (c + 1 < line.size() ? "  " : "\n");
    }
  };
  print(header);
  for (const auto& line : cells) print(line);
  return code;
}

int run_automorphism_verify(const AutomorphismOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const FamilySpec spec = parse_family(opts.family);
    if (spec.kind != FamilyKind::LinearizedWenger) {
      err << "error: automorphism verification is implemented for lwenger families\n";
      return kFailure;
    }
    const RelationSet rel = relations(spec);
    const Field& field = rel.field();
    CheckMode mode = CheckMode::Exhaustive;
    if (opts.mode == "sampled" || (opts.mode == "auto" && vertex_count(rel) > kExhaustiveVertexLimit)) {
      mode = CheckMode::Sampled;
    } else if (opts.mode != "exhaustive" && opts.mode != "auto") {
      err << "error: unknown mode '" << opts.mode << "'\n";
      return kFailure;
    }

    json j;
    j["family"] = format_family(spec);
    j["mode"] = mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
    std::uint64_t maps = 0;
    std::uint64_t edges = 0;
    json counterexample = nullptr;
    for (const SigmaMap& map : all_sigma_maps(spec, field)) {
      const AutomorphismCheck check = verify_automorphism(map, rel, mode, opts.seed, opts.samples);
      ++maps;
      edges += check.edges_checked;
      if (!check.ok) {
        counterexample = {{"map", {{"i", map.i}, {"x", field.index_of(map.x)}}},
                          {"point", vertex_json(check.counterexample->point, field)},
                          {"line", vertex_json(check.counterexample->line, field)}};
        break;
      }
    }
    j["maps_checked"] = maps;
    j["edges_checked"] = edges;
    j["automorphisms_ok"] = counterexample.is_null();
    j["counterexample"] = counterexample;

    // Edge transitivity: every checked edge goes to (0)~[0].
    const Vertex zero_point = vertex_from_id(0, rel);
    const Vertex zero_line = vertex_from_id(side_size(rel), rel);
    std::uint64_t transported = 0;
    json base_counterexample = nullptr;
    auto transport = [&](const Vertex& point, const Vertex& line) {
      const SigmaSequence seq = edge_to_base(point, line, rel);
      ++transported;
      if (!(apply_sequence(seq, point, field) == zero_point && apply_sequence(seq, line, field) == zero_line)) {
        base_counterexample = {{"point", vertex_json(point, field)}, {"line", vertex_json(line, field)}};
        return false;
      }
      return true;
    };
    if (mode == CheckMode::Exhaustive) {
      for (VertexId id = 0; id < side_size(rel) && base_counterexample.is_null(); ++id) {
        const Vertex point = vertex_from_id(id, rel);
        for (const Vertex& line : neighbors(point, rel)) {
          if (!transport(point, line)) break;
        }
      }
    } else {
      Lcg rng(opts.seed);
      for (std::uint64_t s = 0; s < opts.samples; ++s) {
        const Vertex point = vertex_from_id(rng.below(side_size(rel)), rel);
        const Vertex line = neighbor_with_first(point, field.element(static_cast<std::uint32_t>(rng.below(rel.q()))), rel);
        if (!transport(point, line)) break;
      }
    }
    j["edge_to_base"] = {{"edges_checked", transported},
                         {"ok", base_counterexample.is_null()},
                         {"counterexample", base_counterexample}};
    out << dump(j);
    return counterexample.is_null() && base_counterexample.is_null() ? kOk : kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<unsigned> counts = opts.worker_counts;
  if (counts.empty()) counts = {1, 2, std::max(1u, opts.max_workers)};
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

  int code = kOk;
  out << std::left << std::setw(20) << "family" << std::setw(9) << "workers" << std::setw(8) << "g" << std::setw(12)
      << "lambda" << "ms\n";
  try {
    for (const std::uint64_t q : opts.qs) {
      const FamilySpec spec{FamilyKind::Wenger, q, opts.index};
      const Adjacency adj(relations(spec));
      std::optional<EgrCertificate> reference;
      for (const unsigned w : counts) {
        CensusOptions census;
        census.mode = CensusMode::Exhaustive;
        census.workers = w;
        const EgrCertificate cert = certify(spec, adj, census);
        out << std::left << std::setw(20) << format_family(spec) << std::setw(9) << w << std::setw(8) << cert.g
            << std::setw(12) << cert.lambda << std::fixed << std::setprecision(2) << cert.elapsed_ms << "\n";
        if (!reference) {
          reference = cert;
        } else if (!same_measurement(*reference, cert)) {
          err << "error: " << format_family(spec) << " differs between worker counts\n";
          code = kMismatch;
        }
      }
    }
    if (opts.lie_m3) {
      const FamilySpec spec{FamilyKind::LieM3, 5, 0};
      const auto started = std::chrono::steady_clock::now();
      CensusOptions census;
      census.mode = CensusMode::BaseEdgeOnly;
      census.workers = std::max(1u, opts.max_workers);
      const EgrCertificate cert = certify(spec, census);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      out << std::left << std::setw(20) << format_family(spec) << std::setw(9) << census.workers << std::setw(8)
          << cert.g << std::setw(12) << cert.lambda << std::fixed << std::setprecision(2) << ms
          << "  (base edge, no closed form)\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return code;
}

}  // namespace egr::cli
