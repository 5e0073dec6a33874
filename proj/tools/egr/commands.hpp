#pragma once

// Subcommands of the egr tool. Each returns the process exit code and
// writes its report to `out`; diagnostics go to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace egr::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kMismatch = 2,
  kNonUniform = 3,
};

/// Flag value, else EGR_WORKERS, else hardware concurrency.
unsigned resolve_workers(std::optional<unsigned> flag);

struct Expectation {
  int girth = 0;
  std::uint64_t lambda = 0;
};

/// Parses "g=8,lambda=9".
Expectation parse_expectation(const std::string& text);

struct GenerateOptions {
  std::string family;
  std::string format = "edges";  // edges | g6
  std::string output;            // empty: out
};

struct CertifyOptions {
  std::string family;
  std::string mode = "auto";  // auto | base-edge | sampled | exhaustive
  std::uint64_t samples = 256;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<Expectation> expect;
  bool expect_paper = false;
  bool meet_in_middle = false;
  std::uint64_t exhaustive_cutoff = 20000;
  std::string output;
};

struct PredictOptions {
  std::string family;
  bool bounds = false;
  bool turan = false;
  std::string output;
};

struct TableOptions {
  std::string family_kind = "wenger";
  std::vector<int> indices;
  std::vector<std::uint64_t> qs;
  std::uint64_t exhaustive_cutoff = 20000;
  unsigned workers = 1;
  bool json = false;
};

struct AutomorphismOptions {
  std::string family;
  std::string mode = "auto";  // auto | exhaustive | sampled
  std::uint64_t seed = 0;
  std::uint64_t samples = 2000;
};

struct BenchOptions {
  std::vector<std::uint64_t> qs{2, 3, 4, 5, 7};
  int index = 2;
  std::vector<unsigned> worker_counts;  // empty: {1, 2, max}
  unsigned max_workers = 1;
  bool lie_m3 = false;
};

int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);
int run_certify(const CertifyOptions& opts, std::ostream& out, std::ostream& err);
int run_predict(const PredictOptions& opts, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err);
int run_automorphism_verify(const AutomorphismOptions& opts, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace egr::cli
