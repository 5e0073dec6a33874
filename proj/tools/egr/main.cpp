#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "egr/parallel.hpp"

namespace {

// The family can be given positionally or with --family.
void add_family(CLI::App* cmd, std::string& target) {
  auto* positional = cmd->add_option("spec", target, "Family spec, e.g. wenger:n=2,q=3");
  auto* flag = cmd->add_option("--family,-f", target, "Family spec, e.g. lwenger:m=2,q=4");
  positional->excludes(flag);
  cmd->final_callback([cmd, positional, flag] {
    if (positional->count() + flag->count() == 0) throw CLI::RequiredError(cmd->get_name() + ": family spec");
  });
}

}  // namespace

int main(int argc, char** argv) {
  using namespace egr::cli;

  CLI::App app{"Edge-girth-regular algebraically defined graphs: construct, census, predict"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Export a graph as an edge list or graph6");
  add_family(generate, gen.family);
  generate->add_option("--format", gen.format, "edges | g6")->check(CLI::IsMember({"edges", "g6"}));
  generate->add_option("--output,-o", gen.output, "Output path (default stdout)");

  CertifyOptions cert;
  std::optional<unsigned> cert_workers;
  std::string expect_text;
  auto* certify = app.add_subcommand("certify", "Measure (v, k, g, lambda) by exact census");
  add_family(certify, cert.family);
  certify->add_option("--mode", cert.mode, "auto | base-edge | sampled | exhaustive")
      ->check(CLI::IsMember({"auto", "base-edge", "base", "sampled", "exhaustive"}));
  certify->add_option("--samples", cert.samples, "Edges drawn in sampled mode");
  certify->add_option("--seed", cert.seed, "Seed for sampled mode");
  certify->add_option("--workers,-j", cert_workers, "Worker threads (overrides EGR_WORKERS)");
  certify->add_option("--expect", expect_text, "Expected values, e.g. g=8,lambda=8");
  certify->add_flag("--expect-paper", cert.expect_paper, "Compare against the closed-form prediction");
  certify->add_flag("--mitm", cert.meet_in_middle, "Meet-in-the-middle path counting");
  certify->add_option("--cutoff", cert.exhaustive_cutoff, "auto mode: exhaustive up to this many vertices");
  certify->add_option("--output,-o", cert.output, "Output path (default stdout)");

  PredictOptions pred;
  auto* predict = app.add_subcommand("predict", "Closed-form girth, lambda and bounds");
  add_family(predict, pred.family);
  predict->add_flag("--bounds", pred.bounds, "Moore and extremal lower bounds");
  predict->add_flag("--turan", pred.turan, "Generalized Turan lower bounds");
  predict->add_option("--output,-o", pred.output, "Output path (default stdout)");

  TableOptions table;
  std::optional<unsigned> table_workers;
  auto* tab = app.add_subcommand("table", "Measured vs predicted lambda over a grid");
  tab->add_option("--family,-f", table.family_kind, "wenger | wenger-alt | lwenger | lie-m1 | lie-m2 | lie-m3");
  tab->add_option("--index,-n", table.indices, "Values of n (or m)")->delimiter(',');
  tab->add_option("--q", table.qs, "Field orders")->delimiter(',');
  tab->add_option("--cutoff", table.exhaustive_cutoff, "Exhaustive census up to this many vertices");
  tab->add_option("--workers,-j", table_workers, "Worker threads");
  tab->add_flag("--json", table.json, "JSON rows instead of a text table");

  AutomorphismOptions aut;
  auto* automorphism = app.add_subcommand("automorphism", "Automorphisms of L_m(q)");
  automorphism->require_subcommand(1);
  auto* verify = automorphism->add_subcommand("verify", "Check every sigma_{i,x} and edge_to_base");
  add_family(verify, aut.family);
  verify->add_option("--mode", aut.mode, "auto | exhaustive | sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--seed", aut.seed, "Seed for sampled mode");
  verify->add_option("--samples", aut.samples, "Edges per map in sampled mode");

  BenchOptions bench;
  std::optional<unsigned> bench_workers;
  auto* bch = app.add_subcommand("bench", "Census wall times across worker counts");
  bch->add_option("--q", bench.qs, "Field orders for W_n(q)")->delimiter(',');
  bch->add_option("--index,-n", bench.index, "n of W_n(q)");
  bch->add_option("--worker-counts", bench.worker_counts, "Worker counts to compare")->delimiter(',');
  bch->add_option("--workers,-j", bench_workers, "Maximum worker count");
  bch->add_flag("--lie-m3", bench.lie_m3, "Also run the Lie(M3,6,5) base-edge census");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return run_generate(gen, std::cout, std::cerr);
    if (*certify) {
      cert.workers = resolve_workers(cert_workers);
      if (!expect_text.empty()) cert.expect = parse_expectation(expect_text);
      return run_certify(cert, std::cout, std::cerr);
    }
    if (*predict) return run_predict(pred, std::cout, std::cerr);
    if (*tab) {
      table.workers = resolve_workers(table_workers);
      return run_table(table, std::cout, std::cerr);
    }
    if (*verify) return run_automorphism_verify(aut, std::cout, std::cerr);
    if (*bch) {
      bench.max_workers = resolve_workers(bench_workers);
      return run_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
