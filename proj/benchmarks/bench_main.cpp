#include <benchmark/benchmark.h>

#include <random>

#include "ldq/engine.hpp"
#include "ldq/parser.hpp"

using namespace ldq;

namespace {

Term u(const std::string& s) { return Term::uri(s); }

TripleSet linear_graph(std::size_t n) {
  TripleSet G;
  for (std::size_t i = 0; i < n; ++i) {
    G.insert(Triple(u("n" + std::to_string(i)), u("p"), u("n" + std::to_string(i + 1))));
  }
  return G;
}

void BM_eval_two_hop_join(benchmark::State& state) {
  TripleSet G = linear_graph(static_cast<std::size_t>(state.range(0)));
  ExprPtr P = parse_expression("((?x <p> ?y) AND (?y <p> ?z))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(*P, G));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_eval_two_hop_join)->Range(8, 512)->Complexity();

void BM_eval_optional_filter(benchmark::State& state) {
  TripleSet G = linear_graph(static_cast<std::size_t>(state.range(0)));
  ExprPtr P = parse_expression("(((?x <p> ?y) OPT (?y <p> ?z)) FILTER BOUND(?z))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(*P, G));
  }
}
BENCHMARK(BM_eval_optional_filter)->Range(8, 512);

void BM_reachable_part_chain(benchmark::State& state) {
  ChainWeb web = chain_web(std::nullopt);
  ExprPtr P = parse_expression("(?x <chain:next> ?y)");
  auto budget = Budget::limited(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_reachable_part(web, {u("chain:1")},
                                                    ReachabilityCriterion::all(), *P, budget));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_reachable_part_chain)->Range(16, 4096);

void BM_stream_drain_numbers(benchmark::State& state) {
  NumberWeb web = number_web();
  ExprPtr P = parse_expression("(?x <num:succ> ?y)");
  auto budget = Budget::limited(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    SolutionStream stream =
        exec_reach_streaming(web, {u("num:1")}, ReachabilityCriterion::all(), P, budget);
    std::size_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_stream_drain_numbers)->Range(8, 256);

void BM_parse_print_round_trip(benchmark::State& state) {
  std::string text =
      "(((?x <p> ?y) AND (?y <q> ?z)) OPT ((?z <r> ?w) FILTER (BOUND(?w) && !?w = <a>)))";
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_expression(*parse_expression(text)));
  }
}
BENCHMARK(BM_parse_print_round_trip);

}  // namespace

BENCHMARK_MAIN();
