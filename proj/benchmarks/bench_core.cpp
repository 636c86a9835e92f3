#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "speciallab/language.hpp"
#include "speciallab/presentations.hpp"
#include "speciallab/rewriting.hpp"

namespace sl = speciallab;

namespace {

sl::RewriteSystem pi2() { return sl::to_rewrite_system(sl::make_pi(2)); }

std::vector<sl::Word> random_words(std::size_t count, std::size_t max_len) {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2);
  std::vector<sl::Word> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    sl::Word w;
    const std::size_t len = len_dist(rng);
    for (std::size_t j = 0; j < len; ++j) w += "abc"[letter_dist(rng)];
    out.push_back(std::move(w));
  }
  return out;
}

void BM_LeftmostNormalForm(benchmark::State& state) {
  const sl::RewriteSystem sys = pi2();
  const auto words = random_words(256, static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::normal_form(sys, words[k++ % words.size()]));
  }
}
BENCHMARK(BM_LeftmostNormalForm)->Arg(16)->Arg(64)->Arg(256);

void BM_IncrementalNormalForm(benchmark::State& state) {
  const sl::CompleteSystem cs = sl::CompleteSystem::certify(pi2(), 8);
  const auto words = random_words(256, static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::incremental_normal_form(cs, words[k++ % words.size()]));
  }
}
BENCHMARK(BM_IncrementalNormalForm)->Arg(16)->Arg(64)->Arg(256);

void BM_CriticalPairs(benchmark::State& state) {
  const sl::RewriteSystem sys = pi2();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::critical_pairs(sys, bound));
  }
}
BENCHMARK(BM_CriticalPairs)->Arg(4)->Arg(8)->Arg(16);

void BM_CykMembership(benchmark::State& state) {
  const sl::RewriteSystem sys = pi2();
  const sl::CnfGrammar g = sl::to_cnf(sl::export_lhs_grammar(sys.rules().front().lhs));
  sl::Word w = "a";
  w += std::string(static_cast<std::size_t>(state.range(0)), 'b');
  w += "ca";
  w += std::string(static_cast<std::size_t>(state.range(0)), 'b');
  w += "c";
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::grammar_member(g, w));
  }
}
BENCHMARK(BM_CykMembership)->Arg(4)->Arg(16)->Arg(32);

void BM_WpSlice(benchmark::State& state) {
  const sl::CompleteSystem cs = sl::CompleteSystem::certify(pi2(), 8);
  const int e_bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::enumerate_wp_slice(cs, 2, e_bound));
  }
}
BENCHMARK(BM_WpSlice)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
