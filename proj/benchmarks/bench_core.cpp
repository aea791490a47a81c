#include <benchmark/benchmark.h>

#include "agc/adjoints.hpp"
#include "agc/contract.hpp"
#include "agc/formula.hpp"
#include "agc/laws.hpp"

namespace {

agc::contract wide_contract(const agc::algebra_ptr& a, int seed) {
  agc::element acc = a->generator(seed % a->generator_count());
  for (int k = 0; k < a->generator_count(); k += 2)
    acc = agc::join(acc, agc::meet(a->generator(k), a->generator((k + seed) %
                                                                 a->generator_count())));
  return agc::contract::saturate(acc, agc::complement(acc));
}

void BM_merge_wide(benchmark::State& state) {
  const auto a = agc::free_bool_algebra(static_cast<int>(state.range(0)));
  const agc::contract c1 = wide_contract(a, 1), c2 = wide_contract(a, 3);
  for (auto _ : state) {
    auto result = agc::merge(c1, c2);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_merge_wide)->Arg(8)->Arg(12)->Arg(16);

void BM_compose_wide(benchmark::State& state) {
  const auto a = agc::free_bool_algebra(static_cast<int>(state.range(0)));
  const agc::contract c1 = wide_contract(a, 1), c2 = wide_contract(a, 3);
  for (auto _ : state) {
    auto result = agc::compose(c1, c2);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_compose_wide)->Arg(8)->Arg(12)->Arg(16);

void BM_parse_eval(benchmark::State& state) {
  const auto a = agc::free_bool_algebra(10);
  const std::string text =
      "(x0 -> x1) & (x2 | !x3) & (x4 -> (x5 & x6)) | (x7 & x8 -> x9)";
  for (auto _ : state) {
    auto element = agc::evaluate(agc::parse_formula(text), a);
    benchmark::DoNotOptimize(element);
  }
}
BENCHMARK(BM_parse_eval);

void BM_to_dnf(benchmark::State& state) {
  const auto a = agc::free_bool_algebra(8);
  const agc::element x = wide_contract(a, 1).guarantees();
  for (auto _ : state) {
    auto text = agc::to_dnf(x);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_to_dnf);

void BM_quotient(benchmark::State& state) {
  const auto a = agc::free_bool_algebra(static_cast<int>(state.range(0)));
  const auto cs = agc::enumerate_contracts(a);
  const agc::contract c1 = agc::compose(cs[cs.size() / 3], cs[cs.size() / 2]);
  const agc::contract c2 = cs[cs.size() / 3];
  for (auto _ : state) {
    auto result = agc::quotient(c1, c2);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_quotient)->Arg(1)->Arg(2)->Arg(3);

void BM_bimodule_axioms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = agc::check_bimodule_axioms(n);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_bimodule_axioms)->Arg(1)->Arg(2);

void BM_tensor_merge_constructive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = agc::check_tensor_up_merge(n);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_tensor_merge_constructive)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
