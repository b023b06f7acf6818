#include <benchmark/benchmark.h>

#include <random>

#include "pcgroups/corpus.hpp"
#include "pcgroups/properties.hpp"
#include "pcgroups/subgroup.hpp"

using namespace pcgroups;

namespace {

  GroupPtr corpus_group(int which) {
    switch (which) {
      case 0:
        return Group::make(corpus::example2());
      case 1:
        return Group::make(corpus::example2_odd(3));
      default:
        return Group::make(corpus::example2_odd(5));
    }
  }

  std::vector<ExpVec> random_elements(Group const& g, std::size_t n) {
    std::mt19937_64     rng(1);
    std::vector<ExpVec> out;
    for (std::size_t k = 0; k < n; ++k) {
      ExpVec x(g.num_gens());
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng() % g.relative_order(i);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  void BM_multiply(benchmark::State& state) {
    auto g  = corpus_group(static_cast<int>(state.range(0)));
    auto xs = random_elements(*g, 1024);
    std::size_t k = 0;
    for (auto _ : state) {
      ExpVec z = g->multiply(xs[k & 1023], xs[(k * 7 + 3) & 1023]);
      benchmark::DoNotOptimize(z);
      ++k;
    }
  }
  BENCHMARK(BM_multiply)->Arg(0)->Arg(1)->Arg(2);

  void BM_power(benchmark::State& state) {
    auto g  = corpus_group(static_cast<int>(state.range(0)));
    auto xs = random_elements(*g, 256);
    std::size_t k = 0;
    for (auto _ : state) {
      ExpVec z = g->power(xs[k & 255], 1000003);
      benchmark::DoNotOptimize(z);
      ++k;
    }
  }
  BENCHMARK(BM_power)->Arg(0)->Arg(1)->Arg(2);

  void BM_close(benchmark::State& state) {
    auto g  = corpus_group(static_cast<int>(state.range(0)));
    auto xs = random_elements(*g, 3);
    for (auto _ : state) {
      Subgroup H = close(g, xs);
      benchmark::DoNotOptimize(H.order());
    }
  }
  BENCHMARK(BM_close)->Arg(0)->Arg(1)->Arg(2);

  void BM_agemo(benchmark::State& state) {
    auto     g = corpus_group(static_cast<int>(state.range(0)));
    Subgroup G = whole_group(g);
    for (auto _ : state) {
      Subgroup A = agemo(G, 1);
      benchmark::DoNotOptimize(A.order());
    }
  }
  BENCHMARK(BM_agemo)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

  void BM_omega_of_agemo(benchmark::State& state) {
    auto     g = corpus_group(static_cast<int>(state.range(0)));
    Subgroup A = agemo(whole_group(g), 1);
    for (auto _ : state) {
      Subgroup O = omega(A, 2);
      benchmark::DoNotOptimize(O.order());
    }
  }
  BENCHMARK(BM_omega_of_agemo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void BM_pn_class(benchmark::State& state) {
    auto     g = corpus_group(static_cast<int>(state.range(0)));
    Subgroup H = omega(agemo(whole_group(g), 1), 2);
    for (auto _ : state) {
      auto c = pn_class(H);
      benchmark::DoNotOptimize(c);
    }
  }
  BENCHMARK(BM_pn_class)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
