#include <benchmark/benchmark.h>

#include <random>

#include "idiom/allocations.hpp"
#include "idiom/fixtures.hpp"
#include "idiom/nuclei.hpp"
#include "idiom/reference.hpp"

using namespace idiom;

namespace {

LatticePtr lattice_for(std::int64_t k) {
  switch (k) {
    case 0: return product(*diamond(), *chain(2), "M3xC2");
    case 1: return product(*boolean_square(), *chain(3), "B2xC3");
    default: return subgroup_lattice(3, {2, 1});
  }
}

std::vector<IntervalSet> samples(const LatticePtr& L, std::size_t n) {
  std::mt19937_64 rng(5);
  std::vector<IntervalSet> out;
  for (std::size_t k = 0; k < n; ++k) {
    IntervalSet s(L);
    for (std::size_t i = 0; i < L->interval_count(); ++i)
      if (rng() % 8 == 0) s.insert_id(i);
    out.push_back(std::move(s));
  }
  return out;
}

void BM_dvs_closure(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto ss = samples(L, 16);
  for (auto _ : st)
    for (const auto& s : ss) benchmark::DoNotOptimize(dvs_closure(s));
  st.SetLabel(L->name());
}

void BM_dvs_fixpoint_serial(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto ss = samples(L, 16);
  for (auto _ : st)
    for (const auto& s : ss) benchmark::DoNotOptimize(reference::dvs_fixpoint(s));
  st.SetLabel(L->name());
}

void BM_operators(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto ss = samples(L, 16);
  for (auto& s : ss) s = basic_closure(s);
  for (auto _ : st)
    for (const auto& s : ss) {
      benchmark::DoNotOptimize(crt(s));
      benchmark::DoNotOptimize(fll(s));
    }
  st.SetLabel(L->name());
}

void BM_operators_serial(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto ss = samples(L, 16);
  for (auto& s : ss) s = basic_closure(s);
  for (auto _ : st)
    for (const auto& s : ss) {
      benchmark::DoNotOptimize(reference::crt(s));
      benchmark::DoNotOptimize(reference::fll(s));
    }
  st.SetLabel(L->name());
}

void BM_enumerate_nuclei(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_nuclei(L));
  st.SetLabel(L->name());
}

void BM_nuclei_serial(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::nuclei_by_fixed_sets(L));
  st.SetLabel(L->name());
}

void BM_chi(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto N = enumerate_nuclei(L);
  for (auto _ : st) benchmark::DoNotOptimize(chi_allocation(N));
  st.SetLabel(L->name());
}

void BM_chi_serial(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  auto N = enumerate_nuclei(L);
  for (auto _ : st)
    for (auto iv : L->intervals()) benchmark::DoNotOptimize(reference::chi(N.nuclei(), iv));
  st.SetLabel(L->name());
}

void BM_xi(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  for (auto _ : st)
    for (auto iv : L->intervals()) benchmark::DoNotOptimize(xi(L, iv));
  st.SetLabel(L->name());
}

void BM_xi_serial(benchmark::State& st) {
  auto L = lattice_for(st.range(0));
  for (auto _ : st)
    for (auto iv : L->intervals()) benchmark::DoNotOptimize(reference::xi(L, iv));
  st.SetLabel(L->name());
}

}  // namespace

BENCHMARK(BM_dvs_closure)->DenseRange(0, 2);
BENCHMARK(BM_dvs_fixpoint_serial)->DenseRange(0, 2);
BENCHMARK(BM_operators)->DenseRange(0, 2);
BENCHMARK(BM_operators_serial)->DenseRange(0, 2);
BENCHMARK(BM_enumerate_nuclei)->DenseRange(0, 2);
BENCHMARK(BM_nuclei_serial)->DenseRange(0, 2);
BENCHMARK(BM_chi)->DenseRange(0, 2);
BENCHMARK(BM_chi_serial)->DenseRange(0, 2);
BENCHMARK(BM_xi)->DenseRange(0, 2);
BENCHMARK(BM_xi_serial)->DenseRange(0, 2);

BENCHMARK_MAIN();
