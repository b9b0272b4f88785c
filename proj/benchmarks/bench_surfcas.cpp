#include <benchmark/benchmark.h>

#include "surfcas/report.hpp"

using namespace surfcas;

namespace {

constexpr std::uint32_t P = PrimeField::kDefaultPrime;

const Ideal& surface(FamilyId f) {
  static std::map<FamilyId, Ideal> cache;
  auto it = cache.find(f);
  if (it == cache.end()) {
    ConstructOptions o;
    it = cache.emplace(f, construct_family(f, o).ideal).first;
  }
  return it->second;
}

FamilyId arg_family(const benchmark::State& st) { return kAllFamilies[static_cast<std::size_t>(st.range(0))]; }

void BM_Groebner(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  for (auto _ : st) benchmark::DoNotOptimize(buchberger(S.generators(), P));
}

void BM_Resolution(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  for (auto _ : st) benchmark::DoNotOptimize(betti(free_resolution(S)));
}

void BM_Cohomology(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  for (auto _ : st) {
    SheafCohomology C(S);
    benchmark::DoNotOptimize(C.table(-1, 7));
  }
}

void BM_Saturate(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  Ideal I = ideal_product(S, Ideal(P, {Polynomial::variable(P, 0), Polynomial::variable(P, 1)}));
  for (auto _ : st) benchmark::DoNotOptimize(saturate(I));
}

void BM_SmoothnessExact(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  for (auto _ : st) benchmark::DoNotOptimize(smoothness_check(S, SmoothnessMode::exact));
}

void BM_SmoothnessProbabilistic(benchmark::State& st) {
  const Ideal& S = surface(arg_family(st));
  for (auto _ : st) benchmark::DoNotOptimize(smoothness_check(S, SmoothnessMode::probabilistic));
}

void BM_Construct(benchmark::State& st) {
  FamilyId f = arg_family(st);
  for (auto _ : st) {
    ConstructOptions o;
    benchmark::DoNotOptimize(construct_family(f, o));
  }
}

void BM_Certify(benchmark::State& st) {
  FamilyId f = arg_family(st);
  const Ideal& S = surface(f);
  for (auto _ : st) benchmark::DoNotOptimize(certify(S, f));
}

void BM_MonadHom(benchmark::State& st) {
  MonadRecipe r = st.range(0) ? MonadRecipe::k3_psi : MonadRecipe::elliptic_psi;
  for (auto _ : st) {
    Rng rng(1);
    MonadData md = monad_sheaves(P, r, rng);
    benchmark::DoNotOptimize(hom_space(md.F, md.G).dim());
  }
}

void BM_Numerology(benchmark::State& st) {
  for (auto _ : st) {
    for (const auto& f : family_table()) {
      benchmark::DoNotOptimize(lebarz_counts(f.pi, f.chi));
      benchmark::DoNotOptimize(double_point_K2(10, 2 * f.pi - 12, f.chi));
    }
  }
}

}  // namespace

BENCHMARK(BM_Groebner)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Resolution)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cohomology)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturate)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmoothnessExact)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmoothnessProbabilistic)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Construct)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Certify)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonadHom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Numerology)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
