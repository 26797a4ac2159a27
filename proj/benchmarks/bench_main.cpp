#include <benchmark/benchmark.h>

#include <random>

#include "klv/hecke.hpp"
#include "klv/klv_engine.hpp"

using namespace klv;

namespace {

LaurentV make_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> exps(-12, 12), coeffs(-99, 99);
  LaurentV out;
  for (int i = 0; i < terms; ++i) out += LaurentV::monomial(coeffs(rng), exps(rng));
  return out;
}

} // namespace

static void BM_LaurentMul(benchmark::State& state) {
  std::mt19937 rng(1);
  LaurentV a = make_poly(rng, static_cast<int>(state.range(0)));
  LaurentV b = make_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LaurentV c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_LaurentMul)->Arg(8)->Arg(32)->Arg(128);

static void BM_KLBasisLongest(benchmark::State& state) {
  auto sys = CoxeterSystem::make(state.range(0) == 2 ? "B2" : "A3");
  std::set<int> all;
  for (int s = 0; s < sys->rank(); ++s) all.insert(s);
  GroupElt w0 = longest_parabolic(sys, all);
  for (auto _ : state) {
    HeckeAlgebra H(sys); // fresh cache each round
    benchmark::DoNotOptimize(H.kl_basis(w0));
  }
}
BENCHMARK(BM_KLBasisLongest)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_ValidateComplex(benchmark::State& state) {
  const char* type = state.range(0) == 2 ? "A2" : "A3";
  OrbitDatum datum = gen_complex(type);
  for (auto _ : state) {
    OrbitDatum copy = datum;
    benchmark::DoNotOptimize(copy.validate());
  }
}
BENCHMARK(BM_ValidateComplex)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_ComputeKLV(benchmark::State& state) {
  const char* type = state.range(0) == 2 ? "B2" : "A3";
  OrbitDatum datum = gen_complex(type);
  for (auto _ : state) {
    KLVTable table = compute_klv(datum);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ComputeKLV)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HatBsPeel(benchmark::State& state) {
  OrbitDatum datum = gen_complex("A3");
  KLVTable table = compute_klv(datum);
  std::set<int> all{0, 1, 2};
  GroupElt w0 = longest_parabolic(datum.system(), all);
  const ICClass& top = table.resolved.at(datum.param_index(word_string(w0)));
  for (auto _ : state) {
    HatVector image = hat_bs(datum, top.hat, 0);
    PeelResult res = peel(datum, image, table);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_HatBsPeel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
