#include <benchmark/benchmark.h>

#include "covlab/crossed/element.hpp"
#include "covlab/rep/basis.hpp"
#include "covlab/rep/builders.hpp"
#include "covlab/rep/residuals.hpp"
#include "covlab/symbolic/dynamics.hpp"
#include "covlab/symbolic/point.hpp"

namespace {

using namespace covlab;

// a s^2 (s*) b with a, b cylinder indicators of depth 2
Element sample_element(const ShiftSystem& sys) {
  const LCF a = LCF::indicator(sys, Word{0, 1}) + LCF::constant(sys, QComplex(2));
  const LCF b = LCF::indicator(sys, Word{1, 0});
  const Element s = Element::generator(sys);
  return Element::function(a) * s * s * adjoint(s) * Element::function(b) + adjoint(s) * s;
}

BasisPtr orbit_basis(const ShiftSystem& sys, std::size_t depth) {
  OrbitBasisConfig c;
  c.preimage_depth = depth;
  c.forward_depth = 2;
  c.window = 3;
  c.mode = RepresentationMode::PsiTilde;
  return build_orbit_basis(sys, least_point(sys, Cylinder(sys, Word{0})), c);
}

void BM_Multiply(benchmark::State& state) {
  const ShiftSystem sys = ShiftSystem::full_shift(static_cast<int>(state.range(0)));
  const Element e = sample_element(sys);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(e, adjoint(e)));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(3);

void BM_Represent(benchmark::State& state) {
  const ShiftSystem sys = ShiftSystem::full_shift(2);
  const Element e = sample_element(sys);
  const BasisPtr basis = orbit_basis(sys, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(represent(e, basis));
  state.counters["basis"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_Represent)->DenseRange(3, 7, 2);

void BM_RelationResiduals(benchmark::State& state) {
  const ShiftSystem sys = ShiftSystem::full_shift(2);
  const BasisPtr basis = orbit_basis(sys, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relation_residuals(basis));
}
BENCHMARK(BM_RelationResiduals)->Arg(3)->Arg(5);

void BM_Freeness(benchmark::State& state) {
  const ShiftSystem trap = ShiftSystem::from_adjacency({{1, 1}, {0, 1}});
  const ShiftSystem golden = ShiftSystem::from_adjacency({{1, 1}, {1, 0}});
  const ShiftSystem& sys = state.range(0) == 0 ? trap : golden;
  for (auto _ : state) benchmark::DoNotOptimize(is_topologically_free(sys));
}
BENCHMARK(BM_Freeness)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
