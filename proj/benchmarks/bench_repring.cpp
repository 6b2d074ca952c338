#include <benchmark/benchmark.h>

#include <repring/teninduct.hpp>
#include <repring/units.hpp>

using namespace repring;

namespace {

Subgroup subgroup_of_order(const GroupPtr& g, int n) {
  auto subs = all_subgroups(g);
  for (const auto& s : subs.all)
    if (s.order() == n) return s;
  throw std::runtime_error("no subgroup of that order");
}

void BM_SubgroupEnumeration(benchmark::State& state) {
  auto g = Group::named("A4");
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).all.size());
}
BENCHMARK(BM_SubgroupEnumeration);

void BM_CycIntMultiply(benchmark::State& state) {
  CycInt a = CycInt::root(60, 7) + CycInt::integer(60, 3);
  CycInt b = CycInt::root(60, 31) - CycInt::integer(60, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycIntMultiply);

void BM_TrivialSourceLattice(benchmark::State& state) {
  auto ctx = make_context(Group::named("A4"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(trivial_source_lattice(ctx).rank());
}
BENCHMARK(BM_TrivialSourceLattice);

void BM_SpeciesTensorInduction(benchmark::State& state) {
  auto s3 = Group::named("S3");
  Subgroup c2 = subgroup_of_order(s3, 2);
  Biset ind = induction_biset(c2);
  auto gctx = make_context(s3, 3, 6);
  auto hctx = make_context(ind.right, 3, 6);
  std::mt19937_64 rng(1);
  GhostVector v = random_invariant(Ring::T, hctx, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_induce(ind, v, gctx).size());
}
BENCHMARK(BM_SpeciesTensorInduction);

void BM_CharacterUnitEnumeration(benchmark::State& state) {
  auto ctx = make_context(Group::named("A4"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ghost_torsion_units(Ring::RK, ctx).order());
}
BENCHMARK(BM_CharacterUnitEnumeration);

}  // namespace

BENCHMARK_MAIN();
