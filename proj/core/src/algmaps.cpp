#include "repring/algmaps.hpp"

namespace repring {

GhostVector iterated_difference(const MapUnderTest& f, const std::vector<GhostVector>& shifts,
                                const GhostVector& x) {
  const std::size_t k = shifts.size();
  GhostVector acc = GhostVector::zero(f.codomain->tag, f.codomain->ctx);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    GhostVector arg = x;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) {
        arg = arg + shifts[i];
        ++bits;
      }
    GhostVector val = f.eval(arg);
    acc = ((k - bits) % 2 == 0) ? acc + val : acc - val;
  }
  return acc;
}

const char* verdict_name(DegreeVerdict v) {
  switch (v) {
    case DegreeVerdict::ConsistentWithDegree: return "consistent_with_degree";
    case DegreeVerdict::VanishesWithoutWitness: return "vanishes_without_witness";
    case DegreeVerdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::vector<GhostVector> sample_pool(const Lattice& l, std::mt19937_64& rng, int extra,
                                     int bound) {
  std::vector<GhostVector> pool = l.generators;
  for (int i = 0; i < extra; ++i) pool.push_back(random_lattice_element(l, rng, bound));
  return pool;
}

DegreeWitness degree_witness(const MapUnderTest& f, int degree,
                             const std::vector<GhostVector>& pool, std::uint64_t seed,
                             int vanish_tuples, int witness_budget) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const GhostVector zero_cod = GhostVector::zero(f.codomain->tag, f.codomain->ctx);
  DegreeWitness out{DegreeVerdict::ConsistentWithDegree, 0, 0};
  for (int t = 0; t < vanish_tuples; ++t) {
    std::vector<GhostVector> shifts;
    for (int i = 0; i <= degree; ++i) shifts.push_back(pool[pick(rng)]);
    const GhostVector& x = pool[pick(rng)];
    ++out.checked_tuples;
    if (!(iterated_difference(f, shifts, x) == zero_cod)) {
      out.verdict = DegreeVerdict::Inconsistent;
      return out;
    }
  }
  for (int t = 0; t < witness_budget; ++t) {
    std::vector<GhostVector> shifts;
    for (int i = 0; i < degree; ++i) shifts.push_back(pool[pick(rng)]);
    const GhostVector& x = pool[pick(rng)];
    if (!(iterated_difference(f, shifts, x) == zero_cod)) {
      out.witness_tuples = 1;
      return out;
    }
  }
  out.verdict = DegreeVerdict::VanishesWithoutWitness;
  return out;
}

}  // namespace repring
