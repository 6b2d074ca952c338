#pragma once

#include <functional>

#include "repring/lattice.hpp"

namespace repring {

// A map between two representation lattices, evaluated at ghost level.
struct MapUnderTest {
  const Lattice* domain = nullptr;
  const Lattice* codomain = nullptr;
  std::function<GhostVector(const GhostVector&)> eval;
};

// Iterated difference D_{a_1}...D_{a_k} f at x, by inclusion-exclusion over
// the 2^k shifted evaluations.
GhostVector iterated_difference(const MapUnderTest& f, const std::vector<GhostVector>& shifts,
                                const GhostVector& x);

enum class DegreeVerdict {
  ConsistentWithDegree,      // higher differences vanish and a witness refutes lower degree
  VanishesWithoutWitness,    // higher differences vanish but no nonzero n-fold found
  Inconsistent,              // some (n+1)-fold difference is nonzero
};

const char* verdict_name(DegreeVerdict v);

// Sample pool: generators plus seeded small combinations.
std::vector<GhostVector> sample_pool(const Lattice& l, std::mt19937_64& rng, int extra = 20,
                                     int bound = 2);

struct DegreeWitness {
  DegreeVerdict verdict;
  int checked_tuples = 0;
  int witness_tuples = 0;
};

DegreeWitness degree_witness(const MapUnderTest& f, int degree,
                             const std::vector<GhostVector>& pool, std::uint64_t seed,
                             int vanish_tuples = 40, int witness_budget = 200);

}  // namespace repring
