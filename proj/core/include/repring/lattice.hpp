#pragma once

#include "repring/ghost.hpp"

namespace repring {

// A representation ring realized as the span of its ghost images, stored in
// coordinates on the ambient invariant lattice of the ghost ring.
struct Lattice {
  Ring tag;
  CtxPtr ctx;
  std::vector<GhostVector> generators;
  RowHnf ambient_hnf;  // of the ambient invariant basis rows
  IntMat coords;       // generators in ambient coordinates
  RowHnf coords_hnf;

  int rank() const { return static_cast<int>(coords_hnf.rank); }
};

// Fixed-point counts of a G-set over every subgroup.
GhostVector mark_vector(const CtxPtr& ctx, const GSet& x);

// Species values of the monomial module induced from a linear character of
// p'-order on a subgroup: value at (E, t O_p(E)) sums the conjugated
// character over the E-fixed cosets.
GhostVector monomial_species(const CtxPtr& ctx, const Subgroup& s, const LinearCharacter& psi);

// Ordinary induced character of a linear character, computed exactly.
GhostVector induced_character(const CtxPtr& ctx, const Subgroup& s, const LinearCharacter& psi);

Lattice burnside_lattice(const CtxPtr& ctx);
Lattice trivial_source_lattice(const CtxPtr& ctx);
Lattice character_lattice(const CtxPtr& ctx);
Lattice brauer_character_lattice(const CtxPtr& ctx);

std::optional<IntVec> membership(const Lattice& l, const GhostVector& v);
std::vector<Int> cokernel_invariants(const Lattice& l);

struct RingElement {
  const Lattice* lattice = nullptr;
  GhostVector ghost;
  IntVec coords;  // against l.generators
};

RingElement element_from(const Lattice& l, const GhostVector& v);
GhostVector random_lattice_element(const Lattice& l, std::mt19937_64& rng, int bound);

// All four lattices over one context.
struct RingSystem {
  CtxPtr ctx;
  Lattice burnside;
  Lattice trivial_source;
  Lattice character;
  Lattice brauer;

  const Lattice& of(Ring r) const;
};

RingSystem make_ring_system(const CtxPtr& ctx);

enum class ConnectMap { Linearize, BrauerChar, OrdinaryChar, Decompose };

RingElement connect(ConnectMap m, const RingSystem& sys, const RingElement& x);

// Subgroups that admit a decomposition (cyclic) x (q-group); these carry the
// linear characters whose inductions span the character lattice.
bool is_elementary(const Subgroup& s);

// Helper shared with tests: the permutation character of G/S.
GhostVector transitive_mark_vector(const CtxPtr& ctx, int subgroup_class_rep);

}  // namespace repring
