#pragma once

#include "repring/teninduct.hpp"

namespace repring {

// A finite multiplicative group of ghost vectors, canonically ordered, with
// its multiplication table.
struct UnitGroup {
  Ring tag;
  CtxPtr ctx;
  std::vector<GhostVector> elements;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(elements.size()); }
  int index_of(const GhostVector& v) const;  // -1 if absent
};

// All vectors whose components are signed roots of unity and which satisfy
// the invariance conditions; this is the torsion unit group of the ghost
// ring. Enumerated orbit by orbit with consistency pruning.
UnitGroup ghost_torsion_units(Ring tag, const CtxPtr& ctx, std::size_t cap = 10'000'000);

// Ghost torsion units that lie in the representation lattice: the orthogonal
// (equivalently torsion) unit group of the representation ring.
UnitGroup orthogonal_units(Ring tag, const RingSystem& sys, std::size_t cap = 10'000'000);

// Plus-or-minus the linear characters, as character ghost vectors.
std::vector<GhostVector> signed_linear_characters(const CtxPtr& ctx);
// Their restrictions to p-regular elements, deduplicated.
std::vector<GhostVector> signed_linear_brauer_characters(const CtxPtr& ctx);

// Section of the decomposition map: value at x is the input value at the
// p-regular part of x.
RingElement brauer_lift(const RingSystem& sys, const RingElement& brauer_elem);
GhostVector brauer_lift_ghost(const GhostVector& rf);

// Componentwise inverse of a vector of signed roots.
GhostVector unit_inverse(const GhostVector& v);

// The unit-group map of a formal difference of bisets: the plus image times
// the inverse of the minus image.
GhostVector apply_unit_functor(const VirtualBiset& a, const GhostVector& unit, const CtxPtr& gctx);

bool is_unit_vector(const GhostVector& v);  // every component a signed root

}  // namespace repring
