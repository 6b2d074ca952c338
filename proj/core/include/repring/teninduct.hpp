#pragma once

#include "repring/lattice.hpp"

namespace repring {

// Image of a species index under transport through a biset point: the
// subgroup S^u together with the canonical representative of the transported
// generating coset, and the two index invariants of the construction.
struct TransportResult {
  int subgroup;       // index into the right context's subgroup list
  int rep;            // canonical p-regular representative
  int pair_position;  // index into the right context's pair list
  int e_u = 1;
  int f_u = 1;
};

// Both contexts must share the same prime and cyclotomic order.
void check_tensor_contexts(const Biset& u, const CtxPtr& gctx, const CtxPtr& hctx);

TransportResult pair_transport(const Biset& u, int point, const CtxPtr& gctx, int pair_index,
                               const CtxPtr& hctx);

// Multiplicative tensor induction on ghost vectors; the tag decides the
// index family and the double-coset product that is evaluated.
GhostVector tensor_induce(const Biset& u, const GhostVector& a, const CtxPtr& gctx);

// Species vector of the tensor-induced monomial module, computed directly on
// the induced set with the cocycle character of each line stabilizer.
GhostVector monomial_tensor_induce(const Biset& u, const Subgroup& s, const LinearCharacter& psi,
                                   const CtxPtr& gctx, const CtxPtr& hctx);

// Lattice-level tensor induction: evaluate at ghost level and certify that
// the image lies in the destination lattice.
RingElement apply_tensor(const Biset& u, const RingSystem& hsys, const RingSystem& gsys,
                         Ring tag, const RingElement& x);

}  // namespace repring
