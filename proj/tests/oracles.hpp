#pragma once

// Independent reference computations used by the tests. These deliberately
// avoid the library's reduction and induction code paths.

#include <repring/biset.hpp>
#include <repring/cyclotomic.hpp>
#include <repring/ghost.hpp>
#include <repring/group.hpp>

namespace oracle {

using repring::Int;
using repring::IntVec;

// Dense polynomials over Z, constant term first.
IntVec poly_mul(const IntVec& a, const IntVec& b);
IntVec poly_mod(IntVec a, const IntVec& monic);
// Cyclotomic polynomial computed by its own recursive division.
IntVec cyclotomic(int e);

// Product of two residues mod Phi_e, fully reduced.
IntVec residue_mul(int e, const IntVec& a, const IntVec& b);

// Marks over every subgroup, computed pointwise; the G-set isomorphism
// oracle compares these vectors.
std::vector<long long> mark_fingerprint(const repring::GSet& x,
                                        const repring::SubgroupList& subs);

bool gsets_isomorphic(const repring::GSet& a, const repring::GSet& b,
                      const repring::SubgroupList& subs);

// Matrix representation over Z[zeta_e] and its tensor induction along a
// biset; the trace gives the character of the induced module.
using CycMat = std::vector<std::vector<repring::CycInt>>;

struct MatrixRep {
  repring::GroupPtr group;
  int e = 1;
  std::vector<CycMat> mats;  // one per element
  void validate() const;
};

MatrixRep one_dimensional(const repring::GroupPtr& g, const repring::LinearCharacter& chi, int e);
// The 2-dimensional integral representation of a symmetric-group-on-3-points
// action given by permutations.
MatrixRep standard_rep_deg3(const repring::GroupPtr& g, int e);

MatrixRep tensor_induce_rep(const repring::Biset& u, const MatrixRep& rep);
repring::CycInt trace(const CycMat& m);

}  // namespace oracle
