#pragma once

#include <random>
#include <unordered_map>

#include "repring/biset.hpp"
#include "repring/cyclotomic.hpp"
#include "repring/group.hpp"

namespace repring {

// The four coordinate rings: marks over subgroups (B), hypo-elementary
// species (T), element values (RK), p-regular element values (RF).
enum class Ring { B, T, RK, RF };

const char* ring_tag(Ring r);
Ring parse_ring_tag(const std::string& s);

struct GhostContext;
using CtxPtr = std::shared_ptr<const GhostContext>;

// Everything indexed once per (group, prime, cyclotomic order): subgroup and
// species enumerations plus lookup tables. Immutable and shareable.
struct GhostContext {
  GroupPtr group;
  int p = 2;  // prime
  int e = 1;  // cyclotomic order, exponent(group) | e
  int h = 1;  // p'-part of e

  SubgroupList subgroups;
  HypoPairList pairs;
  std::vector<std::vector<int>> pair_core;  // per subgroup: p-core elements (empty if not hypo)
  std::vector<int> pair_quotient_order;     // per subgroup: |E / O_p(E)| (0 if not hypo)
  std::vector<int> p_regular;
  std::vector<int> p_regular_pos;  // element -> index into p_regular, or -1
  std::vector<int> cyclic_of;      // element -> subgroup index of <x>

  int index_count(Ring r) const;
  int value_order(Ring r) const;  // 1, h, e, h

  int subgroup_index(const std::vector<int>& elems) const;
  // Resolve (E, t) with t any element of a generating coset of the p-core.
  int pair_position(int subgroup_idx, int coset_element) const;
  int canonical_pair_rep(int subgroup_idx, int coset_element) const;

  // cached ambient bases, one per ring
  const IntMat& invariant_basis(Ring r) const;
  int expected_rank(Ring r) const;

 private:
  friend CtxPtr make_context(GroupPtr, int, int);
  std::unordered_map<long long, int> pair_lookup_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Ring, IntMat> ambient_;
};

CtxPtr make_context(GroupPtr g, int p, int e = 0);  // e = 0 means exponent(g)

// An invariant vector in one of the four ghost rings, stored on the full
// index family of its context.
class GhostVector {
 public:
  GhostVector(Ring tag, CtxPtr ctx, std::vector<CycInt> values);
  static GhostVector zero(Ring tag, const CtxPtr& ctx);
  static GhostVector one(Ring tag, const CtxPtr& ctx);

  Ring tag() const { return tag_; }
  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<CycInt>& values() const { return values_; }
  const CycInt& at(int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  GhostVector dual() const;

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b);
  friend GhostVector operator-(const GhostVector& a, const GhostVector& b);
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b);
  GhostVector operator-() const;
  friend bool operator==(const GhostVector& a, const GhostVector& b);

 private:
  Ring tag_;
  CtxPtr ctx_;
  std::vector<CycInt> values_;
};

GhostVector scalar_mul(const Int& n, const GhostVector& v);

// The four connecting maps between ghost rings.
GhostVector marks_to_species(const GhostVector& b);        // B -> T
GhostVector species_to_brauer(const GhostVector& t);       // T -> RF
GhostVector species_to_character(const GhostVector& t);    // T -> RK
GhostVector character_to_brauer(const GhostVector& rk);    // RK -> RF

struct InvarianceReport {
  bool ok = true;
  std::string witness;
};
InvarianceReport validate_invariance(const GhostVector& v);

IntVec flatten(const GhostVector& v);
GhostVector unflatten(Ring tag, const CtxPtr& ctx, const IntVec& coords);

GhostVector random_invariant(Ring tag, const CtxPtr& ctx, std::mt19937_64& rng, int bound);

}  // namespace repring
