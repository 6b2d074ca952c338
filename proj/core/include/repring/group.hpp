#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repring/cyclotomic.hpp"

namespace repring {

// Thrown when a computation contradicts a structural guarantee; the CLI maps
// it to a nonzero "mathematical check failed" exit status.
struct MathCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Permutation = std::vector<int>;  // images of 0..degree-1

Permutation parse_cycles(const std::string& text, int degree);
std::string cycle_string(const Permutation& p);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group as an indexed element set with a full multiplication table.
// Element 0 is the identity. Immutable after construction.
class Group {
 public:
  static constexpr int kDefaultOrderCap = 360;

  static GroupPtr from_permutations(int degree, std::vector<Permutation> gens,
                                    std::string name, int order_cap = kDefaultOrderCap);
  static GroupPtr from_mult_table(std::vector<std::vector<int>> table, std::string name);
  static GroupPtr named(const std::string& name, int order_cap = kDefaultOrderCap);
  // Text format: a "degree: n" line followed by one generator per line in
  // cycle notation, e.g. "(1 2)(3 4)". Lines starting with # are skipped.
  static GroupPtr from_text(const std::string& text, std::string name,
                            int order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  int mult(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  const std::string& name() const { return name_; }

  int power(int a, long long k) const;
  int element_order(int a) const { return elem_order_[a]; }
  int exponent() const { return exponent_; }
  int conjugate(int a, int g) const;  // g^-1 a g

  const std::vector<int>& generator_elements() const { return gens_; }
  const Permutation* permutation(int a) const;  // null unless permutation-built

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }

  bool same_table(const Group& other) const;

 private:
  Group() = default;
  void finish(bool check_assoc);

  int order_ = 1;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::string name_;
  std::vector<int> gens_;
  std::vector<Permutation> perms_;  // empty unless built from permutations
  std::vector<int> elem_order_;
  int exponent_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elems;  // sorted, closed under mult and inverse

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int a) const;
  bool contains_all(const std::vector<int>& xs) const;
  Subgroup conjugated(int g) const;
  bool is_normal() const;            // in the whole parent
  std::vector<int> normalizer() const;
  std::vector<int> small_generators() const;

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  static Subgroup generated(const GroupPtr& g, const std::vector<int>& gens);
};

bool operator==(const Subgroup& a, const Subgroup& b);

// Every subgroup, sorted by (order, element list), partitioned into
// conjugacy classes ordered by smallest member.
struct SubgroupList {
  std::vector<Subgroup> all;
  std::vector<std::vector<int>> classes;  // indices into all
  std::vector<int> class_of;

  std::optional<int> index_of(const std::vector<int>& elems) const;
};

SubgroupList all_subgroups(const GroupPtr& g);

Subgroup p_core(const Subgroup& e, int p);           // largest normal p-subgroup
std::pair<int, int> p_parts(const GroupPtr& g, int x, int p);
std::vector<int> p_regular_elements(const GroupPtr& g, int p);

// A p-hypo-elementary subgroup index together with the canonical p-regular
// representative of a generating coset of its p-core.
struct HypoPair {
  int subgroup;  // index into a SubgroupList
  int rep;       // element of the parent group
};

struct HypoPairList {
  std::vector<HypoPair> pairs;
  std::vector<std::vector<int>> orbits;  // conjugation orbits, pair positions
  std::vector<int> orbit_of;
};

HypoPairList hypo_pairs(const GroupPtr& g, int p, const SubgroupList& subs);
HypoPairList hypo_pairs(const GroupPtr& g, int p);

// The subgroup as a group in its own right; to_parent maps its element
// indices into the parent, from_parent is the partial inverse (-1 outside).
struct EmbeddedGroup {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};

// Cached so that repeated requests for the same subgroup share one Group.
const EmbeddedGroup& subgroup_as_group(const Subgroup& s);

struct QuotientGroup {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> projection;  // parent element -> quotient element
  std::vector<int> coset_reps;  // quotient element -> smallest preimage
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& normal);

Subgroup commutator_subgroup(const GroupPtr& g);

// A homomorphism G -> <zeta_m>, stored as the exponent at each element.
struct LinearCharacter {
  GroupPtr group;
  int value_order = 1;          // m
  std::vector<int> exponents;   // value at g is zeta_m^exponents[g]

  CycInt value(int g) const { return CycInt::root(value_order, exponents[g]); }
  CycInt value_in(int g, int bigger_order) const;
  bool is_trivial() const;
};

// All homomorphisms G -> <zeta_m> for arbitrary m >= 1.
std::vector<LinearCharacter> characters_into(const GroupPtr& g, int m);

// All |G/G'| linear characters with values in <zeta_e>; requires that the
// exponent of G/G' divides e.
std::vector<LinearCharacter> linear_characters(const GroupPtr& g, int e);

}  // namespace repring
