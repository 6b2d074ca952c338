#pragma once

#include <functional>

#include "repring/gset.hpp"
#include "repring/group.hpp"

namespace repring {

// A finite (G,H)-biset with commuting left G- and free right H-actions.
struct Biset {
  GroupPtr left;   // G
  GroupPtr right;  // H
  int size = 0;
  std::vector<std::vector<int>> lact;  // lact[g][u]
  std::vector<std::vector<int>> ract;  // ract[u][h]

  int orbit_count() const;  // |U/H|
  void validate() const;    // commuting actions, right freeness
};

enum class ElementaryKind { Ind, Res, Inf, Iso };

// Ind: G as a (G,H)-biset for H <= G given as a Subgroup.
Biset induction_biset(const Subgroup& h);
// Res: G as an (H,G)-biset.
Biset restriction_biset(const Subgroup& h);
// Inf: G/N as a (G, G/N)-biset.
Biset inflation_biset(const QuotientGroup& q);
// Iso along an isomorphism H -> G given by an image table.
Biset iso_biset(const GroupPtr& g, const GroupPtr& h, const std::vector<int>& image_of_h);
Biset identity_biset(const GroupPtr& g);

Biset compose_bisets(const Biset& u, const Biset& v);         // U x_H V
Biset disjoint_union_bisets(const Biset& u, const Biset& v);
Biset empty_biset(const GroupPtr& g, const GroupPtr& h);

// Representatives (smallest point index) of S\U/T.
std::vector<int> double_cosets(const Subgroup& s, const Biset& u, const Subgroup& t);

// phi_u on the subgroup of G that maps u into its own H-orbit:
// phi[g] = h when g*u = u*h, and -1 when no such h exists.
std::vector<int> point_transport(const Biset& u, int point);

struct StabilizerTransport {
  std::vector<int> intersection;  // S cap {g : g*u in u*H}, elements of G
  std::vector<int> image;         // S^u, elements of H, sorted
};
StabilizerTransport stabilizer_transport(const Biset& u, int point, const Subgroup& s);

// Smallest point per right-orbit, in increasing order.
std::vector<int> orbit_transversal(const Biset& u);

struct WreathElement {
  std::vector<int> base;  // entries of H^n
  std::vector<int> perm;  // pi, images of 0..n-1
};

// theta(g) for the ordered transversal reps: g*u_i = u_{pi(i)} * h_i; the
// wreath element stores base[j] = h_{pi^-1(j)}.
WreathElement wreath_theta(const Biset& u, const std::vector<int>& reps, int g);
WreathElement wreath_mult(const GroupPtr& h, const WreathElement& a, const WreathElement& b);

// Raw per-rep data of theta(g): (pi, h_1..h_n) with g*u_i = u_{pi(i)} * h_i.
struct ThetaData {
  std::vector<int> pi;
  std::vector<int> h;
};
ThetaData theta_data(const Biset& u, const std::vector<int>& reps, int g);

// s_U(X): carrier X^n with n = |U/H|, tuples in mixed radix order.
GSet tensor_induce_set(const Biset& u, const GSet& x);

struct InvariantSubsetOrbit {
  std::vector<int> masks;  // right-orbit masks in the orbit, sorted
  Subgroup stabilizer;     // of the first mask
};

// All right-invariant subsets (as orbit masks) grouped into left orbits.
std::vector<InvariantSubsetOrbit> invariant_subsets(const Biset& u);
std::vector<int> orbit_of_points(const Biset& u);  // point -> right-orbit id
Biset subbiset_from_mask(const Biset& u, unsigned mask, const Subgroup& stab);

// U as a left (G x H)-set, (g,h) acting by u -> g u h^{-1}; together with
// marks this is the biset isomorphism oracle.
GSet biset_as_product_set(const Biset& u, const GroupPtr& product);

struct VirtualBiset {
  Biset plus;
  Biset minus;
};

}  // namespace repring
