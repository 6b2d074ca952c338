#pragma once

#include "repring/group.hpp"

namespace repring {

// A finite left G-set given by its action table.
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<std::vector<int>> table;  // table[g][x]

  int act(int g, int x) const { return table[g][x]; }

  static GSet one_point(const GroupPtr& g);
  static GSet regular(const GroupPtr& g);
  static GSet cosets(const Subgroup& s);  // G/S for S <= G
  static GSet disjoint_union(const GSet& a, const GSet& b);
  static GSet product(const GSet& a, const GSet& b);

  void validate() const;  // identity and compatibility laws
};

std::vector<int> fixed_points(const GSet& x, const Subgroup& s);

// Ind_S^G applied to a set carrying an action of the abstract group of S.
GSet induced_gset(const Subgroup& s, const GSet& x);

}  // namespace repring
