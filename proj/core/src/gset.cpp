#include "repring/gset.hpp"

#include <algorithm>
#include <stdexcept>

namespace repring {

GSet GSet::one_point(const GroupPtr& g) {
  GSet x;
  x.group = g;
  x.size = 1;
  x.table.assign(g->order(), {0});
  return x;
}

GSet GSet::regular(const GroupPtr& g) {
  GSet x;
  x.group = g;
  x.size = g->order();
  x.table.assign(g->order(), std::vector<int>(g->order(), 0));
  for (int a = 0; a < g->order(); ++a)
    for (int p = 0; p < g->order(); ++p) x.table[a][p] = g->mult(a, p);
  return x;
}

GSet GSet::cosets(const Subgroup& s) {
  const GroupPtr& g = s.parent;
  std::vector<int> rep_of(g->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (rep_of[x] >= 0) continue;
    int rep = x;
    std::vector<int> mem;
    for (int o : s.elems) mem.push_back(g->mult(x, o));
    rep = *std::min_element(mem.begin(), mem.end());
    for (int y : mem) rep_of[y] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> idx(g->order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  GSet x;
  x.group = g;
  x.size = static_cast<int>(reps.size());
  x.table.assign(g->order(), std::vector<int>(x.size, 0));
  for (int a = 0; a < g->order(); ++a)
    for (int i = 0; i < x.size; ++i) x.table[a][i] = idx[rep_of[g->mult(a, reps[i])]];
  return x;
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
  if (a.group.get() != b.group.get() && !a.group->same_table(*b.group))
    throw std::invalid_argument("disjoint union needs a common group");
  GSet x;
  x.group = a.group;
  x.size = a.size + b.size;
  x.table.assign(a.group->order(), std::vector<int>(x.size, 0));
  for (int g = 0; g < a.group->order(); ++g) {
    for (int p = 0; p < a.size; ++p) x.table[g][p] = a.table[g][p];
    for (int p = 0; p < b.size; ++p) x.table[g][a.size + p] = a.size + b.table[g][p];
  }
  return x;
}

GSet GSet::product(const GSet& a, const GSet& b) {
  if (a.group.get() != b.group.get() && !a.group->same_table(*b.group))
    throw std::invalid_argument("product needs a common group");
  GSet x;
  x.group = a.group;
  x.size = a.size * b.size;
  x.table.assign(a.group->order(), std::vector<int>(x.size, 0));
  for (int g = 0; g < a.group->order(); ++g)
    for (int p = 0; p < a.size; ++p)
      for (int q = 0; q < b.size; ++q)
        x.table[g][p * b.size + q] = a.table[g][p] * b.size + b.table[g][q];
  return x;
}

void GSet::validate() const {
  for (int p = 0; p < size; ++p)
    if (table[0][p] != p) throw std::invalid_argument("identity does not fix the set");
  for (int g = 0; g < group->order(); ++g)
    for (int h = 0; h < group->order(); ++h) {
      int gh = group->mult(g, h);
      for (int p = 0; p < size; ++p)
        if (table[g][table[h][p]] != table[gh][p])
          throw std::invalid_argument("action is not compatible with multiplication");
    }
}

std::vector<int> fixed_points(const GSet& x, const Subgroup& s) {
  std::vector<int> out;
  for (int p = 0; p < x.size; ++p) {
    bool fixed = true;
    for (int g : s.elems)
      if (x.table[g][p] != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

GSet induced_gset(const Subgroup& s, const GSet& x) {
  const GroupPtr& g = s.parent;
  const EmbeddedGroup& emb = subgroup_as_group(s);
  if (x.group.get() != emb.group.get() && !x.group->same_table(*emb.group))
    throw std::invalid_argument("induced set needs an action of the subgroup");
  GSet cos = GSet::cosets(s);
  // recover coset representatives (smallest element in each coset)
  std::vector<int> reps(cos.size, -1);
  {
    std::vector<int> rep_of(g->order(), -1);
    for (int e = 0; e < g->order(); ++e) {
      int rep = e;
      for (int o : s.elems) rep = std::min(rep, g->mult(e, o));
      rep_of[e] = rep;
    }
    std::vector<int> sorted;
    for (int e = 0; e < g->order(); ++e)
      if (rep_of[e] == e) sorted.push_back(e);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) reps[i] = sorted[i];
  }
  GSet out;
  out.group = g;
  out.size = cos.size * x.size;
  out.table.assign(g->order(), std::vector<int>(out.size, 0));
  for (int a = 0; a < g->order(); ++a)
    for (int i = 0; i < cos.size; ++i) {
      int j = cos.table[a][i];
      // a * reps[i] = reps[j] * s0 with s0 in S
      int s0 = g->mult(g->inverse(reps[j]), g->mult(a, reps[i]));
      int abs_s0 = emb.from_parent[s0];
      if (abs_s0 < 0) throw MathCheckError("coset arithmetic left the subgroup");
      for (int p = 0; p < x.size; ++p)
        out.table[a][i * x.size + p] = j * x.size + x.table[abs_s0][p];
    }
  return out;
}

}  // namespace repring
