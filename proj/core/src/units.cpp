#include "repring/units.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace repring {

namespace {

// relation w[a] == galois_u( w[b] ); u == 1 covers plain conjugation
struct Relation {
  int a, b;
  long long u;
};

std::vector<long long> units_mod(int m) {
  std::vector<long long> out;
  for (int i = 1; i < m; ++i)
    if (std::gcd(i, m) == 1) out.push_back(i);
  return out;
}

int group_action_index(Ring tag, const GhostContext& ctx, int idx, int g) {
  const GroupPtr& grp = ctx.group;
  switch (tag) {
    case Ring::B:
      return ctx.subgroup_index(ctx.subgroups.all[idx].conjugated(g).elems);
    case Ring::T: {
      const auto& pr = ctx.pairs.pairs[idx];
      int sub = ctx.subgroup_index(ctx.subgroups.all[pr.subgroup].conjugated(g).elems);
      return ctx.pair_position(sub, grp->conjugate(pr.rep, g));
    }
    case Ring::RK:
      return grp->conjugate(idx, g);
    case Ring::RF:
      return ctx.p_regular_pos[grp->conjugate(ctx.p_regular[idx], g)];
  }
  return idx;
}

int galois_action_index(Ring tag, const GhostContext& ctx, int idx, long long istar) {
  const GroupPtr& grp = ctx.group;
  switch (tag) {
    case Ring::B:
      return idx;
    case Ring::T: {
      const auto& pr = ctx.pairs.pairs[idx];
      return ctx.pair_position(pr.subgroup, grp->power(pr.rep, istar));
    }
    case Ring::RK:
      return grp->power(idx, istar);
    case Ring::RF:
      return ctx.p_regular_pos[grp->power(ctx.p_regular[idx], istar)];
  }
  return idx;
}

std::vector<CycInt> signed_roots(int order) {
  std::set<std::vector<Int>> seen;
  std::vector<CycInt> out;
  for (int k = 0; k < order; ++k)
    for (int sgn : {1, -1}) {
      CycInt z = CycInt::root(order, k);
      if (sgn < 0) z = -z;
      if (seen.insert(z.coeffs()).second) out.push_back(std::move(z));
    }
  std::sort(out.begin(), out.end(),
            [](const CycInt& a, const CycInt& b) { return a.coeffs() < b.coeffs(); });
  return out;
}

}  // namespace

int UnitGroup::index_of(const GhostVector& v) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == v) return static_cast<int>(i);
  return -1;
}

bool is_unit_vector(const GhostVector& v) {
  for (const auto& x : v.values())
    if (!x.signed_root()) return false;
  return true;
}

GhostVector unit_inverse(const GhostVector& v) {
  const int vo = v.ctx()->value_order(v.tag());
  std::vector<CycInt> out;
  out.reserve(v.values().size());
  for (const auto& x : v.values()) {
    auto sr = x.signed_root();
    if (!sr) throw std::invalid_argument("component is not a signed root of unity");
    CycInt inv = CycInt::root(vo, -sr->second);
    if (sr->first < 0) inv = -inv;
    out.push_back(std::move(inv));
  }
  return GhostVector(v.tag(), v.ctx(), std::move(out));
}

UnitGroup ghost_torsion_units(Ring tag, const CtxPtr& ctx, std::size_t cap) {
  const int n = ctx->index_count(tag);
  const int vo = ctx->value_order(tag);
  const GroupPtr& g = ctx->group;

  // relation graph over indices
  std::vector<Relation> rels;
  for (int ge = 1; ge < g->order(); ++ge)
    for (int i = 0; i < n; ++i) {
      int j = group_action_index(tag, *ctx, i, ge);
      if (i != j) rels.push_back({i, j, 1});
    }
  if (vo > 1)
    for (long long u : units_mod(vo)) {
      if (u == 1) continue;
      long long ustar = mod_inverse(u, vo);
      for (int i = 0; i < n; ++i) rels.push_back({i, galois_action_index(tag, *ctx, i, ustar), u});
    }
  std::vector<std::vector<int>> rels_at(n);  // relations touching an index
  for (std::size_t r = 0; r < rels.size(); ++r) {
    rels_at[rels[r].a].push_back(static_cast<int>(r));
    rels_at[rels[r].b].push_back(static_cast<int>(r));
  }

  // connected components
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(comps.size());
    std::vector<int> members;
    std::queue<int> q;
    q.push(i);
    comp[i] = id;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      members.push_back(x);
      for (int r : rels_at[x])
        for (int y : {rels[r].a, rels[r].b})
          if (comp[y] < 0) {
            comp[y] = id;
            q.push(y);
          }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  const std::vector<CycInt> roots = signed_roots(vo);
  const CycInt unset = CycInt::zero(vo);  // 0 is never a unit, safe sentinel

  // per component: consistent assignments, each a value per member
  std::vector<std::vector<std::vector<CycInt>>> per_comp;
  for (const auto& members : comps) {
    std::vector<int> pos(n, -1);
    for (std::size_t k = 0; k < members.size(); ++k) pos[members[k]] = static_cast<int>(k);
    std::vector<std::vector<CycInt>> good;
    for (const CycInt& seed : roots) {
      std::vector<CycInt> val(members.size(), unset);
      std::vector<bool> known(members.size(), false);
      val[pos[members[0]]] = seed;
      known[pos[members[0]]] = true;
      std::queue<int> q;
      q.push(members[0]);
      bool ok = true;
      while (ok && !q.empty()) {
        int x = q.front();
        q.pop();
        for (int r : rels_at[x]) {
          const Relation& rel = rels[r];
          // w[a] = galois_u(w[b])
          if (known[pos[rel.a]] && known[pos[rel.b]]) {
            if (!(val[pos[rel.a]] == val[pos[rel.b]].galois(rel.u))) {
              ok = false;
              break;
            }
          } else if (known[pos[rel.b]]) {
            val[pos[rel.a]] = val[pos[rel.b]].galois(rel.u);
            known[pos[rel.a]] = true;
            q.push(rel.a);
          } else if (known[pos[rel.a]]) {
            val[pos[rel.b]] = val[pos[rel.a]].galois(mod_inverse(rel.u, vo));
            known[pos[rel.b]] = true;
            q.push(rel.b);
          }
        }
      }
      if (!ok) continue;
      for (bool k : known)
        if (!k) throw MathCheckError("relation graph left a component undetermined");
      good.push_back(std::move(val));
    }
    per_comp.push_back(std::move(good));
  }

  std::size_t total = 1;
  for (const auto& choices : per_comp) {
    total *= choices.size();
    if (total > cap) throw std::invalid_argument("unit enumeration exceeds the candidate cap");
  }

  std::vector<GhostVector> elems;
  std::vector<std::size_t> pick(per_comp.size(), 0);
  while (true) {
    std::vector<CycInt> vals(n, unset);
    for (std::size_t c = 0; c < per_comp.size(); ++c) {
      const auto& assignment = per_comp[c][pick[c]];
      for (std::size_t k = 0; k < comps[c].size(); ++k) vals[comps[c][k]] = assignment[k];
    }
    elems.emplace_back(tag, ctx, std::move(vals));
    // advance the odometer
    std::size_t c = 0;
    while (c < pick.size()) {
      if (++pick[c] < per_comp[c].size()) break;
      pick[c] = 0;
      ++c;
    }
    if (c == pick.size()) break;
    if (per_comp.empty()) break;
  }
  if (per_comp.empty()) elems.clear();

  std::sort(elems.begin(), elems.end(), [](const GhostVector& a, const GhostVector& b) {
    return flatten(a) < flatten(b);
  });

  UnitGroup out;
  out.tag = tag;
  out.ctx = ctx;
  out.elements = std::move(elems);
  // multiplication table via coefficient lookup
  std::map<std::vector<Int>, int> where;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    where[flatten(out.elements[i])] = static_cast<int>(i);
  out.table.assign(out.elements.size(), std::vector<int>(out.elements.size(), -1));
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      auto it = where.find(flatten(out.elements[i] * out.elements[j]));
      if (it == where.end()) throw MathCheckError("torsion units are not closed under product");
      out.table[i][j] = it->second;
    }
  return out;
}

UnitGroup orthogonal_units(Ring tag, const RingSystem& sys, std::size_t cap) {
  UnitGroup ghost = ghost_torsion_units(tag, sys.ctx, cap);
  const Lattice& lat = sys.of(tag);
  UnitGroup out;
  out.tag = tag;
  out.ctx = sys.ctx;
  for (auto& v : ghost.elements) {
    if (!membership(lat, v)) continue;
    GhostVector check = v * v.dual();
    if (!(check == GhostVector::one(tag, sys.ctx)))
      throw MathCheckError("lattice torsion unit is not orthogonal");
    out.elements.push_back(std::move(v));
  }
  std::map<std::vector<Int>, int> where;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    where[flatten(out.elements[i])] = static_cast<int>(i);
  out.table.assign(out.elements.size(), std::vector<int>(out.elements.size(), -1));
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      auto it = where.find(flatten(out.elements[i] * out.elements[j]));
      if (it == where.end())
        throw MathCheckError("orthogonal units are not closed under product");
      out.table[i][j] = it->second;
    }
  return out;
}

std::vector<GhostVector> signed_linear_characters(const CtxPtr& ctx) {
  std::vector<GhostVector> out;
  for (const auto& chi : linear_characters(ctx->group, ctx->e)) {
    std::vector<CycInt> vals;
    vals.reserve(ctx->group->order());
    for (int x = 0; x < ctx->group->order(); ++x) vals.push_back(chi.value(x));
    GhostVector v(Ring::RK, ctx, std::move(vals));
    out.push_back(-v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const GhostVector& a, const GhostVector& b) {
    return flatten(a) < flatten(b);
  });
  return out;
}

std::vector<GhostVector> signed_linear_brauer_characters(const CtxPtr& ctx) {
  std::vector<GhostVector> out;
  for (const auto& chi : linear_characters(ctx->group, ctx->e)) {
    std::vector<CycInt> vals;
    vals.reserve(ctx->p_regular.size());
    for (int y : ctx->p_regular) {
      auto small = chi.value(y).descended(ctx->h);
      if (!small) throw MathCheckError("linear character value outside the p-regular subring");
      vals.push_back(std::move(*small));
    }
    GhostVector v(Ring::RF, ctx, std::move(vals));
    out.push_back(-v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const GhostVector& a, const GhostVector& b) {
    return flatten(a) < flatten(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GhostVector brauer_lift_ghost(const GhostVector& rf) {
  if (rf.tag() != Ring::RF) throw std::invalid_argument("expected a p-regular vector");
  const CtxPtr& ctx = rf.ctx();
  const GroupPtr& g = ctx->group;
  std::vector<CycInt> vals;
  vals.reserve(g->order());
  for (int x = 0; x < g->order(); ++x) {
    auto [xp, xpp] = p_parts(g, x, ctx->p);
    (void)xp;
    vals.push_back(rf.at(ctx->p_regular_pos[xpp]).embedded(ctx->e));
  }
  return GhostVector(Ring::RK, ctx, std::move(vals));
}

RingElement brauer_lift(const RingSystem& sys, const RingElement& brauer_elem) {
  if (brauer_elem.lattice != &sys.brauer)
    throw std::invalid_argument("element is not a Brauer character");
  GhostVector lifted = brauer_lift_ghost(brauer_elem.ghost);
  RingElement out = element_from(sys.character, lifted);
  // section property
  if (!(character_to_brauer(lifted) == brauer_elem.ghost))
    throw MathCheckError("lift is not a section of the decomposition map");
  return out;
}

GhostVector apply_unit_functor(const VirtualBiset& a, const GhostVector& unit, const CtxPtr& gctx) {
  GhostVector plus = tensor_induce(a.plus, unit, gctx);
  GhostVector minus = tensor_induce(a.minus, unit, gctx);
  return plus * unit_inverse(minus);
}

}  // namespace repring
