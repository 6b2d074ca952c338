#include "repring/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace repring {

GhostVector mark_vector(const CtxPtr& ctx, const GSet& x) {
  if (x.group.get() != ctx->group.get() && !x.group->same_table(*ctx->group))
    throw std::invalid_argument("set over a different group");
  std::vector<CycInt> vals;
  vals.reserve(ctx->subgroups.all.size());
  for (const auto& s : ctx->subgroups.all)
    vals.push_back(CycInt::integer(1, static_cast<long>(fixed_points(x, s).size())));
  return GhostVector(Ring::B, ctx, std::move(vals));
}

GhostVector transitive_mark_vector(const CtxPtr& ctx, int subgroup_idx) {
  return mark_vector(ctx, GSet::cosets(ctx->subgroups.all[subgroup_idx]));
}

GhostVector monomial_species(const CtxPtr& ctx, const Subgroup& s, const LinearCharacter& psi) {
  const GroupPtr& g = ctx->group;
  if (ctx->h % psi.value_order != 0)
    throw std::invalid_argument("character order must divide the p-regular root order");
  const EmbeddedGroup& emb = subgroup_as_group(s);
  if (psi.group.get() != emb.group.get())
    throw std::invalid_argument("character must live on the subgroup");
  // cosets of s with smallest representatives
  GSet cos = GSet::cosets(s);
  std::vector<int> reps;
  {
    std::vector<int> rep_of(g->order(), -1);
    for (int x = 0; x < g->order(); ++x) {
      int rep = x;
      for (int o : s.elems) rep = std::min(rep, g->mult(x, o));
      rep_of[x] = rep;
    }
    for (int x = 0; x < g->order(); ++x)
      if (rep_of[x] == x) reps.push_back(x);
    std::sort(reps.begin(), reps.end());
  }
  std::vector<CycInt> vals;
  vals.reserve(ctx->pairs.pairs.size());
  for (const auto& pr : ctx->pairs.pairs) {
    const Subgroup& e = ctx->subgroups.all[pr.subgroup];
    CycInt total = CycInt::zero(ctx->h);
    for (std::size_t ci = 0; ci < reps.size(); ++ci) {
      // coset fixed by all of E?
      bool fixed = true;
      for (int a : e.elems)
        if (cos.table[a][ci] != static_cast<int>(ci)) {
          fixed = false;
          break;
        }
      if (!fixed) continue;
      int c = g->mult(g->mult(g->inverse(reps[ci]), pr.rep), reps[ci]);
      int abs_c = emb.from_parent[c];
      if (abs_c < 0) throw MathCheckError("fixed coset with conjugate outside the subgroup");
      total += psi.value(abs_c).embedded(ctx->h);
    }
    vals.push_back(std::move(total));
  }
  return GhostVector(Ring::T, ctx, std::move(vals));
}

GhostVector induced_character(const CtxPtr& ctx, const Subgroup& s, const LinearCharacter& psi) {
  const GroupPtr& g = ctx->group;
  if (ctx->e % psi.value_order != 0)
    throw std::invalid_argument("character order must divide the cyclotomic order");
  const EmbeddedGroup& emb = subgroup_as_group(s);
  if (psi.group.get() != emb.group.get())
    throw std::invalid_argument("character must live on the subgroup");
  std::vector<CycInt> vals;
  vals.reserve(g->order());
  for (int x = 0; x < g->order(); ++x) {
    CycInt total = CycInt::zero(ctx->e);
    for (int a = 0; a < g->order(); ++a) {
      int y = g->conjugate(x, a);
      int abs_y = emb.from_parent[y];
      if (abs_y < 0) continue;
      total += psi.value(abs_y).embedded(ctx->e);
    }
    // the orbit sums always come in multiples of |S|
    IntVec c = total.coeffs();
    for (auto& v : c) {
      if (v % s.order() != 0) throw MathCheckError("induced character sum not divisible");
      v /= s.order();
    }
    vals.push_back(CycInt::from_coeffs(ctx->e, std::move(c)));
  }
  return GhostVector(Ring::RK, ctx, std::move(vals));
}

namespace {

Lattice finish_lattice(Ring tag, const CtxPtr& ctx, std::vector<GhostVector> gens,
                       bool rank_must_match) {
  Lattice l;
  l.tag = tag;
  l.ctx = ctx;
  l.generators = std::move(gens);
  l.ambient_hnf = row_hnf(ctx->invariant_basis(tag));
  IntMat coords;
  for (const auto& g : l.generators) {
    auto c = solve_row_combination(l.ambient_hnf, flatten(g));
    if (!c) throw MathCheckError("generator is not an invariant vector");
    coords.push_back(std::move(*c));
  }
  l.coords = std::move(coords);
  l.coords_hnf = row_hnf(l.coords);
  if (rank_must_match && l.rank() != ctx->expected_rank(tag)) {
    std::ostringstream os;
    os << "lattice rank " << l.rank() << " differs from the ghost rank "
       << ctx->expected_rank(tag) << " for ring " << ring_tag(tag) << " over "
       << ctx->group->name();
    throw MathCheckError(os.str());
  }
  return l;
}

}  // namespace

Lattice burnside_lattice(const CtxPtr& ctx) {
  std::vector<GhostVector> gens;
  for (const auto& cls : ctx->subgroups.classes)
    gens.push_back(transitive_mark_vector(ctx, cls.front()));
  return finish_lattice(Ring::B, ctx, std::move(gens), true);
}

Lattice trivial_source_lattice(const CtxPtr& ctx) {
  std::vector<GhostVector> gens;
  for (const auto& cls : ctx->subgroups.classes) {
    const Subgroup& s = ctx->subgroups.all[cls.front()];
    const EmbeddedGroup& emb = subgroup_as_group(s);
    for (const auto& psi : characters_into(emb.group, ctx->h))
      gens.push_back(monomial_species(ctx, s, psi));
  }
  return finish_lattice(Ring::T, ctx, std::move(gens), true);
}

bool is_elementary(const Subgroup& s) {
  if (s.order() == 1) return true;
  const GroupPtr& g = s.parent;
  // cyclic subgroups qualify for every prime
  for (int x : s.elems)
    if (g->element_order(x) == s.order()) return true;
  std::vector<int> primes;
  int n = s.order();
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) primes.push_back(n);
  for (int q : primes) {
    int qpart = 1, m = s.order();
    while (m % q == 0) {
      m /= q;
      qpart *= q;
    }
    Subgroup core = p_core(s, q);
    if (core.order() != qpart) continue;  // Sylow q not normal
    std::vector<int> cpart;
    for (int x : s.elems)
      if (g->element_order(x) % q != 0) cpart.push_back(x);
    if (static_cast<int>(cpart.size()) * qpart != s.order()) continue;
    Subgroup c{g, cpart};
    // closed?
    bool closed = true;
    for (int a : cpart) {
      for (int b : cpart)
        if (!c.contains(g->mult(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    // cyclic?
    bool cyclic = false;
    for (int x : cpart)
      if (g->element_order(x) == c.order()) {
        cyclic = true;
        break;
      }
    if (!cyclic) continue;
    // centralizes the q-part?
    bool central = true;
    for (int a : cpart) {
      for (int b : core.elems)
        if (g->mult(a, b) != g->mult(b, a)) {
          central = false;
          break;
        }
      if (!central) break;
    }
    if (central) return true;
  }
  return false;
}

Lattice character_lattice(const CtxPtr& ctx) {
  std::vector<GhostVector> gens;
  for (const auto& cls : ctx->subgroups.classes) {
    const Subgroup& s = ctx->subgroups.all[cls.front()];
    if (!is_elementary(s)) continue;
    const EmbeddedGroup& emb = subgroup_as_group(s);
    for (const auto& psi : linear_characters(emb.group, ctx->e))
      gens.push_back(induced_character(ctx, s, psi));
  }
  return finish_lattice(Ring::RK, ctx, std::move(gens), true);
}

Lattice brauer_character_lattice(const CtxPtr& ctx) {
  std::vector<GhostVector> gens;
  for (const auto& cls : ctx->subgroups.classes) {
    const Subgroup& s = ctx->subgroups.all[cls.front()];
    if (!is_elementary(s)) continue;
    const EmbeddedGroup& emb = subgroup_as_group(s);
    for (const auto& psi : linear_characters(emb.group, ctx->e))
      gens.push_back(character_to_brauer(induced_character(ctx, s, psi)));
  }
  return finish_lattice(Ring::RF, ctx, std::move(gens), true);
}

std::optional<IntVec> membership(const Lattice& l, const GhostVector& v) {
  if (v.tag() != l.tag || v.ctx().get() != l.ctx.get())
    throw std::invalid_argument("vector from a different ghost ring");
  auto amb = solve_row_combination(l.ambient_hnf, flatten(v));
  if (!amb) return std::nullopt;
  return solve_row_combination(l.coords_hnf, *amb);
}

std::vector<Int> cokernel_invariants(const Lattice& l) {
  return smith_divisors(l.coords);
}

RingElement element_from(const Lattice& l, const GhostVector& v) {
  auto c = membership(l, v);
  if (!c) throw MathCheckError("vector is outside the representation lattice");
  return RingElement{&l, v, std::move(*c)};
}

GhostVector random_lattice_element(const Lattice& l, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  GhostVector acc = GhostVector::zero(l.tag, l.ctx);
  for (const auto& g : l.generators) {
    int c = dist(rng);
    if (c != 0) acc = acc + scalar_mul(Int(c), g);
  }
  return acc;
}

const Lattice& RingSystem::of(Ring r) const {
  switch (r) {
    case Ring::B: return burnside;
    case Ring::T: return trivial_source;
    case Ring::RK: return character;
    case Ring::RF: return brauer;
  }
  throw std::invalid_argument("bad ring");
}

RingSystem make_ring_system(const CtxPtr& ctx) {
  RingSystem sys{ctx, burnside_lattice(ctx), trivial_source_lattice(ctx),
                 character_lattice(ctx), brauer_character_lattice(ctx)};
  return sys;
}

RingElement connect(ConnectMap m, const RingSystem& sys, const RingElement& x) {
  switch (m) {
    case ConnectMap::Linearize:
      return element_from(sys.trivial_source, marks_to_species(x.ghost));
    case ConnectMap::BrauerChar:
      return element_from(sys.brauer, species_to_brauer(x.ghost));
    case ConnectMap::OrdinaryChar:
      return element_from(sys.character, species_to_character(x.ghost));
    case ConnectMap::Decompose:
      return element_from(sys.brauer, character_to_brauer(x.ghost));
  }
  throw std::invalid_argument("bad connecting map");
}

}  // namespace repring
