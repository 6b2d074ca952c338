#include "repring/teninduct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace repring {

void check_tensor_contexts(const Biset& u, const CtxPtr& gctx, const CtxPtr& hctx) {
  if (!u.left->same_table(*gctx->group) || !u.right->same_table(*hctx->group))
    throw std::invalid_argument("biset does not match the contexts");
  if (gctx->p != hctx->p || gctx->e != hctx->e)
    throw std::invalid_argument("contexts disagree on prime or cyclotomic order");
}

TransportResult pair_transport(const Biset& u, int point, const CtxPtr& gctx, int pair_index,
                               const CtxPtr& hctx) {
  const GroupPtr& g = gctx->group;
  const GroupPtr& hg = hctx->group;
  const HypoPair& pr = gctx->pairs.pairs[pair_index];
  const Subgroup& e = gctx->subgroups.all[pr.subgroup];
  const std::vector<int>& core = gctx->pair_core[pr.subgroup];

  std::vector<int> phi = point_transport(u, point);

  std::vector<int> inter;  // E cap {g : g u in u H}
  for (int a : e.elems)
    if (phi[a] >= 0) inter.push_back(a);
  std::set<int> prod;  // O_p(E) * (E cap ...), a subgroup since the core is normal
  for (int o : core)
    for (int x : inter) prod.insert(g->mult(o, x));
  const int e_u = e.order() / static_cast<int>(prod.size());
  int core_cap = 0;
  for (int o : core)
    if (phi[o] >= 0) ++core_cap;
  const int f_u = static_cast<int>(core.size()) / core_cap;
  if (f_u != static_cast<int>(prod.size()) / static_cast<int>(inter.size()))
    throw MathCheckError("index identity for the transported coset failed");

  // write rep^{e_u} = a * x with a in the core and x in the intersection
  const int se = g->power(pr.rep, e_u);
  int x = -1;
  for (int a : core) {
    int cand = g->mult(g->inverse(a), se);
    if (phi[cand] >= 0) {
      x = cand;
      break;
    }
  }
  if (x < 0) throw MathCheckError("transported power is outside core * intersection");
  const int hh = phi[x];

  std::set<int> image;
  for (int a : inter) image.insert(phi[a]);
  std::vector<int> image_elems(image.begin(), image.end());
  TransportResult out;
  out.subgroup = hctx->subgroup_index(image_elems);
  out.e_u = e_u;
  out.f_u = f_u;
  int cu = hg->power(hh, f_u);
  out.rep = hctx->canonical_pair_rep(out.subgroup, cu);
  out.pair_position = hctx->pair_position(out.subgroup, cu);

  // the image of the core must be the core of the image
  std::set<int> core_image;
  for (int o : core)
    if (phi[o] >= 0) core_image.insert(phi[o]);
  const auto& expected_core = hctx->pair_core[out.subgroup];
  if (!std::equal(core_image.begin(), core_image.end(), expected_core.begin(),
                  expected_core.end()))
    throw MathCheckError("transported core mismatch");
  return out;
}

namespace {

CtxPtr right_context_of(const GhostVector& a) { return a.ctx(); }

}  // namespace

GhostVector tensor_induce(const Biset& u, const GhostVector& a, const CtxPtr& gctx) {
  const CtxPtr hctx = right_context_of(a);
  check_tensor_contexts(u, gctx, hctx);
  const GroupPtr& g = gctx->group;
  const Ring tag = a.tag();
  const int vo = gctx->value_order(tag);

  switch (tag) {
    case Ring::B: {
      std::vector<CycInt> vals;
      vals.reserve(gctx->subgroups.all.size());
      for (const auto& s : gctx->subgroups.all) {
        Int prod = 1;
        for (int pt : double_cosets(s, u, Subgroup::whole(hctx->group))) {
          StabilizerTransport st = stabilizer_transport(u, pt, s);
          auto n = a.at(hctx->subgroup_index(st.image)).as_integer();
          if (!n) throw MathCheckError("mark vector with non-integer entry");
          prod *= *n;
        }
        vals.push_back(CycInt::integer(1, prod));
      }
      return GhostVector(Ring::B, gctx, std::move(vals));
    }
    case Ring::T: {
      std::map<int, std::vector<int>> reps_cache;  // subgroup idx -> double coset reps
      std::vector<CycInt> vals;
      vals.reserve(gctx->pairs.pairs.size());
      for (std::size_t k = 0; k < gctx->pairs.pairs.size(); ++k) {
        const HypoPair& pr = gctx->pairs.pairs[k];
        auto it = reps_cache.find(pr.subgroup);
        if (it == reps_cache.end())
          it = reps_cache
                   .emplace(pr.subgroup,
                            double_cosets(gctx->subgroups.all[pr.subgroup], u,
                                          Subgroup::whole(hctx->group)))
                   .first;
        CycInt prod = CycInt::one(vo);
        for (int pt : it->second) {
          TransportResult tr = pair_transport(u, pt, gctx, static_cast<int>(k), hctx);
          prod *= a.at(tr.pair_position);
        }
        vals.push_back(std::move(prod));
      }
      return GhostVector(Ring::T, gctx, std::move(vals));
    }
    case Ring::RK:
    case Ring::RF: {
      const bool brauer = tag == Ring::RF;
      const int count = brauer ? static_cast<int>(gctx->p_regular.size()) : g->order();
      std::vector<CycInt> vals;
      vals.reserve(count);
      for (int i = 0; i < count; ++i) {
        const int x = brauer ? gctx->p_regular[i] : i;
        const Subgroup& cyc = gctx->subgroups.all[gctx->cyclic_of[x]];
        CycInt prod = CycInt::one(vo);
        for (int pt : double_cosets(cyc, u, Subgroup::whole(hctx->group))) {
          std::vector<int> phi = point_transport(u, pt);
          int n_u = 0, count_in = 0;
          for (int a_el : cyc.elems)
            if (phi[a_el] >= 0) ++count_in;
          n_u = cyc.order() / count_in;
          int target = phi[g->power(x, n_u)];
          if (target < 0) throw MathCheckError("cyclic power fell outside the transport domain");
          prod *= brauer ? a.at(hctx->p_regular_pos[target]) : a.at(target);
        }
        vals.push_back(std::move(prod));
      }
      return GhostVector(tag, gctx, std::move(vals));
    }
  }
  throw std::invalid_argument("bad ring tag");
}

GhostVector monomial_tensor_induce(const Biset& u, const Subgroup& s, const LinearCharacter& psi,
                                   const CtxPtr& gctx, const CtxPtr& hctx) {
  check_tensor_contexts(u, gctx, hctx);
  const GroupPtr& hg = hctx->group;
  if (hctx->h % psi.value_order != 0)
    throw std::invalid_argument("character order must divide the p-regular root order");
  const EmbeddedGroup& emb = subgroup_as_group(s);
  if (psi.group.get() != emb.group.get())
    throw std::invalid_argument("character must live on the subgroup");

  // cosets of s inside the right group, smallest representative first
  std::vector<int> reps_x;
  {
    std::vector<int> rep_of(hg->order(), -1);
    for (int x = 0; x < hg->order(); ++x) {
      int rep = x;
      for (int o : s.elems) rep = std::min(rep, hg->mult(x, o));
      rep_of[x] = rep;
    }
    for (int x = 0; x < hg->order(); ++x)
      if (rep_of[x] == x) reps_x.push_back(x);
    std::sort(reps_x.begin(), reps_x.end());
  }
  GSet cosets = GSet::cosets(s);
  const int xs = cosets.size;

  // value of the conjugated character on the stabilizer of coset index ci
  auto psi_at = [&](int ci, int t) {
    int conj = hg->mult(hg->mult(hg->inverse(reps_x[ci]), t), reps_x[ci]);
    int abs_c = emb.from_parent[conj];
    if (abs_c < 0) throw MathCheckError("cocycle left the line stabilizer");
    return psi.value(abs_c).embedded(hctx->h);
  };

  std::vector<int> reps_u = orbit_transversal(u);
  const int n = static_cast<int>(reps_u.size());
  long long carrier = 1;
  for (int i = 0; i < n; ++i) carrier *= xs;
  if (carrier > 2'000'000) throw std::invalid_argument("induced monomial set too large");

  std::vector<CycInt> vals;
  vals.reserve(gctx->pairs.pairs.size());
  std::vector<int> tup(n), img(n);
  for (const auto& pr : gctx->pairs.pairs) {
    const Subgroup& e = gctx->subgroups.all[pr.subgroup];
    std::vector<int> egens = e.small_generators();
    ThetaData ds = theta_data(u, reps_u, pr.rep);
    // orbit representatives of <pi> on positions, with orbit lengths
    std::vector<int> orbit_rep;
    std::vector<int> orbit_len(n, 0);
    {
      std::vector<bool> seen(n, false);
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        orbit_rep.push_back(i);
        int len = 0, j = i;
        do {
          seen[j] = true;
          ++len;
          j = ds.pi[j];
        } while (j != i);
        orbit_len[i] = len;
      }
    }
    // cocycle element per orbit representative
    std::vector<int> cocycle(orbit_rep.size());
    for (std::size_t oi = 0; oi < orbit_rep.size(); ++oi) {
      int i = orbit_rep[oi];
      int w = ds.h[i];
      int j = ds.pi[i];
      for (int step = 1; step < orbit_len[i]; ++step) {
        w = hg->mult(ds.h[j], w);
        j = ds.pi[j];
      }
      cocycle[oi] = w;
    }
    // precompute theta data of the subgroup generators
    std::vector<ThetaData> dgen;
    dgen.reserve(egens.size());
    for (int a : egens) dgen.push_back(theta_data(u, reps_u, a));

    CycInt total = CycInt::zero(hctx->h);
    for (long long t = 0; t < carrier; ++t) {
      long long rest = t;
      for (int i = 0; i < n; ++i) {
        tup[i] = static_cast<int>(rest % xs);
        rest /= xs;
      }
      bool fixed = true;
      for (const auto& d : dgen) {
        for (int i = 0; i < n; ++i) img[d.pi[i]] = cosets.table[d.h[i]][tup[i]];
        for (int i = 0; i < n && fixed; ++i)
          if (img[i] != tup[i]) fixed = false;
        if (!fixed) break;
      }
      if (!fixed) continue;
      CycInt term = CycInt::one(hctx->h);
      for (std::size_t oi = 0; oi < orbit_rep.size(); ++oi)
        term *= psi_at(tup[orbit_rep[oi]], cocycle[oi]);
      total += term;
    }
    vals.push_back(std::move(total));
  }
  return GhostVector(Ring::T, gctx, std::move(vals));
}

RingElement apply_tensor(const Biset& u, const RingSystem& hsys, const RingSystem& gsys,
                         Ring tag, const RingElement& x) {
  if (x.lattice != &hsys.of(tag)) throw std::invalid_argument("element from a different lattice");
  GhostVector image = tensor_induce(u, x.ghost, gsys.ctx);
  return element_from(gsys.of(tag), image);
}

}  // namespace repring
