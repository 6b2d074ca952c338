#include "repring/ghost.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace repring {

const char* ring_tag(Ring r) {
  switch (r) {
    case Ring::B: return "B";
    case Ring::T: return "T";
    case Ring::RK: return "RK";
    case Ring::RF: return "RF";
  }
  return "?";
}

Ring parse_ring_tag(const std::string& s) {
  if (s == "B") return Ring::B;
  if (s == "T") return Ring::T;
  if (s == "RK") return Ring::RK;
  if (s == "RF") return Ring::RF;
  throw std::invalid_argument("unknown ring tag: " + s);
}

int GhostContext::index_count(Ring r) const {
  switch (r) {
    case Ring::B: return static_cast<int>(subgroups.all.size());
    case Ring::T: return static_cast<int>(pairs.pairs.size());
    case Ring::RK: return group->order();
    case Ring::RF: return static_cast<int>(p_regular.size());
  }
  return 0;
}

int GhostContext::value_order(Ring r) const {
  switch (r) {
    case Ring::B: return 1;
    case Ring::T: return h;
    case Ring::RK: return e;
    case Ring::RF: return h;
  }
  return 1;
}

int GhostContext::subgroup_index(const std::vector<int>& elems) const {
  auto idx = subgroups.index_of(elems);
  if (!idx) throw MathCheckError("subgroup missing from enumeration");
  return *idx;
}

int GhostContext::canonical_pair_rep(int subgroup_idx, int t) const {
  const auto& core = pair_core[static_cast<std::size_t>(subgroup_idx)];
  if (core.empty()) throw MathCheckError("pair reference into a non-hypo-elementary subgroup");
  int best = -1;
  for (int o : core) {
    int y = group->mult(t, o);
    if (group->element_order(y) % p != 0 && (best < 0 || y < best)) best = y;
  }
  if (best < 0) throw MathCheckError("coset has no p-regular element");
  return best;
}

int GhostContext::pair_position(int subgroup_idx, int t) const {
  int rep = canonical_pair_rep(subgroup_idx, t);
  auto it = pair_lookup_.find(static_cast<long long>(subgroup_idx) * group->order() + rep);
  if (it == pair_lookup_.end())
    throw MathCheckError("coset does not generate the hypo-elementary quotient");
  return it->second;
}

CtxPtr make_context(GroupPtr g, int p, int e) {
  if (e == 0) e = g->exponent();
  if (e % g->exponent() != 0)
    throw std::invalid_argument("cyclotomic order must be divisible by the group exponent");
  auto ctx = std::make_shared<GhostContext>();
  ctx->group = g;
  ctx->p = p;
  ctx->e = e;
  int h = e;
  while (h % p == 0) h /= p;
  ctx->h = h;
  ctx->subgroups = all_subgroups(g);
  ctx->pairs = hypo_pairs(g, p, ctx->subgroups);
  ctx->pair_core.assign(ctx->subgroups.all.size(), {});
  ctx->pair_quotient_order.assign(ctx->subgroups.all.size(), 0);
  for (const auto& pr : ctx->pairs.pairs) {
    if (!ctx->pair_core[pr.subgroup].empty()) continue;
    Subgroup core = p_core(ctx->subgroups.all[pr.subgroup], p);
    ctx->pair_core[pr.subgroup] = core.elems;
    ctx->pair_quotient_order[pr.subgroup] =
        ctx->subgroups.all[pr.subgroup].order() / core.order();
  }
  for (std::size_t k = 0; k < ctx->pairs.pairs.size(); ++k) {
    const auto& pr = ctx->pairs.pairs[k];
    ctx->pair_lookup_[static_cast<long long>(pr.subgroup) * g->order() + pr.rep] =
        static_cast<int>(k);
  }
  ctx->p_regular = p_regular_elements(g, p);
  ctx->p_regular_pos.assign(g->order(), -1);
  for (std::size_t i = 0; i < ctx->p_regular.size(); ++i)
    ctx->p_regular_pos[ctx->p_regular[i]] = static_cast<int>(i);
  ctx->cyclic_of.assign(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) {
    std::vector<int> pow{0};
    int y = x;
    while (y != 0) {
      pow.push_back(y);
      y = g->mult(y, x);
    }
    std::sort(pow.begin(), pow.end());
    ctx->cyclic_of[x] = ctx->subgroup_index(pow);
  }
  return ctx;
}

GhostVector::GhostVector(Ring tag, CtxPtr ctx, std::vector<CycInt> values)
    : tag_(tag), ctx_(std::move(ctx)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != ctx_->index_count(tag_))
    throw std::invalid_argument("ghost vector length mismatch");
  const int vo = ctx_->value_order(tag_);
  for (const auto& v : values_)
    if (v.order() != vo) throw std::invalid_argument("ghost value lives in the wrong ring");
}

GhostVector GhostVector::zero(Ring tag, const CtxPtr& ctx) {
  return GhostVector(tag, ctx,
                     std::vector<CycInt>(ctx->index_count(tag),
                                         CycInt::zero(ctx->value_order(tag))));
}

GhostVector GhostVector::one(Ring tag, const CtxPtr& ctx) {
  return GhostVector(tag, ctx,
                     std::vector<CycInt>(ctx->index_count(tag),
                                         CycInt::one(ctx->value_order(tag))));
}

namespace {

void check_compatible(const GhostVector& a, const GhostVector& b) {
  if (a.tag() != b.tag() || a.ctx().get() != b.ctx().get())
    throw std::invalid_argument("ghost vectors from different rings");
}

}  // namespace

GhostVector operator+(const GhostVector& a, const GhostVector& b) {
  check_compatible(a, b);
  std::vector<CycInt> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(a.values()[i] + b.values()[i]);
  return GhostVector(a.tag(), a.ctx(), std::move(out));
}

GhostVector operator-(const GhostVector& a, const GhostVector& b) {
  check_compatible(a, b);
  std::vector<CycInt> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(a.values()[i] - b.values()[i]);
  return GhostVector(a.tag(), a.ctx(), std::move(out));
}

GhostVector operator*(const GhostVector& a, const GhostVector& b) {
  check_compatible(a, b);
  std::vector<CycInt> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(a.values()[i] * b.values()[i]);
  return GhostVector(a.tag(), a.ctx(), std::move(out));
}

GhostVector GhostVector::operator-() const {
  std::vector<CycInt> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(-v);
  return GhostVector(tag_, ctx_, std::move(out));
}

bool operator==(const GhostVector& a, const GhostVector& b) {
  return a.tag_ == b.tag_ && a.ctx_.get() == b.ctx_.get() && a.values_ == b.values_;
}

GhostVector scalar_mul(const Int& n, const GhostVector& v) {
  std::vector<CycInt> out;
  out.reserve(v.values().size());
  for (const auto& x : v.values()) out.push_back(n * x);
  return GhostVector(v.tag(), v.ctx(), std::move(out));
}

GhostVector GhostVector::dual() const {
  if (tag_ == Ring::B) return *this;
  const int vo = ctx_->value_order(tag_);
  std::vector<CycInt> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.galois(vo - 1 == 0 ? 0 : vo - 1));
  return GhostVector(tag_, ctx_, std::move(out));
}

GhostVector marks_to_species(const GhostVector& b) {
  if (b.tag() != Ring::B) throw std::invalid_argument("expected a mark vector");
  const CtxPtr& ctx = b.ctx();
  std::vector<CycInt> out;
  out.reserve(ctx->pairs.pairs.size());
  for (const auto& pr : ctx->pairs.pairs) {
    auto n = b.at(pr.subgroup).as_integer();
    if (!n) throw MathCheckError("mark vector with a non-integer entry");
    out.push_back(CycInt::integer(ctx->h, *n));
  }
  return GhostVector(Ring::T, ctx, std::move(out));
}

GhostVector species_to_brauer(const GhostVector& t) {
  if (t.tag() != Ring::T) throw std::invalid_argument("expected a species vector");
  const CtxPtr& ctx = t.ctx();
  std::vector<CycInt> out;
  out.reserve(ctx->p_regular.size());
  for (int y : ctx->p_regular) out.push_back(t.at(ctx->pair_position(ctx->cyclic_of[y], y)));
  return GhostVector(Ring::RF, ctx, std::move(out));
}

GhostVector species_to_character(const GhostVector& t) {
  if (t.tag() != Ring::T) throw std::invalid_argument("expected a species vector");
  const CtxPtr& ctx = t.ctx();
  const GroupPtr& g = ctx->group;
  std::vector<CycInt> out;
  out.reserve(g->order());
  for (int x = 0; x < g->order(); ++x) {
    auto [xp, xpp] = p_parts(g, x, ctx->p);
    (void)xp;
    int pos = ctx->pair_position(ctx->cyclic_of[x], xpp);
    out.push_back(t.at(pos).embedded(ctx->e));
  }
  return GhostVector(Ring::RK, ctx, std::move(out));
}

GhostVector character_to_brauer(const GhostVector& rk) {
  if (rk.tag() != Ring::RK) throw std::invalid_argument("expected a character vector");
  const CtxPtr& ctx = rk.ctx();
  std::vector<CycInt> out;
  out.reserve(ctx->p_regular.size());
  for (int y : ctx->p_regular) {
    auto small = rk.at(y).descended(ctx->h);
    if (!small)
      throw MathCheckError("character value at a p-regular element outside the p-regular subring");
    out.push_back(std::move(*small));
  }
  return GhostVector(Ring::RF, ctx, std::move(out));
}

namespace {

// index action of the group element g on the tag's index family
int group_index_action(Ring tag, const GhostContext& ctx, int idx, int g) {
  const GroupPtr& grp = ctx.group;
  switch (tag) {
    case Ring::B: {
      auto conj = ctx.subgroups.all[idx].conjugated(g);
      return ctx.subgroup_index(conj.elems);
    }
    case Ring::T: {
      const auto& pr = ctx.pairs.pairs[idx];
      auto conj = ctx.subgroups.all[pr.subgroup].conjugated(g);
      int sub = ctx.subgroup_index(conj.elems);
      return ctx.pair_position(sub, grp->conjugate(pr.rep, g));
    }
    case Ring::RK:
      return grp->conjugate(idx, g);
    case Ring::RF:
      return ctx.p_regular_pos[grp->conjugate(ctx.p_regular[idx], g)];
  }
  return idx;
}

// index action of the Galois element i: the invariance condition reads
// w[idx] == galois_i( w[galois_index(idx, i)] ).
int galois_index_action(Ring tag, const GhostContext& ctx, int idx, long long istar) {
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

std::vector<long long> galois_units(int m) {
  std::vector<long long> units;
  for (int i = 1; i < m; ++i)
    if (std::gcd(i, m) == 1) units.push_back(i);
  if (m == 1) units.push_back(0);  // identity automorphism of Z
  return units;
}

}  // namespace

InvarianceReport validate_invariance(const GhostVector& v) {
  const GhostContext& ctx = *v.ctx();
  Ring tag = v.tag();
  const int n = v.size();
  const int vo = ctx.value_order(tag);
  if (tag == Ring::B) {
    for (int i = 0; i < n; ++i)
      if (!v.at(i).as_integer())
        return {false, "non-integer mark at subgroup index " + std::to_string(i)};
  }
  for (int g = 0; g < ctx.group->order(); ++g)
    for (int i = 0; i < n; ++i) {
      int j = group_index_action(tag, ctx, i, g);
      if (!(v.at(i) == v.at(j))) {
        std::ostringstream os;
        os << "conjugation by element " << g << " moves index " << i << " to " << j
           << " with different values";
        return {false, os.str()};
      }
    }
  if (vo > 1) {
    for (long long u : galois_units(vo)) {
      long long ustar = mod_inverse(u, vo);
      for (int i = 0; i < n; ++i) {
        int j = galois_index_action(tag, ctx, i, ustar);
        if (!(v.at(i) == v.at(j).galois(u))) {
          std::ostringstream os;
          os << "galois " << u << " violated at index " << i;
          return {false, os.str()};
        }
      }
    }
  }
  return {};
}

IntVec flatten(const GhostVector& v) {
  const int phi = euler_phi(v.ctx()->value_order(v.tag()));
  IntVec out;
  out.reserve(static_cast<std::size_t>(v.size()) * phi);
  for (const auto& x : v.values())
    for (const auto& c : x.coeffs()) out.push_back(c);
  return out;
}

GhostVector unflatten(Ring tag, const CtxPtr& ctx, const IntVec& coords) {
  const int vo = ctx->value_order(tag);
  const int phi = euler_phi(vo);
  const int n = ctx->index_count(tag);
  if (coords.size() != static_cast<std::size_t>(n) * phi)
    throw std::invalid_argument("flattened length mismatch");
  std::vector<CycInt> vals;
  vals.reserve(n);
  for (int i = 0; i < n; ++i) {
    IntVec c(coords.begin() + static_cast<long>(i) * phi,
             coords.begin() + static_cast<long>(i + 1) * phi);
    vals.push_back(CycInt::from_coeffs(vo, std::move(c)));
  }
  return GhostVector(tag, ctx, std::move(vals));
}

const IntMat& GhostContext::invariant_basis(Ring r) const {
  std::lock_guard lock(cache_mutex_);
  auto it = ambient_.find(r);
  if (it != ambient_.end()) return it->second;
  const int n = index_count(r);
  const int vo = value_order(r);
  const int phi = euler_phi(vo);
  const int cols = n * phi;
  IntMat constraints;
  // conjugation: value at g-image equals value at index
  for (int g = 1; g < group->order(); ++g)
    for (int i = 0; i < n; ++i) {
      int j = group_index_action(r, *this, i, g);
      if (j == i) continue;
      for (int c = 0; c < phi; ++c) {
        IntVec row(cols, 0);
        row[static_cast<std::size_t>(i) * phi + c] += 1;
        row[static_cast<std::size_t>(j) * phi + c] -= 1;
        constraints.push_back(std::move(row));
      }
    }
  // galois: w[i] == sigma_u( w[j] ), j the u*-image of i
  if (vo > 1) {
    for (long long u : galois_units(vo)) {
      if (u == 1) continue;
      long long ustar = mod_inverse(u, vo);
      const IntMat& m = galois_matrix(vo, u);
      for (int i = 0; i < n; ++i) {
        int j = galois_index_action(r, *this, i, ustar);
        for (int rr = 0; rr < phi; ++rr) {
          IntVec row(cols, 0);
          row[static_cast<std::size_t>(i) * phi + rr] += 1;
          for (int cc = 0; cc < phi; ++cc)
            row[static_cast<std::size_t>(j) * phi + cc] -= m[rr][cc];
          constraints.push_back(std::move(row));
        }
      }
    }
  }
  IntMat basis;
  if (constraints.empty()) {
    basis = identity_mat(static_cast<std::size_t>(cols));
  } else {
    basis = right_kernel_basis(constraints);
  }
  if (static_cast<int>(basis.size()) != expected_rank(r))
    throw MathCheckError(std::string("invariant lattice rank mismatch for ring ") + ring_tag(r));
  // canonical form so downstream coordinates are reproducible
  RowHnf hnf = row_hnf(std::move(basis));
  IntMat rows(hnf.h.begin(), hnf.h.begin() + static_cast<long>(hnf.rank));
  return ambient_.emplace(r, std::move(rows)).first->second;
}

int GhostContext::expected_rank(Ring r) const {
  switch (r) {
    case Ring::B:
      return static_cast<int>(subgroups.classes.size());
    case Ring::T:
      return static_cast<int>(pairs.orbits.size());
    case Ring::RK:
      return static_cast<int>(group->conjugacy_classes().size());
    case Ring::RF: {
      int n = 0;
      for (const auto& cls : group->conjugacy_classes())
        if (group->element_order(cls[0]) % p != 0) ++n;
      return n;
    }
  }
  return 0;
}

GhostVector random_invariant(Ring tag, const CtxPtr& ctx, std::mt19937_64& rng, int bound) {
  const IntMat& basis = ctx->invariant_basis(tag);
  IntVec coeffs(basis.size());
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (auto& c : coeffs) c = dist(rng);
  const int cols = ctx->index_count(tag) * euler_phi(ctx->value_order(tag));
  IntVec flat(cols, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0)
      for (int j = 0; j < cols; ++j) flat[j] += coeffs[i] * basis[i][j];
  return unflatten(tag, ctx, flat);
}

}  // namespace repring
