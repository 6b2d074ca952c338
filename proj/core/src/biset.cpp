#include "repring/biset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace repring {

int Biset::orbit_count() const {
  std::vector<bool> seen(size, false);
  int n = 0;
  for (int u = 0; u < size; ++u) {
    if (seen[u]) continue;
    ++n;
    for (int h = 0; h < right->order(); ++h) seen[ract[u][h]] = true;
  }
  return n;
}

void Biset::validate() const {
  for (int u = 0; u < size; ++u) {
    if (lact[0][u] != u || ract[u][0] != u)
      throw std::invalid_argument("identity must act trivially on a biset");
    std::vector<bool> hit(size, false);
    for (int h = 0; h < right->order(); ++h) {
      int v = ract[u][h];
      if (hit[v]) throw std::invalid_argument("right action is not free");
      hit[v] = true;
    }
  }
  for (int g = 0; g < left->order(); ++g)
    for (int u = 0; u < size; ++u)
      for (int h = 0; h < right->order(); ++h)
        if (lact[g][ract[u][h]] != ract[lact[g][u]][h])
          throw std::invalid_argument("left and right actions do not commute");
}

Biset induction_biset(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  const EmbeddedGroup& emb = subgroup_as_group(h);
  Biset u;
  u.left = g;
  u.right = emb.group;
  u.size = g->order();
  u.lact.assign(g->order(), std::vector<int>(u.size, 0));
  u.ract.assign(u.size, std::vector<int>(emb.group->order(), 0));
  for (int a = 0; a < g->order(); ++a)
    for (int x = 0; x < u.size; ++x) u.lact[a][x] = g->mult(a, x);
  for (int x = 0; x < u.size; ++x)
    for (int b = 0; b < emb.group->order(); ++b) u.ract[x][b] = g->mult(x, emb.to_parent[b]);
  return u;
}

Biset restriction_biset(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  const EmbeddedGroup& emb = subgroup_as_group(h);
  Biset u;
  u.left = emb.group;
  u.right = g;
  u.size = g->order();
  u.lact.assign(emb.group->order(), std::vector<int>(u.size, 0));
  u.ract.assign(u.size, std::vector<int>(g->order(), 0));
  for (int a = 0; a < emb.group->order(); ++a)
    for (int x = 0; x < u.size; ++x) u.lact[a][x] = g->mult(emb.to_parent[a], x);
  for (int x = 0; x < u.size; ++x)
    for (int b = 0; b < g->order(); ++b) u.ract[x][b] = g->mult(x, b);
  return u;
}

Biset inflation_biset(const QuotientGroup& q) {
  const GroupPtr& g = q.parent;
  const GroupPtr& qg = q.group;
  Biset u;
  u.left = g;
  u.right = qg;
  u.size = qg->order();
  u.lact.assign(g->order(), std::vector<int>(u.size, 0));
  u.ract.assign(u.size, std::vector<int>(qg->order(), 0));
  for (int a = 0; a < g->order(); ++a)
    for (int x = 0; x < u.size; ++x) u.lact[a][x] = qg->mult(q.projection[a], x);
  for (int x = 0; x < u.size; ++x)
    for (int b = 0; b < qg->order(); ++b) u.ract[x][b] = qg->mult(x, b);
  return u;
}

Biset iso_biset(const GroupPtr& g, const GroupPtr& h, const std::vector<int>& image_of_h) {
  if (static_cast<int>(image_of_h.size()) != h->order())
    throw std::invalid_argument("image table size mismatch");
  for (int a = 0; a < h->order(); ++a)
    for (int b = 0; b < h->order(); ++b)
      if (image_of_h[h->mult(a, b)] != g->mult(image_of_h[a], image_of_h[b]))
        throw std::invalid_argument("image table is not a homomorphism");
  std::vector<bool> hit(g->order(), false);
  for (int v : image_of_h) {
    if (hit[v]) throw std::invalid_argument("image table is not injective");
    hit[v] = true;
  }
  if (g->order() != h->order()) throw std::invalid_argument("not an isomorphism");
  Biset u;
  u.left = g;
  u.right = h;
  u.size = g->order();
  u.lact.assign(g->order(), std::vector<int>(u.size, 0));
  u.ract.assign(u.size, std::vector<int>(h->order(), 0));
  for (int a = 0; a < g->order(); ++a)
    for (int x = 0; x < u.size; ++x) u.lact[a][x] = g->mult(a, x);
  for (int x = 0; x < u.size; ++x)
    for (int b = 0; b < h->order(); ++b) u.ract[x][b] = g->mult(x, image_of_h[b]);
  return u;
}

Biset identity_biset(const GroupPtr& g) {
  std::vector<int> id(g->order());
  std::iota(id.begin(), id.end(), 0);
  return iso_biset(g, g, id);
}

Biset compose_bisets(const Biset& u, const Biset& v) {
  if (u.right.get() != v.left.get() && !u.right->same_table(*v.left))
    throw std::invalid_argument("middle groups do not match");
  const GroupPtr& h = u.right;
  const int vs = v.size;
  auto pack = [vs](int a, int b) { return a * vs + b; };
  // orbits of U x V under (u,v) ~ (u h, h^-1 v)
  std::vector<int> orbit(u.size * v.size, -1);
  std::vector<int> reps;
  for (int a = 0; a < u.size; ++a)
    for (int b = 0; b < v.size; ++b) {
      if (orbit[pack(a, b)] >= 0) continue;
      int id = static_cast<int>(reps.size());
      int rep = pack(a, b);
      std::vector<int> members;
      for (int x = 0; x < h->order(); ++x) {
        int p = pack(u.ract[a][x], v.lact[h->inverse(x)][b]);
        members.push_back(p);
        rep = std::min(rep, p);
      }
      for (int p : members) orbit[p] = id;
      reps.push_back(rep);
    }
  // canonical order: sort orbits by minimal packed representative
  std::vector<int> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return reps[i] < reps[j]; });
  std::vector<int> rank(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<int> rep_sorted(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) rep_sorted[rank[i]] = reps[i];

  if (reps.size() * h->order() != static_cast<std::size_t>(u.size) * v.size)
    throw MathCheckError("composition orbits are not free");

  Biset w;
  w.left = u.left;
  w.right = v.right;
  w.size = static_cast<int>(reps.size());
  w.lact.assign(u.left->order(), std::vector<int>(w.size, 0));
  w.ract.assign(w.size, std::vector<int>(v.right->order(), 0));
  for (int i = 0; i < w.size; ++i) {
    int a = rep_sorted[i] / vs, b = rep_sorted[i] % vs;
    for (int g = 0; g < u.left->order(); ++g) w.lact[g][i] = rank[orbit[pack(u.lact[g][a], b)]];
    for (int k = 0; k < v.right->order(); ++k) w.ract[i][k] = rank[orbit[pack(a, v.ract[b][k])]];
  }
  return w;
}

Biset empty_biset(const GroupPtr& g, const GroupPtr& h) {
  Biset w;
  w.left = g;
  w.right = h;
  w.size = 0;
  w.lact.assign(g->order(), {});
  w.ract.clear();
  return w;
}

Biset disjoint_union_bisets(const Biset& u, const Biset& v) {
  if ((u.left.get() != v.left.get() && !u.left->same_table(*v.left)) ||
      (u.right.get() != v.right.get() && !u.right->same_table(*v.right)))
    throw std::invalid_argument("disjoint union needs matching group pairs");
  Biset w;
  w.left = u.left;
  w.right = u.right;
  w.size = u.size + v.size;
  w.lact.assign(w.left->order(), std::vector<int>(w.size, 0));
  w.ract.assign(w.size, std::vector<int>(w.right->order(), 0));
  for (int g = 0; g < w.left->order(); ++g) {
    for (int x = 0; x < u.size; ++x) w.lact[g][x] = u.lact[g][x];
    for (int x = 0; x < v.size; ++x) w.lact[g][u.size + x] = u.size + v.lact[g][x];
  }
  for (int x = 0; x < u.size; ++x) w.ract[x] = u.ract[x];
  for (int x = 0; x < v.size; ++x) {
    w.ract[u.size + x].resize(w.right->order());
    for (int h = 0; h < w.right->order(); ++h) w.ract[u.size + x][h] = u.size + v.ract[x][h];
  }
  return w;
}

std::vector<int> double_cosets(const Subgroup& s, const Biset& u, const Subgroup& t) {
  std::vector<bool> seen(u.size, false);
  std::vector<int> reps;
  for (int start = 0; start < u.size; ++start) {
    if (seen[start]) continue;
    reps.push_back(start);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a : s.elems) {
        int y = u.lact[a][x];
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
      for (int b : t.elems) {
        int y = u.ract[x][b];
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
  }
  return reps;
}

std::vector<int> point_transport(const Biset& u, int point) {
  // invert the right-orbit row of `point`
  std::vector<int> h_of_point(u.size, -1);
  for (int h = 0; h < u.right->order(); ++h) h_of_point[u.ract[point][h]] = h;
  std::vector<int> phi(u.left->order(), -1);
  for (int g = 0; g < u.left->order(); ++g) phi[g] = h_of_point[u.lact[g][point]];
  return phi;
}

StabilizerTransport stabilizer_transport(const Biset& u, int point, const Subgroup& s) {
  std::vector<int> phi = point_transport(u, point);
  StabilizerTransport out;
  std::set<int> image;
  for (int a : s.elems)
    if (phi[a] >= 0) {
      out.intersection.push_back(a);
      image.insert(phi[a]);
    }
  out.image.assign(image.begin(), image.end());
  return out;
}

std::vector<int> orbit_transversal(const Biset& u) {
  std::vector<bool> seen(u.size, false);
  std::vector<int> reps;
  for (int x = 0; x < u.size; ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int h = 0; h < u.right->order(); ++h) seen[u.ract[x][h]] = true;
  }
  return reps;
}

ThetaData theta_data(const Biset& u, const std::vector<int>& reps, int g) {
  const int n = static_cast<int>(reps.size());
  // point -> (orbit index, h) using right freeness
  std::vector<std::pair<int, int>> where(u.size, {-1, -1});
  for (int i = 0; i < n; ++i)
    for (int h = 0; h < u.right->order(); ++h) {
      auto& w = where[u.ract[reps[i]][h]];
      if (w.first >= 0) throw std::invalid_argument("representatives are not a transversal");
      w = {i, h};
    }
  for (const auto& w : where)
    if (w.first < 0) throw std::invalid_argument("representatives are not a transversal");
  ThetaData out;
  out.pi.resize(n);
  out.h.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [j, hh] = where[u.lact[g][reps[i]]];
    out.pi[i] = j;
    out.h[i] = hh;
  }
  return out;
}

WreathElement wreath_theta(const Biset& u, const std::vector<int>& reps, int g) {
  ThetaData d = theta_data(u, reps, g);
  const int n = static_cast<int>(reps.size());
  WreathElement w;
  w.perm = d.pi;
  w.base.resize(n);
  std::vector<int> pinv(n);
  for (int i = 0; i < n; ++i) pinv[d.pi[i]] = i;
  for (int j = 0; j < n; ++j) w.base[j] = d.h[pinv[j]];
  return w;
}

WreathElement wreath_mult(const GroupPtr& h, const WreathElement& a, const WreathElement& b) {
  const int n = static_cast<int>(a.base.size());
  WreathElement c;
  c.base.resize(n);
  c.perm.resize(n);
  std::vector<int> ainv(n);
  for (int i = 0; i < n; ++i) ainv[a.perm[i]] = i;
  for (int i = 0; i < n; ++i) {
    c.base[i] = h->mult(a.base[i], b.base[ainv[i]]);
    c.perm[i] = a.perm[b.perm[i]];
  }
  return c;
}

GSet tensor_induce_set(const Biset& u, const GSet& x) {
  if (x.group.get() != u.right.get() && !x.group->same_table(*u.right))
    throw std::invalid_argument("tensor induction needs a right-group set");
  std::vector<int> reps = orbit_transversal(u);
  const int n = static_cast<int>(reps.size());
  long long carrier = 1;
  for (int i = 0; i < n; ++i) {
    carrier *= x.size;
    if (carrier > 2'000'000) throw std::invalid_argument("tensor-induced set too large");
  }
  const GroupPtr& g = u.left;
  GSet out;
  out.group = g;
  out.size = static_cast<int>(carrier);
  out.table.assign(g->order(), std::vector<int>(out.size, 0));
  std::vector<int> tup(n, 0), img(n, 0);
  for (int a = 0; a < g->order(); ++a) {
    ThetaData d = theta_data(u, reps, a);
    for (int t = 0; t < out.size; ++t) {
      int rest = t;
      for (int i = 0; i < n; ++i) {
        tup[i] = rest % x.size;
        rest /= x.size;
      }
      // position pi(i) receives h_i * x_i
      for (int i = 0; i < n; ++i) img[d.pi[i]] = x.table[d.h[i]][tup[i]];
      long long packed = 0;
      for (int i = n - 1; i >= 0; --i) packed = packed * x.size + img[i];
      out.table[a][t] = static_cast<int>(packed);
    }
  }
  return out;
}

std::vector<int> orbit_of_points(const Biset& u) {
  std::vector<int> reps = orbit_transversal(u);
  std::vector<int> orbit(u.size, -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int h = 0; h < u.right->order(); ++h) orbit[u.ract[reps[i]][h]] = static_cast<int>(i);
  return orbit;
}

std::vector<InvariantSubsetOrbit> invariant_subsets(const Biset& u) {
  std::vector<int> orbit = orbit_of_points(u);
  const int n = 1 + *std::max_element(orbit.begin(), orbit.end());
  if (n > 12) throw std::invalid_argument("too many right orbits for subset enumeration");
  const GroupPtr& g = u.left;
  // g permutes right-orbits
  std::vector<std::vector<int>> g_on_orbits(g->order(), std::vector<int>(n, 0));
  std::vector<int> reps = orbit_transversal(u);
  for (int a = 0; a < g->order(); ++a)
    for (int i = 0; i < n; ++i) g_on_orbits[a][i] = orbit[u.lact[a][reps[i]]];
  const unsigned total = 1u << n;
  std::vector<int> seen(total, 0);
  std::vector<InvariantSubsetOrbit> out;
  for (unsigned mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::set<unsigned> masks;
    std::vector<int> stab;
    for (int a = 0; a < g->order(); ++a) {
      unsigned img = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) img |= 1u << g_on_orbits[a][i];
      masks.insert(img);
      if (img == mask) stab.push_back(a);
    }
    InvariantSubsetOrbit o;
    o.masks.assign(masks.begin(), masks.end());
    o.stabilizer = Subgroup{g, stab};
    for (unsigned mm : masks) seen[mm] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

Biset subbiset_from_mask(const Biset& u, unsigned mask, const Subgroup& stab) {
  std::vector<int> orbit = orbit_of_points(u);
  std::vector<int> points;
  for (int x = 0; x < u.size; ++x)
    if (mask & (1u << orbit[x])) points.push_back(x);
  std::vector<int> index(u.size, -1);
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  const EmbeddedGroup& emb = subgroup_as_group(stab);
  Biset w;
  w.left = emb.group;
  w.right = u.right;
  w.size = static_cast<int>(points.size());
  w.lact.assign(emb.group->order(), std::vector<int>(w.size, 0));
  w.ract.assign(w.size, std::vector<int>(u.right->order(), 0));
  for (int a = 0; a < emb.group->order(); ++a)
    for (int i = 0; i < w.size; ++i) {
      int y = u.lact[emb.to_parent[a]][points[i]];
      if (index[y] < 0) throw MathCheckError("stabilizer does not preserve the subset");
      w.lact[a][i] = index[y];
    }
  for (int i = 0; i < w.size; ++i)
    for (int h = 0; h < u.right->order(); ++h) w.ract[i][h] = index[u.ract[points[i]][h]];
  return w;
}

GSet biset_as_product_set(const Biset& u, const GroupPtr& product) {
  // product must be direct_product(left, right)
  const int m = u.right->order();
  if (product->order() != u.left->order() * m)
    throw std::invalid_argument("product group size mismatch");
  GSet x;
  x.group = product;
  x.size = u.size;
  x.table.assign(product->order(), std::vector<int>(u.size, 0));
  for (int pr = 0; pr < product->order(); ++pr) {
    int g = pr / m, h = pr % m;
    int hinv = u.right->inverse(h);
    for (int p = 0; p < u.size; ++p) x.table[pr][p] = u.ract[u.lact[g][p]][hinv];
  }
  return x;
}

}  // namespace repring
