#include "repring/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace repring {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(i) = a(b(i))
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation identity_perm(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int prime_power_part(int n, int p) {
  int a = 1;
  while (n % p == 0) {
    n /= p;
    a *= p;
  }
  return a;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation result = identity_perm(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  std::vector<std::vector<int>> cycles;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw std::invalid_argument("point out of range: " + text);
      cyc.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle: " + text);
    ++i;  // ')'
    skip_ws();
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  // Cycles compose right to left, as functions.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c = identity_perm(degree);
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    result = compose(c, result);
  }
  return result;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    std::size_t j = i;
    bool first = true;
    do {
      seen[j] = true;
      os << (first ? "" : " ") << (j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    } while (j != i);
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

void Group::finish(bool check_assoc) {
  order_ = static_cast<int>(mult_.size());
  // identity must be index 0
  for (int a = 0; a < order_; ++a)
    if (mult_[0][a] != a || mult_[a][0] != a)
      throw std::invalid_argument("element 0 is not an identity");
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mult_[a][b] == 0) {
        if (mult_[b][a] != 0) throw std::invalid_argument("one-sided inverse");
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw std::invalid_argument("missing inverse");
  }
  if (check_assoc) {
    if (order_ <= 64) {
      for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
          for (int c = 0; c < order_; ++c)
            if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
              throw std::invalid_argument("multiplication table is not associative");
    } else {
      std::mt19937_64 rng(12345);
      for (int t = 0; t < 20000; ++t) {
        int a = static_cast<int>(rng() % order_);
        int b = static_cast<int>(rng() % order_);
        int c = static_cast<int>(rng() % order_);
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw std::invalid_argument("multiplication table is not associative");
      }
    }
  }
  elem_order_.assign(order_, 1);
  exponent_ = 1;
  for (int a = 0; a < order_; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = mult_[x][a];
      ++k;
    }
    elem_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  // conjugacy classes, ordered by smallest member
  class_of_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    if (class_of_[a] >= 0) continue;
    int id = static_cast<int>(classes_.size());
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(mult_[mult_[inv_[g]][a]][g]);
    classes_.emplace_back(cls.begin(), cls.end());
    for (int x : classes_.back()) class_of_[x] = id;
  }
}

GroupPtr Group::from_permutations(int degree, std::vector<Permutation> gens,
                                  std::string name, int order_cap) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw std::invalid_argument("bad permutation degree");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw std::invalid_argument("invalid permutation");
      hit[v] = true;
    }
  }
  // breadth first over words, sorting each new layer for a canonical order
  std::vector<Permutation> elems{identity_perm(degree)};
  std::map<Permutation, int> index{{elems[0], 0}};
  std::vector<Permutation> layer = elems;
  while (!layer.empty()) {
    std::set<Permutation> next;
    for (const auto& w : layer)
      for (const auto& g : gens) {
        Permutation p = compose(w, g);
        if (!index.count(p) && !next.count(p)) next.insert(p);
      }
    layer.clear();
    for (const auto& p : next) {
      if (static_cast<int>(elems.size()) >= order_cap)
        throw std::invalid_argument("group order cap " + std::to_string(order_cap) + " exceeded");
      index.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(p);
      layer.push_back(p);
    }
  }
  auto g = std::shared_ptr<Group>(new Group());
  const int n = static_cast<int>(elems.size());
  g->mult_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->mult_[a][b] = index.at(compose(elems[a], elems[b]));
  g->name_ = std::move(name);
  g->perms_ = std::move(elems);
  for (const auto& gen : gens) g->gens_.push_back(index.at(gen));
  g->finish(false);
  return g;
}

GroupPtr Group::from_mult_table(std::vector<std::vector<int>> table, std::string name) {
  auto g = std::shared_ptr<Group>(new Group());
  g->mult_ = std::move(table);
  g->name_ = std::move(name);
  g->finish(true);
  for (int a = 1; a < g->order_; ++a) g->gens_.push_back(a);
  return g;
}

GroupPtr Group::from_text(const std::string& text, std::string name, int order_cap) {
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line[0] == '#') continue;
    if (line.rfind("degree:", 0) == 0) {
      degree = std::stoi(line.substr(7));
      continue;
    }
    if (degree < 1) throw std::invalid_argument("generator before degree line");
    gens.push_back(parse_cycles(line, degree));
  }
  if (degree < 1) throw std::invalid_argument("missing degree line");
  return from_permutations(degree, std::move(gens), std::move(name), order_cap);
}

int Group::power(int a, long long k) const {
  int m = elem_order_[a];
  long long r = k % m;
  if (r < 0) r += m;
  int x = 0;
  for (long long i = 0; i < r; ++i) x = mult_[x][a];
  return x;
}

int Group::conjugate(int a, int g) const { return mult_[mult_[inv_[g]][a]][g]; }

const Permutation* Group::permutation(int a) const {
  if (perms_.empty()) return nullptr;
  return &perms_[a];
}

bool Group::same_table(const Group& other) const {
  return this == &other || (order_ == other.order_ && mult_ == other.mult_);
}

GroupPtr Group::named(const std::string& name, int order_cap) {
  auto cyclic_gen = [](int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
  };
  if (name == "1" || name == "C1")
    return from_permutations(1, {}, "1", order_cap);
  if (name == "V4")
    return from_permutations(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)},
                             "V4", order_cap);
  if (name == "Q8") {
    auto a = parse_cycles("(1 2 3 4)(5 6 7 8)", 8);
    auto b = parse_cycles("(1 5 3 7)(2 8 4 6)", 8);
    auto g = from_permutations(8, {a, b}, "Q8", order_cap);
    if (g->order() != 8) throw std::logic_error("bad Q8 construction");
    return g;
  }
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'A' || name[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown group name: " + name);
    }
    if (name[0] == 'C' && n >= 1) {
      if (n == 1) return from_permutations(1, {}, "1", order_cap);
      return from_permutations(n, {cyclic_gen(n)}, name, order_cap);
    }
    if (name[0] == 'S' && n >= 1 && n <= 6) {
      if (n == 1) return from_permutations(1, {}, "1", order_cap);
      return from_permutations(n, {parse_cycles("(1 2)", n), cyclic_gen(n)}, name, order_cap);
    }
    if (name[0] == 'A' && n >= 3 && n <= 5) {
      std::vector<Permutation> gens;
      for (int k = 3; k <= n; ++k)
        gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", n));
      auto g = from_permutations(n, std::move(gens), name, order_cap);
      return g;
    }
    if (name[0] == 'D' && n >= 2 && n % 2 == 0) {
      int m = n / 2;  // order n = 2m dihedral, acting on m points
      if (m == 1) return from_permutations(2, {parse_cycles("(1 2)", 2)}, "C2", order_cap);
      if (m == 2) return named("V4", order_cap);
      Permutation refl(m);
      for (int i = 0; i < m; ++i) refl[i] = (m - i) % m;
      return from_permutations(m, {cyclic_gen(m), refl}, name, order_cap);
    }
  }
  throw std::invalid_argument("unknown group name: " + name);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int n = a->order(), m = b->order();
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m, 0));
  for (int i = 0; i < n * m; ++i)
    for (int j = 0; j < n * m; ++j) {
      int ai = i / m, bi = i % m, aj = j / m, bj = j % m;
      table[i][j] = a->mult(ai, aj) * m + b->mult(bi, bj);
    }
  return Group::from_mult_table(std::move(table), a->name() + "x" + b->name());
}

bool Subgroup::contains(int a) const {
  return std::binary_search(elems.begin(), elems.end(), a);
}

bool Subgroup::contains_all(const std::vector<int>& xs) const {
  for (int x : xs)
    if (!contains(x)) return false;
  return true;
}

Subgroup Subgroup::conjugated(int g) const {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int x : elems) out.push_back(parent->conjugate(x, g));
  std::sort(out.begin(), out.end());
  return {parent, std::move(out)};
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent->order(); ++g)
    if (!(conjugated(g) == *this)) return false;
  return true;
}

std::vector<int> Subgroup::normalizer() const {
  std::vector<int> out;
  for (int g = 0; g < parent->order(); ++g)
    if (conjugated(g) == *this) out.push_back(g);
  return out;
}

std::vector<int> Subgroup::small_generators() const {
  std::vector<int> gens;
  Subgroup cur = trivial(parent);
  for (int x : elems) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> with = cur.elems;
    with.push_back(x);
    cur = generated(parent, with);
    if (cur.order() == order()) break;
  }
  return gens;
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return {g, std::move(all)};
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return {g, {0}}; }

Subgroup Subgroup::generated(const GroupPtr& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::queue<int> todo;
  todo.push(0);
  for (int x : gens)
    if (seen.insert(x).second) todo.push(x);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (int x : gens) {
      int b = g->mult(a, x);
      if (seen.insert(b).second) todo.push(b);
      b = g->mult(x, a);
      if (seen.insert(b).second) todo.push(b);
    }
  }
  return {g, std::vector<int>(seen.begin(), seen.end())};
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent.get() == b.parent.get() && a.elems == b.elems;
}

std::optional<int> SubgroupList::index_of(const std::vector<int>& elems) const {
  // all is sorted by (order, elems); binary search
  auto cmp = [](const Subgroup& s, const std::vector<int>& key) {
    if (s.elems.size() != key.size()) return s.elems.size() < key.size();
    return s.elems < key;
  };
  auto it = std::lower_bound(all.begin(), all.end(), elems, cmp);
  if (it == all.end() || it->elems != elems) return std::nullopt;
  return static_cast<int>(it - all.begin());
}

SubgroupList all_subgroups(const GroupPtr& g) {
  SubgroupList out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  seen.insert({0});
  frontier.push_back({0});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      Subgroup sub{g, s};
      for (int x = 1; x < g->order(); ++x) {
        if (sub.contains(x)) continue;
        std::vector<int> gens = s;
        gens.push_back(x);
        Subgroup t = Subgroup::generated(g, gens);
        if (seen.insert(t.elems).second) next.push_back(t.elems);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& s : seen) out.all.push_back({g, s});
  std::sort(out.all.begin(), out.all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  // conjugacy classes
  out.class_of.assign(out.all.size(), -1);
  for (std::size_t i = 0; i < out.all.size(); ++i) {
    if (out.class_of[i] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    std::set<int> cls;
    for (int x = 0; x < g->order(); ++x) {
      auto idx = out.index_of(out.all[i].conjugated(x).elems);
      if (!idx) throw MathCheckError("conjugate subgroup missing from enumeration");
      cls.insert(*idx);
    }
    out.classes.emplace_back(cls.begin(), cls.end());
    for (int j : out.classes.back()) out.class_of[j] = id;
  }
  return out;
}

Subgroup p_core(const Subgroup& e, int p) {
  const GroupPtr& g = e.parent;
  // all p-subgroups of e by layered closure over p-elements
  std::set<std::vector<int>> psubs{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  std::vector<int> pelems;
  for (int x : e.elems) {
    int o = g->element_order(x);
    bool ppower = true;
    while (o > 1) {
      if (o % p != 0) {
        ppower = false;
        break;
      }
      o /= p;
    }
    if (ppower && x != 0) pelems.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      Subgroup sub{g, s};
      for (int x : pelems) {
        if (sub.contains(x)) continue;
        std::vector<int> gens = s;
        gens.push_back(x);
        Subgroup t = Subgroup::generated(g, gens);
        int o = t.order();
        bool ppower = true;
        while (o > 1) {
          if (o % p != 0) {
            ppower = false;
            break;
          }
          o /= p;
        }
        if (!ppower) continue;
        if (psubs.insert(t.elems).second) next.push_back(t.elems);
      }
    }
    frontier = std::move(next);
  }
  std::size_t maxsize = 1;
  for (const auto& s : psubs) maxsize = std::max(maxsize, s.size());
  if (maxsize != static_cast<std::size_t>(prime_power_part(e.order(), p)))
    throw MathCheckError("Sylow subgroup size mismatch");
  std::vector<int> core;
  bool first = true;
  for (const auto& s : psubs) {
    if (s.size() != maxsize) continue;
    if (first) {
      core = s;
      first = false;
    } else {
      std::vector<int> inter;
      std::set_intersection(core.begin(), core.end(), s.begin(), s.end(),
                            std::back_inserter(inter));
      core = std::move(inter);
    }
  }
  return {g, core};
}

std::pair<int, int> p_parts(const GroupPtr& g, int x, int p) {
  int m = g->element_order(x);
  int a = prime_power_part(m, p);
  int h = m / a;
  if (a == 1) return {0, x};
  if (h == 1) return {x, 0};
  long long alpha = static_cast<long long>(h) * mod_inverse(h % a, a);
  long long beta = static_cast<long long>(a) * mod_inverse(a % h, h);
  return {g->power(x, alpha), g->power(x, beta)};
}

std::vector<int> p_regular_elements(const GroupPtr& g, int p) {
  std::vector<int> out;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) % p != 0) out.push_back(x);
  return out;
}

HypoPairList hypo_pairs(const GroupPtr& g, int p, const SubgroupList& subs) {
  HypoPairList out;
  // per-subgroup data reused for canonicalization
  struct Info {
    bool hypo = false;
    std::vector<int> core;
    int m = 1;
  };
  std::vector<Info> info(subs.all.size());
  for (std::size_t i = 0; i < subs.all.size(); ++i) {
    const Subgroup& e = subs.all[i];
    Subgroup core = p_core(e, p);
    int m = e.order() / core.order();
    if (m % p == 0) continue;
    // cosets of the core within e; quotient must be cyclic of order m
    std::map<int, std::vector<int>> cosets;  // min element -> members
    std::map<int, int> coset_label;
    for (int x : e.elems) {
      if (coset_label.count(x)) continue;
      std::vector<int> mem;
      for (int o : core.elems) mem.push_back(g->mult(x, o));
      std::sort(mem.begin(), mem.end());
      for (int y : mem) coset_label[y] = mem[0];
      cosets[mem[0]] = std::move(mem);
    }
    auto coset_order = [&](int rep) {
      int k = 1, x = rep;
      while (!std::binary_search(core.elems.begin(), core.elems.end(), x)) {
        x = g->mult(x, rep);
        ++k;
      }
      return k;
    };
    bool cyclic = false;
    for (const auto& [rep, mem] : cosets)
      if (coset_order(rep) == m) {
        cyclic = true;
        break;
      }
    if (!cyclic) continue;
    info[i].hypo = true;
    info[i].core = core.elems;
    info[i].m = m;
    for (const auto& [rep, mem] : cosets) {
      if (coset_order(rep) != m) continue;
      int canon = -1;
      for (int y : mem)
        if (g->element_order(y) % p != 0) {
          canon = y;
          break;
        }
      if (canon < 0) throw MathCheckError("generating coset without p-regular element");
      out.pairs.push_back({static_cast<int>(i), canon});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](const HypoPair& a, const HypoPair& b) {
    if (a.subgroup != b.subgroup) return a.subgroup < b.subgroup;
    return a.rep < b.rep;
  });
  // conjugation orbits
  auto find_pair = [&](int sub, int rep) {
    for (std::size_t k = 0; k < out.pairs.size(); ++k)
      if (out.pairs[k].subgroup == sub && out.pairs[k].rep == rep) return static_cast<int>(k);
    throw MathCheckError("conjugated pair missing from enumeration");
  };
  auto canonical_rep = [&](int sub, int elem) {
    // smallest p-regular element of the coset elem * core(sub)
    const auto& core = info[static_cast<std::size_t>(sub)].core;
    int best = -1;
    for (int o : core) {
      int y = g->mult(elem, o);
      if (g->element_order(y) % p != 0 && (best < 0 || y < best)) best = y;
    }
    if (best < 0) throw MathCheckError("coset without p-regular element");
    return best;
  };
  out.orbit_of.assign(out.pairs.size(), -1);
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    if (out.orbit_of[k] >= 0) continue;
    int id = static_cast<int>(out.orbits.size());
    std::set<int> orbit;
    for (int x = 0; x < g->order(); ++x) {
      const auto& pr = out.pairs[k];
      auto cidx = subs.index_of(subs.all[pr.subgroup].conjugated(x).elems);
      if (!cidx) throw MathCheckError("conjugate subgroup missing");
      int crep = canonical_rep(*cidx, g->conjugate(pr.rep, x));
      orbit.insert(find_pair(*cidx, crep));
    }
    out.orbits.emplace_back(orbit.begin(), orbit.end());
    for (int j : out.orbits.back()) out.orbit_of[j] = id;
  }
  return out;
}

HypoPairList hypo_pairs(const GroupPtr& g, int p) {
  return hypo_pairs(g, p, all_subgroups(g));
}

namespace {

std::mutex embed_mutex;
std::map<std::pair<const Group*, std::vector<int>>, EmbeddedGroup> embed_cache;

}  // namespace

const EmbeddedGroup& subgroup_as_group(const Subgroup& s) {
  std::lock_guard lock(embed_mutex);
  auto key = std::make_pair(s.parent.get(), s.elems);
  auto it = embed_cache.find(key);
  if (it != embed_cache.end()) return it->second;
  const int n = s.order();
  std::vector<int> from_parent(s.parent->order(), -1);
  for (int i = 0; i < n; ++i) from_parent[s.elems[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = s.parent->mult(s.elems[i], s.elems[j]);
      if (from_parent[prod] < 0) throw std::invalid_argument("element set is not closed");
      table[i][j] = from_parent[prod];
    }
  std::ostringstream name;
  name << s.parent->name() << "{";
  for (std::size_t i = 0; i < s.elems.size(); ++i) name << (i ? "," : "") << s.elems[i];
  name << "}";
  EmbeddedGroup e;
  e.group = Group::from_mult_table(std::move(table), name.str());
  e.parent = s.parent;
  e.to_parent = s.elems;
  e.from_parent = std::move(from_parent);
  return embed_cache.emplace(key, std::move(e)).first->second;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& normal) {
  if (!normal.is_normal()) throw std::invalid_argument("quotient by a non-normal subgroup");
  std::vector<int> min_rep(g->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (min_rep[x] >= 0) continue;
    std::vector<int> mem;
    for (int o : normal.elems) mem.push_back(g->mult(x, o));
    int rep = *std::min_element(mem.begin(), mem.end());
    for (int y : mem) min_rep[y] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> rep_index(g->order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
  std::vector<int> label(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) label[x] = rep_index[min_rep[x]];
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = label[g->mult(reps[i], reps[j])];
  QuotientGroup q;
  q.group = Group::from_mult_table(std::move(table), g->name() + "/N" + std::to_string(normal.order()));
  q.parent = g;
  q.projection = std::move(label);
  q.coset_reps = std::move(reps);
  return q;
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<int> comms;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) {
      int c = g->mult(g->mult(g->inverse(a), g->inverse(b)), g->mult(a, b));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup::generated(g, comms);
}

CycInt LinearCharacter::value_in(int g, int bigger_order) const {
  return value(g).embedded(bigger_order);
}

bool LinearCharacter::is_trivial() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

std::vector<LinearCharacter> characters_into(const GroupPtr& g, int m) {
  if (m < 1) throw std::invalid_argument("target order must be positive");
  Subgroup comm = commutator_subgroup(g);
  QuotientGroup q = quotient_group(g, comm);
  const GroupPtr& Q = q.group;
  const int qn = Q->order();

  // polycyclic generating sequence picked by maximal order in the current
  // quotient, smallest representative on ties
  std::vector<int> gens;           // elements of Q
  std::vector<int> rel_orders;     // q_i
  Subgroup cur = Subgroup::trivial(Q);
  while (cur.order() < qn) {
    int best = -1, best_ord = 0;
    for (int x = 0; x < qn; ++x) {
      if (cur.contains(x)) continue;
      int k = 1, y = x;
      while (!cur.contains(y)) {
        y = Q->mult(y, x);
        ++k;
      }
      if (k > best_ord) {
        best_ord = k;
        best = x;
      }
    }
    gens.push_back(best);
    rel_orders.push_back(best_ord);
    std::vector<int> with = cur.elems;
    with.push_back(best);
    cur = Subgroup::generated(Q, with);
  }
  const std::size_t k = gens.size();

  // normal form: mixed radix tuples (a_1..a_k), element = prod gens[i]^a_i
  std::vector<std::vector<int>> tuple_of(qn);
  {
    std::vector<int> tuple(k, 0);
    std::vector<bool> seen(qn, false);
    long long total = 1;
    for (int qi : rel_orders) total *= qi;
    if (total != qn) throw MathCheckError("polycyclic length mismatch");
    for (long long t = 0; t < total; ++t) {
      long long rest = t;
      int elem = 0;
      for (std::size_t i = 0; i < k; ++i) {
        tuple[i] = static_cast<int>(rest % rel_orders[i]);
        rest /= rel_orders[i];
        elem = Q->mult(elem, Q->power(gens[i], tuple[i]));
      }
      if (seen[elem]) throw MathCheckError("normal form collision");
      seen[elem] = true;
      tuple_of[elem] = tuple;
    }
  }

  // power relations: gens[i]^rel_orders[i] written in earlier generators
  std::vector<std::vector<int>> rel(k);
  for (std::size_t i = 0; i < k; ++i) {
    rel[i] = tuple_of[Q->power(gens[i], rel_orders[i])];
    for (std::size_t j = i; j < k; ++j)
      if (rel[i][j] != 0) throw MathCheckError("power relation uses later generator");
  }

  // solve q_i * c_i == sum_j rel[i][j] * c_j (mod m), recursively
  std::vector<std::vector<int>> assignments;
  std::vector<int> c(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      assignments.push_back(c);
      return;
    }
    long long rhs = 0;
    for (std::size_t j = 0; j < i; ++j) rhs += static_cast<long long>(rel[i][j]) * c[j];
    rhs %= m;
    if (rhs < 0) rhs += m;
    long long q = rel_orders[i];
    long long gdiv = std::gcd(q, static_cast<long long>(m));
    if (rhs % gdiv != 0) return;
    long long mm = m / gdiv;
    long long base = 0;
    if (mm > 1) base = ((rhs / gdiv) % mm) * mod_inverse((q / gdiv) % mm, mm) % mm;
    for (long long t = 0; t < gdiv; ++t) {
      c[i] = static_cast<int>((base + t * mm) % m);
      self(self, i + 1);
    }
    c[i] = 0;
  };
  rec(rec, 0);
  std::sort(assignments.begin(), assignments.end());

  std::vector<LinearCharacter> out;
  for (const auto& a : assignments) {
    LinearCharacter chi;
    chi.group = g;
    chi.value_order = m;
    chi.exponents.resize(g->order());
    for (int x = 0; x < g->order(); ++x) {
      const auto& tup = tuple_of[q.projection[x]];
      long long e = 0;
      for (std::size_t i = 0; i < k; ++i) e += static_cast<long long>(tup[i]) * a[i];
      chi.exponents[x] = static_cast<int>(e % m);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

std::vector<LinearCharacter> linear_characters(const GroupPtr& g, int e) {
  Subgroup comm = commutator_subgroup(g);
  QuotientGroup q = quotient_group(g, comm);
  if (e % q.group->exponent() != 0)
    throw std::invalid_argument("value order is not divisible by the abelianization exponent");
  auto out = characters_into(g, e);
  if (out.size() != static_cast<std::size_t>(q.group->order()))
    throw MathCheckError("linear character count mismatch");
  return out;
}

}  // namespace repring
