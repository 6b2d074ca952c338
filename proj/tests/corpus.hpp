#pragma once

// The shared test corpus: named inclusions, their induction/restriction
// bisets, one composite and one disjoint union.

#include <repring/teninduct.hpp>
#include <repring/units.hpp>

namespace corpus {

using namespace repring;

inline Subgroup resolve_subgroup(const GroupPtr& g, const std::string& name) {
  GroupPtr model = Group::named(name);
  std::multiset<int> want;
  for (int x = 0; x < model->order(); ++x) want.insert(model->element_order(x));
  auto subs = all_subgroups(g);
  for (const auto& cls : subs.classes) {
    const Subgroup& s = subs.all[cls.front()];
    std::multiset<int> got;
    for (int x : s.elems) got.insert(g->element_order(x));
    if (got == want) return s;
  }
  throw std::runtime_error("no subgroup of " + g->name() + " matches " + name);
}

struct NamedBiset {
  std::string label;
  Biset biset;
};

// Id, Ind and Res for each corpus inclusion, one composite, one disjoint
// union.
inline std::vector<NamedBiset> corpus_bisets() {
  std::vector<NamedBiset> out;
  auto add_inclusion = [&](const std::string& small, const std::string& big) {
    Subgroup s = resolve_subgroup(Group::named(big), small);
    out.push_back({"ind " + small + "<=" + big, induction_biset(s)});
    out.push_back({"res " + small + "<=" + big, restriction_biset(s)});
  };
  out.push_back({"iso C4", identity_biset(Group::named("C4"))});
  out.push_back({"iso S3", identity_biset(Group::named("S3"))});
  add_inclusion("C2", "C4");
  add_inclusion("C2", "S3");
  add_inclusion("C3", "S3");
  add_inclusion("C2", "D8");
  add_inclusion("V4", "A4");
  add_inclusion("C3", "A4");
  {
    Subgroup c2 = resolve_subgroup(Group::named("S3"), "C2");
    out.push_back({"ind C2<=S3 * res C2<=S3",
                   compose_bisets(induction_biset(c2), restriction_biset(c2))});
    out.push_back({"res C2<=S3 + res C2<=S3",
                   disjoint_union_bisets(restriction_biset(c2), restriction_biset(c2))});
  }
  return out;
}

struct TensorSetup {
  NamedBiset nb;
  int p;
  CtxPtr gctx;
  CtxPtr hctx;
};

inline std::vector<TensorSetup> corpus_setups(const std::vector<int>& primes = {2, 3}) {
  std::vector<TensorSetup> out;
  for (const auto& nb : corpus_bisets())
    for (int p : primes) {
      int e = std::lcm(nb.biset.left->exponent(), nb.biset.right->exponent());
      out.push_back({nb, p, make_context(nb.biset.left, p, e), make_context(nb.biset.right, p, e)});
    }
  return out;
}

inline std::vector<std::string> corpus_groups() {
  return {"1", "C2", "C3", "C4", "C6", "V4", "S3", "D8", "Q8", "A4"};
}

}  // namespace corpus
