#include "repring/json_io.hpp"

#include <sstream>

namespace repring {

const char* const kVersion = "0.1.0";

Json cyc_to_json(const CycInt& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.str());
  return Json{{"e", z.order()}, {"coeffs", coeffs}};
}

CycInt cyc_from_json(const Json& j) {
  int e = j.at("e").get<int>();
  IntVec coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      coeffs.emplace_back(c.get<long long>());
  }
  return CycInt::from_coeffs(e, std::move(coeffs));
}

Json index_to_json(Ring tag, const GhostContext& ctx, int position) {
  switch (tag) {
    case Ring::B:
      return Json{{"S", ctx.subgroups.all[position].elems}};
    case Ring::T: {
      const auto& pr = ctx.pairs.pairs[position];
      return Json{{"E", ctx.subgroups.all[pr.subgroup].elems}, {"s", pr.rep}};
    }
    case Ring::RK:
      return Json{{"x", position}};
    case Ring::RF:
      return Json{{"y", ctx.p_regular[position]}};
  }
  return {};
}

Json ghost_to_json(const GhostVector& v) {
  const GhostContext& ctx = *v.ctx();
  Json entries = Json::array();
  for (int i = 0; i < v.size(); ++i)
    entries.push_back(Json{{"index", index_to_json(v.tag(), ctx, i)},
                           {"value", cyc_to_json(v.at(i))}});
  return Json{{"tag", ring_tag(v.tag())},
              {"group", ctx.group->name()},
              {"p", ctx.p},
              {"e", ctx.e},
              {"entries", entries}};
}

namespace {

int find_position(Ring tag, const GhostContext& ctx, const Json& idx) {
  switch (tag) {
    case Ring::B: {
      std::vector<int> elems = idx.at("S").get<std::vector<int>>();
      return ctx.subgroup_index(elems);
    }
    case Ring::T: {
      std::vector<int> elems = idx.at("E").get<std::vector<int>>();
      return ctx.pair_position(ctx.subgroup_index(elems), idx.at("s").get<int>());
    }
    case Ring::RK:
      return idx.at("x").get<int>();
    case Ring::RF: {
      int y = idx.at("y").get<int>();
      int pos = ctx.p_regular_pos[y];
      if (pos < 0) throw std::invalid_argument("index is not p-regular");
      return pos;
    }
  }
  throw std::invalid_argument("bad tag");
}

}  // namespace

GhostVector ghost_from_json(const Json& j, const CtxPtr& ctx) {
  Ring tag = parse_ring_tag(j.at("tag").get<std::string>());
  const int vo = ctx->value_order(tag);
  std::vector<CycInt> vals(ctx->index_count(tag), CycInt::zero(vo));
  std::vector<bool> set(vals.size(), false);
  for (const auto& entry : j.at("entries")) {
    int pos = find_position(tag, *ctx, entry.at("index"));
    CycInt v = cyc_from_json(entry.at("value"));
    if (vo % v.order() != 0)
      throw std::invalid_argument("value order incompatible with the context");
    vals[pos] = v.embedded(vo);
    set[pos] = true;
  }
  for (bool s : set)
    if (!s) throw std::invalid_argument("ghost vector entries incomplete");
  return GhostVector(tag, ctx, std::move(vals));
}

Json context_to_json(const GhostContext& ctx) {
  Json subgroups = Json::array();
  for (const auto& s : ctx.subgroups.all) subgroups.push_back(s.elems);
  Json pairs = Json::array();
  for (const auto& pr : ctx.pairs.pairs)
    pairs.push_back(Json{{"E", ctx.subgroups.all[pr.subgroup].elems}, {"s", pr.rep}});
  return Json{{"group", ctx.group->name()},
              {"order", ctx.group->order()},
              {"p", ctx.p},
              {"e", ctx.e},
              {"h", ctx.h},
              {"subgroups", subgroups},
              {"subgroup_classes", ctx.subgroups.classes},
              {"pairs", pairs},
              {"pair_orbits", ctx.pairs.orbits},
              {"p_regular", ctx.p_regular}};
}

Json lattice_to_json(const Lattice& l, const std::string& emit) {
  Json out{{"ring", ring_tag(l.tag)}, {"group", l.ctx->group->name()}, {"rank", l.rank()}};
  if (emit == "basis" || emit == "all") {
    Json basis = Json::array();
    for (const auto& g : l.generators) basis.push_back(ghost_to_json(g));
    out["basis"] = basis;
  }
  if (emit == "snf" || emit == "all") {
    Json snf = Json::array();
    for (const auto& d : cokernel_invariants(l)) snf.push_back(d.str());
    out["snf"] = snf;
  }
  return out;
}

Json unit_group_to_json(const UnitGroup& u, bool with_certificates) {
  Json elems = Json::array();
  for (const auto& v : u.elements) {
    Json e{{"unit", ghost_to_json(v)}};
    if (with_certificates) {
      GhostVector prod = v * v.dual();
      e["orthogonal"] = prod == GhostVector::one(u.tag, u.ctx);
    }
    elems.push_back(std::move(e));
  }
  return Json{{"ring", ring_tag(u.tag)},
              {"group", u.ctx->group->name()},
              {"order", u.order()},
              {"elements", elems}};
}

std::string lattice_to_tsv(const Lattice& l) {
  std::ostringstream os;
  for (const auto& g : l.generators) {
    for (int i = 0; i < g.size(); ++i) os << (i ? "\t" : "") << g.at(i).str();
    os << "\n";
  }
  return os.str();
}

std::string units_to_tsv(const UnitGroup& u) {
  std::ostringstream os;
  for (const auto& v : u.elements) {
    for (int i = 0; i < v.size(); ++i) os << (i ? "\t" : "") << v.at(i).str();
    os << "\n";
  }
  return os.str();
}

}  // namespace repring
