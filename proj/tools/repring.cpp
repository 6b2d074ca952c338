// Command line front end: exact representation-ring computations over small
// finite groups. Subcommands: lattice, units, teninduce, algdeg,
// diagram-check. Exit codes: 0 success, 1 mathematical check failed, 2 usage
// error.

#include <CLI11.hpp>

#include <repring/algmaps.hpp>
#include <repring/json_io.hpp>
#include <repring/units.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace repring;

namespace {

int order_cap_from_env(int fallback) {
  if (const char* env = std::getenv("REPRING_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fallback;
}

struct Session {
  int cap = Group::kDefaultOrderCap;
  std::map<std::string, GroupPtr> groups;

  GroupPtr group(const std::string& name) {
    auto it = groups.find(name);
    if (it != groups.end()) return it->second;
    GroupPtr g;
    if (!name.empty() && name[0] == '@') {
      std::ifstream in(name.substr(1));
      if (!in) throw CLI::ValidationError("--group", "cannot open file " + name.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      g = Group::from_text(ss.str(), name.substr(1), cap);
    } else {
      g = Group::named(name, cap);
    }
    groups.emplace(name, g);
    return g;
  }

  // first conjugacy class representative whose element orders match the model
  Subgroup subgroup_named(const GroupPtr& g, const std::string& name) {
    GroupPtr model = group(name);
    std::multiset<int> want;
    for (int x = 0; x < model->order(); ++x) want.insert(model->element_order(x));
    auto subs = all_subgroups(g);
    for (const auto& cls : subs.classes) {
      const Subgroup& s = subs.all[cls.front()];
      std::multiset<int> got;
      for (int x : s.elems) got.insert(g->element_order(x));
      if (got == want) return s;
    }
    throw CLI::ValidationError("--biset", "no subgroup of " + g->name() + " matches " + name);
  }
};

// Mini language: `ind H<=G`, `res H<=G`, `inf G->G/N`, `iso G`, combined
// left-associatively with `*` (composition) and `+` (disjoint union).
Biset parse_biset(Session& session, const std::string& spec) {
  std::vector<std::string> tokens;
  {
    std::istringstream in(spec);
    std::string t;
    while (in >> t) tokens.push_back(t);
  }
  std::size_t pos = 0;
  auto atom = [&]() -> Biset {
    if (pos >= tokens.size()) throw CLI::ValidationError("--biset", "unexpected end of spec");
    std::string kind = tokens[pos++];
    if (kind == "iso") {
      if (pos >= tokens.size()) throw CLI::ValidationError("--biset", "iso needs a group");
      return identity_biset(session.group(tokens[pos++]));
    }
    if (kind == "ind" || kind == "res") {
      if (pos >= tokens.size()) throw CLI::ValidationError("--biset", kind + " needs H<=G");
      std::string inc = tokens[pos++];
      auto sep = inc.find("<=");
      if (sep == std::string::npos)
        throw CLI::ValidationError("--biset", "expected H<=G in " + inc);
      GroupPtr g = session.group(inc.substr(sep + 2));
      Subgroup h = session.subgroup_named(g, inc.substr(0, sep));
      return kind == "ind" ? induction_biset(h) : restriction_biset(h);
    }
    if (kind == "inf") {
      if (pos >= tokens.size()) throw CLI::ValidationError("--biset", "inf needs G->G/N");
      std::string desc = tokens[pos++];
      auto arrow = desc.find("->");
      auto slash = desc.find('/', arrow == std::string::npos ? 0 : arrow);
      if (arrow == std::string::npos || slash == std::string::npos)
        throw CLI::ValidationError("--biset", "expected G->G/N in " + desc);
      GroupPtr g = session.group(desc.substr(0, arrow));
      Subgroup n = session.subgroup_named(g, desc.substr(slash + 1));
      return inflation_biset(quotient_group(g, n));
    }
    throw CLI::ValidationError("--biset", "unknown biset kind " + kind);
  };
  auto term = [&]() -> Biset {
    Biset u = atom();
    while (pos < tokens.size() && tokens[pos] == "*") {
      ++pos;
      u = compose_bisets(u, atom());
    }
    return u;
  };
  Biset u = term();
  while (pos < tokens.size() && tokens[pos] == "+") {
    ++pos;
    u = disjoint_union_bisets(u, term());
  }
  if (pos != tokens.size()) throw CLI::ValidationError("--biset", "trailing tokens in spec");
  return u;
}

Json report_header(const std::string& command) {
  return Json{{"version", kVersion}, {"command", command}};
}

void emit(const Json& report, const std::string& format, const std::string& tsv = "") {
  if (format == "tsv" && !tsv.empty()) {
    std::cout << tsv;
    return;
  }
  if (format == "text") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report.dump(2) << "\n";
}

Lattice build_lattice(Ring ring, const CtxPtr& ctx) {
  switch (ring) {
    case Ring::B: return burnside_lattice(ctx);
    case Ring::T: return trivial_source_lattice(ctx);
    case Ring::RK: return character_lattice(ctx);
    case Ring::RF: return brauer_character_lattice(ctx);
  }
  throw CLI::ValidationError("--ring", "bad ring");
}

int cmd_lattice(Session& session, const std::string& ring_s, const std::string& group_s, int p,
                const std::string& emit_s, const std::string& format) {
  Ring ring = parse_ring_tag(ring_s);
  GroupPtr g = session.group(group_s);
  CtxPtr ctx = make_context(g, p);
  Lattice l = build_lattice(ring, ctx);
  Json report = report_header("lattice");
  report["contexts"] = Json::array({context_to_json(*ctx)});
  report["result"] = lattice_to_json(l, emit_s.empty() ? "all" : emit_s);
  emit(report, format, format == "tsv" ? lattice_to_tsv(l) : "");
  return 0;
}

int cmd_units(Session& session, const std::string& ring_s, const std::string& group_s, int p,
              bool ghost, const std::string& format) {
  Ring ring = parse_ring_tag(ring_s);
  GroupPtr g = session.group(group_s);
  CtxPtr ctx = make_context(g, p);
  UnitGroup u = ghost ? ghost_torsion_units(ring, ctx)
                      : orthogonal_units(ring, make_ring_system(ctx));
  Json report = report_header("units");
  report["contexts"] = Json::array({context_to_json(*ctx)});
  report["result"] = unit_group_to_json(u, true);
  emit(report, format, format == "tsv" ? units_to_tsv(u) : "");
  return 0;
}

int cmd_teninduce(Session& session, const std::string& ring_s, const std::string& biset_s, int p,
                  const std::string& input, const std::string& format) {
  Ring ring = parse_ring_tag(ring_s);
  Biset u = parse_biset(session, biset_s);
  int e = std::lcm(u.left->exponent(), u.right->exponent());
  CtxPtr gctx = make_context(u.left, p, e);
  CtxPtr hctx = make_context(u.right, p, e);
  std::ifstream in(input);
  if (!in) throw CLI::ValidationError("--input", "cannot open " + input);
  Json jin = Json::parse(in);
  GhostVector a = ghost_from_json(jin, hctx);
  if (a.tag() != ring) throw CLI::ValidationError("--input", "input tag differs from --ring");
  GhostVector image = tensor_induce(u, a, gctx);
  Json report = report_header("teninduce");
  report["parameters"] = Json{{"biset", biset_s}, {"p", p}, {"ring", ring_s}};
  report["contexts"] = Json::array({context_to_json(*gctx), context_to_json(*hctx)});
  report["result"] = ghost_to_json(image);
  emit(report, format);
  return 0;
}

int cmd_algdeg(Session& session, const std::string& map_s, int degree, std::uint64_t seed,
               const std::string& format) {
  // map spec: RING:BISET-SPEC, e.g. "B:ind C2<=C4"
  auto colon = map_s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--map", "expected RING:BISET, e.g. B:ind C2<=C4");
  Ring ring = parse_ring_tag(map_s.substr(0, colon));
  Biset u = parse_biset(session, map_s.substr(colon + 1));
  int e = std::lcm(u.left->exponent(), u.right->exponent());
  int p = 2;
  CtxPtr gctx = make_context(u.left, p, e);
  CtxPtr hctx = make_context(u.right, p, e);
  Lattice dom = build_lattice(ring, hctx);
  Lattice cod = build_lattice(ring, gctx);
  if (degree < 0) degree = u.orbit_count();
  MapUnderTest f{&dom, &cod,
                 [&](const GhostVector& v) { return tensor_induce(u, v, gctx); }};
  std::mt19937_64 rng(seed);
  auto pool = sample_pool(dom, rng, 20);
  DegreeWitness w = degree_witness(f, degree, pool, seed);
  Json report = report_header("algdeg");
  report["parameters"] = Json{{"map", map_s}, {"degree", degree}, {"seed", seed}};
  report["result"] = Json{{"verdict", verdict_name(w.verdict)},
                          {"checked_tuples", w.checked_tuples},
                          {"witness_tuples", w.witness_tuples}};
  emit(report, format);
  return w.verdict == DegreeVerdict::ConsistentWithDegree ? 0 : 1;
}

int cmd_diagram_check(Session& session, std::vector<std::string> groups,
                      std::vector<int> primes, std::vector<std::string> bisets,
                      std::uint64_t seed, int vectors, const std::string& format) {
  if (primes.empty()) primes = {2, 3};
  Json faces = Json::array();
  bool all_ok = true;
  auto record = [&](const std::string& face, const std::string& where, bool ok, int witnesses) {
    faces.push_back(Json{{"face", face}, {"at", where}, {"pass", ok}, {"witnesses", witnesses}});
    all_ok = all_ok && ok;
  };

  // per-group faces
  for (const auto& gname : groups)
    for (int p : primes) {
      GroupPtr g = session.group(gname);
      CtxPtr ctx = make_context(g, p);
      RingSystem sys = make_ring_system(ctx);
      std::string where = gname + ",p=" + std::to_string(p);
      std::mt19937_64 rng(seed + p);
      bool ok = true;
      for (int t = 0; t < vectors; ++t) {
        GhostVector v = random_invariant(Ring::T, ctx, rng, 4);
        ok = ok && character_to_brauer(species_to_character(v)) == species_to_brauer(v);
      }
      record("dc=b", where, ok, vectors);
      ok = true;
      int count = 0;
      for (const auto& cls : ctx->subgroups.classes) {
        const Subgroup& s = ctx->subgroups.all[cls.front()];
        GhostVector lhs = marks_to_species(transitive_mark_vector(ctx, cls.front()));
        auto triv = characters_into(subgroup_as_group(s).group, 1);
        ok = ok && lhs == monomial_species(ctx, s, triv[0]);
        ++count;
      }
      record("species(perm)=monomial", where, ok, count);
      ok = true;
      count = 0;
      for (const auto& gen : sys.trivial_source.generators) {
        RingElement x = element_from(sys.trivial_source, gen);
        RingElement rk = connect(ConnectMap::OrdinaryChar, sys, x);
        RingElement rf = connect(ConnectMap::BrauerChar, sys, x);
        ok = ok && connect(ConnectMap::Decompose, sys, rk).ghost == rf.ghost;
        ++count;
      }
      record("lattice-faces", where, ok, count);
    }

  // tensor faces per biset
  for (const auto& bspec : bisets)
    for (int p : primes) {
      Biset u = parse_biset(session, bspec);
      int e = std::lcm(u.left->exponent(), u.right->exponent());
      CtxPtr gctx = make_context(u.left, p, e);
      CtxPtr hctx = make_context(u.right, p, e);
      std::string where = bspec + ",p=" + std::to_string(p);
      std::mt19937_64 rng(seed + 31 * p);
      bool ok = true;
      int count = 0;
      for (int t = 0; t < vectors; ++t) {
        GhostVector b = random_invariant(Ring::B, hctx, rng, 3);
        ok = ok && tensor_induce(u, marks_to_species(b), gctx) ==
                       marks_to_species(tensor_induce(u, b, gctx));
        GhostVector tv = random_invariant(Ring::T, hctx, rng, 3);
        ok = ok && tensor_induce(u, species_to_character(tv), gctx) ==
                       species_to_character(tensor_induce(u, tv, gctx));
        ok = ok && tensor_induce(u, species_to_brauer(tv), gctx) ==
                       species_to_brauer(tensor_induce(u, tv, gctx));
        GhostVector rk = random_invariant(Ring::RK, hctx, rng, 3);
        ok = ok && tensor_induce(u, character_to_brauer(rk), gctx) ==
                       character_to_brauer(tensor_induce(u, rk, gctx));
        count += 4;
      }
      record("tensor-ghost-faces", where, ok, count);
      ok = true;
      count = 0;
      for (const auto& cls : hctx->subgroups.classes) {
        const Subgroup& s = hctx->subgroups.all[cls.front()];
        for (const auto& psi : characters_into(subgroup_as_group(s).group, hctx->h)) {
          GhostVector direct = monomial_tensor_induce(u, s, psi, gctx, hctx);
          GhostVector via = tensor_induce(u, monomial_species(hctx, s, psi), gctx);
          ok = ok && direct == via;
          ++count;
        }
      }
      record("tensor-monomial", where, ok, count);
    }

  Json report = report_header("diagram-check");
  report["parameters"] = Json{{"groups", groups}, {"primes", primes},
                              {"bisets", bisets}, {"seed", seed}, {"vectors", vectors}};
  report["result"] = Json{{"pass", all_ok}, {"faces", faces}};
  emit(report, format);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact representation rings, ghost rings and their unit groups"};
  app.require_subcommand(1);
  Session session;
  session.cap = order_cap_from_env(Group::kDefaultOrderCap);
  int cap_flag = 0;
  app.add_option("--cap", cap_flag, "group order cap (default 360, env REPRING_CAP)");

  std::string ring = "B", group = "C2", emit_s, format = "json", biset_s, input, map_s;
  int p = 2, degree = -1, vectors = 25;
  bool ghost = false;
  std::uint64_t seed = 0;
  std::vector<std::string> groups_v, bisets_v;
  std::vector<int> primes_v;

  auto* lat = app.add_subcommand("lattice", "representation lattices inside ghost rings");
  lat->add_option("--ring", ring, "B|T|RK|RF")->required();
  lat->add_option("--group", group)->required();
  lat->add_option("--p", p, "prime (default 2)");
  lat->add_option("--emit", emit_s, "basis|snf|rank|all");
  lat->add_option("--format", format, "json|tsv|text");

  auto* uni = app.add_subcommand("units", "orthogonal (torsion) unit groups");
  uni->add_option("--ring", ring, "B|T|RK|RF")->required();
  uni->add_option("--group", group)->required();
  uni->add_option("--p", p, "prime (default 2)");
  uni->add_flag("--ghost", ghost, "enumerate units of the ghost ring instead");
  uni->add_option("--format", format, "json|tsv|text");

  auto* ten = app.add_subcommand("teninduce", "tensor induction along a biset");
  ten->add_option("--ring", ring, "B|T|RK|RF")->required();
  ten->add_option("--biset", biset_s, "e.g. \"ind C2<=S3\"")->required();
  ten->add_option("--p", p, "prime (default 2)");
  ten->add_option("--input", input, "ghost vector JSON file")->required();
  ten->add_option("--format", format, "json|text");

  auto* alg = app.add_subcommand("algdeg", "algebraic degree witnesses");
  alg->add_option("--map", map_s, "RING:BISET, e.g. \"B:ind C2<=C4\"")->required();
  alg->add_option("--degree", degree, "expected degree (default |U/H|)");
  alg->add_option("--seed", seed);
  alg->add_option("--format", format, "json|text");

  auto* dia = app.add_subcommand("diagram-check", "verify the commuting faces");
  dia->add_option("--group", groups_v, "groups for the per-group faces");
  dia->add_option("--p", primes_v, "primes (default 2 3)");
  dia->add_option("--biset", bisets_v, "bisets for the tensor faces");
  dia->add_option("--seed", seed);
  dia->add_option("--vectors", vectors, "random vectors per face");
  dia->add_option("--format", format, "json|text");

  try {
    app.parse(argc, argv);
    if (cap_flag > 0) session.cap = cap_flag;
    if (lat->parsed()) return cmd_lattice(session, ring, group, p, emit_s, format);
    if (uni->parsed()) return cmd_units(session, ring, group, p, ghost, format);
    if (ten->parsed()) return cmd_teninduce(session, ring, biset_s, p, input, format);
    if (alg->parsed()) return cmd_algdeg(session, map_s, degree, seed, format);
    if (dia->parsed())
      return cmd_diagram_check(session, groups_v, primes_v, bisets_v, seed, vectors, format);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const MathCheckError& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
