#include <doctest.h>

#include <repring/ghost.hpp>
#include <repring/json_io.hpp>

using namespace repring;

TEST_CASE("context construction") {
  auto ctx = make_context(Group::named("S3"), 3);
  CHECK(ctx->e == 6);
  CHECK(ctx->h == 2);
  CHECK(ctx->index_count(Ring::B) == 6);
  CHECK(ctx->index_count(Ring::T) == 6);
  CHECK(ctx->index_count(Ring::RK) == 6);
  CHECK(ctx->index_count(Ring::RF) == 4);
  CHECK(ctx->expected_rank(Ring::B) == 4);
  CHECK(ctx->expected_rank(Ring::T) == 4);
  CHECK(ctx->expected_rank(Ring::RK) == 3);
  CHECK(ctx->expected_rank(Ring::RF) == 2);
  // a bigger ambient order is allowed when divisible
  auto ctx12 = make_context(Group::named("S3"), 3, 12);
  CHECK(ctx12->h == 4);
  CHECK_THROWS(make_context(Group::named("S3"), 3, 4));
}

TEST_CASE("ambient invariant bases have the ghost rank") {
  for (const char* name : {"1", "C2", "C4", "S3", "D8", "A4", "Q8", "C6", "V4", "C3"}) {
    for (int p : {2, 3}) {
      auto ctx = make_context(Group::named(name), p);
      for (Ring r : {Ring::B, Ring::T, Ring::RK, Ring::RF})
        CHECK(static_cast<int>(ctx->invariant_basis(r).size()) == ctx->expected_rank(r));
    }
  }
}

TEST_CASE("ring operations and invariance") {
  auto ctx = make_context(Group::named("S3"), 3);
  GhostVector one = GhostVector::one(Ring::B, ctx);
  CHECK(validate_invariance(one).ok);
  CHECK(one * one == one);
  GhostVector zero = GhostVector::zero(Ring::T, ctx);
  CHECK(validate_invariance(zero).ok);
  std::mt19937_64 rng(42);
  for (Ring r : {Ring::B, Ring::T, Ring::RK, Ring::RF})
    for (int t = 0; t < 10; ++t) {
      GhostVector a = random_invariant(r, ctx, rng, 3);
      GhostVector b = random_invariant(r, ctx, rng, 3);
      CHECK(validate_invariance(a).ok);
      CHECK(validate_invariance(a * b).ok);
      CHECK(validate_invariance(a + b).ok);
      CHECK(flatten(a + b) == flatten(b + a));
    }
}

TEST_CASE("invariance violations are caught with witnesses") {
  auto ctx = make_context(Group::named("C3"), 2);  // e = 3, Gamma acts on RK
  // value zeta at one element of a fused Galois orbit, untouched elsewhere
  std::vector<CycInt> vals(3, CycInt::one(3));
  vals[1] = CycInt::root(3, 1);
  GhostVector v(Ring::RK, ctx, std::move(vals));
  auto rep = validate_invariance(v);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("connecting maps, frozen small cases") {
  auto ctx = make_context(Group::named("C2"), 2);
  // marks (2,0) of the regular set over subgroups [1, C2]
  GhostVector marks(Ring::B, ctx,
                    {CycInt::integer(1, 2), CycInt::integer(1, 0)});
  GhostVector t = marks_to_species(marks);
  REQUIRE(ctx->index_count(Ring::T) == 2);
  CHECK(t.at(0) == CycInt::integer(1, 2));
  CHECK(t.at(1) == CycInt::integer(1, 0));
  CHECK(validate_invariance(t).ok);

  // all-ones goes to all-ones along every map
  GhostVector ones = GhostVector::one(Ring::T, ctx);
  CHECK(species_to_brauer(ones) == GhostVector::one(Ring::RF, ctx));
  CHECK(species_to_character(ones) == GhostVector::one(Ring::RK, ctx));
  CHECK(character_to_brauer(GhostVector::one(Ring::RK, ctx)) ==
        GhostVector::one(Ring::RF, ctx));
}

TEST_CASE("species to brauer pulls the cyclic-subgroup pair values") {
  auto ctx = make_context(Group::named("S3"), 3);
  // species values 7 at (1,1), -1 at each transposition pair, 0 elsewhere
  std::vector<CycInt> vals(6, CycInt::zero(2));
  vals[0] = CycInt::integer(2, 7);
  for (std::size_t k = 0; k < ctx->pairs.pairs.size(); ++k)
    if (ctx->subgroups.all[ctx->pairs.pairs[k].subgroup].order() == 2)
      vals[k] = CycInt::integer(2, -1);
  GhostVector t(Ring::T, ctx, std::move(vals));
  GhostVector rf = species_to_brauer(t);
  REQUIRE(rf.size() == 4);
  CHECK(rf.at(0) == CycInt::integer(2, 7));  // identity reads (1,1)
  for (int i = 1; i < 4; ++i) CHECK(rf.at(i) == CycInt::integer(2, -1));
}

TEST_CASE("species lookups at p-singular elements use the p-regular part") {
  auto ctx = make_context(Group::named("C2"), 2);
  // T-values (a at (1,1), b at (C2,1)); the character value at the involution
  // reads the (C2, 1) entry
  GhostVector t(Ring::T, ctx, {CycInt::integer(1, 5), CycInt::integer(1, 7)});
  GhostVector rk = species_to_character(t);
  CHECK(rk.at(0) == CycInt::integer(2, 5));
  CHECK(rk.at(1) == CycInt::integer(2, 7));
}

TEST_CASE("ghost diagram commutes on random vectors") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"C2", "S3", "A4", "D8"})
    for (int p : {2, 3}) {
      auto ctx = make_context(Group::named(name), p);
      for (int t = 0; t < 10; ++t) {
        GhostVector v = random_invariant(Ring::T, ctx, rng, 4);
        CHECK(character_to_brauer(species_to_character(v)) == species_to_brauer(v));
      }
    }
}

TEST_CASE("duality") {
  std::mt19937_64 rng(99);
  auto ctx = make_context(Group::named("S3"), 3);
  for (Ring r : {Ring::B, Ring::T, Ring::RK, Ring::RF})
    for (int t = 0; t < 8; ++t) {
      GhostVector a = random_invariant(r, ctx, rng, 3);
      CHECK(a.dual().dual() == a);
      GhostVector b = random_invariant(r, ctx, rng, 3);
      CHECK((a * b).dual() == a.dual() * b.dual());
    }
  // integer vectors are self-dual
  GhostVector ones = GhostVector::one(Ring::RK, ctx);
  CHECK(ones.dual() == ones);
  // dual commutes with the connecting maps
  for (int t = 0; t < 8; ++t) {
    GhostVector v = random_invariant(Ring::T, ctx, rng, 3);
    CHECK(species_to_character(v).dual() == species_to_character(v.dual()));
    CHECK(species_to_brauer(v).dual() == species_to_brauer(v.dual()));
    GhostVector w = random_invariant(Ring::RK, ctx, rng, 3);
    CHECK(character_to_brauer(w).dual() == character_to_brauer(w.dual()));
  }
  // coefficientwise duality equals value reindexing along inversion
  for (int t = 0; t < 8; ++t) {
    GhostVector w = random_invariant(Ring::RK, ctx, rng, 3);
    GhostVector d = w.dual();
    for (int x = 0; x < ctx->group->order(); ++x)
      CHECK(d.at(x) == w.at(ctx->group->inverse(x)));
  }
}

TEST_CASE("decomposition surjectivity via the p-regular lift") {
  for (const char* name : {"C2", "S3", "A4"})
    for (int p : {2, 3}) {
      auto ctx = make_context(Group::named(name), p);
      const IntMat& basis = ctx->invariant_basis(Ring::RF);
      for (const auto& row : basis) {
        GhostVector v = unflatten(Ring::RF, ctx, row);
        // lift by reading the value at the p-regular part, then restrict back
        std::vector<CycInt> lifted;
        for (int x = 0; x < ctx->group->order(); ++x) {
          auto [xp, xpp] = p_parts(ctx->group, x, p);
          (void)xp;
          lifted.push_back(v.at(ctx->p_regular_pos[xpp]).embedded(ctx->e));
        }
        GhostVector w(Ring::RK, ctx, std::move(lifted));
        CHECK(validate_invariance(w).ok);
        CHECK(character_to_brauer(w) == v);
      }
    }
}

TEST_CASE("error paths") {
  auto ctx = make_context(Group::named("C6"), 2, 12);  // e = 12, h = 3
  // a character vector that is not invariant can carry a p-regular value
  // outside the p-regular subring; restriction must reject it
  std::vector<CycInt> vals(6, CycInt::one(12));
  vals[ctx->p_regular[1]] = CycInt::root(12, 1);  // zeta_12 is not in Z[zeta_3]
  GhostVector bad(Ring::RK, ctx, std::move(vals));
  CHECK_THROWS_AS(character_to_brauer(bad), MathCheckError);

  // mismatched contexts cannot be combined
  auto other = make_context(Group::named("C6"), 3, 12);
  CHECK_THROWS(GhostVector::one(Ring::T, ctx) + GhostVector::one(Ring::T, other));

  // pair lookups demand a generating coset
  auto s3 = make_context(Group::named("S3"), 3);
  int s3_idx = s3->subgroup_index({0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(s3->pair_position(s3_idx, 0), MathCheckError);  // identity coset of C3
  // and a hypo-elementary subgroup: the Klein subgroup fails at p = 3
  auto a4 = make_context(Group::named("A4"), 3);
  int v4_idx = -1;
  for (std::size_t i = 0; i < a4->subgroups.all.size(); ++i) {
    const Subgroup& s = a4->subgroups.all[i];
    bool cyclic = false;
    for (int x : s.elems)
      if (a4->group->element_order(x) == s.order()) cyclic = true;
    if (s.order() == 4 && !cyclic) v4_idx = static_cast<int>(i);
  }
  REQUIRE(v4_idx >= 0);
  CHECK_THROWS_AS(a4->pair_position(v4_idx, 0), MathCheckError);

  // wrong value ring
  CHECK_THROWS(GhostVector(Ring::T, ctx, std::vector<CycInt>(
                                             ctx->index_count(Ring::T), CycInt::one(12))));
}

TEST_CASE("ghost json round trip") {
  auto ctx = make_context(Group::named("S3"), 3);
  std::mt19937_64 rng(5);
  for (Ring r : {Ring::B, Ring::T, Ring::RK, Ring::RF}) {
    GhostVector v = random_invariant(r, ctx, rng, 3);
    Json j = ghost_to_json(v);
    GhostVector back = ghost_from_json(j, ctx);
    CHECK(back == v);
  }
}
