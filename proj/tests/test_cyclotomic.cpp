#include <doctest.h>

#include <random>
#include <repring/cyclotomic.hpp>

#include "oracles.hpp"

using namespace repring;

TEST_CASE("cyclotomic polynomials match the oracle and multiply to x^e-1") {
  for (int e = 1; e <= 60; ++e) {
    CHECK(cyclotomic_polynomial(e) == oracle::cyclotomic(e));
    IntVec prod{1};
    for (int d = 1; d <= e; ++d)
      if (e % d == 0) prod = oracle::poly_mul(prod, cyclotomic_polynomial(d));
    IntVec expect(e + 1, 0);
    expect[0] = -1;
    expect[e] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("ring operations, frozen examples") {
  // zeta_4^2 = -1
  CHECK(CycInt::root(4, 1) * CycInt::root(4, 1) == CycInt::integer(4, -1));
  // zeta_3 + zeta_3^2 = -1
  CHECK(CycInt::root(3, 1) + CycInt::root(3, 2) == CycInt::integer(3, -1));
  // (1 + zeta_5)(1 + zeta_5^4) = 1 - zeta^2 - zeta^3
  CycInt a = CycInt::one(5) + CycInt::root(5, 1);
  CycInt b = CycInt::one(5) + CycInt::root(5, 4);
  CHECK((a * b).coeffs() == IntVec{1, 0, -1, -1});
  // zeta_6 in canonical coordinates
  CHECK(CycInt::root(6, 1).coeffs() == IntVec{0, 1});
  CHECK(CycInt::root(4, 2) == CycInt::integer(4, -1));
  CHECK(CycInt::root(1, 0) == CycInt::one(1));
}

TEST_CASE("multiplication agrees with the polynomial oracle") {
  std::mt19937_64 rng(11);
  for (int e : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 20, 24, 30}) {
    const int phi = euler_phi(e);
    for (int trial = 0; trial < 8; ++trial) {
      IntVec ca(phi), cb(phi);
      for (auto& x : ca) x = static_cast<long long>(rng() % 9) - 4;
      for (auto& x : cb) x = static_cast<long long>(rng() % 9) - 4;
      CycInt a = CycInt::from_coeffs(e, ca), b = CycInt::from_coeffs(e, cb);
      CHECK((a * b).coeffs() == oracle::residue_mul(e, ca, cb));
    }
  }
}

TEST_CASE("galois action") {
  // gamma_{-1}(zeta_5) = zeta_5^4
  CHECK(CycInt::root(5, 1).galois(-1) == CycInt::root(5, 4));
  // integers are fixed
  for (int i : {1, 2, 3, 4}) CHECK(CycInt::integer(5, 7).galois(i) == CycInt::integer(5, 7));
  // gamma_2(zeta_5 + zeta_5^2) = zeta^2 + zeta^4
  CycInt z = CycInt::root(5, 1) + CycInt::root(5, 2);
  CHECK(z.galois(2).coeffs() == IntVec{-1, -1, 0, -1});
  // automorphism laws on random elements
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    IntVec c(euler_phi(12));
    for (auto& x : c) x = static_cast<long long>(rng() % 7) - 3;
    CycInt a = CycInt::from_coeffs(12, c);
    CHECK(a.galois(1) == a);
    CHECK(a.galois(5).galois(7) == a.galois(35 % 12));
    CHECK(a.galois(5).galois(5) == a.galois(25 % 12));
  }
}

TEST_CASE("embedding and descent") {
  CHECK(CycInt::integer(2, -1).embedded(4) == CycInt::integer(4, -1));
  // zeta_3 -> zeta_6^2 = zeta_6 - 1
  CHECK(CycInt::root(3, 1).embedded(6).coeffs() == IntVec{-1, 1});
  CycInt z = CycInt::root(3, 1) + CycInt::integer(3, 2);
  CHECK(z.embedded(3) == z);
  auto back = z.embedded(12).descended(3);
  REQUIRE(back.has_value());
  CHECK(*back == z);
  // something genuinely outside the subring
  CHECK(CycInt::root(12, 1).descended(3) == std::nullopt);
  CHECK(CycInt::root(12, 4).descended(3).has_value());
}

TEST_CASE("signed root decomposition") {
  auto r = (-CycInt::root(6, 2)).signed_root();
  REQUIRE(r.has_value());
  CHECK(*r == std::make_pair(-1, 2));
  CHECK((CycInt::one(5) + CycInt::root(5, 1)).signed_root() == std::nullopt);
  auto one = CycInt::one(7).signed_root();
  REQUIRE(one.has_value());
  CHECK(*one == std::make_pair(1, 0));
}

TEST_CASE("orthogonality characterizes signed roots") {
  // z * gamma_{-1}(z) == 1 exactly for signed roots
  std::mt19937_64 rng(17);
  for (int e : {3, 4, 5, 6, 8, 12}) {
    const int phi = euler_phi(e);
    int roots_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
      IntVec c(phi);
      for (auto& x : c) x = static_cast<long long>(rng() % 5) - 2;
      CycInt z = CycInt::from_coeffs(e, c);
      bool orth = z * z.galois(-1) == CycInt::one(e);
      CHECK(orth == z.signed_root().has_value());
      if (orth) ++roots_seen;
    }
    // success side explicitly
    for (int k = 0; k < e; ++k) {
      CycInt z = CycInt::root(e, k);
      CHECK(z * z.galois(-1) == CycInt::one(e));
      CHECK((-z) * (-z).galois(-1) == CycInt::one(e));
    }
    (void)roots_seen;
  }
}

TEST_CASE("string rendering") {
  CHECK(CycInt::zero(5).str() == "0");
  CHECK((CycInt::one(5) - CycInt::root(5, 2)).str() == "1 - z^2");
  CHECK(CycInt::root(5, 1).str() == "z");
  CHECK(CycInt::integer(5, -3).str() == "-3");
  CHECK((CycInt::integer(5, 2) * CycInt::root(5, 3)).str() == "2*z^3");
}
