#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repring/intlin.hpp"

namespace repring {

int euler_phi(int n);

// Coefficients of the e-th cyclotomic polynomial, degree phi(e), monic,
// constant term first.
const IntVec& cyclotomic_polynomial(int e);

// An element of Z[zeta_e], stored as the canonical remainder modulo the e-th
// cyclotomic polynomial. Value semantics throughout; all arithmetic exact.
class CycInt {
 public:
  CycInt() : order_(1), coeffs_(1, 0) {}

  static CycInt zero(int order);
  static CycInt one(int order);
  static CycInt integer(int order, Int n);
  static CycInt root(int order, long long power);  // zeta_order^power
  static CycInt from_coeffs(int order, IntVec coeffs);

  int order() const { return order_; }
  const IntVec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Int> as_integer() const;

  // The automorphism zeta -> zeta^i, gcd(i, order) = 1.
  CycInt galois(long long i) const;
  // Image under zeta_order -> zeta_bigger^(bigger/order); order must divide.
  CycInt embedded(int bigger_order) const;
  // Preimage in Z[zeta_smaller] when the value lies in that subring.
  std::optional<CycInt> descended(int smaller_order) const;
  // (sign, k) with value == sign * zeta^k, if the value is a signed root.
  std::optional<std::pair<int, int>> signed_root() const;

  std::string str() const;  // polynomial in z, e.g. "1 - z^2"

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;
  CycInt& operator+=(const CycInt& b);
  CycInt& operator*=(const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

 private:
  int order_;
  IntVec coeffs_;  // length phi(order_)
};

CycInt operator*(const Int& n, const CycInt& a);

// Matrix of the automorphism zeta -> zeta^i on the power basis of Z[zeta_e];
// column j holds the coefficients of galois(zeta^j).
const IntMat& galois_matrix(int e, long long i);

long long mod_inverse(long long a, long long m);

}  // namespace repring
