#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace repring {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major, rectangular

IntMat identity_mat(std::size_t n);
IntMat transpose(const IntMat& m);
Int floor_div(const Int& a, const Int& b);

// g = gcd(a,b) >= 0 together with x,y such that a*x + b*y = g.
struct Xgcd {
  Int g, x, y;
};
Xgcd xgcd(Int a, Int b);

// Row-style Hermite normal form: u * input = h with u unimodular, pivots
// positive, entries above each pivot reduced into [0, pivot).
struct RowHnf {
  IntMat h;
  IntMat u;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  std::size_t cols = 0;
};

RowHnf row_hnf(IntMat m);

// Basis (as rows) of { x : m * x = 0 }.
IntMat right_kernel_basis(const IntMat& m);

// Nonzero elementary divisors d1 | d2 | ... of m.
std::vector<Int> smith_divisors(IntMat m);

// Coefficients c with c * original = v when v lies in the row span.
std::optional<IntVec> solve_row_combination(const RowHnf& hnf, const IntVec& v);

IntVec mat_vec_rows(const IntMat& rows, const IntVec& coeffs);  // coeffs * rows

}  // namespace repring
