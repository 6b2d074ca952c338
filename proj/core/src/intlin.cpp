#include "repring/intlin.hpp"

#include <stdexcept>
#include <utility>

namespace repring {

IntMat identity_mat(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Xgcd xgcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * s;
    old_s = std::exchange(s, tmp);
    tmp = old_t - q * t;
    old_t = std::exchange(t, tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

namespace {

void check_rect(const IntMat& m) {
  for (const auto& row : m)
    if (row.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
}

// Unimodular 2-row transform making h[j][col] zero using h[i][col].
void zero_entry(IntMat& h, IntMat& u, std::size_t i, std::size_t j, std::size_t col) {
  const Int a = h[i][col], b = h[j][col];
  if (b == 0) return;
  Xgcd d = xgcd(a, b);
  Int p = a / d.g, q = b / d.g;
  const std::size_t n = h[i].size();
  for (std::size_t k = 0; k < n; ++k) {
    Int top = d.x * h[i][k] + d.y * h[j][k];
    Int bot = -q * h[i][k] + p * h[j][k];
    h[i][k] = std::move(top);
    h[j][k] = std::move(bot);
  }
  const std::size_t un = u[i].size();
  for (std::size_t k = 0; k < un; ++k) {
    Int top = d.x * u[i][k] + d.y * u[j][k];
    Int bot = -q * u[i][k] + p * u[j][k];
    u[i][k] = std::move(top);
    u[j][k] = std::move(bot);
  }
}

}  // namespace

RowHnf row_hnf(IntMat m) {
  check_rect(m);
  RowHnf out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  out.cols = cols;
  out.u = identity_mat(rows);
  out.h = std::move(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && out.h[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = piv + 1; j < rows; ++j)
      if (out.h[j][col] != 0) zero_entry(out.h, out.u, piv, j, col);
    std::swap(out.h[piv], out.h[r]);
    std::swap(out.u[piv], out.u[r]);
    if (out.h[r][col] < 0) {
      for (auto& x : out.h[r]) x = -x;
      for (auto& x : out.u[r]) x = -x;
    }
    const Int& d = out.h[r][col];
    for (std::size_t j = 0; j < r; ++j) {
      if (out.h[j][col] == 0) continue;
      Int q = floor_div(out.h[j][col], d);
      if (q == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) out.h[j][k] -= q * out.h[r][k];
      for (std::size_t k = 0; k < out.u[j].size(); ++k) out.u[j][k] -= q * out.u[r][k];
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMat right_kernel_basis(const IntMat& m) {
  IntMat t = transpose(m);
  if (t.empty()) {
    // zero map out of Z^cols: kernel is everything
    if (m.empty()) return {};
    return identity_mat(m[0].size());
  }
  std::size_t n = t.size();  // = cols of m
  RowHnf hnf = row_hnf(std::move(t));
  IntMat basis;
  for (std::size_t i = hnf.rank; i < n; ++i) basis.push_back(hnf.u[i]);
  return basis;
}

std::vector<Int> smith_divisors(IntMat m) {
  check_rect(m);
  if (m.empty() || m[0].empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Int> divisors;
  std::size_t t = 0;
  while (true) {
    // locate smallest nonzero entry in trailing submatrix
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (!found) break;
    std::swap(m[bi], m[t]);
    for (std::size_t i = t; i < rows; ++i) std::swap(m[i][bj], m[i][t]);

    bool clean = false;
    while (!clean) {
      // clear column t
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          Int q = m[i][t] / m[t][t];
          if (q != 0)
            for (std::size_t k = t; k < cols; ++k) m[i][k] -= q * m[t][k];
          if (m[i][t] != 0) std::swap(m[i], m[t]);
        }
      }
      // clear row t
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          Int q = m[t][j] / m[t][t];
          if (q != 0)
            for (std::size_t k = t; k < rows; ++k) m[k][j] -= q * m[k][t];
          if (m[t][j] != 0)
            for (std::size_t k = t; k < rows; ++k) std::swap(m[k][j], m[k][t]);
        }
      }
      clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (m[i][t] != 0) clean = false;
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
          }
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    divisors.push_back(m[t][t]);
    ++t;
    if (t >= rows || t >= cols) {
      // trailing entries beyond the square part must already be zero
      break;
    }
  }
  return divisors;
}

std::optional<IntVec> solve_row_combination(const RowHnf& hnf, const IntVec& v) {
  if (v.size() != hnf.cols) throw std::invalid_argument("dimension mismatch");
  IntVec w = v;
  IntVec q(hnf.rank, 0);
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    std::size_t col = hnf.pivot_cols[k];
    const Int& d = hnf.h[k][col];
    if (w[col] % d != 0) {
      // pivot does not divide: might still clear later? no: earlier columns of
      // h rows k'.. > are zero at col, so this coordinate is final.
      return std::nullopt;
    }
    Int c = w[col] / d;
    if (c != 0)
      for (std::size_t j = 0; j < hnf.cols; ++j) w[j] -= c * hnf.h[k][j];
    q[k] = std::move(c);
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  IntVec coeffs(hnf.u.empty() ? 0 : hnf.u[0].size(), 0);
  for (std::size_t k = 0; k < hnf.rank; ++k)
    if (q[k] != 0)
      for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += q[k] * hnf.u[k][j];
  return coeffs;
}

IntVec mat_vec_rows(const IntMat& rows, const IntVec& coeffs) {
  if (rows.size() != coeffs.size()) throw std::invalid_argument("dimension mismatch");
  if (rows.empty()) return {};
  IntVec out(rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * rows[i][j];
  }
  return out;
}

}  // namespace repring
