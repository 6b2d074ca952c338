#include "repring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repring {

namespace {

std::mutex cache_mutex;
std::map<int, IntVec> phi_cache;                        // e -> Phi_e coefficients
std::map<int, std::vector<IntVec>> power_cache;         // e -> zeta^k reduced, k < e
std::map<std::pair<int, long long>, IntMat> galois_cache;
std::map<std::pair<int, int>, RowHnf> descent_cache;    // (order, smaller)

// Exact division of a by monic b, both constant-first. Throws on remainder.
IntVec divide_monic(IntVec a, const IntVec& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("degree underflow");
  IntVec q(a.size() - db, 0);
  for (std::size_t d = a.size(); d-- > db;) {
    Int c = a[d];
    if (c == 0) continue;
    q[d - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[d - db + j] -= c * b[j];
  }
  for (const auto& x : a)
    if (x != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

const IntVec& phi_locked(int e) {
  auto it = phi_cache.find(e);
  if (it != phi_cache.end()) return it->second;
  for (int d = 1; d <= e; ++d) {
    if (e % d != 0 || phi_cache.count(d)) continue;
    IntVec poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;  // x^d - 1
    for (int dd = 1; dd < d; ++dd)
      if (d % dd == 0) poly = divide_monic(std::move(poly), phi_cache.at(dd));
    phi_cache.emplace(d, std::move(poly));
  }
  return phi_cache.at(e);
}

const std::vector<IntVec>& powers_locked(int e) {
  auto it = power_cache.find(e);
  if (it != power_cache.end()) return it->second;
  const IntVec& phi = phi_locked(e);
  const std::size_t deg = phi.size() - 1;
  std::vector<IntVec> pows;
  pows.reserve(e);
  for (int k = 0; k < e; ++k) {
    if (static_cast<std::size_t>(k) < deg) {
      IntVec v(deg, 0);
      v[k] = 1;
      pows.push_back(std::move(v));
    } else {
      // zeta^k = zeta * zeta^(k-1), reduced
      IntVec prev = pows[k - 1];
      IntVec v(deg, 0);
      for (std::size_t j = 0; j + 1 < deg; ++j) v[j + 1] = prev[j];
      const Int top = prev[deg - 1];
      if (top != 0)
        for (std::size_t j = 0; j < deg; ++j) v[j] -= top * phi[j];
      pows.push_back(std::move(v));
    }
  }
  return power_cache.emplace(e, std::move(pows)).first->second;
}

IntVec reduce_mod_phi(IntVec a, const IntVec& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t d = a.size(); d-- > deg;) {
    Int c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    for (std::size_t j = 0; j < deg; ++j) a[d - deg + j] -= c * phi[j];
  }
  a.resize(deg);
  return a;
}

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi needs n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntVec& cyclotomic_polynomial(int e) {
  if (e <= 0) throw std::invalid_argument("order must be positive");
  std::lock_guard lock(cache_mutex);
  return phi_locked(e);
}

long long mod_inverse(long long a, long long m) {
  Xgcd d = xgcd(Int(a), Int(m));
  if (d.g != 1) throw std::invalid_argument("not invertible");
  Int r = d.x % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

CycInt CycInt::zero(int order) {
  CycInt z;
  z.order_ = order;
  z.coeffs_.assign(euler_phi(order), 0);
  return z;
}

CycInt CycInt::one(int order) { return integer(order, 1); }

CycInt CycInt::integer(int order, Int n) {
  CycInt z = zero(order);
  z.coeffs_[0] = std::move(n);
  return z;
}

CycInt CycInt::root(int order, long long power) {
  long long k = power % order;
  if (k < 0) k += order;
  std::lock_guard lock(cache_mutex);
  const auto& pows = powers_locked(order);
  CycInt z;
  z.order_ = order;
  z.coeffs_ = pows[static_cast<std::size_t>(k)];
  return z;
}

CycInt CycInt::from_coeffs(int order, IntVec coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(euler_phi(order)))
    throw std::invalid_argument("coefficient length mismatch");
  CycInt z;
  z.order_ = order;
  z.coeffs_ = std::move(coeffs);
  return z;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Int> CycInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("order mismatch in +");
  CycInt z = a;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] += b.coeffs_[i];
  return z;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("order mismatch in -");
  CycInt z = a;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] -= b.coeffs_[i];
  return z;
}

CycInt CycInt::operator-() const {
  CycInt z = *this;
  for (auto& c : z.coeffs_) c = -c;
  return z;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("order mismatch in *");
  const std::size_t n = a.coeffs_.size();
  IntVec conv(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  const IntVec& phi = cyclotomic_polynomial(a.order_);
  CycInt z;
  z.order_ = a.order_;
  z.coeffs_ = reduce_mod_phi(std::move(conv), phi);
  return z;
}

CycInt& CycInt::operator+=(const CycInt& b) { return *this = *this + b; }
CycInt& CycInt::operator*=(const CycInt& b) { return *this = *this * b; }

CycInt operator*(const Int& n, const CycInt& a) {
  IntVec c = a.coeffs();
  for (auto& x : c) x *= n;
  return CycInt::from_coeffs(a.order(), std::move(c));
}

CycInt CycInt::galois(long long i) const {
  long long ii = i % order_;
  if (ii < 0) ii += order_;
  if (std::gcd(static_cast<long long>(order_), ii) != 1)
    throw std::invalid_argument("galois index not coprime to order");
  CycInt z = zero(order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    z += coeffs_[j] * root(order_, ii * static_cast<long long>(j));
  }
  return z;
}

CycInt CycInt::embedded(int bigger_order) const {
  if (bigger_order % order_ != 0)
    throw std::invalid_argument("embedding needs divisible orders");
  if (bigger_order == order_) return *this;
  const long long step = bigger_order / order_;
  CycInt z = zero(bigger_order);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    z += coeffs_[j] * root(bigger_order, step * static_cast<long long>(j));
  }
  return z;
}

std::optional<CycInt> CycInt::descended(int smaller_order) const {
  if (order_ % smaller_order != 0)
    throw std::invalid_argument("descent needs divisible orders");
  if (smaller_order == order_) return *this;
  // Build the basis-image rows outside the lock; root() locks internally.
  bool have = false;
  {
    std::lock_guard lock(cache_mutex);
    have = descent_cache.count(std::make_pair(order_, smaller_order)) > 0;
  }
  if (!have) {
    IntMat rows;
    const int sphi = euler_phi(smaller_order);
    for (int j = 0; j < sphi; ++j) {
      IntVec c(static_cast<std::size_t>(sphi), 0);
      c[static_cast<std::size_t>(j)] = 1;
      rows.push_back(CycInt::from_coeffs(smaller_order, std::move(c)).embedded(order_).coeffs());
    }
    RowHnf hnf = row_hnf(std::move(rows));
    std::lock_guard lock(cache_mutex);
    descent_cache.emplace(std::make_pair(order_, smaller_order), std::move(hnf));
  }
  std::optional<IntVec> sol;
  {
    std::lock_guard lock(cache_mutex);
    const RowHnf& solver = descent_cache.at(std::make_pair(order_, smaller_order));
    sol = solve_row_combination(solver, coeffs_);
  }
  if (!sol) return std::nullopt;
  return CycInt::from_coeffs(smaller_order, std::move(*sol));
}

std::optional<std::pair<int, int>> CycInt::signed_root() const {
  for (int k = 0; k < order_; ++k) {
    CycInt r = root(order_, k);
    if (*this == r) return std::make_pair(1, k);
    if (*this == -r) return std::make_pair(-1, k);
  }
  return std::nullopt;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Int& c = coeffs_[j];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (j == 0 || a != 1) os << a.str();
    if (j > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

const IntMat& galois_matrix(int e, long long i) {
  long long ii = i % e;
  if (ii < 0) ii += e;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(e, ii);
  auto it = galois_cache.find(key);
  if (it != galois_cache.end()) return it->second;
  const auto& pows = powers_locked(e);
  const int phi = euler_phi(e);
  IntMat m(phi, IntVec(phi, 0));
  for (int j = 0; j < phi; ++j) {
    long long k = (ii * j) % e;
    const IntVec& img = pows[static_cast<std::size_t>(k)];
    for (int r = 0; r < phi; ++r) m[r][j] = img[static_cast<std::size_t>(r)];
  }
  return galois_cache.emplace(key, std::move(m)).first->second;
}

}  // namespace repring
