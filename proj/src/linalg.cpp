#include "lderlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lderlab {

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

Matrix::Matrix(int rows, int cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != size_t(rows) * cols) throw std::invalid_argument("Matrix: data size mismatch");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw std::invalid_argument("Matrix: ragged rows");
    for (size_t c = 0; c < rows[r].size(); ++c) m(int(r), int(c)) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  }
  return m;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("Matrix: apply size mismatch");
  Vec out(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::pow(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix: pow of non-square");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of non-square");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

// ---------------------------------------------------------------------------
// RrefBuilder
// ---------------------------------------------------------------------------

bool RrefBuilder::add_row(Vec row) {
  if (int(row.size()) != cols_) throw std::invalid_argument("RrefBuilder: row width mismatch");
  // Eliminate against current pivots.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& f = row[pivots_[i]];
    if (f.is_zero()) continue;
    Rational factor = f;  // pivot rows have leading entry 1
    const Vec& p = rows_[i];
    for (int c = pivots_[i]; c < cols_; ++c) {
      if (!p[c].is_zero()) row[c] -= factor * p[c];
    }
  }
  int lead = -1;
  for (int c = 0; c < cols_; ++c) {
    if (!row[c].is_zero()) {
      lead = c;
      break;
    }
  }
  if (lead < 0) return false;
  Rational inv = row[lead].inverse();
  for (int c = lead; c < cols_; ++c) {
    if (!row[c].is_zero()) row[c] *= inv;
  }
  // Back-substitute into existing rows, keep sorted by pivot.
  for (size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][lead];
    if (f.is_zero()) continue;
    for (int c = lead; c < cols_; ++c) {
      if (!row[c].is_zero()) rows_[i][c] -= f * row[c];
    }
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

Matrix RrefBuilder::to_matrix() const { return Matrix::from_rows(rows_); }

std::vector<Vec> RrefBuilder::nullspace_rows() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    Vec v(cols_);
    v[j] = Rational(1);
    for (size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::span_of(int ambient_dim, const std::vector<Vec>& vectors) {
  RrefBuilder b(ambient_dim);
  for (const auto& v : vectors) b.add_row(v);
  Subspace s(ambient_dim);
  if (b.rank() > 0) s.basis_ = b.to_matrix();
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("Subspace: vector length mismatch");
  Vec residual = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int pivot = -1;
    for (int k = 0; k < ambient_; ++k) {
      if (!basis_(r, k).is_zero()) {
        pivot = k;
        break;
      }
    }
    if (pivot < 0 || residual[pivot].is_zero()) continue;
    Rational f = residual[pivot];
    for (int k = pivot; k < ambient_; ++k) {
      if (!basis_(r, k).is_zero()) residual[k] -= f * basis_(r, k);
    }
  }
  for (const auto& x : residual)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_row(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

std::pair<Matrix, int> rref(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (int r = 0; r < m.rows(); ++r) b.add_row(m.row(r));
  Matrix out(m.rows(), m.cols());
  for (int r = 0; r < b.rank(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(r, c) = b.rows()[r][c];
  }
  return {out, b.rank()};
}

Subspace nullspace(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (int r = 0; r < m.rows(); ++r) b.add_row(m.row(r));
  return Subspace::span_of(m.cols(), b.nullspace_rows());
}

std::pair<Rational, std::optional<Matrix>> det_and_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_and_inverse: non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return {Rational(0), std::nullopt};
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
      det = -det;
    }
    Rational p = a(col, col);
    det *= p;
    Rational pinv = p.inverse();
    for (int c = 0; c < n; ++c) {
      a(col, c) *= pinv;
      inv(col, c) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return {det, inv};
}

std::vector<Rational> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  const int n = m.rows();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = Rational(1);
  Matrix b = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    Matrix ak = m * b;
    Rational c = -(ak.trace() / Rational(k));
    coeffs[n - k] = c;
    b = ak;
    for (int i = 0; i < n; ++i) b(i, i) += c;
  }
  return coeffs;
}

namespace {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [&](uint64_t a, uint64_t b) { return static_cast<uint64_t>((__int128)a * b % n); };
  auto powmod = [&](uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  auto mulmod = [&](uint64_t a, uint64_t b) { return static_cast<uint64_t>((__int128)a * b % n); };
  for (uint64_t c = 1;; ++c) {
    auto f = [&](uint64_t x) { return (mulmod(x, x) + c) % n; };
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

// All positive divisors of |v|. Requires |v| to fit in 64 bits.
std::vector<BigInt> divisors_of(const BigInt& v) {
  BigInt a = v.sign() < 0 ? -v : v;
  if (!a.fits_i128() || a.to_i128() > (__int128)UINT64_MAX) {
    throw std::runtime_error("rational_roots: coefficient too large to factor");
  }
  uint64_t n = static_cast<uint64_t>(a.to_i128());
  std::vector<uint64_t> primes;
  factor_u64(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<uint64_t> divs{1};
  size_t i = 0;
  while (i < primes.size()) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    size_t count = j - i;
    size_t old = divs.size();
    uint64_t pk = 1;
    for (size_t e = 1; e <= count; ++e) {
      bool overflow = pk > UINT64_MAX / primes[i];
      if (overflow) break;
      pk *= primes[i];
      for (size_t t = 0; t < old; ++t) {
        if (divs[t] <= UINT64_MAX / pk) divs.push_back(divs[t] * pk);
      }
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  std::vector<BigInt> out;
  out.reserve(divs.size());
  for (uint64_t d : divs) out.push_back(BigInt::from_i128(d));
  return out;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// Divide by (t - root); assumes root is an exact root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  std::vector<Rational> q(coeffs.size() - 1);
  Rational carry = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = coeffs[i] + carry * root;
  }
  return q;
}

}  // namespace

RationalSpectrum rational_roots(const std::vector<Rational>& coeffs_in) {
  std::vector<Rational> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  RationalSpectrum out;
  out.complete = true;
  if (coeffs.size() <= 1) return out;  // constant: no roots to report
  int degree = static_cast<int>(coeffs.size()) - 1;

  // Factor out t^k.
  int zero_mult = 0;
  while (coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
  if (coeffs.size() <= 1) return out;

  // Clear denominators to integer coefficients.
  BigInt lcm(1LL);
  for (const auto& c : coeffs) {
    BigInt d = c.denominator();
    lcm = lcm / BigInt::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ic;
  ic.reserve(coeffs.size());
  for (const auto& c : coeffs) ic.push_back(c.numerator() * (lcm / c.denominator()));

  std::vector<BigInt> ps = divisors_of(ic.front());
  std::vector<BigInt> qs = divisors_of(ic.back());
  std::vector<Rational> candidates;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      Rational base = Rational::parse(p.to_string() + "/" + q.to_string());
      candidates.push_back(base);
      candidates.push_back(-base);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Rational& a, const Rational& b) { return a < b; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Rational> current = coeffs;
  for (const auto& cand : candidates) {
    if (current.size() <= 1) break;
    int mult = 0;
    while (current.size() > 1 && eval_poly(current, cand).is_zero()) {
      current = deflate(current, cand);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(cand, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int total = 0;
  for (const auto& r : out.roots) total += r.second;
  out.complete = (total == degree);
  return out;
}

RationalSpectrum rational_eigenvalues(const Matrix& m) { return rational_roots(char_poly(m)); }

Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("generalized_eigenspace: non-square matrix");
  Matrix shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return nullspace(shifted.pow(m.rows()));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
  RrefBuilder b(u.ambient_dim());
  for (int i = 0; i < u.dim(); ++i) b.add_row(u.basis_row(i));
  for (int i = 0; i < v.dim(); ++i) b.add_row(v.basis_row(i));
  return Subspace::span_of(u.ambient_dim(), b.rows());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
  const int n = u.ambient_dim();
  const int du = u.dim(), dv = v.dim();
  if (du == 0 || dv == 0) return Subspace::zero(n);
  // Kernel of the stacked-basis system: a*Bu + b*Bv = 0 gives a*Bu in both spans.
  Matrix stacked(n, du + dv);
  for (int i = 0; i < du; ++i)
    for (int c = 0; c < n; ++c) stacked(c, i) = u.basis()(i, c);
  for (int i = 0; i < dv; ++i)
    for (int c = 0; c < n; ++c) stacked(c, du + i) = v.basis()(i, c);
  Subspace ker = nullspace(stacked);
  std::vector<Vec> vectors;
  for (int k = 0; k < ker.dim(); ++k) {
    Vec coeff = ker.basis_row(k);
    Vec w(n);
    for (int i = 0; i < du; ++i) {
      if (coeff[i].is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (!u.basis()(i, c).is_zero()) w[c] += coeff[i] * u.basis()(i, c);
      }
    }
    vectors.push_back(std::move(w));
  }
  return Subspace::span_of(n, vectors);
}

}  // namespace lderlab
