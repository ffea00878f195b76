#ifndef LDERLAB_LINALG_HPP
#define LDERLAB_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lderlab/rational.hpp"

namespace lderlab {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<Rational> data);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  Matrix pow(int k) const;  // square only, k >= 0

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Rational trace() const;
  const std::vector<Rational>& data() const { return data_; }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/*
 * Incremental reduced-row-echelon accumulator.
 *
 * Rows are fed one at a time; each is eliminated against the current
 * pivots and, when a residual survives, becomes a new pivot row (fully
 * back-substituted, leading entry 1, pivot columns kept increasing).
 * The final state is the canonical RREF of the row span, independent of
 * insertion order.
 */
class RrefBuilder {
 public:
  explicit RrefBuilder(int cols) : cols_(cols) {}

  // Returns true when the row increased the rank.
  bool add_row(Vec row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  Matrix to_matrix() const;
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Kernel of the accumulated row system, as RREF basis rows.
  std::vector<Vec> nullspace_rows() const;

 private:
  int cols_;
  std::vector<Vec> rows_;    // sorted by pivot column
  std::vector<int> pivots_;  // strictly increasing
};

/// Row space of a matrix in reduced row-echelon form; the canonical
/// representation of a subspace of an ambient coordinate space.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(int ambient_dim);
  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  Matrix basis_;
};

// Reduced row-echelon form and rank.
std::pair<Matrix, int> rref(const Matrix& m);

// Kernel of m as a subspace of the column space.
Subspace nullspace(const Matrix& m);

// Exact determinant; inverse present iff det != 0. Throws on non-square input.
std::pair<Rational, std::optional<Matrix>> det_and_inverse(const Matrix& m);

// Monic characteristic polynomial, ascending coefficients c[0] + c[1] t + ...
// Computed by the Faddeev-LeVerrier recurrence (divisions only by 1..n).
std::vector<Rational> char_poly(const Matrix& m);

struct RationalSpectrum {
  std::vector<std::pair<Rational, int>> roots;  // (eigenvalue, algebraic multiplicity)
  bool complete;  // multiplicities account for the full degree
};

// All rational eigenvalues with multiplicity, via the rational-root theorem
// applied to the integer-cleared characteristic polynomial.
RationalSpectrum rational_eigenvalues(const Matrix& m);

// ker (m - lambda I)^dim, the full generalized eigenspace.
Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Rational roots with multiplicity of an arbitrary rational polynomial
// (ascending coefficients). Exposed for reuse by the spectrum code and tests.
RationalSpectrum rational_roots(const std::vector<Rational>& coeffs);

}  // namespace lderlab

#endif
