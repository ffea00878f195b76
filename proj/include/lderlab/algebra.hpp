#ifndef LDERLAB_ALGEBRA_HPP
#define LDERLAB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lderlab/linalg.hpp"

namespace lderlab {

/*
 * A finite-dimensional algebra given by structure constants on a fixed
 * basis: table(i, j) holds the coordinates of e_i * e_j. No identity is
 * assumed; everything downstream (operators, chains, forms) is derived
 * from this table by exact linear algebra.
 */
class Algebra {
 public:
  Algebra() : dim_(0) {}
  Algebra(std::string name, std::vector<std::string> basis_labels);
  Algebra(std::string name, int dim);  // labels e1..em

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Vec& table(int i, int j) const { return table_[size_t(i) * dim_ + j]; }
  void set_table(int i, int j, Vec value);
  // Single structure constant: e_i * e_j += c * e_k.
  void add_entry(int i, int j, int k, const Rational& c);

  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_op(const Vec& x) const;   // a -> x a
  Matrix right_op(const Vec& x) const;  // a -> a x
  Matrix left_op_of_basis(int i) const;
  Matrix right_op_of_basis(int i) const;

  Vec basis_vector(int i) const;
  Subspace full_space() const { return Subspace::full(dim_); }

  bool operator==(const Algebra& o) const { return dim_ == o.dim_ && table_ == o.table_; }

  // Deterministic fingerprint of dim + table, used as a cache key.
  std::string table_key() const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;  // (i*dim + j) -> coordinates of e_i e_j
};

enum class ChainKind { power, right_power, solvable };

/// One descending chain of subspaces with its stabilization data. The index,
/// when present, is the first step whose subspace is zero (1-based).
struct ChainReport {
  ChainKind kind;
  std::vector<int> dims;  // dims[k] = dim of step k+1
  int stabilized_at = 0;  // 1-based step at which the chain stopped moving
  int terminal_dim = 0;
  std::optional<int> index;
};

struct BilinearForm {
  Matrix gram;
  std::string label;
};

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

ChainReport chain(const Algebra& a, ChainKind kind);

// Subspaces of the chain, steps 1..max_steps; entries past stabilization
// repeat the stabilized value.
std::vector<Subspace> chain_subspaces(const Algebra& a, ChainKind kind, int max_steps);

// The n-th power subspace A^n (full power chain).
Subspace power_subspace(const Algebra& a, int n);

// Derived series of a subspace: B, B^2, (B^2)^2, ... reaches zero iff solvable.
bool subspace_is_solvable(const Algebra& a, const Subspace& b);

bool is_ideal(const Algebra& a, const Subspace& b);

struct NilpotencyResult {
  bool nilpotent;
  std::optional<int> index;  // present iff nilpotent
};

// Cross-checked nilpotency: the power chain and the multiplication-algebra
// chain must agree; disagreement throws (it would indicate a bug).
NilpotencyResult is_nilpotent(const Algebra& a);

// Associative closure of all left/right multiplication operators, as a
// subspace of the dim^2 operator space (row-major flattening).
Subspace multiplication_algebra(const Algebra& a);

// Span of pairwise operator compositions u v, u in U, v in V (flattened).
Subspace operator_product_span(const Subspace& u, const Subspace& v);

Vec flatten_matrix(const Matrix& m);
Matrix unflatten_matrix(const Vec& v, int dim);

// J(x,y,z) = (xy)z + (zx)y + (yz)x; requires an anticommutative algebra.
Vec jacobian(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

// Elements z with J(z, A, A) = J(A, z, A) = J(A, A, z) = 0.
Subspace lie_center(const Algebra& a);

// chi(x, y) = Tr(R_x R_y).
BilinearForm killing_form(const Algebra& a);

struct RadicalOutcome {
  std::optional<Subspace> radical;
  std::string error;  // nonempty iff the criterion's validation failed
};

// Orthogonal complement of A^2 under the Killing form, post-validated as a
// solvable ideal with nondegenerate quotient form. Requires a Malcev algebra.
RadicalOutcome form_radical_malcev(const Algebra& a);

// Kernel of the trace form tau(x,y) = Tr(L_{xy}), same validation discipline.
// Requires a Jordan algebra.
RadicalOutcome form_radical_jordan(const Algebra& a);

// Quotient by an ideal, coordinates taken on the non-pivot columns of the
// ideal's basis.
Algebra quotient_algebra(const Algebra& a, const Subspace& ideal);

// Two-sided unit element, when one exists.
std::optional<Vec> unit_element(const Algebra& a);

Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace lderlab

#endif
