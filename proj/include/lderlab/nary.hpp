#ifndef LDERLAB_NARY_HPP
#define LDERLAB_NARY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"
#include "lderlab/bracketing.hpp"

namespace lderlab {

/*
 * An n-ary algebra with a sparse structure table. When the algebra is
 * flagged anticommutative, only the sorted representative of each support
 * tuple is stored (repeated indices are zero by convention) and other
 * orderings are reconstructed through permutation parity, so the table is
 * alternating by construction.
 */
class NAryAlgebra {
 public:
  NAryAlgebra(std::string name, int arity, int dim, bool anticommutative);
  NAryAlgebra(std::string name, int arity, std::vector<std::string> basis_labels, bool anticommutative);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  int dim() const { return dim_; }
  bool anticommutative() const { return anticommutative_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::map<std::vector<int>, Vec>& entries() const { return entries_; }

  // Anticommutative tables require strictly increasing argument tuples here.
  void set_entry(std::vector<int> args, Vec value);

  Vec product_of_basis(const std::vector<int>& args) const;
  Vec product(const std::vector<Vec>& args) const;

  Vec basis_vector(int i) const;

 private:
  std::string name_;
  int arity_;
  int dim_;
  bool anticommutative_;
  std::vector<std::string> labels_;
  std::map<std::vector<int>, Vec> entries_;
};

// Induced n-ary algebra of a bracket arrangement: the table records every
// basis product of f evaluated in a.
NAryAlgebra from_bracketing(const Algebra& a, const BracketTree& f);

Subspace nary_subspace_product(const NAryAlgebra& b, const std::vector<Subspace>& factors);

bool is_nary_derivation(const NAryAlgebra& b, const Matrix& d);

// Kernel of the n-ary derivation constraints in the dim^2 operator space.
Subspace nary_derivation_space(const NAryAlgebra& b);

struct NChainReport {
  std::vector<int> dims;
  int stabilized_at = 0;
  bool n_solvable = false;
  std::optional<int> index;  // first zero step, when reached
};

NChainReport n_solvable_chain(const NAryAlgebra& b);

bool is_nary_ideal(const NAryAlgebra& b, const Subspace& ideal);

// n-ary Jacobi identity on basis tuples. Requires an anticommutative table;
// both sides are alternating multilinear in the x-block and in the y-block,
// so strictly increasing tuples decide the identity.
bool filippov_check(const NAryAlgebra& b);

}  // namespace lderlab

#endif
