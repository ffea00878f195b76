#ifndef LDERLAB_LEIBNIZ_HPP
#define LDERLAB_LEIBNIZ_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"
#include "lderlab/bracketing.hpp"

namespace lderlab {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solution space of the derivation relation for one arrangement choice,
/// flattened row-major into the dim^2 operator space.
struct DerivationSpace {
  int algebra_dim = 0;
  int order = 0;
  std::string arrangement;  // "left", "all", or a serialized tree
  Subspace space;

  int dim() const { return space.dim(); }
  bool is_full_end() const { return space.dim() == algebra_dim * algebra_dim; }
  Matrix basis_matrix(int i) const { return unflatten_matrix(space.basis_row(i), algebra_dim); }
};

struct InvertibleWitness {
  enum class Kind { explicit_inverse, none_found, certified_none };
  Kind kind = Kind::none_found;
  int order = 0;
  std::optional<Matrix> map;
  std::optional<Matrix> inverse;
  int trials = 0;           // meaningful for none_found
  std::string reason;       // meaningful for certified_none
  std::string construction; // which construction branch produced the map

  bool found() const { return kind == Kind::explicit_inverse; }
};

struct LeibnizCaps {
  int max_length = 6;       // longest product the solver will expand
  int high_order_dim = 8;   // dimension cap when the order exceeds 3
};

struct VerdictOptions {
  int max_order = 5;
  uint64_t seed = 0;
  int trials = 64;
  int coeff_box = 5;
};

struct TheoremOutcome {
  std::string id;
  std::string prediction;
  std::string observed;
  bool consistent = true;
};

struct OrderScan {
  int order = 0;
  bool skipped = false;  // cap exceeded
  int dim_left = 0;
  int dim_all = 0;
  InvertibleWitness left_witness;
  InvertibleWitness all_witness;
};

struct MoensVerdict {
  std::vector<std::string> tags;
  ChainReport power, right_power, solvable;
  bool nilpotent = false;
  std::optional<int> nilpotency_index;
  bool right_nilpotent = false;
  std::optional<int> right_nilpotency_index;
  int der_dim = 0;
  std::vector<OrderScan> orders;
  std::optional<InvertibleWitness> constructed;
  bool invertible_left_found = false;
  bool invertible_all_found = false;
  std::vector<TheoremOutcome> theorems;

  bool all_consistent() const {
    for (const auto& t : theorems)
      if (!t.consistent) return false;
    return true;
  }
};

/*
 * Assembles and solves the linear systems cutting out derivation spaces of
 * every order and arrangement, searches them for invertible members, and
 * runs the structural checks built on them. One solver instance owns one
 * algebra and caches product tensors and solved spaces, so repeated
 * queries against the same algebra stay cheap. Results are values;
 * the caches never change what is returned, only how fast.
 */
class DerivationSolver {
 public:
  explicit DerivationSolver(Algebra a, LeibnizCaps caps = {});

  const Algebra& algebra() const { return a_; }

  // Checks relation (sum-of-insertions) for d on every basis tuple of f.
  bool is_f_leibniz_derivation(const BracketTree& f, const Matrix& d);

  DerivationSpace f_lder_space(const BracketTree& f);
  DerivationSpace der_space();
  DerivationSpace left_lder_space(int n);
  // Intersection over every arrangement of length n.
  DerivationSpace lder_space(int n);

  // Random search for an invertible member; a deterministic skew-family
  // certificate upgrades a miss to certified-none when it applies.
  InvertibleWitness contains_invertible(const DerivationSpace& s, uint64_t seed, int trials,
                                        int coeff_box = 5);

  // Eigenvalue-1/eigenvalue-q split along the power filtration, verified;
  // falls back to the identity map at the nilpotency index when the split
  // candidate fails the defining relation. Requires a nilpotent algebra.
  InvertibleWitness construct_invertible_lder();

  // d^k of a length-n left product against the multinomial expansion.
  bool verify_leibniz_rule(const Matrix& d, int n, int k);

  // LDer at left length s+1 contained in left length t+1; requires s | t.
  bool check_order_monotonicity(int s, int t);

  static bool check_commutator_closure(const DerivationSpace& s);

  // d(R) inside R for every basis element d of s; R must be an ideal.
  bool radical_invariance_check(const Subspace& radical, const DerivationSpace& s);

  // Left products of generalized eigenspaces land in the eigenspace of the
  // eigenvalue sum. Requires d in LDer_l(n) and a fully rational spectrum.
  bool eigenspace_product_check(const Matrix& d, int n);

  MoensVerdict moens_verdict(const VerdictOptions& options = {});

 private:
  struct Tensor {
    int length = 0;
    size_t size = 0;                // dim^length
    std::vector<size_t> strides;    // strides[j] for slot j
    std::vector<Vec> values;
    std::vector<uint8_t> zero;      // 1 when values[i] is the zero vector
    bool all_zero = true;
  };

  Algebra a_;
  LeibnizCaps caps_;
  std::map<std::string, std::shared_ptr<const Tensor>> tensors_;
  std::map<std::string, DerivationSpace> space_cache_;

  void check_caps(int length) const;
  std::shared_ptr<const Tensor> tensor_for(const BracketTree& f);
  // Solutions of the f-relation inside `within` (pass the full operator
  // space for an unconstrained solve).
  Subspace solve_f_within(const BracketTree& f, const Subspace& within);
};

}  // namespace lderlab

#endif
