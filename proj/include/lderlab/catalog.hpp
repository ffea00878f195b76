#ifndef LDERLAB_CATALOG_HPP
#define LDERLAB_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"
#include "lderlab/nary.hpp"

namespace lderlab {

/*
 * A recorded claim about a catalog algebra. Claims quoted from the source
 * material are tagged "cited", everything this artifact computes for itself
 * is "derived". Claims that the computation refutes are kept with
 * expect == "flag": the suite re-verifies them and reports the documented
 * discrepancy instead of silently dropping it.
 */
struct KnownFact {
  std::string id;
  std::string source;  // "cited" | "derived"
  std::string expect;  // "pass" | "flag"
  std::string detail;
};

struct CatalogEntry {
  std::string name;
  std::optional<Algebra> algebra;
  std::optional<NAryAlgebra> nary;
  std::vector<KnownFact> facts;

  bool is_nary() const { return nary.has_value(); }
};

// The five-dimensional right alternative algebra with basis {a,b,c,d,e}:
// ab = -ba = ae = -ea = db = -bd = -c, ac = d, bc = e.
CatalogEntry dorofeev();

// The seven-parameter derivation family of the Dorofeev algebra. The last
// diagonal entry reads -p_aa + p_ad + p_be (the printed source uses an
// undefined symbol there; this is the unique reading matching its own
// example map).
Matrix dorofeev_derivation(const Rational& aa, const Rational& ab, const Rational& ad,
                           const Rational& ae, const Rational& ba, const Rational& bd,
                           const Rational& be);

// The distinguished invertible derivation of the Dorofeev algebra:
// a -> a+d, b -> -b+e, c -> 2c, d -> 3d, e -> e; determinant -6.
Matrix dorofeev_phi();

// Split octonions: three Cayley-Dickson doublings of the rationals with
// parameters (-1, -1, +1), basis (1, i, j, k, l, li, lj, lk), product
// (a,b)(c,d) = (ac + g conj(d) b, d a + b conj(c)).
Algebra cayley_dickson_split();

// The simple non-Lie Malcev algebra: trace-zero split octonions under
// x*y = (xy - yx)/2 with the scalar component projected out.
Algebra m7();
CatalogEntry m7_entry();

std::vector<CatalogEntry> standard_entries();

// Simple n-Lie algebra D_{n+1}: omitting e_i from the ordered basis product
// gives (-1)^(n+i+1) e_i. 3 <= n <= 6.
CatalogEntry filippov_simple(int n);

// The n-dimensional n-ary algebra [x_1,...,x_n] = x_2 with its two diagonal
// derivation candidates (original assignment and the corrected one).
CatalogEntry williams(int n);

// Derivation matrix of D_{n+1} as printed for each parity: disjoint
// 2x2 blocks e_{i,i+1} - e_{i+1,i} for odd i, plus the corner pair
// e_{1,n+1} - e_{n+1,1} when the dimension n+1 is odd.
Matrix filippov_derivation(int n);

// Corrected diagonal derivation of williams(n): (1, 1, -1/2, -1/2,
// (-1)^j ...); verifies for even n.
Matrix williams_corrected_derivation(int n);
// Original diagonal assignment (1, 1, (-1)^j for j >= 3); verifies for odd n.
Matrix williams_original_derivation(int n);

enum class RandomClass { anticommutative, commutative_jordan, associative };

/*
 * Seeded nilpotent algebra: a graded space V_1 + ... + V_{index-1} with
 * random structure constants mapping V_i x V_j into V_{i+j} (zero at and
 * past the index), symmetrized or antisymmetrized per class, then rejection
 * filtered through the class identity check. Retries with fresh draws;
 * throws when the budget runs out.
 */
Algebra random_nilpotent(RandomClass cls, int dim, int index, uint64_t seed);

std::string random_class_name(RandomClass cls);

// Every named entry, binary and n-ary.
std::vector<CatalogEntry> all_entries();
std::vector<CatalogEntry> binary_entries();
std::optional<CatalogEntry> find_entry(const std::string& name);

}  // namespace lderlab

#endif
