#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lderlab/catalog.hpp"
#include "lderlab/leibniz.hpp"
#include "lderlab/nary.hpp"

using namespace lderlab;

namespace {

Vec unit(int dim, int i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

Algebra heisenberg() {
  Algebra h("heisenberg", 3);
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  return h;
}

}  // namespace

TEST_CASE("from_bracketing tables") {
  Algebra d = *dorofeev().algebra;
  NAryAlgebra b = from_bracketing(d, BracketTree::left_comb(3));
  CHECK(b.arity() == 3);
  // (ac)b = -c
  Vec v = b.product_of_basis({0, 2, 1});
  CHECK(v[2] == Rational(-1));

  NAryAlgebra z = from_bracketing(Algebra("zero", 3), BracketTree::left_comb(3));
  CHECK(z.entries().empty());

  auto mat2 = find_entry("mat2");
  NAryAlgebra l3 = from_bracketing(*mat2->algebra, BracketTree::left_comb(3));
  NAryAlgebra r3 = from_bracketing(*mat2->algebra, BracketTree::right_comb(3));
  CHECK(l3.entries() == r3.entries());
}

TEST_CASE("anticommutative storage reconstructs signs") {
  CatalogEntry d4 = filippov_simple(3);
  const NAryAlgebra& b = *d4.nary;
  Vec sorted = b.product_of_basis({0, 1, 2});
  Vec swapped = b.product_of_basis({1, 0, 2});
  for (int k = 0; k < 4; ++k) CHECK(swapped[k] == -sorted[k]);
  CHECK(b.product_of_basis({0, 0, 2}) == Vec(4));
  CHECK_THROWS(const_cast<NAryAlgebra&>(b).set_entry({1, 0, 2}, unit(4, 0)));
}

TEST_CASE("nary products") {
  CatalogEntry d4 = filippov_simple(3);
  CHECK(d4.nary->product({unit(4, 0), unit(4, 1), unit(4, 2)}) == unit(4, 3));
  CHECK(d4.nary->product({unit(4, 0), Vec(4), unit(4, 2)}) == Vec(4));

  CatalogEntry w4 = williams(4);
  CHECK(w4.nary->product({unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3)}) == unit(4, 1));

  // Multilinearity through the determinant path.
  Vec combo(4);
  combo[0] = Rational(2);
  combo[1] = Rational(-3);
  Vec got = d4.nary->product({combo, unit(4, 1), unit(4, 2)});
  Vec expect(4);
  for (int k = 0; k < 4; ++k) {
    expect[k] = Rational(2) * d4.nary->product_of_basis({0, 1, 2})[k] +
                Rational(-3) * d4.nary->product_of_basis({1, 1, 2})[k];
  }
  CHECK(got == expect);
}

TEST_CASE("nary derivation spaces and checks") {
  CatalogEntry d4 = filippov_simple(3);
  CHECK(is_nary_derivation(*d4.nary, filippov_derivation(3)));
  Subspace ders = nary_derivation_space(*d4.nary);
  CHECK(ders.contains(flatten_matrix(filippov_derivation(3))));
  // so(4): six-dimensional family.
  CHECK(ders.dim() == 6);
  for (int i = 0; i < ders.dim(); ++i) {
    CHECK(is_nary_derivation(*d4.nary, unflatten_matrix(ders.basis_row(i), 4)));
  }

  CatalogEntry w4 = williams(4);
  CHECK(is_nary_derivation(*w4.nary, williams_corrected_derivation(4)));

  NAryAlgebra zero("zero3", 3, 3, false);
  CHECK(nary_derivation_space(zero).dim() == 9);
}

TEST_CASE("n-solvability chains") {
  CatalogEntry d4 = filippov_simple(3);
  NChainReport r = n_solvable_chain(*d4.nary);
  CHECK_FALSE(r.n_solvable);
  CHECK(r.dims.front() == 4);
  CHECK(r.dims.back() == 4);  // stabilizes at the full space

  NAryAlgebra zero("zero3", 3, 3, false);
  NChainReport rz = n_solvable_chain(zero);
  CHECK(rz.n_solvable);
  CHECK(rz.index == 1);

  NChainReport rh = n_solvable_chain(from_bracketing(heisenberg(), BracketTree::left_comb(3)));
  CHECK(rh.n_solvable);
  CHECK(rh.index == 1);  // every triple product vanishes

  for (size_t i = 1; i < r.dims.size(); ++i) CHECK(r.dims[i] <= r.dims[i - 1]);
}

TEST_CASE("nary ideals") {
  CatalogEntry d4 = filippov_simple(3);
  CHECK(is_nary_ideal(*d4.nary, Subspace::zero(4)));
  CHECK(is_nary_ideal(*d4.nary, Subspace::full(4)));
  CHECK_FALSE(is_nary_ideal(*d4.nary, Subspace::span_of(4, {unit(4, 0)})));

  CatalogEntry w3 = williams(3);
  // The line through x2 absorbs every product.
  CHECK(is_nary_ideal(*w3.nary, Subspace::span_of(3, {unit(3, 1)})));
}

TEST_CASE("filippov identity") {
  CHECK(filippov_check(*filippov_simple(3).nary));
  CHECK(filippov_check(*filippov_simple(4).nary));
  CHECK(filippov_check(*filippov_simple(5).nary));
  CHECK(filippov_check(*filippov_simple(6).nary));
  CHECK(filippov_check(*williams(3).nary));
  CHECK(filippov_check(*williams(4).nary));

  // Regression fixture. Diagonal rescalings of the table stay n-Lie (they
  // are metric twists of the vector product), so the broken table needs an
  // off-diagonal term: [e1,e2,e3] = e4 + e1.
  NAryAlgebra broken("d4_broken", 3, 4, true);
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> args;
    for (int k = 1; k <= 4; ++k)
      if (k != i) args.push_back(k - 1);
    Vec v(4);
    v[i - 1] = (3 + i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    if (i == 4) v[0] += Rational(1);
    broken.set_entry(args, std::move(v));
  }
  CHECK_FALSE(filippov_check(broken));

  NAryAlgebra not_anti("x", 3, 3, false);
  CHECK_THROWS(filippov_check(not_anti));
}

TEST_CASE("induced nary derivation space matches the f-space") {
  // The two computations take different paths: one assembles the relation
  // from the product tensor of f, the other from the stored n-ary table.
  std::vector<std::pair<Algebra, BracketTree>> cases;
  cases.emplace_back(*dorofeev().algebra, BracketTree::left_comb(3));
  cases.emplace_back(*dorofeev().algebra, BracketTree::right_comb(3));
  cases.emplace_back(heisenberg(), BracketTree::parse("((xx)(xx))"));
  cases.emplace_back(*find_entry("mat2")->algebra, BracketTree::left_comb(4));
  cases.emplace_back(*find_entry("sl2")->algebra, BracketTree::left_comb(2));
  for (auto& [algebra, f] : cases) {
    DerivationSolver solver(algebra);
    Subspace via_f = solver.f_lder_space(f).space;
    Subspace via_nary = nary_derivation_space(from_bracketing(algebra, f));
    CHECK(via_f == via_nary);
  }
}
