#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lderlab/algebra.hpp"
#include "lderlab/catalog.hpp"
#include "lderlab/varieties.hpp"

using namespace lderlab;

namespace {

uint64_t splitmix(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Vec unit(int dim, int i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

Vec scaled_unit(int dim, int i, long long c) {
  Vec v(dim);
  v[i] = Rational(c);
  return v;
}

Algebra random_table(uint64_t& s, int dim, int symmetry /* 0 none, +1 comm, -1 anticomm */) {
  Algebra raw("rand", dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec v(dim);
      for (int k = 0; k < dim; ++k) v[k] = Rational(static_cast<long long>(splitmix(s) % 5) - 2);
      raw.set_table(i, j, std::move(v));
    }
  if (symmetry > 0) return plus_algebra(raw);
  if (symmetry < 0) return minus_algebra(raw);
  return raw;
}

}  // namespace

TEST_CASE("multiply follows the structure table") {
  Algebra d = *dorofeev().algebra;
  const int A = 0, B = 1, C = 2, D = 3, E = 4;
  CHECK(d.multiply(unit(5, A), unit(5, B)) == scaled_unit(5, C, -1));  // ab = -c
  CHECK(d.multiply(unit(5, A), unit(5, C)) == unit(5, D));             // ac = d
  CHECK(d.multiply(unit(5, B), unit(5, C)) == unit(5, E));             // bc = e
  CHECK(d.multiply(unit(5, C), unit(5, A)) == Vec(5));                 // omitted products vanish
  CHECK(d.multiply(unit(5, A), Vec(5)) == Vec(5));
  // Bilinearity on a random combination.
  Vec x(5), y(5);
  x[A] = Rational(2);
  x[D] = Rational(-3);
  y[B] = Rational(1, 2);
  y[C] = Rational(5);
  Vec xy = d.multiply(x, y);
  // 2a*(b/2) = -c ; 2a*5c = 10d ; -3d*(b/2) = (3/2)c ; -3d*5c = 0
  Vec expect(5);
  expect[C] = Rational(-1) + Rational(3, 2);
  expect[D] = Rational(10);
  CHECK(xy == expect);
}

TEST_CASE("left and right multiplication operators") {
  Algebra d = *dorofeev().algebra;
  Matrix rb = d.right_op(unit(5, 1));  // R_b
  CHECK(rb.apply(unit(5, 0)) == scaled_unit(5, 2, -1));  // ab = -c
  CHECK(d.left_op(Vec(5)).is_zero());

  Algebra h("heisenberg", std::vector<std::string>{"x", "y", "z"});
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  CHECK(h.left_op(unit(3, 0)).apply(unit(3, 1)) == unit(3, 2));
  CHECK(h.left_op_of_basis(0) == h.left_op(unit(3, 0)));
  CHECK(h.right_op_of_basis(1) == h.right_op(unit(3, 1)));
}

TEST_CASE("subspace products") {
  Algebra d = *dorofeev().algebra;
  Subspace full = d.full_space();
  Subspace sq = subspace_product(d, full, full);
  CHECK(sq.dim() == 3);
  CHECK(sq.contains(unit(5, 2)));
  CHECK(sq.contains(unit(5, 3)));
  CHECK(sq.contains(unit(5, 4)));
  CHECK(subspace_product(d, full, Subspace::zero(5)).is_zero());

  Algebra h("heisenberg", 3);
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  Subspace hs = subspace_product(h, h.full_space(), h.full_space());
  CHECK(hs.dim() == 1);
  CHECK(hs.contains(unit(3, 2)));
}

TEST_CASE("chains: pinned catalog values") {
  Algebra h("heisenberg", 3);
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  ChainReport hp = chain(h, ChainKind::power);
  CHECK(hp.dims == std::vector<int>{3, 1, 0});
  CHECK(hp.index == 3);
  CHECK(hp.stabilized_at == 3);

  Algebra d = *dorofeev().algebra;
  ChainReport dp = chain(d, ChainKind::power);
  CHECK(dp.dims == std::vector<int>{5, 3, 3});
  CHECK(!dp.index.has_value());
  CHECK(dp.terminal_dim == 3);

  ChainReport dr = chain(d, ChainKind::right_power);
  CHECK(dr.dims == std::vector<int>{5, 3, 1, 0});
  CHECK(dr.index == 4);

  ChainReport ds = chain(d, ChainKind::solvable);
  CHECK(ds.index.has_value());  // right nilpotent forces solvable

  Algebra z("zero4", 4);
  ChainReport zp = chain(z, ChainKind::power);
  CHECK(zp.dims == std::vector<int>{4, 0});
  CHECK(zp.index == 2);

  ChainReport hs = chain(h, ChainKind::solvable);
  CHECK(hs.dims == std::vector<int>{1, 0});
  CHECK(hs.index == 2);
}

TEST_CASE("chain dims are non-increasing and right chain is dominated") {
  uint64_t s = 21;
  for (int trial = 0; trial < 12; ++trial) {
    Algebra a = random_table(s, 3, trial % 3 == 0 ? 0 : (trial % 3 == 1 ? 1 : -1));
    for (ChainKind kind : {ChainKind::power, ChainKind::right_power, ChainKind::solvable}) {
      ChainReport r = chain(a, kind);
      for (size_t i = 1; i < r.dims.size(); ++i) CHECK(r.dims[i] <= r.dims[i - 1]);
    }
    auto power = chain_subspaces(a, ChainKind::power, 5);
    auto right = chain_subspaces(a, ChainKind::right_power, 5);
    for (int i = 0; i < 5; ++i) CHECK(power[i].contains(right[i]));
  }
}

TEST_CASE("power subsets right powers for symmetric tables") {
  // A^(2^n) inside A^<n> for commutative or anticommutative algebras.
  uint64_t s = 22;
  for (int trial = 0; trial < 16; ++trial) {
    Algebra a = random_table(s, 3, trial % 2 == 0 ? 1 : -1);
    auto power = chain_subspaces(a, ChainKind::power, 8);
    auto right = chain_subspaces(a, ChainKind::right_power, 3);
    CHECK(right[1].contains(power[3]));  // A^4 in A^<2>
    CHECK(right[2].contains(power[7]));  // A^8 in A^<3>
  }
}

TEST_CASE("is_nilpotent cross-checks both criteria") {
  Algebra h("heisenberg", 3);
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  NilpotencyResult hr = is_nilpotent(h);
  CHECK(hr.nilpotent);
  CHECK(hr.index == 3);

  CHECK_FALSE(is_nilpotent(*dorofeev().algebra).nilpotent);

  NilpotencyResult zr = is_nilpotent(Algebra("zero", 4));
  CHECK(zr.nilpotent);
  CHECK(zr.index == 2);

  uint64_t s = 23;
  for (int trial = 0; trial < 10; ++trial) {
    Algebra a = random_table(s, 3, int(splitmix(s) % 3) - 1);
    CHECK_NOTHROW(is_nilpotent(a));  // methods must agree silently
  }
}

TEST_CASE("multiplication algebra") {
  CHECK(multiplication_algebra(Algebra("zero", 3)).dim() == 0);

  Algebra h("heisenberg", 3);
  h.add_entry(0, 1, 2, Rational(1));
  h.add_entry(1, 0, 2, Rational(-1));
  Subspace hm = multiplication_algebra(h);
  // Operators map x,y to z and z to 0; every composition of two vanishes.
  CHECK(operator_product_span(hm, hm).dim() == 0);

  auto mat2 = find_entry("mat2");
  REQUIRE(mat2.has_value());
  CHECK(multiplication_algebra(*mat2->algebra).dim() == 16);
}

TEST_CASE("jacobian and lie center") {
  auto sl2 = find_entry("sl2");
  REQUIRE(sl2.has_value());
  const Algebra& s = *sl2->algebra;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Vec jac = jacobian(s, unit(3, i), unit(3, j), unit(3, k));
        for (const auto& c : jac) CHECK(c.is_zero());
      }
  // Any Lie algebra has vanishing Jacobians, so the whole space is its
  // Lie center; only non-Lie Malcev algebras can shrink it.
  CHECK(lie_center(s).dim() == 3);
  CHECK(lie_center(Algebra("abelian", 3)).dim() == 3);
  CHECK_THROWS(jacobian(*find_entry("mat2")->algebra, unit(4, 0), unit(4, 1), unit(4, 2)));
}

TEST_CASE("killing form on sl2") {
  auto sl2 = find_entry("sl2");
  BilinearForm chi = killing_form(*sl2->algebra);
  CHECK(chi.gram(1, 1) == Rational(8));  // chi(h, h)
  CHECK(chi.gram == chi.gram.transpose());
  CHECK_FALSE(det_and_inverse(chi.gram).first.is_zero());
  // Associativity chi([x,y],z) = chi(x,[y,z]) on all basis triples.
  const Algebra& s = *sl2->algebra;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Vec xy = s.multiply(unit(3, i), unit(3, j));
        Vec yz = s.multiply(unit(3, j), unit(3, k));
        Rational lhs, rhs;
        for (int p = 0; p < 3; ++p) {
          for (int q = 0; q < 3; ++q) {
            if (!xy[p].is_zero()) lhs += xy[p] * chi.gram(p, q) * (q == k ? Rational(1) : Rational(0));
            if (!yz[q].is_zero()) rhs += (p == i ? Rational(1) : Rational(0)) * chi.gram(p, q) * yz[q];
          }
        }
        CHECK(lhs == rhs);
      }
  CHECK(killing_form(Algebra("abelian", 3)).gram.is_zero());
}

TEST_CASE("malcev form radical") {
  auto sl2 = find_entry("sl2");
  RadicalOutcome r = form_radical_malcev(*sl2->algebra);
  REQUIRE(r.radical.has_value());
  CHECK(r.radical->is_zero());

  auto sd = find_entry("sl2_semidirect_v2");
  RadicalOutcome rs = form_radical_malcev(*sd->algebra);
  REQUIRE(rs.radical.has_value());
  CHECK(rs.radical->dim() == 2);
  CHECK(rs.radical->contains(unit(5, 3)));
  CHECK(rs.radical->contains(unit(5, 4)));

  RadicalOutcome ra = form_radical_malcev(Algebra("abelian", 3));
  REQUIRE(ra.radical.has_value());
  CHECK(ra.radical->dim() == 3);

  CHECK_THROWS(form_radical_malcev(*find_entry("mat2")->algebra));
}

TEST_CASE("jordan form radical") {
  auto pm = find_entry("plus_mat2");
  RadicalOutcome r = form_radical_jordan(*pm->algebra);
  REQUIRE(r.radical.has_value());
  CHECK(r.radical->is_zero());

  auto jn = find_entry("jordan_nil3");
  RadicalOutcome rn = form_radical_jordan(*jn->algebra);
  REQUIRE(rn.radical.has_value());
  CHECK(rn.radical->dim() == 3);

  Algebra sum = direct_sum(*pm->algebra, *jn->algebra);
  RadicalOutcome rsum = form_radical_jordan(sum);
  REQUIRE(rsum.radical.has_value());
  CHECK(rsum.radical->dim() == 3);
  for (int k = 4; k < 7; ++k) CHECK(rsum.radical->contains(unit(7, k)));

  CHECK_THROWS(form_radical_jordan(*find_entry("sl2")->algebra));
}

TEST_CASE("quotient algebra and unit element") {
  auto sd = find_entry("sl2_semidirect_v2");
  Subspace module = Subspace::span_of(5, {unit(5, 3), unit(5, 4)});
  CHECK(is_ideal(*sd->algebra, module));
  Algebra q = quotient_algebra(*sd->algebra, module);
  CHECK(q.dim() == 3);
  CHECK_FALSE(det_and_inverse(killing_form(q).gram).first.is_zero());

  auto mat2 = find_entry("mat2");
  auto u = unit_element(*mat2->algebra);
  REQUIRE(u.has_value());
  Vec expect(4);
  expect[0] = Rational(1);
  expect[3] = Rational(1);
  CHECK(*u == expect);
  CHECK_FALSE(unit_element(Algebra("zero", 3)).has_value());
  CHECK(unit_element(*find_entry("plus_mat2")->algebra).has_value());
}

TEST_CASE("solvable subspaces and ideals") {
  auto sd = find_entry("sl2_semidirect_v2");
  Subspace module = Subspace::span_of(5, {unit(5, 3), unit(5, 4)});
  CHECK(subspace_is_solvable(*sd->algebra, module));
  CHECK_FALSE(subspace_is_solvable(*sd->algebra, sd->algebra->full_space()));
  CHECK(is_ideal(*sd->algebra, Subspace::zero(5)));
  CHECK(is_ideal(*sd->algebra, sd->algebra->full_space()));
  Subspace not_ideal = Subspace::span_of(5, {unit(5, 0)});
  CHECK_FALSE(is_ideal(*sd->algebra, not_ideal));
}
