#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

Algebra random_table(uint64_t& s, int dim) {
  Algebra raw("rand", dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec v(dim);
      for (int k = 0; k < dim; ++k) v[k] = Rational(static_cast<long long>(splitmix(s) % 5) - 2);
      raw.set_table(i, j, std::move(v));
    }
  return raw;
}

}  // namespace

TEST_CASE("associator") {
  auto mat2 = find_entry("mat2");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Vec as = associator(*mat2->algebra, unit(4, i), unit(4, j), unit(4, k));
        for (const auto& c : as) CHECK(c.is_zero());
      }
  Algebra d = *dorofeev().algebra;
  // (a,c,b) = (ac)b - a(cb) = db - 0 = -c
  Vec as = associator(d, unit(5, 0), unit(5, 2), unit(5, 1));
  Vec expect(5);
  expect[2] = Rational(-1);
  CHECK(as == expect);
  CHECK(associator(d, unit(5, 0), unit(5, 1), Vec(5)) == Vec(5));
}

TEST_CASE("variety membership of catalog algebras") {
  Algebra d = *dorofeev().algebra;
  CHECK(satisfies(d, VarietyTag::right_alternative).first);
  CHECK_FALSE(satisfies(d, VarietyTag::associative).first);
  CHECK_FALSE(satisfies(d, VarietyTag::jordan).first);

  auto sl2 = find_entry("sl2");
  CHECK(satisfies(*sl2->algebra, VarietyTag::lie).first);
  CHECK(satisfies(*sl2->algebra, VarietyTag::malcev).first);
  CHECK(satisfies(*sl2->algebra, VarietyTag::anticommutative).first);

  auto mat2 = find_entry("mat2");
  CHECK(satisfies(*mat2->algebra, VarietyTag::associative).first);
  CHECK(satisfies(*mat2->algebra, VarietyTag::flexible).first);
  CHECK(satisfies(*mat2->algebra, VarietyTag::noncommutative_jordan).first);
  CHECK(satisfies(*mat2->algebra, VarietyTag::malcev_admissible).first);
  CHECK(satisfies(*mat2->algebra, VarietyTag::minus_one_one).first);
  CHECK(satisfies(*mat2->algebra, VarietyTag::right_alternative).first);

  auto pm = find_entry("plus_mat2");
  CHECK(satisfies(*pm->algebra, VarietyTag::jordan).first);
  CHECK(satisfies(*pm->algebra, VarietyTag::commutative).first);

  auto z = find_entry("zinbiel2");
  CHECK(satisfies(*z->algebra, VarietyTag::zinbiel).first);
  CHECK(satisfies(*find_entry("jordan_nil3")->algebra, VarietyTag::jordan).first);
}

TEST_CASE("witnesses are first violations in lexicographic order") {
  auto z = find_entry("zinbiel2");
  auto [ok, witness] = satisfies(*z->algebra, VarietyTag::anticommutative);
  CHECK_FALSE(ok);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::vector<int>{0, 0});  // e1 e1 + e1 e1 = 2 e2

  auto sl2 = find_entry("sl2");
  auto [lie_ok, lie_witness] = satisfies(*sl2->algebra, VarietyTag::commutative);
  CHECK_FALSE(lie_ok);
  REQUIRE(lie_witness.has_value());
  CHECK(*lie_witness == std::vector<int>{0, 1});  // [e,h] != [h,e]
}

TEST_CASE("plus algebra") {
  Algebra d = *dorofeev().algebra;
  Algebra p = plus_algebra(d);
  CHECK(satisfies(p, VarietyTag::commutative).first);
  // a o c = d/2, b o c = e/2, everything else zero.
  Vec half_d(5), half_e(5);
  half_d[3] = Rational(1, 2);
  half_e[4] = Rational(1, 2);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const Vec& t = p.table(i, j);
      if ((i == 0 && j == 2) || (i == 2 && j == 0)) {
        CHECK(t == half_d);
      } else if ((i == 1 && j == 2) || (i == 2 && j == 1)) {
        CHECK(t == half_e);
      } else {
        CHECK(t == Vec(5));
      }
    }

  auto pm = find_entry("plus_mat2");
  CHECK(plus_algebra(*pm->algebra) == *pm->algebra);  // fixed point on commutative
  CHECK(satisfies(plus_algebra(*find_entry("mat2")->algebra), VarietyTag::jordan).first);
}

TEST_CASE("minus algebra") {
  auto mat2 = find_entry("mat2");
  CHECK(satisfies(minus_algebra(*mat2->algebra), VarietyTag::lie).first);
  auto pm = find_entry("plus_mat2");
  Algebra zero = minus_algebra(*pm->algebra);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(zero.table(i, j) == Vec(4));
}

TEST_CASE("mutation") {
  auto mat2 = find_entry("mat2");
  const Algebra& m = *mat2->algebra;
  CHECK(mutation(m, Rational(1)) == m);
  CHECK(mutation(m, Rational(1, 2)) == plus_algebra(m));
  // lambda = 0 is the opposite algebra.
  Algebra opp = mutation(m, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(opp.table(i, j) == m.table(j, i));

  Algebra mut2 = mutation(m, Rational(2));
  CHECK_FALSE(satisfies(mut2, VarietyTag::associative).first);
  CHECK(satisfies(mut2, VarietyTag::noncommutative_jordan).first);
  CHECK(satisfies(mut2, VarietyTag::malcev_admissible).first);
  for (long long lam : {3, -1, 5}) {
    CHECK(satisfies(mutation(m, Rational(lam)), VarietyTag::noncommutative_jordan).first);
  }
}

TEST_CASE("functors on random tables") {
  uint64_t s = 31;
  for (int trial = 0; trial < 15; ++trial) {
    Algebra a = random_table(s, 3);
    CHECK(satisfies(plus_algebra(a), VarietyTag::commutative).first);
    CHECK(satisfies(minus_algebra(a), VarietyTag::anticommutative).first);
    CHECK(mutation(a, Rational(1)) == a);
  }
}

TEST_CASE("lie equals anticommutative plus vanishing jacobians") {
  uint64_t s = 32;
  for (int trial = 0; trial < 10; ++trial) {
    Algebra a = minus_algebra(random_table(s, 3));
    bool lie = satisfies(a, VarietyTag::lie).first;
    bool jac = true;
    for (int i = 0; i < 3 && jac; ++i)
      for (int j = 0; j < 3 && jac; ++j)
        for (int k = 0; k < 3 && jac; ++k) {
          Vec v = jacobian(a, unit(3, i), unit(3, j), unit(3, k));
          for (const auto& c : v)
            if (!c.is_zero()) jac = false;
        }
    CHECK(lie == jac);
  }
}
