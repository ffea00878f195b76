#include "lderlab/varieties.hpp"

#include <stdexcept>

namespace lderlab {

std::string variety_tag_name(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::associative: return "associative";
    case VarietyTag::commutative: return "commutative";
    case VarietyTag::anticommutative: return "anticommutative";
    case VarietyTag::lie: return "lie";
    case VarietyTag::malcev: return "malcev";
    case VarietyTag::jordan: return "jordan";
    case VarietyTag::right_alternative: return "right_alternative";
    case VarietyTag::minus_one_one: return "minus_one_one";
    case VarietyTag::flexible: return "flexible";
    case VarietyTag::noncommutative_jordan: return "noncommutative_jordan";
    case VarietyTag::zinbiel: return "zinbiel";
    case VarietyTag::malcev_admissible: return "malcev_admissible";
  }
  throw std::logic_error("variety_tag_name: unknown tag");
}

std::optional<VarietyTag> variety_tag_from_name(const std::string& name) {
  for (VarietyTag t : all_variety_tags()) {
    if (variety_tag_name(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<VarietyTag> all_variety_tags() {
  return {VarietyTag::associative,    VarietyTag::commutative,
          VarietyTag::anticommutative, VarietyTag::lie,
          VarietyTag::malcev,          VarietyTag::jordan,
          VarietyTag::right_alternative, VarietyTag::minus_one_one,
          VarietyTag::flexible,        VarietyTag::noncommutative_jordan,
          VarietyTag::zinbiel,         VarietyTag::malcev_admissible};
}

Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec lhs = a.multiply(a.multiply(x, y), z);
  Vec rhs = a.multiply(x, a.multiply(y, z));
  for (size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
  return lhs;
}

namespace {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void vec_add(Vec& acc, const Vec& v) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] += v[k];
}

void vec_sub(Vec& acc, const Vec& v) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] -= v[k];
}

Vec raw_jacobian(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec j = a.multiply(a.multiply(x, y), z);
  vec_add(j, a.multiply(a.multiply(z, x), y));
  vec_add(j, a.multiply(a.multiply(y, z), x));
  return j;
}

using TupleCheck = Vec (*)(const Algebra&, const std::vector<Vec>&);

// Enumerates basis tuples of the given arity in lexicographic order and
// returns the first violating tuple.
std::optional<std::vector<int>> first_violation(const Algebra& a, int arity, TupleCheck fn) {
  const int m = a.dim();
  std::vector<int> idx(arity, 0);
  std::vector<Vec> args(arity);
  while (true) {
    for (int p = 0; p < arity; ++p) args[p] = a.basis_vector(idx[p]);
    if (!vec_is_zero(fn(a, args))) return idx;
    int p = arity - 1;
    while (p >= 0 && ++idx[p] == m) idx[p--] = 0;
    if (p < 0) return std::nullopt;
  }
}

Vec check_associative(const Algebra& a, const std::vector<Vec>& v) {
  return associator(a, v[0], v[1], v[2]);
}

Vec check_commutative(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = a.multiply(v[0], v[1]);
  vec_sub(d, a.multiply(v[1], v[0]));
  return d;
}

Vec check_anticommutative(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = a.multiply(v[0], v[1]);
  vec_add(d, a.multiply(v[1], v[0]));
  return d;
}

Vec check_jacobi(const Algebra& a, const std::vector<Vec>& v) {
  return raw_jacobian(a, v[0], v[1], v[2]);
}

Vec check_malcev_linearized(const Algebra& a, const std::vector<Vec>& v) {
  const Vec &x1 = v[0], &x2 = v[1], &y = v[2], &z = v[3];
  Vec d = raw_jacobian(a, x1, y, a.multiply(x2, z));
  vec_add(d, raw_jacobian(a, x2, y, a.multiply(x1, z)));
  vec_sub(d, a.multiply(raw_jacobian(a, x1, y, z), x2));
  vec_sub(d, a.multiply(raw_jacobian(a, x2, y, z), x1));
  return d;
}

Vec jordan_polarization_term(const Algebra& a, const Vec& p, const Vec& q, const Vec& r, const Vec& y) {
  Vec pq = a.multiply(p, q);
  Vec d = a.multiply(a.multiply(pq, y), r);
  vec_sub(d, a.multiply(pq, a.multiply(y, r)));
  return d;
}

Vec check_jordan_polarized(const Algebra& a, const std::vector<Vec>& v) {
  const Vec &x1 = v[0], &x2 = v[1], &x3 = v[2], &y = v[3];
  Vec d = jordan_polarization_term(a, x1, x2, x3, y);
  vec_add(d, jordan_polarization_term(a, x1, x3, x2, y));
  vec_add(d, jordan_polarization_term(a, x2, x1, x3, y));
  vec_add(d, jordan_polarization_term(a, x2, x3, x1, y));
  vec_add(d, jordan_polarization_term(a, x3, x1, x2, y));
  vec_add(d, jordan_polarization_term(a, x3, x2, x1, y));
  return d;
}

Vec check_right_alternative_linearized(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = associator(a, v[0], v[1], v[2]);
  vec_add(d, associator(a, v[0], v[2], v[1]));
  return d;
}

Vec check_cyclic_associator(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = associator(a, v[0], v[1], v[2]);
  vec_add(d, associator(a, v[2], v[0], v[1]));
  vec_add(d, associator(a, v[1], v[2], v[0]));
  return d;
}

Vec check_flexible_linearized(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = associator(a, v[0], v[1], v[2]);
  vec_add(d, associator(a, v[2], v[1], v[0]));
  return d;
}

Vec check_zinbiel(const Algebra& a, const std::vector<Vec>& v) {
  Vec d = a.multiply(a.multiply(v[0], v[1]), v[2]);
  Vec inner = a.multiply(v[1], v[2]);
  vec_add(inner, a.multiply(v[2], v[1]));
  vec_sub(d, a.multiply(v[0], inner));
  return d;
}

}  // namespace

std::pair<bool, std::optional<std::vector<int>>> satisfies(const Algebra& a, VarietyTag tag) {
  auto run = [&](int arity, TupleCheck fn) -> std::pair<bool, std::optional<std::vector<int>>> {
    auto witness = first_violation(a, arity, fn);
    return {!witness.has_value(), witness};
  };
  switch (tag) {
    case VarietyTag::associative:
      return run(3, check_associative);
    case VarietyTag::commutative:
      return run(2, check_commutative);
    case VarietyTag::anticommutative:
      return run(2, check_anticommutative);
    case VarietyTag::lie: {
      auto anti = run(2, check_anticommutative);
      if (!anti.first) return anti;
      return run(3, check_jacobi);
    }
    case VarietyTag::malcev: {
      auto anti = run(2, check_anticommutative);
      if (!anti.first) return anti;
      return run(4, check_malcev_linearized);
    }
    case VarietyTag::jordan: {
      auto comm = run(2, check_commutative);
      if (!comm.first) return comm;
      return run(4, check_jordan_polarized);
    }
    case VarietyTag::right_alternative:
      return run(3, check_right_alternative_linearized);
    case VarietyTag::minus_one_one: {
      auto ra = run(3, check_right_alternative_linearized);
      if (!ra.first) return ra;
      return run(3, check_cyclic_associator);
    }
    case VarietyTag::flexible:
      return run(3, check_flexible_linearized);
    case VarietyTag::noncommutative_jordan: {
      auto flex = run(3, check_flexible_linearized);
      if (!flex.first) return flex;
      return run(4, check_jordan_polarized);
    }
    case VarietyTag::zinbiel:
      return run(3, check_zinbiel);
    case VarietyTag::malcev_admissible:
      return satisfies(minus_algebra(a), VarietyTag::malcev);
  }
  throw std::logic_error("satisfies: unknown tag");
}

Algebra plus_algebra(const Algebra& a) {
  Algebra p("plus(" + a.name() + ")", a.basis_labels());
  const Rational half(1, 2);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vec v = a.table(i, j);
      const Vec& w = a.table(j, i);
      for (int k = 0; k < a.dim(); ++k) v[k] = (v[k] + w[k]) * half;
      p.set_table(i, j, std::move(v));
    }
  }
  return p;
}

Algebra minus_algebra(const Algebra& a) {
  Algebra p("minus(" + a.name() + ")", a.basis_labels());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vec v = a.table(i, j);
      const Vec& w = a.table(j, i);
      for (int k = 0; k < a.dim(); ++k) v[k] -= w[k];
      p.set_table(i, j, std::move(v));
    }
  }
  return p;
}

Algebra mutation(const Algebra& a, const Rational& lambda) {
  Algebra p("mutation(" + a.name() + "," + lambda.to_string() + ")", a.basis_labels());
  Rational mu = Rational(1) - lambda;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vec v = a.table(i, j);
      const Vec& w = a.table(j, i);
      for (int k = 0; k < a.dim(); ++k) v[k] = lambda * v[k] + mu * w[k];
      p.set_table(i, j, std::move(v));
    }
  }
  return p;
}

}  // namespace lderlab
