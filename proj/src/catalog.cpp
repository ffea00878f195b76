#include "lderlab/catalog.hpp"

#include <stdexcept>

#include "lderlab/varieties.hpp"

namespace lderlab {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

KnownFact cited(std::string id, std::string detail, std::string expect = "pass") {
  return KnownFact{std::move(id), "cited", std::move(expect), std::move(detail)};
}

KnownFact derived(std::string id, std::string detail) {
  return KnownFact{std::move(id), "derived", "pass", std::move(detail)};
}

Algebra make_mat2() {
  Algebra m("mat2", std::vector<std::string>{"e11", "e12", "e21", "e22"});
  auto idx = [](int r, int c) { return r * 2 + c; };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c == r2) m.add_entry(idx(r, c), idx(r2, c2), idx(r, c2), Rational(1));
  return m;
}

Algebra renamed(const Algebra& a, const std::string& name) {
  Algebra out(name, a.basis_labels());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.set_table(i, j, a.table(i, j));
  return out;
}

}  // namespace

CatalogEntry dorofeev() {
  Algebra a("dorofeev", std::vector<std::string>{"a", "b", "c", "d", "e"});
  const int A = 0, B = 1, C = 2, D = 3, E = 4;
  const Rational one(1);
  a.add_entry(A, B, C, -one);  // ab = -c
  a.add_entry(B, A, C, one);   // ba = c
  a.add_entry(A, E, C, -one);  // ae = -c
  a.add_entry(E, A, C, one);   // ea = c
  a.add_entry(D, B, C, -one);  // db = -c
  a.add_entry(B, D, C, one);   // bd = c
  a.add_entry(A, C, D, one);   // ac = d
  a.add_entry(B, C, E, one);   // bc = e

  CatalogEntry entry;
  entry.name = "dorofeev";
  entry.algebra = a;
  entry.facts = {
      cited("right-alternative", "satisfies the right alternative identity"),
      cited("not-nilpotent", "power chain stabilizes at a nonzero space"),
      cited("right-nilpotency-index-3", "claimed right nilpotent of index 3; computed chain gives 4",
            "flag"),
      cited("derivation-family-dim-7", "derivation algebra carries seven free parameters"),
      cited("phi-is-invertible-derivation", "the map a->a+d, b->-b+e, c->2c, d->3d, e->e"),
      cited("derivation-matrix-typo",
            "printed family uses an undefined symbol in the (e,e) entry; read as p_be", "flag"),
      derived("lder-left-4-is-full", "left spaces of order 4 fill End"),
  };
  return entry;
}

Matrix dorofeev_derivation(const Rational& aa, const Rational& ab, const Rational& ad,
                           const Rational& ae, const Rational& ba, const Rational& bd,
                           const Rational& be) {
  Matrix m(5, 5);
  m(0, 0) = aa;
  m(0, 1) = ba;
  m(1, 0) = ab;
  m(1, 1) = -aa;
  m(2, 2) = ad + be;
  m(3, 0) = ad;
  m(3, 1) = bd;
  m(3, 3) = aa + ad + be;
  m(3, 4) = ba;
  m(4, 0) = ae;
  m(4, 1) = be;
  m(4, 3) = ab;
  m(4, 4) = -aa + ad + be;
  return m;
}

Matrix dorofeev_phi() {
  return dorofeev_derivation(Rational(1), Rational(0), Rational(1), Rational(0), Rational(0),
                             Rational(0), Rational(1));
}

namespace {

struct CdLevel {
  Algebra algebra;
  std::vector<Rational> conj_diag;  // conjugation is diagonal in this basis
};

CdLevel cd_double(const CdLevel& base, const Rational& gamma,
                  const std::vector<std::string>& labels) {
  const int d = base.algebra.dim();
  Algebra out("cd", labels);
  // (a,b)(c,d) = (ac + g conj(d) b, d a + b conj(c))
  for (int i = 0; i < 2 * d; ++i) {
    for (int j = 0; j < 2 * d; ++j) {
      Vec v(2 * d);
      if (i < d && j < d) {
        const Vec& t = base.algebra.table(i, j);
        for (int k = 0; k < d; ++k) v[k] = t[k];
      } else if (i < d && j >= d) {
        // (e_i, 0)(0, e_j') = (0, e_j' e_i)
        const Vec& t = base.algebra.table(j - d, i);
        for (int k = 0; k < d; ++k) v[d + k] = t[k];
      } else if (i >= d && j < d) {
        // (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
        const Vec& t = base.algebra.table(i - d, j);
        for (int k = 0; k < d; ++k) v[d + k] = base.conj_diag[j] * t[k];
      } else {
        // (0, e_i')(0, e_j') = (g conj(e_j') e_i', 0)
        const Vec& t = base.algebra.table(j - d, i - d);
        for (int k = 0; k < d; ++k) v[k] = gamma * base.conj_diag[j - d] * t[k];
      }
      out.set_table(i, j, std::move(v));
    }
  }
  CdLevel next{out, {}};
  next.conj_diag.resize(2 * d);
  for (int k = 0; k < d; ++k) next.conj_diag[k] = base.conj_diag[k];
  for (int k = d; k < 2 * d; ++k) next.conj_diag[k] = Rational(-1);
  return next;
}

}  // namespace

Algebra cayley_dickson_split() {
  CdLevel level{Algebra("F", std::vector<std::string>{"1"}), {Rational(1)}};
  level.algebra.add_entry(0, 0, 0, Rational(1));
  level = cd_double(level, Rational(-1), {"1", "i"});
  level = cd_double(level, Rational(-1), {"1", "i", "j", "k"});
  level = cd_double(level, Rational(1), {"1", "i", "j", "k", "l", "li", "lj", "lk"});
  Algebra named("cd_split", std::vector<std::string>{"1", "i", "j", "k", "l", "li", "lj", "lk"});
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) named.set_table(i, j, level.algebra.table(i, j));
  return named;
}

Algebra m7() {
  Algebra cd = cayley_dickson_split();
  std::vector<std::string> labels{"i", "j", "k", "l", "li", "lj", "lk"};
  Algebra m("m7", labels);
  const Rational half(1, 2);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const Vec& xy = cd.table(i + 1, j + 1);
      const Vec& yx = cd.table(j + 1, i + 1);
      Vec v(7);
      // x*y = (xy - yx)/2, scalar coordinate dropped.
      for (int k = 0; k < 7; ++k) v[k] = (xy[k + 1] - yx[k + 1]) * half;
      m.set_table(i, j, std::move(v));
    }
  }
  return m;
}

CatalogEntry m7_entry() {
  CatalogEntry entry;
  entry.name = "m7";
  entry.algebra = m7();
  entry.facts = {
      cited("malcev-non-lie", "the simple non-Lie Malcev algebra in dimension seven"),
      cited("lie-center-zero", "the Lie center vanishes"),
      derived("killing-nondegenerate", "Killing gram has full rank"),
      derived("der-dim-14", "derivation algebra has dimension 14"),
      cited("left-lder-equals-der", "left spaces collapse to the derivation algebra"),
      derived("no-invertible-derivation", "odd-dimensional skew family certificate"),
  };
  return entry;
}

std::vector<CatalogEntry> standard_entries() {
  std::vector<CatalogEntry> out;

  {
    Algebra h("heisenberg", std::vector<std::string>{"x", "y", "z"});
    h.add_entry(0, 1, 2, Rational(1));
    h.add_entry(1, 0, 2, Rational(-1));
    CatalogEntry e;
    e.name = "heisenberg";
    e.algebra = h;
    e.facts = {derived("lie", "Jacobi holds"), derived("nilpotent-index-3", "power chain 3,1,0")};
    out.push_back(std::move(e));
  }
  {
    Algebra s("sl2", std::vector<std::string>{"e", "h", "f"});
    const int E = 0, H = 1, F = 2;
    s.add_entry(H, E, E, Rational(2));
    s.add_entry(E, H, E, Rational(-2));
    s.add_entry(H, F, F, Rational(-2));
    s.add_entry(F, H, F, Rational(2));
    s.add_entry(E, F, H, Rational(1));
    s.add_entry(F, E, H, Rational(-1));
    CatalogEntry e;
    e.name = "sl2";
    e.algebra = s;
    e.facts = {derived("lie", "Jacobi holds"), derived("killing-h-h-8", "chi(h,h) = 8"),
               derived("der-dim-3", "all derivations inner"),
               derived("form-radical-zero", "Killing form nondegenerate")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "mat2";
    e.algebra = make_mat2();
    e.facts = {derived("associative", "matrix units multiply associatively"),
               derived("multiplication-algebra-full", "operator closure has dimension 16"),
               derived("unital", "identity element e11+e22")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "plus_mat2";
    e.algebra = renamed(plus_algebra(make_mat2()), "plus_mat2");
    e.facts = {derived("jordan", "special Jordan algebra of 2x2 matrices"),
               derived("form-radical-zero", "trace form nondegenerate")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "abelian3";
    e.algebra = Algebra("abelian3", 3);
    e.facts = {derived("zero-products", "every product vanishes")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "zero4";
    e.algebra = Algebra("zero4", 4);
    e.facts = {derived("nilpotent-index-2", "A^2 = 0")};
    out.push_back(std::move(e));
  }
  {
    Algebra s("sl2_semidirect_v2", std::vector<std::string>{"e", "h", "f", "v1", "v2"});
    const int E = 0, H = 1, F = 2, V1 = 3, V2 = 4;
    auto bracket = [&](int x, int y, int k, long long c) {
      s.add_entry(x, y, k, Rational(c));
      s.add_entry(y, x, k, Rational(-c));
    };
    bracket(H, E, E, 2);
    bracket(H, F, F, -2);
    bracket(E, F, H, 1);
    bracket(E, V2, V1, 1);
    bracket(F, V1, V2, 1);
    bracket(H, V1, V1, 1);
    bracket(H, V2, V2, -1);
    CatalogEntry e;
    e.name = "sl2_semidirect_v2";
    e.algebra = s;
    e.facts = {derived("lie", "Jacobi holds"),
               derived("radical-is-module", "span{v1,v2} is a solvable ideal"),
               derived("radical-lder-invariant", "left spaces preserve the module")};
    out.push_back(std::move(e));
  }
  {
    Algebra z("zinbiel2", 2);
    z.add_entry(0, 0, 1, Rational(1));
    CatalogEntry e;
    e.name = "zinbiel2";
    e.algebra = z;
    e.facts = {derived("zinbiel", "both sides of the defining identity vanish"),
               derived("nilpotent-index-3", "power chain 2,1,0")};
    out.push_back(std::move(e));
  }
  {
    Algebra j("jordan_nil3", 3);
    j.add_entry(0, 0, 1, Rational(1));
    j.add_entry(0, 1, 2, Rational(1));
    j.add_entry(1, 0, 2, Rational(1));
    CatalogEntry e;
    e.name = "jordan_nil3";
    e.algebra = j;
    e.facts = {derived("jordan", "commutative, Jordan identity vacuous in high grade"),
               derived("nilpotent-index-4", "power chain 3,2,1,0")};
    out.push_back(std::move(e));
  }
  return out;
}

CatalogEntry filippov_simple(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("filippov_simple: n out of range [3,6]");
  const int dim = n + 1;
  NAryAlgebra b("d" + std::to_string(dim), n, dim, /*anticommutative=*/true);
  for (int i = 1; i <= dim; ++i) {
    std::vector<int> args;
    for (int k = 1; k <= dim; ++k) {
      if (k != i) args.push_back(k - 1);
    }
    Vec v(dim);
    v[i - 1] = (n + i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    b.set_entry(args, std::move(v));
  }
  CatalogEntry e;
  e.name = b.name();
  e.nary = b;
  bool even_dim = dim % 2 == 0;
  e.facts = {
      cited("filippov", "the n-ary Jacobi identity holds"),
      cited("derivation-matrix", "the printed block matrix is a derivation"),
      cited("derivation-invertible",
            even_dim ? "block matrix of disjoint rotations, determinant 1"
                     : "claimed invertible, but every derivation here is skew of odd order",
            even_dim ? "pass" : "flag"),
  };
  return e;
}

Matrix filippov_derivation(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("filippov_derivation: n out of range [3,6]");
  const int dim = n + 1;
  Matrix m(dim, dim);
  // Disjoint blocks (1,2),(3,4),...; the corner pair closes the odd case.
  for (int i = 1; i + 1 <= dim; i += 2) {
    m(i - 1, i) = Rational(1);
    m(i, i - 1) = Rational(-1);
  }
  if (dim % 2 == 1) {
    m(0, dim - 1) += Rational(1);
    m(dim - 1, 0) += Rational(-1);
  }
  return m;
}

CatalogEntry williams(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("williams: n out of range [3,6]");
  NAryAlgebra b("williams" + std::to_string(n), n, n, /*anticommutative=*/true);
  std::vector<int> args(n);
  for (int i = 0; i < n; ++i) args[i] = i;
  Vec v(n);
  v[1] = Rational(1);
  b.set_entry(args, std::move(v));
  CatalogEntry e;
  e.name = b.name();
  e.nary = b;
  bool even = n % 2 == 0;
  e.facts = {
      derived("filippov", "the n-ary Jacobi identity holds"),
      cited("corrected-derivation",
            even ? "corrected diagonal map is an invertible derivation"
                 : "corrected diagonal map misses the coefficient sum for odd n; the original "
                   "assignment verifies instead",
            even ? "pass" : "flag"),
  };
  return e;
}

Matrix williams_corrected_derivation(int n) {
  Matrix m(n, n);
  m(0, 0) = Rational(1);
  m(1, 1) = Rational(1);
  if (n >= 3) m(2, 2) = Rational(-1, 2);
  if (n >= 4) m(3, 3) = Rational(-1, 2);
  for (int j = 5; j <= n; ++j) m(j - 1, j - 1) = (j % 2 == 0) ? Rational(1) : Rational(-1);
  return m;
}

Matrix williams_original_derivation(int n) {
  Matrix m(n, n);
  m(0, 0) = Rational(1);
  m(1, 1) = Rational(1);
  for (int j = 3; j <= n; ++j) m(j - 1, j - 1) = (j % 2 == 0) ? Rational(1) : Rational(-1);
  return m;
}

std::string random_class_name(RandomClass cls) {
  switch (cls) {
    case RandomClass::anticommutative: return "anticommutative";
    case RandomClass::commutative_jordan: return "commutative_jordan";
    case RandomClass::associative: return "associative";
  }
  throw std::logic_error("random_class_name: unknown class");
}

Algebra random_nilpotent(RandomClass cls, int dim, int index, uint64_t seed) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("random_nilpotent: dim out of range [1,6]");
  if (index < 2 || index > 4) throw std::invalid_argument("random_nilpotent: index out of range [2,4]");
  if (dim < index - 1) throw std::invalid_argument("random_nilpotent: dim too small for the grading");

  // Grades 1..index-1; grade 1 absorbs the surplus.
  std::vector<int> grade_of(dim);
  {
    int pos = 0;
    int first = dim - (index - 2);
    for (int i = 0; i < first; ++i) grade_of[pos++] = 1;
    for (int g = 2; g <= index - 1; ++g) grade_of[pos++] = g;
  }

  uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
  const int budget = 64;
  for (int attempt = 0; attempt < budget; ++attempt) {
    Algebra raw(random_class_name(cls) + "_rand", dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        int g = grade_of[i] + grade_of[j];
        if (g >= index) continue;
        Vec v(dim);
        for (int k = 0; k < dim; ++k) {
          if (grade_of[k] != g) continue;
          v[k] = Rational(static_cast<long long>(splitmix64(state) % 5) - 2);
        }
        raw.set_table(i, j, std::move(v));
      }
    }
    Algebra cand = raw;
    if (cls == RandomClass::anticommutative) {
      cand = minus_algebra(raw);
    } else if (cls == RandomClass::commutative_jordan) {
      cand = plus_algebra(raw);
    }
    VarietyTag check = cls == RandomClass::anticommutative ? VarietyTag::malcev
                       : cls == RandomClass::commutative_jordan ? VarietyTag::jordan
                                                                : VarietyTag::associative;
    if (satisfies(cand, check).first) {
      return renamed(cand, random_class_name(cls) + "_d" + std::to_string(dim) + "_i" +
                               std::to_string(index) + "_s" + std::to_string(seed));
    }
  }
  throw std::runtime_error("random_nilpotent: retry budget exhausted for class " +
                           random_class_name(cls) + " seed " + std::to_string(seed));
}

std::vector<CatalogEntry> binary_entries() {
  std::vector<CatalogEntry> out = standard_entries();
  out.push_back(dorofeev());
  out.push_back(m7_entry());
  return out;
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out = binary_entries();
  for (int n = 3; n <= 6; ++n) out.push_back(filippov_simple(n));
  for (int n = 3; n <= 6; ++n) out.push_back(williams(n));
  return out;
}

std::optional<CatalogEntry> find_entry(const std::string& name) {
  for (auto& e : all_entries()) {
    if (e.name == name) return e;
  }
  if (name == "cd_split") {
    CatalogEntry e;
    e.name = "cd_split";
    e.algebra = cayley_dickson_split();
    e.facts = {derived("alternative-not-associative", "split octonions")};
    return e;
  }
  return std::nullopt;
}

}  // namespace lderlab
