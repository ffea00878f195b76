#include "lderlab/algebra.hpp"

#include <stdexcept>

#include "lderlab/varieties.hpp"

namespace lderlab {

Algebra::Algebra(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)),
      dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)),
      table_(size_t(dim_) * dim_, Vec(dim_)) {
  if (dim_ < 1) throw std::invalid_argument("Algebra: dimension must be >= 1");
}

Algebra::Algebra(std::string name, int dim) : name_(std::move(name)), dim_(dim) {
  if (dim_ < 1) throw std::invalid_argument("Algebra: dimension must be >= 1");
  for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  table_.assign(size_t(dim_) * dim_, Vec(dim_));
}

void Algebra::set_table(int i, int j, Vec value) {
  if (int(value.size()) != dim_) throw std::invalid_argument("Algebra: table vector length mismatch");
  table_[size_t(i) * dim_ + j] = std::move(value);
}

void Algebra::add_entry(int i, int j, int k, const Rational& c) {
  table_[size_t(i) * dim_ + j][k] += c;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim_ || int(y.size()) != dim_) {
    throw std::invalid_argument("Algebra: multiply length mismatch");
  }
  Vec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[i] * y[j];
      const Vec& t = table(i, j);
      for (int k = 0; k < dim_; ++k) {
        if (!t[k].is_zero()) out[k] += c * t[k];
      }
    }
  }
  return out;
}

Matrix Algebra::left_op(const Vec& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("Algebra: left_op length mismatch");
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      const Vec& t = table(i, j);
      for (int k = 0; k < dim_; ++k) {
        if (!t[k].is_zero()) m(k, j) += x[i] * t[k];
      }
    }
  }
  return m;
}

Matrix Algebra::right_op(const Vec& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("Algebra: right_op length mismatch");
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < dim_; ++i) {
      const Vec& t = table(i, j);
      for (int k = 0; k < dim_; ++k) {
        if (!t[k].is_zero()) m(k, i) += x[j] * t[k];
      }
    }
  }
  return m;
}

Matrix Algebra::left_op_of_basis(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    const Vec& t = table(i, j);
    for (int k = 0; k < dim_; ++k) m(k, j) = t[k];
  }
  return m;
}

Matrix Algebra::right_op_of_basis(int j) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    const Vec& t = table(i, j);
    for (int k = 0; k < dim_; ++k) m(k, i) = t[k];
  }
  return m;
}

Vec Algebra::basis_vector(int i) const {
  Vec v(dim_);
  v[i] = Rational(1);
  return v;
}

std::string Algebra::table_key() const {
  std::string key = std::to_string(dim_);
  for (const auto& vec : table_) {
    for (const auto& c : vec) {
      key += ',';
      key += c.to_string();
    }
  }
  return key;
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim()) {
    throw std::invalid_argument("subspace_product: ambient mismatch");
  }
  std::vector<Vec> products;
  for (int i = 0; i < u.dim(); ++i) {
    Vec ui = u.basis_row(i);
    for (int j = 0; j < v.dim(); ++j) {
      products.push_back(a.multiply(ui, v.basis_row(j)));
    }
  }
  return Subspace::span_of(a.dim(), products);
}

std::vector<Subspace> chain_subspaces(const Algebra& a, ChainKind kind, int max_steps) {
  std::vector<Subspace> steps;
  Subspace full = a.full_space();
  if (kind == ChainKind::solvable) {
    steps.push_back(subspace_product(a, full, full));
  } else {
    steps.push_back(full);
  }
  while (int(steps.size()) < max_steps) {
    const Subspace& prev = steps.back();
    if (prev.is_zero()) {
      steps.push_back(prev);
      continue;
    }
    Subspace next(a.dim());
    switch (kind) {
      case ChainKind::power: {
        // A^n = sum over i of A^i A^(n-i), every split retained.
        int n = static_cast<int>(steps.size()) + 1;
        for (int i = 1; i <= n - 1; ++i) {
          next = subspace_sum(next, subspace_product(a, steps[i - 1], steps[n - i - 1]));
        }
        break;
      }
      case ChainKind::right_power:
        next = subspace_product(a, prev, full);
        break;
      case ChainKind::solvable:
        next = subspace_product(a, prev, prev);
        break;
    }
    steps.push_back(std::move(next));
  }
  return steps;
}

ChainReport chain(const Algebra& a, ChainKind kind) {
  ChainReport report;
  report.kind = kind;
  const int cap = a.dim() + 2;
  std::vector<Subspace> steps = chain_subspaces(a, kind, cap);
  for (size_t k = 0; k < steps.size(); ++k) {
    report.dims.push_back(steps[k].dim());
    int step_no = static_cast<int>(k) + 1;
    if (steps[k].is_zero()) {
      report.stabilized_at = step_no;
      report.terminal_dim = 0;
      report.index = step_no;
      report.dims.resize(k + 1);
      return report;
    }
    if (k > 0 && steps[k] == steps[k - 1]) {
      report.stabilized_at = step_no;
      report.terminal_dim = steps[k].dim();
      report.dims.resize(k + 1);
      return report;
    }
  }
  throw std::logic_error("chain: did not stabilize within the dimension cap");
}

Subspace power_subspace(const Algebra& a, int n) {
  if (n < 1) throw std::invalid_argument("power_subspace: n must be >= 1");
  std::vector<Subspace> steps = chain_subspaces(a, ChainKind::power, n);
  return steps[n - 1];
}

bool subspace_is_solvable(const Algebra& a, const Subspace& b) {
  Subspace cur = subspace_product(a, b, b);
  Subspace prev = b;
  for (int guard = 0; guard <= a.dim() + 1; ++guard) {
    if (cur.is_zero()) return true;
    if (cur == prev) return false;
    prev = cur;
    cur = subspace_product(a, cur, cur);
  }
  return false;
}

bool is_ideal(const Algebra& a, const Subspace& b) {
  Subspace full = a.full_space();
  return b.contains(subspace_product(a, full, b)) && b.contains(subspace_product(a, b, full));
}

Vec flatten_matrix(const Matrix& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten_matrix(const Vec& v, int dim) {
  if (int(v.size()) != dim * dim) throw std::invalid_argument("unflatten_matrix: length mismatch");
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = v[size_t(r) * dim + c];
  return m;
}

Subspace operator_product_span(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("operator_product_span: ambient mismatch");
  int n2 = u.ambient_dim();
  int n = 0;
  while (n * n < n2) ++n;
  if (n * n != n2) throw std::invalid_argument("operator_product_span: ambient is not a square");
  std::vector<Matrix> us, vs;
  for (int i = 0; i < u.dim(); ++i) us.push_back(unflatten_matrix(u.basis_row(i), n));
  for (int i = 0; i < v.dim(); ++i) vs.push_back(unflatten_matrix(v.basis_row(i), n));
  RrefBuilder b(n2);
  for (const auto& p : us)
    for (const auto& q : vs) b.add_row(flatten_matrix(p * q));
  return Subspace::span_of(n2, b.rows());
}

Subspace multiplication_algebra(const Algebra& a) {
  const int m = a.dim();
  std::vector<Matrix> gens;
  for (int i = 0; i < m; ++i) {
    Matrix l = a.left_op_of_basis(i);
    if (!l.is_zero()) gens.push_back(l);
    Matrix r = a.right_op_of_basis(i);
    if (!r.is_zero()) gens.push_back(r);
  }
  RrefBuilder builder(m * m);
  std::vector<Matrix> worklist;
  for (const auto& g : gens) {
    if (builder.add_row(flatten_matrix(g))) worklist.push_back(g);
  }
  // Saturate: every word of length k+1 is (word of length k) * generator.
  while (!worklist.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : worklist) {
      for (const auto& g : gens) {
        Matrix p = w * g;
        if (!p.is_zero() && builder.add_row(flatten_matrix(p))) next.push_back(p);
      }
    }
    worklist = std::move(next);
  }
  return Subspace::span_of(m * m, builder.rows());
}

namespace {

// Right-power chain of an operator subspace under composition.
bool operator_space_is_nilpotent(const Subspace& ops) {
  Subspace cur = ops;
  Subspace prev;
  int guard = ops.ambient_dim() + 2;
  while (guard-- > 0) {
    if (cur.is_zero()) return true;
    if (cur == prev) return false;
    prev = cur;
    cur = operator_product_span(cur, ops);
  }
  return false;
}

}  // namespace

NilpotencyResult is_nilpotent(const Algebra& a) {
  ChainReport power = chain(a, ChainKind::power);
  bool by_chain = power.index.has_value();
  bool by_operators = operator_space_is_nilpotent(multiplication_algebra(a));
  if (by_chain != by_operators) {
    throw std::logic_error("is_nilpotent: power chain and multiplication algebra disagree");
  }
  return NilpotencyResult{by_chain, power.index};
}

Vec jacobian(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  if (!satisfies(a, VarietyTag::anticommutative).first) {
    throw std::invalid_argument("jacobian: algebra is not anticommutative");
  }
  Vec j = a.multiply(a.multiply(x, y), z);
  Vec t = a.multiply(a.multiply(z, x), y);
  for (int k = 0; k < a.dim(); ++k) j[k] += t[k];
  t = a.multiply(a.multiply(y, z), x);
  for (int k = 0; k < a.dim(); ++k) j[k] += t[k];
  return j;
}

Subspace lie_center(const Algebra& a) {
  if (!satisfies(a, VarietyTag::anticommutative).first) {
    throw std::invalid_argument("lie_center: algebra is not anticommutative");
  }
  const int m = a.dim();
  RrefBuilder rows(m);
  // Coefficient rows of z -> J(z, e_i, e_j) (and the two rotations) per
  // output coordinate.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<Vec> images0(m), images1(m), images2(m);
      for (int p = 0; p < m; ++p) {
        Vec ep = a.basis_vector(p);
        images0[p] = jacobian(a, ep, a.basis_vector(i), a.basis_vector(j));
        images1[p] = jacobian(a, a.basis_vector(i), ep, a.basis_vector(j));
        images2[p] = jacobian(a, a.basis_vector(i), a.basis_vector(j), ep);
      }
      for (const auto* images : {&images0, &images1, &images2}) {
        for (int k = 0; k < m; ++k) {
          Vec row(m);
          bool nonzero = false;
          for (int p = 0; p < m; ++p) {
            row[p] = (*images)[p][k];
            nonzero = nonzero || !row[p].is_zero();
          }
          if (nonzero) rows.add_row(std::move(row));
        }
      }
    }
  }
  return Subspace::span_of(m, rows.nullspace_rows());
}

BilinearForm killing_form(const Algebra& a) {
  const int m = a.dim();
  std::vector<Matrix> r_ops;
  for (int i = 0; i < m; ++i) r_ops.push_back(a.right_op_of_basis(i));
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Rational tr;
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          if (!r_ops[i](p, q).is_zero() && !r_ops[j](q, p).is_zero()) tr += r_ops[i](p, q) * r_ops[j](q, p);
        }
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  }
  return BilinearForm{gram, "killing"};
}

namespace {

RadicalOutcome validated_form_radical(const Algebra& a, const Subspace& candidate,
                                      const Matrix& quotient_gram_source_gram,
                                      bool jordan_form) {
  if (!is_ideal(a, candidate)) {
    return RadicalOutcome{std::nullopt, "radical-criterion-inapplicable: candidate is not an ideal"};
  }
  if (!subspace_is_solvable(a, candidate)) {
    return RadicalOutcome{std::nullopt, "radical-criterion-inapplicable: candidate is not solvable"};
  }
  (void)quotient_gram_source_gram;
  if (candidate.dim() < a.dim()) {
    Algebra q = quotient_algebra(a, candidate);
    Matrix qgram;
    if (jordan_form) {
      Matrix g(q.dim(), q.dim());
      for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < q.dim(); ++j) g(i, j) = q.left_op(q.table(i, j)).trace();
      qgram = g;
    } else {
      qgram = killing_form(q).gram;
    }
    if (det_and_inverse(qgram).first.is_zero()) {
      return RadicalOutcome{std::nullopt, "radical-criterion-inapplicable: quotient form degenerate"};
    }
  }
  return RadicalOutcome{candidate, ""};
}

}  // namespace

RadicalOutcome form_radical_malcev(const Algebra& a) {
  if (!satisfies(a, VarietyTag::malcev).first) {
    throw std::invalid_argument("form_radical_malcev: algebra is not Malcev");
  }
  const int m = a.dim();
  Matrix gram = killing_form(a).gram;
  Subspace a2 = subspace_product(a, a.full_space(), a.full_space());
  RrefBuilder rows(m);
  for (int i = 0; i < a2.dim(); ++i) {
    rows.add_row(gram.apply(a2.basis_row(i)));
  }
  Subspace candidate = Subspace::span_of(m, rows.nullspace_rows());
  return validated_form_radical(a, candidate, gram, /*jordan_form=*/false);
}

RadicalOutcome form_radical_jordan(const Algebra& a) {
  if (!satisfies(a, VarietyTag::jordan).first) {
    throw std::invalid_argument("form_radical_jordan: algebra is not Jordan");
  }
  const int m = a.dim();
  // tau(x, y) = Tr(L_{xy}); traces of basis left operators suffice.
  Vec op_traces(m);
  for (int k = 0; k < m; ++k) op_traces[k] = a.left_op_of_basis(k).trace();
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Vec& prod = a.table(i, j);
      Rational t;
      for (int k = 0; k < m; ++k) {
        if (!prod[k].is_zero()) t += prod[k] * op_traces[k];
      }
      gram(i, j) = t;
    }
  }
  Subspace candidate = nullspace(gram);
  return validated_form_radical(a, candidate, gram, /*jordan_form=*/true);
}

Algebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw std::invalid_argument("quotient_algebra: subspace is not an ideal");
  const int m = a.dim();
  std::vector<int> pivots;
  for (int r = 0; r < ideal.dim(); ++r) {
    for (int c = 0; c < m; ++c) {
      if (!ideal.basis()(r, c).is_zero()) {
        pivots.push_back(c);
        break;
      }
    }
  }
  std::vector<bool> is_pivot(m, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> coords;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[c]) coords.push_back(c);
  const int qd = static_cast<int>(coords.size());
  if (qd == 0) throw std::invalid_argument("quotient_algebra: quotient is zero-dimensional");

  auto project = [&](Vec v) {
    for (int r = 0; r < ideal.dim(); ++r) {
      Rational f = v[pivots[r]];
      if (f.is_zero()) continue;
      for (int c = pivots[r]; c < m; ++c) {
        if (!ideal.basis()(r, c).is_zero()) v[c] -= f * ideal.basis()(r, c);
      }
    }
    Vec out(qd);
    for (int k = 0; k < qd; ++k) out[k] = v[coords[k]];
    return out;
  };

  std::vector<std::string> labels;
  for (int k = 0; k < qd; ++k) labels.push_back(a.basis_labels()[coords[k]] + "~");
  Algebra q(a.name() + "/ideal", labels);
  for (int i = 0; i < qd; ++i) {
    for (int j = 0; j < qd; ++j) {
      Vec xi(m), xj(m);
      xi[coords[i]] = Rational(1);
      xj[coords[j]] = Rational(1);
      q.set_table(i, j, project(a.multiply(xi, xj)));
    }
  }
  return q;
}

std::optional<Vec> unit_element(const Algebra& a) {
  const int m = a.dim();
  // Solve u e_j = e_j and e_j u = e_j for all j: rows over the m unknowns.
  RrefBuilder rows(m + 1);  // augmented with the right-hand side
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      Vec left_row(m + 1), right_row(m + 1);
      for (int i = 0; i < m; ++i) {
        left_row[i] = a.table(i, j)[k];
        right_row[i] = a.table(j, i)[k];
      }
      left_row[m] = k == j ? Rational(1) : Rational(0);
      right_row[m] = left_row[m];
      rows.add_row(std::move(left_row));
      rows.add_row(std::move(right_row));
    }
  }
  // Consistent iff no pivot in the augmented column; solution read off pivots.
  Vec u(m);
  for (size_t r = 0; r < rows.rows().size(); ++r) {
    int pivot = rows.pivots()[r];
    if (pivot == m) return std::nullopt;  // 0 = 1 row: inconsistent
    // Free variables set to zero; pivot value is the augmented entry.
    u[pivot] = rows.rows()[r][m];
  }
  // Verify (free columns might have been involved).
  for (int j = 0; j < m; ++j) {
    if (a.multiply(u, a.basis_vector(j)) != a.basis_vector(j)) return std::nullopt;
    if (a.multiply(a.basis_vector(j), u) != a.basis_vector(j)) return std::nullopt;
  }
  return u;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l + "'");
  for (const auto& l : b.basis_labels()) labels.push_back(l + "''");
  Algebra s(a.name() + "+" + b.name(), labels);
  const int da = a.dim();
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Vec v(s.dim());
      for (int k = 0; k < da; ++k) v[k] = a.table(i, j)[k];
      s.set_table(i, j, std::move(v));
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      Vec v(s.dim());
      for (int k = 0; k < b.dim(); ++k) v[da + k] = b.table(i, j)[k];
      s.set_table(da + i, da + j, std::move(v));
    }
  return s;
}

}  // namespace lderlab
