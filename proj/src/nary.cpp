#include "lderlab/nary.hpp"

#include <algorithm>
#include <stdexcept>

namespace lderlab {

namespace {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Sorts idx ascending and reports the permutation parity; returns false on a
// repeated index.
bool sort_with_parity(std::vector<int>& idx, int& sign) {
  sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] == idx[i - 1]) return false;
  }
  return true;
}

}  // namespace

NAryAlgebra::NAryAlgebra(std::string name, int arity, int dim, bool anticommutative)
    : name_(std::move(name)), arity_(arity), dim_(dim), anticommutative_(anticommutative) {
  if (arity_ < 2) throw std::invalid_argument("NAryAlgebra: arity must be >= 2");
  if (dim_ < 1) throw std::invalid_argument("NAryAlgebra: dimension must be >= 1");
  for (int i = 0; i < dim_; ++i) labels_.push_back("x" + std::to_string(i + 1));
}

NAryAlgebra::NAryAlgebra(std::string name, int arity, std::vector<std::string> basis_labels,
                         bool anticommutative)
    : NAryAlgebra(std::move(name), arity, static_cast<int>(basis_labels.size()), anticommutative) {
  labels_ = std::move(basis_labels);
}

void NAryAlgebra::set_entry(std::vector<int> args, Vec value) {
  if (int(args.size()) != arity_) throw std::invalid_argument("NAryAlgebra: arity mismatch");
  for (int i : args) {
    if (i < 0 || i >= dim_) throw std::invalid_argument("NAryAlgebra: index out of range");
  }
  if (anticommutative_) {
    for (size_t i = 1; i < args.size(); ++i) {
      if (args[i] <= args[i - 1]) {
        throw std::invalid_argument("NAryAlgebra: anticommutative entries use strictly increasing tuples");
      }
    }
  }
  if (int(value.size()) != dim_) throw std::invalid_argument("NAryAlgebra: value length mismatch");
  if (vec_is_zero(value)) {
    entries_.erase(args);
  } else {
    entries_[std::move(args)] = std::move(value);
  }
}

Vec NAryAlgebra::product_of_basis(const std::vector<int>& args) const {
  if (int(args.size()) != arity_) throw std::invalid_argument("NAryAlgebra: arity mismatch");
  Vec out(dim_);
  if (anticommutative_) {
    std::vector<int> sorted = args;
    int sign = 1;
    if (!sort_with_parity(sorted, sign)) return out;
    auto it = entries_.find(sorted);
    if (it == entries_.end()) return out;
    for (int k = 0; k < dim_; ++k) {
      if (!it->second[k].is_zero()) out[k] = sign > 0 ? it->second[k] : -it->second[k];
    }
    return out;
  }
  auto it = entries_.find(args);
  if (it != entries_.end()) out = it->second;
  return out;
}

Vec NAryAlgebra::product(const std::vector<Vec>& args) const {
  if (int(args.size()) != arity_) throw std::invalid_argument("NAryAlgebra: arity mismatch");
  for (const auto& v : args) {
    if (int(v.size()) != dim_) throw std::invalid_argument("NAryAlgebra: argument length mismatch");
  }
  Vec out(dim_);
  const int n = arity_;
  if (anticommutative_) {
    // Contribution of a stored representative over all its rearrangements is
    // the determinant of the coefficient matrix M[j][i] = args[j][rep[i]].
    for (const auto& [rep, value] : entries_) {
      Matrix coeff(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) coeff(j, i) = args[j][rep[i]];
      Rational det = det_and_inverse(coeff).first;
      if (det.is_zero()) continue;
      for (int k = 0; k < dim_; ++k) {
        if (!value[k].is_zero()) out[k] += det * value[k];
      }
    }
    return out;
  }
  for (const auto& [tuple, value] : entries_) {
    Rational c(1);
    bool zero = false;
    for (int j = 0; j < n; ++j) {
      if (args[j][tuple[j]].is_zero()) {
        zero = true;
        break;
      }
      c *= args[j][tuple[j]];
    }
    if (zero) continue;
    for (int k = 0; k < dim_; ++k) {
      if (!value[k].is_zero()) out[k] += c * value[k];
    }
  }
  return out;
}

Vec NAryAlgebra::basis_vector(int i) const {
  Vec v(dim_);
  v[i] = Rational(1);
  return v;
}

NAryAlgebra from_bracketing(const Algebra& a, const BracketTree& f) {
  const int m = a.dim();
  const int n = f.leaves();
  NAryAlgebra b(a.name() + "_" + f.serialize(), n, a.basis_labels(), /*anticommutative=*/false);
  std::vector<int> tuple(n, 0);
  std::vector<Vec> args(n);
  while (true) {
    for (int j = 0; j < n; ++j) args[j] = a.basis_vector(tuple[j]);
    Vec v = evaluate(a, f, args);
    if (!vec_is_zero(v)) b.set_entry(tuple, std::move(v));
    int j = n - 1;
    while (j >= 0 && ++tuple[j] == m) tuple[j--] = 0;
    if (j < 0) break;
  }
  return b;
}

Subspace nary_subspace_product(const NAryAlgebra& b, const std::vector<Subspace>& factors) {
  if (int(factors.size()) != b.arity()) throw std::invalid_argument("nary_subspace_product: arity mismatch");
  for (const auto& f : factors) {
    if (f.ambient_dim() != b.dim()) throw std::invalid_argument("nary_subspace_product: ambient mismatch");
  }
  RrefBuilder rows(b.dim());
  std::vector<int> pick(b.arity(), 0);
  std::vector<Vec> args(b.arity());
  while (true) {
    bool empty = false;
    for (int j = 0; j < b.arity(); ++j) {
      if (factors[j].dim() == 0) {
        empty = true;
        break;
      }
      args[j] = factors[j].basis_row(pick[j]);
    }
    if (empty) break;
    rows.add_row(b.product(args));
    int j = b.arity() - 1;
    while (j >= 0 && ++pick[j] == factors[j].dim()) pick[j--] = 0;
    if (j < 0) break;
  }
  return Subspace::span_of(b.dim(), rows.rows());
}

namespace {

// Enumerate the basis tuples that decide a multilinear relation: strictly
// increasing tuples when the table is alternating, every tuple otherwise.
std::vector<std::vector<int>> deciding_tuples(const NAryAlgebra& b) {
  const int n = b.arity();
  const int m = b.dim();
  std::vector<std::vector<int>> out;
  if (b.anticommutative()) {
    if (n > m) return out;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int j = n - 1;
      while (j >= 0 && idx[j] == m - n + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int k = j + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
  } else {
    std::vector<int> idx(n, 0);
    while (true) {
      out.push_back(idx);
      int j = n - 1;
      while (j >= 0 && ++idx[j] == m) idx[j--] = 0;
      if (j < 0) break;
    }
  }
  return out;
}

}  // namespace

bool is_nary_derivation(const NAryAlgebra& b, const Matrix& d) {
  if (d.rows() != b.dim() || d.cols() != b.dim()) {
    throw std::invalid_argument("is_nary_derivation: map has wrong shape");
  }
  const int m = b.dim();
  const int n = b.arity();
  for (const auto& tuple : deciding_tuples(b)) {
    Vec lhs = d.apply(b.product_of_basis(tuple));
    Vec rhs(m);
    std::vector<int> sub = tuple;
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < m; ++p) {
        const Rational& coeff = d(p, tuple[j]);
        if (coeff.is_zero()) continue;
        sub[j] = p;
        Vec val = b.product_of_basis(sub);
        for (int c = 0; c < m; ++c) {
          if (!val[c].is_zero()) rhs[c] += coeff * val[c];
        }
      }
      sub[j] = tuple[j];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

Subspace nary_derivation_space(const NAryAlgebra& b) {
  const int m = b.dim();
  const int n = b.arity();
  const int m2 = m * m;
  RrefBuilder builder(m2);
  for (const auto& tuple : deciding_tuples(b)) {
    Vec base = b.product_of_basis(tuple);
    std::vector<int> sub = tuple;
    std::vector<Vec> substituted(size_t(n) * m);
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < m; ++p) {
        sub[j] = p;
        substituted[size_t(j) * m + p] = b.product_of_basis(sub);
      }
      sub[j] = tuple[j];
    }
    for (int c = 0; c < m; ++c) {
      Vec row(m2);
      bool nonzero = false;
      for (int q = 0; q < m; ++q) {
        if (!base[q].is_zero()) {
          row[size_t(c) * m + q] += base[q];
          nonzero = true;
        }
      }
      for (int j = 0; j < n; ++j) {
        for (int p = 0; p < m; ++p) {
          const Rational& val = substituted[size_t(j) * m + p][c];
          if (val.is_zero()) continue;
          row[size_t(p) * m + tuple[j]] -= val;
          nonzero = true;
        }
      }
      if (nonzero) builder.add_row(std::move(row));
    }
  }
  return Subspace::span_of(m2, builder.nullspace_rows());
}

NChainReport n_solvable_chain(const NAryAlgebra& b) {
  NChainReport report;
  Subspace cur = Subspace::full(b.dim());
  std::vector<Subspace> factors(b.arity(), cur);
  cur = nary_subspace_product(b, factors);
  Subspace prev = Subspace::full(b.dim());
  int step = 1;
  while (true) {
    report.dims.push_back(cur.dim());
    if (cur.is_zero()) {
      report.stabilized_at = step;
      report.n_solvable = true;
      report.index = step;
      return report;
    }
    if (cur == prev) {
      report.stabilized_at = step;
      report.n_solvable = false;
      return report;
    }
    prev = cur;
    factors.assign(b.arity(), cur);
    cur = nary_subspace_product(b, factors);
    ++step;
    if (step > b.dim() + 2) throw std::logic_error("n_solvable_chain: did not stabilize");
  }
}

bool is_nary_ideal(const NAryAlgebra& b, const Subspace& ideal) {
  if (ideal.ambient_dim() != b.dim()) throw std::invalid_argument("is_nary_ideal: ambient mismatch");
  Subspace full = Subspace::full(b.dim());
  for (int slot = 0; slot < b.arity(); ++slot) {
    std::vector<Subspace> factors(b.arity(), full);
    factors[slot] = ideal;
    if (!ideal.contains(nary_subspace_product(b, factors))) return false;
  }
  return true;
}

bool filippov_check(const NAryAlgebra& b) {
  if (!b.anticommutative()) {
    throw std::invalid_argument("filippov_check: table is not anticommutative");
  }
  const int m = b.dim();
  const int n = b.arity();

  // Strictly increasing index tuples of the given length.
  auto increasing = [&](int len) {
    std::vector<std::vector<int>> out;
    if (len > m) return out;
    std::vector<int> idx(len);
    for (int i = 0; i < len; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int j = len - 1;
      while (j >= 0 && idx[j] == m - len + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int k = j + 1; k < len; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
  };

  auto xs = increasing(n);
  auto ys = increasing(n - 1);
  for (const auto& x : xs) {
    Vec inner = b.product_of_basis(x);
    for (const auto& y : ys) {
      std::vector<Vec> args(n);
      args[0] = inner;
      for (int j = 1; j < n; ++j) args[j] = b.basis_vector(y[j - 1]);
      Vec lhs = b.product(args);

      Vec rhs(m);
      std::vector<Vec> yargs(n);
      for (int i = 0; i < n; ++i) {
        // [x_i, y_2, ..., y_n]
        yargs[0] = b.basis_vector(x[i]);
        for (int j = 1; j < n; ++j) yargs[j] = b.basis_vector(y[j - 1]);
        Vec turned = b.product(yargs);
        std::vector<Vec> outer(n);
        for (int k = 0; k < n; ++k) outer[k] = b.basis_vector(x[k]);
        outer[i] = turned;
        Vec term = b.product(outer);
        for (int c = 0; c < m; ++c) rhs[c] += term[c];
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace lderlab
