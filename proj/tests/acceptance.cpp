// Acceptance suite: one check per criterion, one pass/fail line each.
// Exits nonzero when any criterion fails its stated exact values or time
// budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "lderlab/catalog.hpp"
#include "lderlab/leibniz.hpp"
#include "lderlab/suites.hpp"
#include "lderlab/varieties.hpp"

using namespace lderlab;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
              std::to_string(budget_seconds) + "s";
  }
  char line[512];
  std::snprintf(line, sizeof line, "[%s] criterion %2d: %s (%.2fs)%s%s", ok ? "PASS" : "FAIL",
                number, title.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  std::cout << line << std::endl;
  if (!ok) ++failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

Vec unit(int dim, int i) {
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

bool report_has(const Report& r, const std::string& id, const std::string& status) {
  for (const auto& c : r.checks) {
    if (c.id == id && c.status == status) return true;
  }
  return false;
}

const Config kConfig{};  // seed 0, trials 64, max order 5, box 5, n-cap 6

}  // namespace

int main() {
  criterion(1, "dorofeev block: chains, derivations, left spaces, cited-index flag", 5.0,
            [](std::string& detail) {
              Algebra d = *dorofeev().algebra;
              DerivationSolver solver(d);
              bool ok = expect(satisfies(d, VarietyTag::right_alternative).first,
                               "right alternative identity", detail);
              ChainReport power = chain(d, ChainKind::power);
              ok &= expect(power.dims == std::vector<int>{5, 3, 3} && !power.index,
                           "power chain [5,3,3], not nilpotent", detail);
              ChainReport right = chain(d, ChainKind::right_power);
              ok &= expect(right.dims == std::vector<int>{5, 3, 1, 0} && right.index == 4,
                           "right chain [5,3,1,0]", detail);
              ok &= expect(solver.der_space().dim() == 7, "derivation dimension 7", detail);
              Matrix phi = dorofeev_phi();
              ok &= expect(solver.is_f_leibniz_derivation(BracketTree::left_comb(2), phi),
                           "phi is a derivation", detail);
              ok &= expect(det_and_inverse(phi).first == Rational(-6), "det(phi) = -6", detail);
              ok &= expect(solver.left_lder_space(4).dim() == 25, "order-4 left space is End",
                           detail);
              ok &= expect(solver.left_lder_space(3).dim() < 25, "order-3 left space is proper",
                           detail);
              Report analysis = cmd_analyze("@dorofeev", kConfig);
              ok &= expect(report_has(analysis, "dorofeev/right-nilpotency-index-3", "flag"),
                           "cited index-3 claim emitted as flag", detail);
              return ok;
            });

  criterion(2, "m7 block: malcev non-lie, operator identities, spaces, certificate", 30.0,
            [](std::string& detail) {
              Algebra m = m7();
              bool ok = expect(satisfies(m, VarietyTag::malcev).first, "malcev identity", detail);
              ok &= expect(!satisfies(m, VarietyTag::lie).first, "not lie", detail);

              std::vector<Matrix> rops;
              for (int i = 0; i < 7; ++i) rops.push_back(m.right_op_of_basis(i));
              Matrix gram = killing_form(m).gram;
              auto comm = [](const Matrix& x, const Matrix& y) { return x * y - y * x; };
              bool operator_identity = true, chi_assoc = true;
              for (int i = 0; i < 7; ++i) {
                for (int j = 0; j < 7; ++j) {
                  Vec xy = m.multiply(m.basis_vector(i), m.basis_vector(j));
                  for (int k = 0; k < 7; ++k) {
                    Matrix lhs = m.right_op(m.multiply(xy, m.basis_vector(k))) * Rational(2);
                    Matrix rhs =
                        comm(comm(rops[i], rops[j]), rops[k]) +
                        comm(rops[j], m.right_op(m.multiply(m.basis_vector(i), m.basis_vector(k)))) +
                        comm(rops[i], m.right_op(m.multiply(m.basis_vector(k), m.basis_vector(j))));
                    if (lhs != rhs) operator_identity = false;
                    Vec yz = m.multiply(m.basis_vector(j), m.basis_vector(k));
                    Rational l, r;
                    for (int p = 0; p < 7; ++p) {
                      if (!xy[p].is_zero()) l += xy[p] * gram(p, k);
                      if (!yz[p].is_zero()) r += gram(i, p) * yz[p];
                    }
                    if (l != r) chi_assoc = false;
                  }
                }
              }
              ok &= expect(operator_identity, "malcev operator identity on all triples", detail);
              ok &= expect(chi_assoc, "killing form associativity on all triples", detail);
              ok &= expect(lie_center(m).is_zero(), "lie center is zero", detail);

              DerivationSolver solver(m);
              DerivationSpace der = solver.der_space();
              ok &= expect(der.dim() == 14, "dim Der = 14", detail);
              ok &= expect(solver.left_lder_space(3).space == der.space,
                           "order-3 left space equals Der", detail);
              InvertibleWitness w =
                  solver.contains_invertible(der, kConfig.seed, kConfig.trials, kConfig.coeff_box);
              ok &= expect(w.kind == InvertibleWitness::Kind::certified_none &&
                               w.reason == "odd-dimensional skew family",
                           "certified-none via the skew certificate", detail);
              return ok;
            });

  criterion(3, "unital proposition: every arrangement of lengths 3 and 4 collapses", 30.0,
            [](std::string& detail) {
              bool ok = true;
              for (const char* name : {"mat2", "plus_mat2"}) {
                DerivationSolver solver(*find_entry(name)->algebra);
                Subspace der = solver.der_space().space;
                int count = 0;
                for (int n : {3, 4}) {
                  for (const auto& f : enumerate_arrangements(n)) {
                    ++count;
                    ok &= expect(solver.f_lder_space(f).space == der,
                                 std::string(name) + ": arrangement " + f.serialize(), detail);
                  }
                }
                ok &= expect(count == 7, "2 + 5 arrangements", detail);
              }
              return ok;
            });

  criterion(4, "characterizations: full catalog + 10 seeded randoms, orders up to 5", 120.0,
            [](std::string& detail) {
              Report right = cmd_verify("rightnilp-char", kConfig);
              Report nilp = cmd_verify("nilp-char", kConfig);
              bool ok = expect(!right.has_fail(), "right-nilpotency characterization", detail);
              ok &= expect(!nilp.has_fail(), "nilpotency characterization", detail);
              ok &= expect(right.checks.size() == 21 && nilp.checks.size() == 21,
                           "11 catalog entries + 10 random draws", detail);
              return ok;
            });

  criterion(5, "moens suite: 60 constructed witnesses; no invertible member for the four "
               "non-nilpotent entries",
            120.0, [](std::string& detail) {
              Report suite = cmd_verify("invert-construction", kConfig);
              bool ok = expect(!suite.has_fail(), "20 verified witnesses per class", detail);
              for (const char* name : {"sl2", "mat2", "plus_mat2", "m7"}) {
                DerivationSolver solver(*find_entry(name)->algebra);
                for (int n = 2; n <= 5; ++n) {
                  InvertibleWitness left = solver.contains_invertible(
                      solver.left_lder_space(n), kConfig.seed + n, kConfig.trials, kConfig.coeff_box);
                  InvertibleWitness all = solver.contains_invertible(
                      solver.lder_space(n), kConfig.seed + 100 + n, kConfig.trials, kConfig.coeff_box);
                  ok &= expect(!left.found() && !all.found(),
                               std::string(name) + " has no invertible member at order " +
                                   std::to_string(n),
                               detail);
                }
              }
              return ok;
            });

  criterion(6, "structural lemmas: order monotonicity, closure, leibniz rule, powers, eigenspaces",
            120.0, [](std::string& detail) {
              bool ok = expect(!cmd_verify("ord-lemma", kConfig).has_fail(), "ord-lemma", detail);
              ok &= expect(!cmd_verify("closure-prop", kConfig).has_fail(), "closure-prop", detail);
              ok &= expect(!cmd_verify("leibniz-rule", kConfig).has_fail(), "leibniz-rule", detail);
              ok &= expect(!cmd_verify("powers-prop", kConfig).has_fail(), "powers-prop", detail);

              Algebra h = *find_entry("heisenberg")->algebra;
              DerivationSolver hs(h);
              Matrix d(3, 3);
              d(0, 0) = Rational(1);
              d(1, 1) = Rational(1);
              d(2, 2) = Rational(2);
              ok &= expect(hs.eigenspace_product_check(d, 2) && hs.eigenspace_product_check(d, 3),
                           "heisenberg eigenspace products", detail);
              DerivationSolver ds(*dorofeev().algebra);
              ok &= expect(ds.eigenspace_product_check(dorofeev_phi(), 2),
                           "dorofeev eigenspace products", detail);
              return ok;
            });

  criterion(7, "radical suite: computed radicals and left-space invariance", 30.0,
            [](std::string& detail) {
              RadicalOutcome sl2_rad = form_radical_malcev(*find_entry("sl2")->algebra);
              bool ok = expect(sl2_rad.radical && sl2_rad.radical->is_zero(), "rad(sl2) = 0", detail);
              Algebra sd = *find_entry("sl2_semidirect_v2")->algebra;
              Subspace module = Subspace::span_of(5, {unit(5, 3), unit(5, 4)});
              RadicalOutcome sd_rad = form_radical_malcev(sd);
              ok &= expect(sd_rad.radical && *sd_rad.radical == module, "rad = module", detail);
              RadicalOutcome pm_rad = form_radical_jordan(*find_entry("plus_mat2")->algebra);
              ok &= expect(pm_rad.radical && pm_rad.radical->is_zero(), "rad(plus_mat2) = 0",
                           detail);
              DerivationSolver solver(sd);
              for (int n = 2; n <= 4; ++n) {
                ok &= expect(solver.radical_invariance_check(module, solver.left_lder_space(n)),
                             "invariance at order " + std::to_string(n), detail);
              }
              return ok;
            });

  criterion(8, "n-ary suite: filippov checks, derivation matrices, williams parity, oracle", 30.0,
            [](std::string& detail) {
              bool ok = expect(filippov_check(*filippov_simple(3).nary), "filippov(d4)", detail);
              ok &= expect(filippov_check(*filippov_simple(4).nary), "filippov(d5)", detail);
              ok &= expect(is_nary_derivation(*filippov_simple(3).nary, filippov_derivation(3)) &&
                               !det_and_inverse(filippov_derivation(3)).first.is_zero(),
                           "d4 derivation matrix invertible", detail);
              ok &= expect(is_nary_derivation(*filippov_simple(5).nary, filippov_derivation(5)) &&
                               !det_and_inverse(filippov_derivation(5)).first.is_zero(),
                           "d6 derivation matrix invertible", detail);
              ok &= expect(is_nary_derivation(*filippov_simple(4).nary, filippov_derivation(4)),
                           "d5 derivation matrix verifies", detail);
              for (int n : {4, 6}) {
                Matrix cd = williams_corrected_derivation(n);
                ok &= expect(is_nary_derivation(*williams(n).nary, cd) &&
                                 !det_and_inverse(cd).first.is_zero(),
                             "williams corrected mapping, n = " + std::to_string(n), detail);
              }
              Report suite = cmd_verify("nary-examples", kConfig);
              ok &= expect(!suite.has_fail(), "nary-examples suite", detail);
              // The odd cases must be ledgered, not asserted away.
              ok &= expect(report_has(suite, "nary-examples/d5-derivation-singular", "flag"),
                           "d5 invertibility erratum recorded", detail);
              ok &= expect(report_has(suite, "nary-examples/williams3-parity", "flag") &&
                               report_has(suite, "nary-examples/williams5-parity", "flag"),
                           "williams parity ledger entries", detail);
              for (auto& e : binary_entries()) {
                ok &= expect(report_has(suite, "nary-examples/induced-oracle-" + e.name, "pass"),
                             "induced oracle equality for " + e.name, detail);
              }
              return ok;
            });

  criterion(9, "multiplication-algebra factorization for mat2 and its 2-mutation", 30.0,
            [](std::string& detail) {
              Algebra mat2 = *find_entry("mat2")->algebra;
              bool ok = true;
              for (auto& u : {mat2, mutation(mat2, Rational(2))}) {
                Subspace mu = multiplication_algebra(u);
                Subspace mp = multiplication_algebra(plus_algebra(u));
                Subspace mm = multiplication_algebra(minus_algebra(u));
                Subspace sum = subspace_sum(
                    subspace_sum(mp, mm),
                    subspace_sum(operator_product_span(mp, mm), operator_product_span(mm, mp)));
                ok &= expect(sum == mu, u.name() + ": factorization span equality", detail);
                ok &= expect(mu.dim() == 16, u.name() + ": M(U) is all of End", detail);
              }
              return ok;
            });

  criterion(10, "end-to-end: verify all --seed 0 twice, byte-identical, exit 0", 120.0,
            [](std::string& detail) {
              auto run = [](const std::string& path) {
                std::string cmd = std::string(LDERLAB_CLI_PATH) +
                                  " verify all --seed 0 --format json > " + path + " 2>&1";
                return std::system(cmd.c_str());
              };
              int rc1 = run("/tmp/lderlab_all_1.json");
              int rc2 = run("/tmp/lderlab_all_2.json");
              bool ok = expect(WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0, "exit code 0", detail);
              std::ifstream f1("/tmp/lderlab_all_1.json"), f2("/tmp/lderlab_all_2.json");
              std::stringstream s1, s2;
              s1 << f1.rdbuf();
              s2 << f2.rdbuf();
              ok &= expect(!s1.str().empty() && s1.str() == s2.str(), "byte-identical reports",
                           detail);
              return ok;
            });

  if (failures == 0) {
    std::cout << "all criteria passed" << std::endl;
  } else {
    std::cout << failures << " criterion(s) failed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
