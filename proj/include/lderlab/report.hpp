#ifndef LDERLAB_REPORT_HPP
#define LDERLAB_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"
#include "lderlab/leibniz.hpp"
#include "lderlab/nary.hpp"

namespace lderlab {

using ordered_json = nlohmann::ordered_json;

struct Config {
  uint64_t seed = 0;
  int trials = 64;
  int max_order = 5;
  int coeff_box = 5;
  int n_cap = 6;
  std::string format = "text";  // text | json
};

struct CheckResult {
  std::string id;
  std::string status;  // pass | fail | flag | skip
  std::string details;
  ordered_json witness;  // optional structured payload
};

/*
 * Machine-readable run report. Output is deterministic byte for byte for a
 * fixed input and config: checks appear in insertion order and every value
 * is an exact rational string.
 */
struct Report {
  std::string command;
  Config config;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> discrepancies;

  void add(std::string id, std::string status, std::string details,
           ordered_json witness = ordered_json());
  void pass(std::string id, std::string details) { add(std::move(id), "pass", std::move(details)); }
  void fail(std::string id, std::string details) { add(std::move(id), "fail", std::move(details)); }
  // Documented source discrepancy: reported as flag, never as fail.
  void flag(std::string id, std::string details);
  void skip(std::string id, std::string details) { add(std::move(id), "skip", std::move(details)); }
  void check(std::string id, bool ok, std::string details);
  void absorb(const Report& other);  // append checks and discrepancies

  bool has_fail() const;
  int exit_code() const { return has_fail() ? 1 : 0; }
  ordered_json to_json() const;
  std::string to_text() const;
  std::string render() const { return config.format == "json" ? to_json().dump(2) + "\n" : to_text(); }
};

std::string rational_to_string(const Rational& r);
ordered_json matrix_to_json(const Matrix& m);
ordered_json vec_to_json(const Vec& v);
ordered_json subspace_to_json(const Subspace& s);
ordered_json chain_to_json(const ChainReport& c);
ordered_json witness_to_json(const InvertibleWitness& w);

// AlgebraDocument: {"name", "dim", "basis", "table"} with table[i][j] a
// dim-array of rational strings, or the n-ary form {"arity", "dim",
// "anticommutative", "entries": [{"args": [..], "val": {"coord": "p/q"}}]}.
struct ParsedDocument {
  std::optional<Algebra> algebra;
  std::optional<NAryAlgebra> nary;
};

ParsedDocument parse_algebra_document(const std::string& text);
ordered_json algebra_to_json(const Algebra& a);
ordered_json nary_to_json(const NAryAlgebra& b);

}  // namespace lderlab

#endif
