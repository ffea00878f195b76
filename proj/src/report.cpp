#include "lderlab/report.hpp"

#include <stdexcept>

namespace lderlab {

void Report::add(std::string id, std::string status, std::string details, ordered_json witness) {
  checks.push_back(CheckResult{std::move(id), std::move(status), std::move(details), std::move(witness)});
}

void Report::flag(std::string id, std::string details) {
  discrepancies.emplace_back(id, details);
  add(std::move(id), "flag", std::move(details));
}

void Report::check(std::string id, bool ok, std::string details) {
  add(std::move(id), ok ? "pass" : "fail", std::move(details));
}

void Report::absorb(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
  for (const auto& d : other.discrepancies) discrepancies.push_back(d);
}

bool Report::has_fail() const {
  for (const auto& c : checks) {
    if (c.status == "fail") return true;
  }
  return false;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = ordered_json{{"seed", config.seed},
                             {"trials", config.trials},
                             {"max_order", config.max_order},
                             {"coeff_box", config.coeff_box},
                             {"n_cap", config.n_cap}};
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["id"] = c.id;
    e["status"] = c.status;
    e["details"] = c.details;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  ordered_json disc = ordered_json::array();
  for (const auto& [id, note] : discrepancies) {
    disc.push_back(ordered_json{{"id", id}, {"note", note}});
  }
  j["discrepancies"] = std::move(disc);
  j["exit_code"] = exit_code();
  return j;
}

std::string Report::to_text() const {
  std::string out;
  out += "# " + command + "\n";
  out += "# config: seed=" + std::to_string(config.seed) + " trials=" + std::to_string(config.trials) +
         " max-order=" + std::to_string(config.max_order) + "\n";
  for (const auto& c : checks) {
    out += "[" + c.status + "] " + c.id + ": " + c.details + "\n";
  }
  if (!discrepancies.empty()) {
    out += "# documented discrepancies:\n";
    for (const auto& [id, note] : discrepancies) {
      out += "#   " + id + ": " + note + "\n";
    }
  }
  int passed = 0, failed = 0, flagged = 0, skipped = 0;
  for (const auto& c : checks) {
    if (c.status == "pass") ++passed;
    else if (c.status == "fail") ++failed;
    else if (c.status == "flag") ++flagged;
    else ++skipped;
  }
  out += "# summary: " + std::to_string(passed) + " pass, " + std::to_string(failed) + " fail, " +
         std::to_string(flagged) + " flag, " + std::to_string(skipped) + " skip\n";
  return out;
}

std::string rational_to_string(const Rational& r) { return r.to_string(); }

ordered_json vec_to_json(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.row(r)));
  return rows;
}

ordered_json subspace_to_json(const Subspace& s) {
  ordered_json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

ordered_json chain_to_json(const ChainReport& c) {
  ordered_json j;
  switch (c.kind) {
    case ChainKind::power: j["kind"] = "power"; break;
    case ChainKind::right_power: j["kind"] = "right_power"; break;
    case ChainKind::solvable: j["kind"] = "solvable"; break;
  }
  j["dims"] = c.dims;
  j["stabilized_at"] = c.stabilized_at;
  j["terminal_dim"] = c.terminal_dim;
  if (c.index) j["index"] = *c.index;
  return j;
}

ordered_json witness_to_json(const InvertibleWitness& w) {
  ordered_json j;
  switch (w.kind) {
    case InvertibleWitness::Kind::explicit_inverse: j["certificate"] = "explicit-inverse"; break;
    case InvertibleWitness::Kind::none_found: j["certificate"] = "none-found"; break;
    case InvertibleWitness::Kind::certified_none: j["certificate"] = "certified-none"; break;
  }
  j["order"] = w.order;
  if (w.kind == InvertibleWitness::Kind::none_found) {
    j["trials"] = w.trials;
    j["note"] = "probabilistic: absence not certified";
  }
  if (!w.reason.empty()) j["reason"] = w.reason;
  if (!w.construction.empty()) j["construction"] = w.construction;
  if (w.map) j["map"] = matrix_to_json(*w.map);
  if (w.inverse) j["inverse"] = matrix_to_json(*w.inverse);
  return j;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("algebra document: expected a rational string, got " + j.dump());
}

}  // namespace

ParsedDocument parse_algebra_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra document: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("algebra document: expected a JSON object");
  ParsedDocument doc;
  std::string name = j.value("name", "input");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::invalid_argument("algebra document: missing integer field \"dim\"");
  }
  int dim = j["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("algebra document: dim must be >= 1");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
    if (int(labels.size()) != dim) {
      throw std::invalid_argument("algebra document: basis length does not match dim");
    }
  } else {
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  if (j.contains("arity")) {
    int arity = j["arity"].get<int>();
    bool anticommutative = j.value("anticommutative", false);
    NAryAlgebra b(name, arity, labels, anticommutative);
    if (!j.contains("entries") || !j["entries"].is_array()) {
      throw std::invalid_argument("algebra document: n-ary form requires an \"entries\" array");
    }
    for (const auto& e : j["entries"]) {
      std::vector<int> args;
      for (const auto& a : e.at("args")) args.push_back(a.get<int>());
      Vec v(dim);
      for (const auto& [key, val] : e.at("val").items()) {
        int k = std::stoi(key);
        if (k < 0 || k >= dim) throw std::invalid_argument("algebra document: val index out of range");
        v[k] = rational_from_json(val);
      }
      b.set_entry(std::move(args), std::move(v));
    }
    doc.nary = std::move(b);
    return doc;
  }

  if (!j.contains("table") || !j["table"].is_array() || int(j["table"].size()) != dim) {
    throw std::invalid_argument("algebra document: table must be a dim x dim array");
  }
  Algebra a(name, labels);
  for (int i = 0; i < dim; ++i) {
    const auto& row = j["table"][i];
    if (!row.is_array() || int(row.size()) != dim) {
      throw std::invalid_argument("algebra document: table row " + std::to_string(i) +
                                  " has the wrong length");
    }
    for (int jj = 0; jj < dim; ++jj) {
      const auto& cell = row[jj];
      if (!cell.is_array() || int(cell.size()) != dim) {
        throw std::invalid_argument("algebra document: table[" + std::to_string(i) + "][" +
                                    std::to_string(jj) + "] has the wrong length");
      }
      Vec v(dim);
      for (int k = 0; k < dim; ++k) v[k] = rational_from_json(cell[k]);
      a.set_table(i, jj, std::move(v));
    }
  }
  doc.algebra = std::move(a);
  return doc;
}

ordered_json algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_labels();
  ordered_json table = ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < a.dim(); ++k) row.push_back(vec_to_json(a.table(i, k)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

ordered_json nary_to_json(const NAryAlgebra& b) {
  ordered_json j;
  j["name"] = b.name();
  j["arity"] = b.arity();
  j["dim"] = b.dim();
  j["basis"] = b.basis_labels();
  j["anticommutative"] = b.anticommutative();
  ordered_json entries = ordered_json::array();
  for (const auto& [args, val] : b.entries()) {
    ordered_json e;
    e["args"] = args;
    ordered_json v;
    for (int k = 0; k < b.dim(); ++k) {
      if (!val[k].is_zero()) v[std::to_string(k)] = val[k].to_string();
    }
    e["val"] = std::move(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace lderlab
