#include "gokit/io.hpp"

#include <fstream>
#include <sstream>

#include "gokit/error.hpp"

namespace gokit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::vector<int> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of indices");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

StructureTensor algebra_from_json(const json& j) {
  const int dim = as_int(field(j, "dim", "model"), "dim");
  if (dim <= 0) fail("dim", "must be positive");
  std::vector<std::string> labels;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array()) fail("basis", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("basis[" + std::to_string(i) + "]", "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    if (static_cast<int>(labels.size()) != dim) {
      fail("basis", "has " + std::to_string(labels.size()) + " labels but dim is " +
                        std::to_string(dim));
    }
  }
  const json& br = field(j, "brackets", "model");
  if (!br.is_array()) fail("brackets", "expected an array");
  std::vector<BracketEntry> entries;
  for (std::size_t r = 0; r < br.size(); ++r) {
    const std::string where = "brackets[" + std::to_string(r) + "]";
    const json& e = br[r];
    if (!e.is_array() || e.size() != 4) fail(where, "expected [i, j, k, value]");
    entries.push_back({as_int(e[0], where + "[0]"), as_int(e[1], where + "[1]"),
                       as_int(e[2], where + "[2]"), as_double(e[3], where + "[3]")});
  }
  try {
    return StructureTensor(dim, entries, labels);
  } catch (const InvalidInput& e) {
    fail("brackets", e.what());
  }
}

json algebra_to_json(const StructureTensor& algebra) {
  json br = json::array();
  for (const auto& e : algebra.entries()) br.push_back({e.i, e.j, e.k, e.value});
  return {{"dim", algebra.dim()}, {"basis", algebra.labels()}, {"brackets", br}};
}

Polynomial polynomial_from_json(const json& j, int num_vars, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [[exponents], coeff] terms");
  std::vector<Monomial> terms;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string w = where + "[" + std::to_string(r) + "]";
    const json& t = j[r];
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) {
      fail(w, "expected [[exponents], coeff]");
    }
    std::vector<int> e = index_list(t[0], w + "[0]");
    if (static_cast<int>(e.size()) != num_vars) {
      fail(w, "exponent vector has length " + std::to_string(e.size()) + ", expected " +
                  std::to_string(num_vars));
    }
    terms.push_back({std::move(e), as_double(t[1], w + "[1]")});
  }
  try {
    return Polynomial(num_vars, std::move(terms));
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({t.exponents, t.coeff});
  return out;
}

EnergyForm form_from_json(const json& j, int dim) {
  const json& kind = field(j, "kind", "form");
  if (!kind.is_string()) fail("form.kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "quadratic") {
    const json& m = field(j, "matrix", "form");
    if (!m.is_array() || static_cast<int>(m.size()) != dim) {
      fail("form.matrix", "expected " + std::to_string(dim) + " rows");
    }
    Matrix s(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const std::string w = "form.matrix[" + std::to_string(r) + "]";
      if (!m[r].is_array() || static_cast<int>(m[r].size()) != dim) {
        fail(w, "expected " + std::to_string(dim) + " columns");
      }
      for (int c = 0; c < dim; ++c) s(r, c) = as_double(m[r][c], w + "[" + std::to_string(c) + "]");
    }
    try {
      return EnergyForm::quadratic(std::move(s));
    } catch (const InvalidInput& e) {
      fail("form.matrix", e.what());
    }
  }
  if (k == "polynomial") {
    return EnergyForm::polynomial(polynomial_from_json(field(j, "terms", "form"), dim, "form.terms"));
  }
  fail("form.kind", "unknown kind \"" + k + "\" (expected quadratic or polynomial)");
}

json form_to_json(const EnergyForm& form) {
  if (form.is_quadratic()) {
    const Matrix& s = form.matrix();
    json rows = json::array();
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < s.cols(); ++c) row.push_back(s(r, c));
      rows.push_back(row);
    }
    return {{"kind", "quadratic"}, {"matrix", rows}};
  }
  return {{"kind", "polynomial"}, {"terms", polynomial_to_json(form.poly())}};
}

HomogeneousModel ModelDocument::model() const {
  return HomogeneousModel(algebra, k_indices, m_indices);
}

const EnergyForm& ModelDocument::require_form() const {
  if (!form) throw InvalidInput("model: missing field \"form\"");
  return *form;
}

const Polynomial& ModelDocument::function(const std::string& name) const {
  auto it = functions.find(name);
  if (it == functions.end()) {
    std::string known;
    for (const auto& [k, v] : functions) known += (known.empty() ? "" : ", ") + k;
    throw InvalidInput("unknown function \"" + name + "\" (model defines: " +
                       (known.empty() ? "none" : known) + ")");
  }
  return it->second;
}

ModelDocument model_from_json(const json& j) {
  if (!j.is_object()) fail("model", "expected a JSON object");
  ModelDocument doc{algebra_from_json(j), {}, {}, std::nullopt, {}};
  const int n = doc.algebra.dim();
  if (auto it = j.find("k"); it != j.end()) doc.k_indices = index_list(*it, "k");
  if (auto it = j.find("m"); it != j.end()) {
    doc.m_indices = index_list(*it, "m");
  } else {
    std::vector<bool> in_k(n, false);
    for (int i : doc.k_indices)
      if (i >= 0 && i < n) in_k[i] = true;
    for (int i = 0; i < n; ++i)
      if (!in_k[i]) doc.m_indices.push_back(i);
  }
  if (auto it = j.find("form"); it != j.end()) {
    doc.form = form_from_json(*it, static_cast<int>(doc.m_indices.size()));
  }
  if (auto it = j.find("functions"); it != j.end()) {
    if (!it->is_object()) fail("functions", "expected an object of named polynomials");
    for (const auto& [name, terms] : it->items())
      doc.functions.emplace(name, polynomial_from_json(terms, n, "functions." + name));
  }
  return doc;
}

json model_to_json(const ModelDocument& doc) {
  json j = algebra_to_json(doc.algebra);
  j["k"] = doc.k_indices;
  j["m"] = doc.m_indices;
  if (doc.form) j["form"] = form_to_json(*doc.form);
  if (!doc.functions.empty()) {
    json f = json::object();
    for (const auto& [name, p] : doc.functions) f[name] = polynomial_to_json(p);
    j["functions"] = f;
  }
  return j;
}

ModelDocument load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": malformed JSON: " + e.what());
  }
  try {
    return model_from_json(j);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const AffineSolutionSet& set) {
  json basis = json::array();
  for (Eigen::Index c = 0; c < set.nullspace.rank(); ++c)
    basis.push_back(vector_to_json(set.nullspace.vectors.col(c)));
  return {{"solvable", set.solvable},
          {"particular", vector_to_json(set.particular)},
          {"nullspace", basis},
          {"nullspace_rank", set.nullspace.rank()},
          {"residual", set.residual},
          {"tol", set.tol}};
}

json to_json(const GoReport& r) {
  json j = {{"verdict", to_string(r.verdict)},
            {"samples_tested", r.samples_tested},
            {"unsolvable", r.unsolvable},
            {"borderline", r.borderline},
            {"max_residual", r.max_residual},
            {"seed", r.seed},
            {"evidence_grade", true},
            {"note", "verdict rests on the tested samples only"}};
  j["tol"] = r.tol ? json(*r.tol) : json("default");
  if (r.counterexample) {
    j["counterexample"] = vector_to_json(*r.counterexample);
    j["counterexample_residual"] = r.counterexample_residual;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json to_json(const GraphSample& s) {
  return {{"p", vector_to_json(s.p)},
          {"xi", vector_to_json(s.xi)},
          {"q_norm", s.q_norm},
          {"uniqueness_rank", s.uniqueness_rank},
          {"membership_residual", s.membership},
          {"q_invariance_residual", s.q_invariance}};
}

json to_json(const NatRedReport& r) {
  json j = {{"verdict", to_string(r.verdict)},
            {"go_verdict", to_string(r.go)},
            {"fit_residual", r.fit_residual},
            {"membership_residual", r.membership_residual},
            {"equivariance_residual", r.equivariance_residual},
            {"additivity_violation", r.additivity_violation},
            {"tol", r.tol},
            {"seed", r.seed}};
  if (r.linear_candidate) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < r.linear_candidate->rows(); ++i)
      rows.push_back(vector_to_json(r.linear_candidate->row(i).transpose()));
    j["linear_candidate"] = rows;
  } else {
    j["linear_candidate"] = nullptr;
  }
  return j;
}

}  // namespace gokit::io
