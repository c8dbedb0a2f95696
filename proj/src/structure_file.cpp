#include "modtwist/structure_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace modtwist {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw MalformedInput(msg); }

void only_fields(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(where + ": unknown field '" + key + "'");
  }
}

const Json& required(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing field '" + key + "'");
  return *it;
}

Rational coefficient(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where + ": coefficients must be strings such as \"3\" or \"-1/2\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(where + ": " + e.what());
  }
}

std::string tuple_text(const std::vector<std::string>& labels) {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i];
  return s + ")";
}

Index lookup(const LieAlgebra& g, const Json& label, const std::string& where) {
  if (!label.is_string()) fail(where + ": basis labels must be strings");
  auto idx = g.index_of(label.get<std::string>());
  if (!idx) fail(where + ": unknown basis label '" + label.get<std::string>() + "'");
  return *idx;
}

/// Label tuple -> strictly increasing index tuple.
IndexTuple index_tuple(const LieAlgebra& g, const Json& labels, const std::string& where) {
  if (!labels.is_array()) fail(where + ": 'indices' must be a list of labels");
  IndexTuple t;
  std::vector<std::string> names;
  for (const auto& l : labels) {
    t.push_back(lookup(g, l, where));
    names.push_back(l.get<std::string>());
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] >= t[i]) fail(where + ": index tuple " + tuple_text(names) + " is not strictly increasing");
  return t;
}

Vector vector_block(const LieAlgebra& g, const Json& obj, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object mapping labels to coefficients");
  Vector v(g.dim());
  for (const auto& [label, c] : obj.items()) v[lookup(g, label, where)] = coefficient(c, where + "." + label);
  return v;
}

template <class Tag>
Exterior<Tag> term_list(const LieAlgebra& g, const Json& list, std::size_t degree, const std::string& where) {
  if (!list.is_array()) fail(where + ": expected a list of terms");
  Exterior<Tag> out(g.dim(), degree);
  std::set<IndexTuple> seen;
  for (std::size_t n = 0; n < list.size(); ++n) {
    const Json& term = list[n];
    const std::string at = where + "[" + std::to_string(n) + "]";
    only_fields(term, at, {"indices", "coeff"});
    IndexTuple t = index_tuple(g, required(term, at, "indices"), at);
    if (t.size() != degree)
      fail(at + ": expected " + std::to_string(degree) + " indices, got " + std::to_string(t.size()));
    if (!seen.insert(t).second) fail(at + ": repeated index tuple");
    out.add_sorted(t, coefficient(required(term, at, "coeff"), at));
  }
  return out;
}

LieAlgebra algebra_block(const Json& a) {
  only_fields(a, "algebra", {"dimension", "basis", "brackets"});
  const Json& basis = required(a, "algebra", "basis");
  if (!basis.is_array()) fail("algebra.basis: expected a list of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) fail("algebra.basis: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const Json& dim = required(a, "algebra", "dimension");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() != labels.size())
    fail("algebra.dimension: must equal the number of basis labels");

  // Labels only, to resolve names before the table is validated.
  const LieAlgebra names = LieAlgebra::abelian(labels);
  StructureConstants sc;
  if (auto it = a.find("brackets"); it != a.end()) {
    if (!it->is_array()) fail("algebra.brackets: expected a list");
    for (std::size_t n = 0; n < it->size(); ++n) {
      const Json& b = (*it)[n];
      const std::string at = "algebra.brackets[" + std::to_string(n) + "]";
      only_fields(b, at, {"pair", "value"});
      IndexTuple t = index_tuple(names, required(b, at, "pair"), at);
      if (t.size() != 2) fail(at + ": 'pair' must name two basis elements");
      if (sc.count({t[0], t[1]})) fail(at + ": bracket (" + labels[t[0]] + ", " + labels[t[1]] + ") given twice");
      Vector v = vector_block(names, required(b, at, "value"), at + ".value");
      if (!is_zero(v)) sc.emplace(std::pair{t[0], t[1]}, std::move(v));
    }
  }
  return LieAlgebra(labels, sc);
}

Json tuple_json(const LieAlgebra& g, const IndexTuple& t) {
  Json out = Json::array();
  for (Index i : t) out.push_back(g.label(i));
  return out;
}

Json vector_json(const LieAlgebra& g, const Vector& v) {
  Json out = Json::object();
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[g.label(i)] = v[i].str();
  return out;
}

template <class Tag>
Json terms_json(const LieAlgebra& g, const Exterior<Tag>& e) {
  Json out = Json::array();
  for (const auto& [t, c] : e.terms()) out.push_back(Json{{"indices", tuple_json(g, t)}, {"coeff", c.str()}});
  return out;
}

}  // namespace

bool operator==(const StructureFile& a, const StructureFile& b) {
  return a.algebra.labels() == b.algebra.labels() &&
         a.algebra.structure_constants() == b.algebra.structure_constants() && a.r == b.r && a.psi == b.psi &&
         a.subalgebra == b.subalgebra && a.mu == b.mu && a.xi == b.xi;
}

StructureFile parse_structure(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  only_fields(doc, "structure file", {"algebra", "r", "psi", "subalgebra", "mu", "xi"});
  StructureFile f{algebra_block(required(doc, "structure file", "algebra")), {}, {}, {}, {}, {}};
  const LieAlgebra& g = f.algebra;
  if (auto it = doc.find("r"); it != doc.end()) f.r = term_list<VectorTag>(g, *it, 2, "r");
  if (auto it = doc.find("psi"); it != doc.end()) f.psi = term_list<CovectorTag>(g, *it, 3, "psi");
  if (auto it = doc.find("mu"); it != doc.end()) f.mu = term_list<CovectorTag>(g, *it, 2, "mu");
  if (auto it = doc.find("xi"); it != doc.end()) f.xi = term_list<CovectorTag>(g, *it, 1, "xi");
  if (auto it = doc.find("subalgebra"); it != doc.end()) {
    if (!it->is_array()) fail("subalgebra: expected a list of vectors");
    std::vector<Vector> vs;
    for (std::size_t n = 0; n < it->size(); ++n)
      vs.push_back(vector_block(g, (*it)[n], "subalgebra[" + std::to_string(n) + "]"));
    f.subalgebra = std::move(vs);
  }
  return f;
}

std::string serialize_structure(const StructureFile& f) {
  const LieAlgebra& g = f.algebra;
  Json brackets = Json::array();
  for (const auto& [key, value] : g.structure_constants())
    brackets.push_back(Json{{"pair", tuple_json(g, {key.first, key.second})}, {"value", vector_json(g, value)}});
  Json doc{{"algebra", Json{{"dimension", g.dim()}, {"basis", g.labels()}, {"brackets", brackets}}}};
  if (f.r) doc["r"] = terms_json(g, *f.r);
  if (f.psi) doc["psi"] = terms_json(g, *f.psi);
  if (f.subalgebra) {
    Json vs = Json::array();
    for (const auto& v : *f.subalgebra) vs.push_back(vector_json(g, v));
    doc["subalgebra"] = vs;
  }
  if (f.mu) doc["mu"] = terms_json(g, *f.mu);
  if (f.xi) doc["xi"] = terms_json(g, *f.xi);
  return doc.dump(2) + "\n";
}

StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

void write_structure_file(const std::string& path, const StructureFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_structure(file);
}

}  // namespace modtwist
