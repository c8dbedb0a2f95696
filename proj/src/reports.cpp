#include "modtwist/reports.hpp"

#include <algorithm>
#include <sstream>

#include "modtwist/catalog.hpp"
#include "modtwist/frobenius.hpp"

namespace modtwist::report {

namespace {

Json vec(const std::vector<std::string>& labels, const Vector& v, const std::string& suffix = "") {
  Json out = Json::object();
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[labels.at(i) + suffix] = v[i].str();
  return out;
}

Json coords(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

template <class Tag>
Json terms(const std::vector<std::string>& labels, const Exterior<Tag>& e, const std::string& suffix) {
  Json out = Json::array();
  for (const auto& [t, c] : e.terms()) {
    Json idx = Json::array();
    for (Index i : t) idx.push_back(labels.at(i) + suffix);
    out.push_back(Json{{"indices", idx}, {"coeff", c.str()}});
  }
  return out;
}

Json terms(const LieAlgebra& g, const Multivector& m) { return terms(g.labels(), m, ""); }
Json terms(const LieAlgebra& g, const Cochain& c) { return terms(g.labels(), c, "*"); }

std::string tuple_text(const LieAlgebra& g, const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + g.label(t[i]);
  return s + ")";
}

Json base(const std::string& command) { return Json{{"command", command}}; }

Outcome finish(Json report, int code) {
  report["exit_code"] = code;
  return Outcome{code, std::move(report), std::nullopt};
}

const Multivector& need_r(const StructureFile& f) {
  if (!f.r) throw MalformedInput("structure file has no 'r' block");
  return *f.r;
}

Cochain psi_or_zero(const StructureFile& f) { return f.psi ? *f.psi : Cochain(f.algebra.dim(), 3); }

Subalgebra need_subalgebra(const StructureFile& f) {
  if (!f.subalgebra) throw MalformedInput("structure file has no 'subalgebra' block");
  return span_subalgebra(f.algebra, *f.subalgebra);
}

const char* status_name(CybeResult::Status s) {
  switch (s) {
    case CybeResult::Status::Pass: return "pass";
    case CybeResult::Status::NotClosed: return "not_closed";
    case CybeResult::Status::Fail: return "fail";
  }
  return "fail";
}

/// Adds the CYBE verdict to `report`; true when it passed.
bool add_cybe(Json& report, const LieAlgebra& g, const CybeResult& res) {
  report["cybe"] = status_name(res.status);
  if (res.status == CybeResult::Status::NotClosed) {
    report["closedness_residual"] = terms(g, res.closedness_residual);
    report["offending_tuple"] = tuple_text(g, res.closedness_residual.terms().begin()->first);
  } else if (res.status == CybeResult::Status::Fail) {
    report["residual"] = terms(g, res.residual);
    report["offending_tuple"] = tuple_text(g, res.residual.terms().begin()->first);
  }
  return res.passed();
}

Json crosschecks_json(const std::vector<Crosscheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json subalgebra_json(const Subalgebra& p) {
  Json basis = Json::array();
  for (const auto& b : p.basis()) basis.push_back(vec(p.parent().labels(), b));
  return Json{{"dimension", p.dim()}, {"basis", basis}};
}

Json modular_json(const ModularClassReport& m) {
  const auto& g = m.carrier.parent();
  const auto& pl = m.carrier.algebra().labels();
  Json kernel = Json::array();
  for (const auto& k : m.kernel) kernel.push_back(vec(g.labels(), k.to_vector(), "*"));
  return Json{{"carrier", subalgebra_json(m.carrier)},
              {"kernel", kernel},
              {"chi_kernel", vec(pl, m.chi_kernel.to_vector(), "*")},
              {"chi_quotient", vec(pl, m.chi_quotient.to_vector(), "*")},
              {"representative", vec(g.labels(), m.representative)},
              {"crosschecks", crosschecks_json(m.crosschecks)}};
}

Json relations_json(const RelationReport& rel) {
  Json out = Json::array();
  for (const auto& id : rel.identities)
    out.push_back(Json{{"name", id.name},
                       {"lhs", coords(id.lhs)},
                       {"rhs", coords(id.rhs)},
                       {"residual", coords(id.residual)},
                       {"holds", id.holds()}});
  return out;
}

}  // namespace

Outcome verify(const StructureFile& f) {
  const auto& g = f.algebra;
  Json report = base("verify");
  const auto s = TwistedTriangularStructure::unchecked(g, need_r(f), psi_or_zero(f));
  if (!add_cybe(report, g, s.verify())) return finish(std::move(report), kFailed);
  const auto m = modular_class(s);
  report["invariants"] = crosschecks_json(m.crosschecks);
  return finish(std::move(report), m.all_passed() ? kOk : kFailed);
}

Outcome modular(const StructureFile& f) {
  const auto& g = f.algebra;
  Json report = base("modular");
  const auto s = TwistedTriangularStructure::unchecked(g, need_r(f), psi_or_zero(f));
  if (!add_cybe(report, g, s.verify())) return finish(std::move(report), kFailed);
  const auto m = modular_class(s);
  report.update(modular_json(m));
  return finish(std::move(report), m.all_passed() ? kOk : kFailed);
}

Outcome frobenius(const StructureFile& f) {
  const auto& g = f.algebra;
  Json report = base("frobenius");
  if (!f.xi) throw MalformedInput("structure file has no 'xi' block");
  const Subalgebra p = need_subalgebra(f);
  const Cochain xi = p.restrict(*f.xi);
  report["subalgebra"] = subalgebra_json(p);
  const auto check = is_frobenius(p, xi);
  report["frobenius"] = check.frobenius;
  if (!check.frobenius) {
    if (check.kernel_witness) report["kernel_witness"] = vec(g.labels(), *check.kernel_witness);
    return finish(std::move(report), kFailed);
  }
  report["X"] = vec(g.labels(), frobenius_modular(g, p, xi));
  return finish(std::move(report), kOk);
}

Outcome linearize(const StructureFile& f) {
  const auto& g = f.algebra;
  Json report = base("linearize");
  if (!f.mu) throw MalformedInput("structure file has no 'mu' block");
  const Subalgebra p = need_subalgebra(f);
  try {
    const auto s = modtwist::linearize(g, p, *f.mu);
    report["r"] = terms(g, s.r());
    report["psi"] = terms(g, s.psi());
    Outcome out = finish(std::move(report), kOk);
    out.file = StructureFile{g, s.r(), s.psi(), f.subalgebra, f.mu, f.xi};
    return out;
  } catch (const Degenerate& e) {
    report["degenerate"] = true;
    if (e.kernel_witness) report["kernel_witness"] = vec(g.labels(), *e.kernel_witness);
    return finish(std::move(report), kFailed);
  }
}

Outcome relations(const StructureFile& f) {
  const auto& g = f.algebra;
  Json report = base("relations");
  const auto s = TwistedTriangularStructure::unchecked(g, need_r(f), psi_or_zero(f));
  if (!add_cybe(report, g, s.verify())) return finish(std::move(report), kFailed);
  const auto rel = relation_check(s);
  report["identities"] = relations_json(rel);
  return finish(std::move(report), rel.all_hold() ? kOk : kFailed);
}

Outcome catalog(const std::string& name, int n, bool check) {
  const auto e = catalog::entry(name, n);
  const auto& s = e.structure;
  const auto& g = s.algebra();
  if (!check) {
    Outcome out;
    out.report = base("catalog");
    out.report["name"] = e.name;
    out.report["exit_code"] = kOk;
    out.file = StructureFile{g, s.r(), s.psi(), e.subalgebra.basis(), e.mu, e.xi};
    return out;
  }

  Json report = base("catalog");
  report["name"] = e.name;
  if (name != "affine") report["n"] = n;
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& what, bool passed, Json extra = Json::object()) {
    Json j{{"name", what}, {"passed", passed}};
    j.update(extra);
    checks.push_back(std::move(j));
    ok = ok && passed;
  };

  record("verify", s.verify().passed());
  const auto m = modular_class(s);
  record("crosschecks", m.all_passed());
  record("carrier", m.carrier == e.subalgebra && m.carrier.dim() == e.expected_carrier_dim,
         Json{{"expected_dimension", e.expected_carrier_dim}, {"dimension", m.carrier.dim()}});
  record("representative", m.representative == e.expected_representative,
         Json{{"expected", vec(g.labels(), e.expected_representative)}});
  record("relations", relation_check(s).all_hold());
  if (e.mu) {
    const auto lin = modtwist::linearize(g, e.subalgebra, *e.mu);
    record("linearize_reproduces_r", e.printed_r && lin.r() == *e.printed_r);
    record("linearize_passes", lin.verify().passed());
  }
  if (e.printed_psi && e.mu) {
    const Cochain recomputed = -ce_differential(g, *e.mu);
    const bool same = recomputed == *e.printed_psi;
    if (name == "q") {
      // The printed cocycle for this family is kept as a transcription only.
      Json note{{"matches_printed", same}};
      if (!same) note["printed_minus_recomputed"] = terms(g, *e.printed_psi - recomputed);
      report["printed_psi"] = std::move(note);
    } else {
      record("printed_psi", same);
    }
  }
  if (e.xi) {
    const Cochain xi = e.subalgebra.restrict(*e.xi);
    const Vector x = frobenius_modular(g, e.subalgebra, xi);
    record("frobenius_modular", x == e.expected_representative, Json{{"X", vec(g.labels(), x)}});
  }
  report["representative"] = vec(g.labels(), m.representative);
  report["checks"] = checks;
  return finish(std::move(report), ok ? kOk : kFailed);
}

Outcome guarded(const std::string& command, const std::function<Outcome()>& body) {
  auto error = [&](int code, const std::string& msg, Json extra = Json::object()) {
    Json report = base(command);
    report["error"] = msg;
    report.update(extra);
    return finish(std::move(report), code);
  };
  try {
    return body();
  } catch (const InvalidAlgebra& e) {
    Json extra = Json::object();
    if (e.violation) extra["jacobi_violation"] = Json{{"indices", {e.violation->i, e.violation->j, e.violation->k}}};
    return error(kMalformed, e.what(), extra);
  } catch (const NotClosed& e) {
    return error(kMalformed,
                 "subalgebra is not closed: bracket of basis vectors " + std::to_string(e.first) + " and " +
                     std::to_string(e.second) + " leaves the span");
  } catch (const MalformedInput& e) {
    return error(kMalformed, e.what());
  } catch (const DimensionMismatch& e) {
    return error(kMalformed, e.what());
  } catch (const InvalidStructure& e) {
    return error(kFailed, e.what());
  } catch (const std::invalid_argument& e) {
    return error(kMalformed, e.what());
  } catch (const NotFrobenius& e) {
    return error(kFailed, e.what());
  } catch (const Degenerate& e) {
    return error(kFailed, e.what());
  } catch (const std::logic_error& e) {
    return error(kFailed, std::string("internal check failed: ") + e.what());  } catch (const std::runtime_error& e) {
    return error(kMalformed, e.what());
  }
}

namespace {

bool is_vector_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [_, v] : j.items())
    if (!v.is_string()) return false;
  return true;
}

bool is_term_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& t : j)
    if (!t.is_object() || !t.contains("indices") || !t.contains("coeff")) return false;
  return true;
}

std::string signed_term(bool first, const std::string& coeff, const std::string& what) {
  const bool neg = !coeff.empty() && coeff[0] == '-';
  const std::string mag = neg ? coeff.substr(1) : coeff;
  std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (mag != "1") s += mag + " ";
  return s + what;
}

std::string combination(const Json& j) {
  std::string s;
  bool first = true;
  if (j.is_object()) {
    for (const auto& [label, c] : j.items()) {
      s += signed_term(first, c.get<std::string>(), label);
      first = false;
    }
  } else {
    for (const auto& t : j) {
      std::string w;
      for (const auto& l : t["indices"]) w += (w.empty() ? "" : "^") + l.get<std::string>();
      s += signed_term(first, t["coeff"].get<std::string>(), w);
      first = false;
    }
  }
  return first ? "0" : s;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_string(); })) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + j[i].get<std::string>();
    return s + ")";
  }
  return j.dump();
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (is_vector_object(v) || is_term_list(v)) {
      out << pad << key << ": " << combination(v) << "\n";
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && (v.front().is_object())) {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        if (is_vector_object(item)) {
          out << pad << "  - " << combination(item) << "\n";
        } else if (item.contains("name") && item.contains("passed")) {
          out << pad << "  - " << (item["passed"].get<bool>() ? "PASS " : "FAIL ") << item["name"].get<std::string>()
              << "\n";
          Json rest = item;
          rest.erase("name");
          rest.erase("passed");
          render(out, rest, indent + 6);
        } else {
          out << pad << "  -\n";
          render(out, item, indent + 4);
        }
      }
    } else if (v.is_array() && v.empty()) {
      out << pad << key << ": (none)\n";
    } else {
      out << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace modtwist::report
