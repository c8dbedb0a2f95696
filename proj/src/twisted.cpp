#include "modtwist/twisted.hpp"

#include <sstream>

namespace modtwist {

namespace {

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

std::string describe(const Vector& v, const LieAlgebra& g, const char* suffix = "") {
  std::ostringstream os;
  bool first = true;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << v[i] << ")" << g.label(i) << suffix;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Matrix r_sharp(const LieAlgebra& g, const Multivector& r) {
  const std::size_t n = g.dim();
  if (r.dim() != n || r.degree() != 2) throw DimensionMismatch("r must be a bivector on the algebra");
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    const Vector col = contract(unit_vector(n, j), r).to_vector();
    for (Index i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

CybeResult verify_twisted_cybe(const LieAlgebra& g, const Multivector& r, const Cochain& psi) {
  const std::size_t n = g.dim();
  if (psi.dim() != n || psi.degree() != 3) throw DimensionMismatch("psi must be a 3-cochain on the algebra");
  CybeResult out;
  out.closedness_residual = ce_differential(g, psi);
  out.residual = Multivector(n, 3);
  if (!out.closedness_residual.is_zero()) {
    out.status = CybeResult::Status::NotClosed;
    return out;
  }
  const auto images = columns(r_sharp(g, r));
  // Coefficient (i,j,k) of this trivector is psi(r# e_i*, r# e_j*, r# e_k*).
  const Cochain twisted = pullback(psi, images);
  std::vector<Vector> brackets(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      brackets[a * n + b] = g.bracket(images[a], images[b]);
      brackets[b * n + a] = -brackets[a * n + b];
    }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Rational t = brackets[j * n + k][i] + brackets[k * n + i][j] + brackets[i * n + j][k];
        const Rational p = twisted.coeff({i, j, k});
        t -= kCybeSign > 0 ? p : -p;
        out.residual.add_sorted({i, j, k}, t);
      }
  if (!out.residual.is_zero()) out.status = CybeResult::Status::Fail;
  return out;
}

TwistedTriangularStructure::TwistedTriangularStructure(LieAlgebra g, Multivector r, Cochain psi)
    : TwistedTriangularStructure(std::move(g), std::move(r), std::move(psi), true) {}

TwistedTriangularStructure TwistedTriangularStructure::unchecked(LieAlgebra g, Multivector r, Cochain psi) {
  return TwistedTriangularStructure(std::move(g), std::move(r), std::move(psi), false);
}

TwistedTriangularStructure::TwistedTriangularStructure(LieAlgebra g, Multivector r, Cochain psi, bool check)
    : g_(std::move(g)), r_(std::move(r)), psi_(std::move(psi)) {
  if (r_.dim() != g_.dim() || r_.degree() != 2) throw DimensionMismatch("r must be a bivector on the algebra");
  if (psi_.dim() != g_.dim() || psi_.degree() != 3)
    throw DimensionMismatch("psi must be a 3-cochain on the algebra");
  sharp_ = r_sharp(g_, r_);
  if (check) require_valid();
}

void TwistedTriangularStructure::require_valid() const {
  auto res = verify();
  if (res.status == CybeResult::Status::NotClosed)
    throw InvalidStructure("psi is not closed", std::move(res));
  if (res.status == CybeResult::Status::Fail)
    throw InvalidStructure("twisted classical Yang-Baxter equation fails", std::move(res));
}

Cochain dual_bracket(const TwistedTriangularStructure& s, const Cochain& alpha, const Cochain& beta) {
  const auto& g = s.algebra();
  const Vector a = alpha.to_vector(), b = beta.to_vector();
  const Vector ra = s.sharp() * a, rb = s.sharp() * b;
  // ad*_X c = -(ad_X)^T c.
  Vector v = g.ad(rb).transpose() * a - g.ad(ra).transpose() * b;
  Cochain out = Cochain::from_vector(v);
  if (!s.psi().is_zero()) out += interior(rb, interior(ra, s.psi()));
  return out;
}

namespace {

StructureConstants dual_table(const TwistedTriangularStructure& s) {
  const std::size_t n = s.algebra().dim();
  std::vector<Cochain> dual_basis;
  for (Index i = 0; i < n; ++i) dual_basis.push_back(Cochain::basis(n, {i}));
  StructureConstants sc;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector v = dual_bracket(s, dual_basis[i], dual_basis[j]).to_vector();
      if (!is_zero(v)) sc.emplace(std::pair{i, j}, std::move(v));
    }
  return sc;
}

std::vector<std::string> dual_labels(const LieAlgebra& g) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l + "*");
  return labels;
}

}  // namespace

LieAlgebra dual_lie_algebra(const TwistedTriangularStructure& s) {
  return LieAlgebra(dual_labels(s.algebra()), dual_table(s));
}

LieAlgebra dual_lie_algebra_unchecked(const TwistedTriangularStructure& s) {
  return LieAlgebra::unchecked(dual_labels(s.algebra()), dual_table(s));
}

CarrierKernel carrier_and_kernel(const TwistedTriangularStructure& s) {
  s.require_valid();
  const auto& g = s.algebra();
  const std::size_t n = g.dim();
  const auto images = columns(s.sharp());
  Subalgebra p = [&] {
    try {
      return span_subalgebra(g, images);
    } catch (const NotClosed& e) {
      throw std::logic_error("image of r# is not a subalgebra: bracket of carrier basis elements " +
                             std::to_string(e.first) + " and " + std::to_string(e.second));
    }
  }();
  std::vector<Cochain> kernel;
  for (auto& v : kernel_basis(s.sharp())) kernel.push_back(Cochain::from_vector(v));

  if (kernel != annihilator(g, p)) throw std::logic_error("Ker r# differs from the annihilator of the carrier");
  // Abelian ideal of g*.
  for (const auto& gamma : kernel) {
    for (Index i = 0; i < n; ++i) {
      const Vector moved = dual_bracket(s, gamma, Cochain::basis(n, {i})).to_vector();
      if (!is_zero(s.sharp() * moved))
        throw std::logic_error("Ker r# is not an ideal of g*: fails against " + g.label(i) + "*");
    }
    for (const auto& other : kernel)
      if (!dual_bracket(s, gamma, other).is_zero()) throw std::logic_error("Ker r# is not abelian");
  }
  return {std::move(p), std::move(kernel)};
}

Vector sharp_on_carrier(const Matrix& sharp, const Subalgebra& p, const Vector& chi, const Vector* complement_values) {
  if (chi.size() != p.dim()) throw DimensionMismatch("character must live on the carrier");
  const std::size_t n = p.parent().dim();
  Vector alpha(n);
  const auto& comp = p.complement();
  if (complement_values) {
    if (complement_values->size() != comp.size()) throw DimensionMismatch("complement values have wrong length");
    for (std::size_t s = 0; s < comp.size(); ++s) alpha[comp[s]] = (*complement_values)[s];
  }
  // alpha(b_a) = alpha[pivot_a] + sum over complement j of b_a[j] alpha[j] must equal chi_a.
  for (std::size_t a = 0; a < p.dim(); ++a) {
    Rational v = chi[a];
    for (Index j : comp) v -= p.basis()[a][j] * alpha[j];
    alpha[p.pivots()[a]] = v;
  }
  return sharp * alpha;
}

bool ModularClassReport::all_passed() const {
  for (const auto& c : crosschecks)
    if (!c.passed) return false;
  return true;
}

ModularClassReport modular_class(const TwistedTriangularStructure& s) {
  auto ck = carrier_and_kernel(s);
  const auto& g = s.algebra();
  const std::size_t n = g.dim();
  const Subalgebra& p = ck.carrier;

  ModularClassReport rep{ck.carrier, ck.kernel, {}, {}, {}, {}};
  rep.chi_kernel = infinitesimal_character(coadjoint_subrep(g, p, ck.kernel));
  rep.chi_quotient = infinitesimal_character(quotient_rep(g, p));

  const Vector chi_k = rep.chi_kernel.to_vector();
  const Vector chi_q = rep.chi_quotient.to_vector();
  const Vector via_kernel = -sharp_on_carrier(s.sharp(), p, chi_k);
  const Vector via_quotient = sharp_on_carrier(s.sharp(), p, chi_q);
  const Vector ones(p.complement().size(), Rational(1));
  const Vector via_kernel_alt = -sharp_on_carrier(s.sharp(), p, chi_k, &ones);
  const Vector via_quotient_alt = sharp_on_carrier(s.sharp(), p, chi_q, &ones);

  if (via_kernel != via_quotient)
    throw InternalDisagreement("modular class from Ker r# (" + describe(via_kernel, g) + ") differs from g/p (" +
                               describe(via_quotient, g) + ")");
  rep.representative = via_kernel;

  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.crosschecks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("kernel_vs_quotient_formula", true, describe(via_quotient, g));
  add("extension_independence", via_kernel == via_kernel_alt && via_quotient == via_quotient_alt);
  add("dual_characters_opposite", chi_q == -chi_k);
  add("representative_in_carrier", p.contains(rep.representative));
  add("kernel_equals_annihilator", rep.kernel == annihilator(g, p));

  const LieAlgebra dual = dual_lie_algebra_unchecked(s);
  auto jac = check_jacobi(dual);
  add("dual_jacobi", !jac.has_value(),
      jac ? "fails on (" + dual.label(jac->i) + ", " + dual.label(jac->j) + ", " + dual.label(jac->k) + ")" : "");

  bool hom = true;
  std::string hom_detail;
  bool cocycle = true;
  std::string cocycle_detail;
  for (Index i = 0; i < n && (hom || cocycle); ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector br(n);
      for (const auto& [k, c] : dual.basis_bracket(i, j)) br[k] = c;
      if (hom && s.sharp() * br != g.bracket(s.sharp().column(i), s.sharp().column(j))) {
        hom = false;
        hom_detail = "fails on (" + dual.label(i) + ", " + dual.label(j) + ")";
      }
      if (cocycle && !dot(br, rep.representative).is_zero()) {
        cocycle = false;
        cocycle_detail = "nonzero on [" + dual.label(i) + ", " + dual.label(j) + "]";
      }
    }
  add("r_sharp_homomorphism", hom, hom_detail);
  add("representative_is_cocycle", cocycle, cocycle_detail);
  return rep;
}

bool RelationReport::all_hold() const {
  for (const auto& r : identities)
    if (!r.holds()) return false;
  return true;
}

RelationReport relation_check(const TwistedTriangularStructure& s) {
  const auto report = modular_class(s);
  const auto& g = s.algebra();
  const Subalgebra& p = report.carrier;
  const Matrix& sharp = s.sharp();
  const std::size_t n = g.dim();

  const Vector mod_g = trace_adjoint(g).to_vector();
  const Vector mod_dual = trace_adjoint(dual_lie_algebra(s)).to_vector();
  const Vector mod_p = trace_adjoint(p.algebra()).to_vector();
  const Vector theta_p = report.chi_kernel.to_vector();

  RelationReport out;
  auto push = [&](std::string name, Vector lhs, Vector rhs) {
    Vector res = lhs - rhs;
    out.identities.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(res)});
  };

  push("relative_modular_class", Rational(2) * report.representative, mod_dual - sharp.transpose() * mod_g);

  const Vector lambda = mod_p + theta_p;
  Vector pulled(n);
  for (Index i = 0; i < n; ++i) pulled[i] = dot(lambda, p.coordinates(sharp.column(i)));
  push("dual_modular_class_via_carrier", mod_dual, pulled);

  Vector restricted(p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a) restricted[a] = dot(mod_g, p.basis()[a]);
  push("restricted_modular_class", restricted, mod_p - theta_p);
  return out;
}

}  // namespace modtwist
