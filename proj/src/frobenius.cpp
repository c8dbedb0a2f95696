#include "modtwist/frobenius.hpp"

namespace modtwist {

Matrix gram_matrix(const Cochain& mu) {
  if (mu.degree() != 2) throw DimensionMismatch("Gram matrix needs a 2-cochain");
  Matrix m(mu.dim(), mu.dim());
  for (const auto& [idx, c] : mu.terms()) {
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

Cochain cochain_from_gram(const Matrix& m) {
  Cochain out(m.rows(), 2);
  for (Index a = 0; a < m.rows(); ++a)
    for (Index b = a + 1; b < m.cols(); ++b) out.add({a, b}, m(a, b));
  return out;
}

Cochain mu_from_xi(const Subalgebra& p, const Cochain& xi) {
  const auto& alg = p.algebra();
  if (xi.dim() != alg.dim() || xi.degree() != 1) throw DimensionMismatch("xi must be a 1-cochain on the carrier");
  const Cochain via_differential = ce_differential(alg, xi);
  Cochain direct(alg.dim(), 2);
  for (Index a = 0; a < alg.dim(); ++a)
    for (Index b = a + 1; b < alg.dim(); ++b) {
      Rational v;
      for (const auto& [k, c] : alg.basis_bracket(a, b)) v += c * xi.coeff({k});
      direct.add({a, b}, v);
    }
  if (direct != via_differential) throw std::logic_error("d xi disagrees with xi([X,Y])");
  return direct;
}

FrobeniusCheck is_frobenius(const Subalgebra& p, const Cochain& xi) {
  if (p.dim() == 0) return {false, std::nullopt};
  const Matrix m = gram_matrix(mu_from_xi(p, xi));
  auto ker = kernel_basis(m);
  if (ker.empty()) return {true, std::nullopt};
  return {false, p.embed(ker.front())};
}

Multivector invert_cochain(const Subalgebra& p, const Cochain& mu) {
  if (mu.dim() != p.dim() || mu.degree() != 2) throw DimensionMismatch("mu must be a 2-cochain on the carrier");
  if (p.dim() == 0) throw Degenerate();
  const Matrix m = gram_matrix(mu);
  auto ker = kernel_basis(m);
  if (!ker.empty()) throw Degenerate(p.embed(ker.front()));
  // r#a = R^T a; requiring R M R^T = R with R invertible gives R = (M^-1)^T.
  const Matrix r = invert(m).transpose();
  if (r * m * r.transpose() != r) throw std::logic_error("bivector inverse check failed");
  Multivector out(p.dim(), 2);
  for (Index a = 0; a < p.dim(); ++a)
    for (Index b = a + 1; b < p.dim(); ++b) out.add({a, b}, r(a, b));
  return out;
}

Cochain invert_bivector(const Subalgebra& p, const Multivector& r) {
  if (r.dim() != p.dim() || r.degree() != 2) throw DimensionMismatch("r must be a bivector on the carrier");
  if (p.dim() == 0) throw Degenerate();
  Matrix rm(p.dim(), p.dim());
  for (const auto& [idx, c] : r.terms()) {
    rm(idx[0], idx[1]) = c;
    rm(idx[1], idx[0]) = -c;
  }
  if (rank(rm) < p.dim()) throw Degenerate();
  return cochain_from_gram(invert(rm.transpose()));
}

TwistedTriangularStructure linearize(const LieAlgebra& g, const Subalgebra& p, const Cochain& mu) {
  if (mu.dim() != g.dim() || mu.degree() != 2) throw DimensionMismatch("mu must be a 2-cochain on the algebra");
  const Multivector r = p.include(invert_cochain(p, p.restrict(mu)));
  try {
    return TwistedTriangularStructure(g, r, -ce_differential(g, mu));
  } catch (const InvalidStructure& e) {
    throw std::logic_error(std::string("linearization produced an invalid structure: ") + e.what());
  }
}

TwistedTriangularStructure linearize_on_subalgebra(const LieAlgebra& g, const Subalgebra& p, const Cochain& mu,
                                                   const Cochain& psi) {
  if (!ce_differential(g, psi).is_zero()) throw std::invalid_argument("psi is not a 3-cocycle");
  if (p.restrict(psi) != -ce_differential(p.algebra(), mu))
    throw std::invalid_argument("restriction of psi to p is not -d_p mu");
  const Multivector r = p.include(invert_cochain(p, mu));
  try {
    return TwistedTriangularStructure(g, r, psi);
  } catch (const InvalidStructure& e) {
    throw std::logic_error(std::string("linearization produced an invalid structure: ") + e.what());
  }
}

Vector frobenius_modular(const LieAlgebra& g, const Subalgebra& p, const Cochain& xi) {
  const auto check = is_frobenius(p, xi);
  if (!check.frobenius) throw NotFrobenius(check.kernel_witness);
  const Cochain mu = mu_from_xi(p, xi);
  const Matrix m = gram_matrix(mu);
  const std::size_t d = p.dim();
  // Column a of the map X -> ad*_X xi is ad*_{b_a} xi, i.e. Y -> -xi([b_a, Y]).
  Matrix coadjoint(d, d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) coadjoint(b, a) = -m(a, b);
  const Vector chi = infinitesimal_character(quotient_rep(g, p)).to_vector();
  const Vector x = p.embed(solve(coadjoint, chi).x);

  const Multivector r = p.include(invert_cochain(p, mu));
  const TwistedTriangularStructure triangular(g, r, Cochain(g.dim(), 3));
  if (sharp_on_carrier(triangular.sharp(), p, chi) != x)
    throw InternalDisagreement("Frobenius solution differs from r#_(p)(chi)");
  if (modular_class(triangular).representative != x)
    throw InternalDisagreement("Frobenius solution differs from the modular class representative");
  return x;
}

}  // namespace modtwist
