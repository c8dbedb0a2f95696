#include "modtwist/representation.hpp"

#include <stdexcept>

namespace modtwist {

std::optional<HomomorphismViolation> check_homomorphism(const LieAlgebra& acting,
                                                        const std::vector<Matrix>& matrices) {
  const std::size_t d = acting.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Matrix lhs(matrices[i].rows(), matrices[i].cols());
      for (const auto& [k, c] : acting.basis_bracket(i, j)) lhs = lhs + c * matrices[k];
      Matrix res = lhs - (matrices[i] * matrices[j] - matrices[j] * matrices[i]);
      if (!res.is_zero()) return HomomorphismViolation{i, j, std::move(res)};
    }
  return std::nullopt;
}

Representation::Representation(LieAlgebra acting, std::size_t space_dim, std::vector<Matrix> matrices)
    : acting_(std::move(acting)), space_dim_(space_dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != acting_.dim()) throw std::invalid_argument("one matrix per acting basis element required");
  for (const auto& m : matrices_)
    if (m.rows() != space_dim_ || m.cols() != space_dim_)
      throw std::invalid_argument("representation matrix has wrong shape");
  if (auto v = check_homomorphism(acting_, matrices_))
    throw std::invalid_argument("not a representation: fails on (" + acting_.label(v->i) + ", " +
                                acting_.label(v->j) + ")");
}

Representation quotient_rep(const LieAlgebra& g, const Subalgebra& p) {
  const auto& comp = p.complement();
  const std::size_t q = comp.size();
  // Class of Y in g/p: subtract the p-component read at the pivots, keep complement coordinates.
  auto cl = [&](const Vector& y) {
    Vector r = y;
    for (std::size_t a = 0; a < p.dim(); ++a) {
      const Rational c = r[p.pivots()[a]];
      if (!c.is_zero()) r = r - c * p.basis()[a];
    }
    Vector out(q);
    for (std::size_t s = 0; s < q; ++s) out[s] = r[comp[s]];
    return out;
  };
  std::vector<Matrix> mats;
  for (const auto& x : p.basis()) {
    Matrix m(q, q);
    for (std::size_t s = 0; s < q; ++s) {
      Vector col = cl(g.bracket(x, unit_vector(g.dim(), comp[s])));
      for (std::size_t t = 0; t < q; ++t) m(t, s) = col[t];
    }
    mats.push_back(std::move(m));
  }
  return Representation(p.algebra(), q, std::move(mats));
}

Representation coadjoint_subrep(const LieAlgebra& g, const Subalgebra& p, std::span<const Cochain> subspace) {
  const auto space = canonical_covectors(subspace, g.dim());
  const std::size_t c = space.basis.size();
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < p.dim(); ++a) {
    const Matrix adx = g.ad(p.basis()[a]);
    Matrix m(c, c);
    for (std::size_t s = 0; s < c; ++s) {
      // (X.gamma)(Y) = -gamma([X,Y]), i.e. X.gamma = -(ad_X)^T gamma.
      const Vector moved = -(adx.transpose() * space.basis[s]);
      Vector residual = moved;
      for (std::size_t t = 0; t < c; ++t) {
        const Rational k = moved[space.pivots[t]];
        m(t, s) = k;
        if (!k.is_zero()) residual = residual - k * space.basis[t];
      }
      if (!is_zero(residual)) throw NotInvariant(a, s);
    }
    mats.push_back(std::move(m));
  }
  return Representation(p.algebra(), c, std::move(mats));
}

Cochain infinitesimal_character(const Representation& rep) {
  const auto& acting = rep.acting();
  Cochain chi(acting.dim(), 1);
  for (Index i = 0; i < acting.dim(); ++i) chi.add({i}, rep.matrices()[i].trace());
  // chi vanishes on brackets since traces of commutators vanish.
  for (Index i = 0; i < acting.dim(); ++i)
    for (Index j = i + 1; j < acting.dim(); ++j) {
      Rational v;
      for (const auto& [k, c] : acting.basis_bracket(i, j)) v += c * chi.coeff({k});
      if (!v.is_zero()) throw std::logic_error("infinitesimal character is not a 1-cocycle");
    }
  return chi;
}

}  // namespace modtwist
