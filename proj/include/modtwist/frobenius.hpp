#pragma once

#include <optional>
#include <stdexcept>

#include "modtwist/twisted.hpp"

namespace modtwist {

struct Degenerate : std::runtime_error {
  explicit Degenerate(std::optional<Vector> witness = std::nullopt)
      : std::runtime_error("2-cochain is degenerate"), kernel_witness(std::move(witness)) {}
  std::optional<Vector> kernel_witness;  ///< radical vector in parent coordinates
};

struct NotFrobenius : std::runtime_error {
  explicit NotFrobenius(std::optional<Vector> witness)
      : std::runtime_error("xi does not define a Frobenius structure"), kernel_witness(std::move(witness)) {}
  std::optional<Vector> kernel_witness;
};

/// Gram matrix M(a,b) = mu(e_a, e_b) of a 2-cochain.
Matrix gram_matrix(const Cochain& mu);
/// Inverse of gram_matrix for antisymmetric matrices.
Cochain cochain_from_gram(const Matrix& m);

/// mu(X,Y) = xi([X,Y]) on p, i.e. d_p xi. xi is given in carrier coordinates.
Cochain mu_from_xi(const Subalgebra& p, const Cochain& xi);

struct FrobeniusCheck {
  bool frobenius = false;
  std::optional<Vector> kernel_witness;  ///< in parent coordinates
};
FrobeniusCheck is_frobenius(const Subalgebra& p, const Cochain& xi);

/// Bivector r on p inverse to the non-degenerate 2-cochain mu on p:
/// mu(r#a, r#b) = r(a, b). Both live in carrier coordinates. Throws Degenerate
/// (also for dim p = 0).
Multivector invert_cochain(const Subalgebra& p, const Cochain& mu);
/// Converse of invert_cochain.
Cochain invert_bivector(const Subalgebra& p, const Multivector& r);

/// (r, -d_g mu) with r the inverse of mu|_p pushed into ^2 g.
/// Throws Degenerate when mu|_p is degenerate.
TwistedTriangularStructure linearize(const LieAlgebra& g, const Subalgebra& p, const Cochain& mu);

/// Subalgebra-level entry: mu on p (carrier coordinates) and a closed psi on g
/// whose restriction to p equals -d_p mu. Throws std::invalid_argument when
/// psi is not closed or not compatible, Degenerate when mu is degenerate.
TwistedTriangularStructure linearize_on_subalgebra(const LieAlgebra& g, const Subalgebra& p, const Cochain& mu,
                                                   const Cochain& psi);

/// The unique X in p with ad*_X xi = chi_{p, g/p}, in parent coordinates.
/// Cross-checked against r#_(p)(chi) and the modular class of the associated
/// triangular structure. Throws NotFrobenius.
Vector frobenius_modular(const LieAlgebra& g, const Subalgebra& p, const Cochain& xi);

}  // namespace modtwist
