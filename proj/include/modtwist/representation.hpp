#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "modtwist/subalgebra.hpp"

namespace modtwist {

struct HomomorphismViolation {
  Index i = 0, j = 0;
  Matrix residual;  ///< rho([e_i,e_j]) - [rho(e_i), rho(e_j)]
};

struct NotInvariant : std::runtime_error {
  NotInvariant(Index acting, Index vector)
      : std::runtime_error("subspace is not invariant under the action"), acting(acting), vector(vector) {}
  Index acting;  ///< basis element of the acting algebra
  Index vector;  ///< basis element of the subspace it moves out of the subspace
};

/// A finite-dimensional representation: one space_dim x space_dim matrix per
/// basis element of the acting algebra.
class Representation {
public:
  /// Throws std::invalid_argument on shape errors or a failed homomorphism check.
  Representation(LieAlgebra acting, std::size_t space_dim, std::vector<Matrix> matrices);

  const LieAlgebra& acting() const { return acting_; }
  std::size_t space_dim() const { return space_dim_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

private:
  LieAlgebra acting_;
  std::size_t space_dim_;
  std::vector<Matrix> matrices_;
};

std::optional<HomomorphismViolation> check_homomorphism(const LieAlgebra& acting,
                                                        const std::vector<Matrix>& matrices);

/// Action of p on g/p, X . cl(Y) = cl([X,Y]), in the basis of complement unit vectors.
Representation quotient_rep(const LieAlgebra& g, const Subalgebra& p);

/// Restriction of the coadjoint action <X.gamma, Y> = -<gamma, [X,Y]> to an
/// invariant subspace C of g*. Matrices use the canonical reduced basis of C.
/// Throws NotInvariant.
Representation coadjoint_subrep(const LieAlgebra& g, const Subalgebra& p, std::span<const Cochain> subspace);

/// x -> Tr_V(x), as a 1-cochain on the acting algebra.
Cochain infinitesimal_character(const Representation& rep);

}  // namespace modtwist
