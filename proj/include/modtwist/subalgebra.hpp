#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modtwist/lie_algebra.hpp"

namespace modtwist {

/// A pair of basis vectors whose bracket leaves the span.
struct NotClosed : std::runtime_error {
  NotClosed(Index a, Index b, Vector bracket)
      : std::runtime_error("span is not closed under the bracket"), first(a), second(b),
        bracket(std::move(bracket)) {}
  Index first, second;  ///< positions in the canonical basis
  Vector bracket;       ///< their bracket, in parent coordinates
};

/// Lie subalgebra of a parent algebra, stored by its reduced row-echelon
/// basis. Coordinates of a member v are read off at the pivot columns.
class Subalgebra {
public:
  const LieAlgebra& parent() const { return parent_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  /// Parent coordinates not carrying a pivot; their unit vectors span a
  /// complement of the subalgebra.
  const std::vector<Index>& complement() const { return complement_; }

  bool contains(const Vector& v) const;
  /// Coordinates in the canonical basis; throws std::invalid_argument if v is not a member.
  Vector coordinates(const Vector& v) const;
  Vector embed(const Vector& coords) const;

  /// The subalgebra as an abstract Lie algebra in its canonical basis.
  const LieAlgebra& algebra() const { return algebra_; }

  /// Restriction g* -> p* of a parent cochain.
  Cochain restrict(const Cochain& c) const { return pullback(c, basis_); }
  /// Inclusion ^k p -> ^k g.
  Multivector include(const Multivector& m) const { return pushforward(m, basis_); }

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.basis_ == b.basis_; }

private:
  friend Subalgebra span_subalgebra(const LieAlgebra& g, std::span<const Vector> vectors);
  Subalgebra() = default;
  LieAlgebra parent_;
  std::vector<Vector> basis_;
  std::vector<Index> pivots_;
  std::vector<Index> complement_;
  LieAlgebra algebra_;
};

/// Canonical subalgebra spanned by `vectors`; throws NotClosed.
Subalgebra span_subalgebra(const LieAlgebra& g, std::span<const Vector> vectors);
Subalgebra whole_algebra(const LieAlgebra& g);
Subalgebra zero_subalgebra(const LieAlgebra& g);

/// Basis of {alpha in g* : alpha|_p = 0} (canonical kernel basis).
std::vector<Cochain> annihilator(const LieAlgebra& g, const Subalgebra& p);

/// Canonical reduced basis of a subspace of g* given by spanning covectors.
struct CovectorSpace {
  std::vector<Vector> basis;
  std::vector<Index> pivots;
};
CovectorSpace canonical_covectors(std::span<const Cochain> covectors, std::size_t dim);

}  // namespace modtwist
