#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modtwist/exterior.hpp"

namespace modtwist {

/// Bracket table keyed by (i, j) with i < j; the value is [e_i, e_j].
using StructureConstants = std::map<std::pair<Index, Index>, Vector>;

struct JacobiViolation {
  Index i = 0, j = 0, k = 0;
  Vector residual;  ///< [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct InvalidAlgebra : std::invalid_argument {
  explicit InvalidAlgebra(const std::string& what, std::optional<JacobiViolation> v = std::nullopt)
      : std::invalid_argument(what), violation(std::move(v)) {}
  std::optional<JacobiViolation> violation;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labeled basis. Cheap to copy; the table is shared and immutable.
class LieAlgebra {
public:
  LieAlgebra() : LieAlgebra(std::vector<std::string>{}, StructureConstants{}) {}

  /// Validates shape, distinct labels, and the Jacobi identity.
  LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants);

  /// Skips the Jacobi check (shape and labels are still validated).
  static LieAlgebra unchecked(std::vector<std::string> labels, const StructureConstants& constants);

  static LieAlgebra abelian(std::vector<std::string> labels) { return {std::move(labels), {}}; }

  std::size_t dim() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(Index i) const { return data_->labels.at(i); }
  std::optional<Index> index_of(const std::string& label) const;

  /// Structure constants for i < j (zero brackets omitted).
  StructureConstants structure_constants() const;

  /// Sparse [e_i, e_j] for any ordered pair.
  const std::vector<std::pair<Index, Rational>>& basis_bracket(Index i, Index j) const {
    return data_->table[i * dim() + j];
  }
  /// Pairs (i < j, c) such that [e_i, e_j] has e_m-coefficient c.
  const std::vector<std::pair<std::pair<Index, Index>, Rational>>& producers(Index m) const {
    return data_->producers[m];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x in the basis.
  Matrix ad(const Vector& x) const;

private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<Index, Rational>>> table;
    std::vector<std::vector<std::pair<std::pair<Index, Index>, Rational>>> producers;
  };
  LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants, bool check);
  std::shared_ptr<const Data> data_;
};

/// nullopt when the Jacobi identity holds on every basis triple i < j < k.
std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g);

/// Chevalley-Eilenberg differential with trivial coefficients, normalized so
/// that d(xi)(x, y) = xi([x, y]):
/// (dc)(x_0..x_k) = sum_{i<j} (-1)^{i+j+1} c([x_i,x_j], x_0, ^i, ^j, x_k).
Cochain ce_differential(const LieAlgebra& g, const Cochain& c);

/// x -> Tr(ad_x).
Cochain trace_adjoint(const LieAlgebra& g);

/// Lie algebra spanned by the given matrices (all n x n) under the commutator.
/// Throws InvalidAlgebra if the span is not closed or the matrices are dependent.
LieAlgebra matrix_lie_algebra(std::vector<std::string> labels, const std::vector<Matrix>& basis);

}  // namespace modtwist
