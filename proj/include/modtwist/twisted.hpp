#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modtwist/representation.hpp"

namespace modtwist {

/// Sign s in  T(r) = s * (^3 r#) psi, where
///   T(r)(a,b,c) = <a,[r#b,r#c]> + <b,[r#c,r#a]> + <c,[r#a,r#b]>.
/// Pinned by the affine catalog entry (see the regression test).
inline constexpr int kCybeSign = -1;

/// Matrix of r#: g* -> g, alpha -> i_alpha r. Column j is r#(e_j*).
Matrix r_sharp(const LieAlgebra& g, const Multivector& r);

struct CybeResult {
  enum class Status { Pass, NotClosed, Fail };
  Status status = Status::Pass;
  Cochain closedness_residual;  ///< d psi (non-zero only for NotClosed)
  Multivector residual;         ///< T(r) - s (^3 r#) psi, as a trivector
  bool passed() const { return status == Status::Pass; }
};

/// Checks d psi = 0 first, then the twisted classical Yang-Baxter equation.
CybeResult verify_twisted_cybe(const LieAlgebra& g, const Multivector& r, const Cochain& psi);

struct InvalidStructure : std::invalid_argument {
  InvalidStructure(const std::string& what, CybeResult result)
      : std::invalid_argument(what), result(std::move(result)) {}
  CybeResult result;
};

/// A pair (r, psi) with r in ^2 g and psi a closed 3-cochain satisfying the
/// twisted CYBE.
class TwistedTriangularStructure {
public:
  /// Throws InvalidStructure.
  TwistedTriangularStructure(LieAlgebra g, Multivector r, Cochain psi);
  /// No verification; for negative tests. Computations re-verify.
  static TwistedTriangularStructure unchecked(LieAlgebra g, Multivector r, Cochain psi);

  const LieAlgebra& algebra() const { return g_; }
  const Multivector& r() const { return r_; }
  const Cochain& psi() const { return psi_; }
  const Matrix& sharp() const { return sharp_; }

  CybeResult verify() const { return verify_twisted_cybe(g_, r_, psi_); }
  /// Throws InvalidStructure if verify() fails.
  void require_valid() const;

private:
  TwistedTriangularStructure(LieAlgebra g, Multivector r, Cochain psi, bool check);
  LieAlgebra g_;
  Multivector r_;
  Cochain psi_;
  Matrix sharp_;
};

/// [a,b] = ad*_{r#a} b - ad*_{r#b} a + psi(r#a, r#b, .), with <ad*_X c, Y> = -<c,[X,Y]>.
Cochain dual_bracket(const TwistedTriangularStructure& s, const Cochain& alpha, const Cochain& beta);

/// g* with the bracket above, basis labels suffixed with '*'.
/// Throws InvalidAlgebra when the Jacobi identity fails.
LieAlgebra dual_lie_algebra(const TwistedTriangularStructure& s);
/// Same table without the Jacobi check.
LieAlgebra dual_lie_algebra_unchecked(const TwistedTriangularStructure& s);

struct CarrierKernel {
  Subalgebra carrier;          ///< image of r#
  std::vector<Cochain> kernel; ///< canonical basis of Ker r#
};

CarrierKernel carrier_and_kernel(const TwistedTriangularStructure& s);

/// r#_(p): p* -> p applied to chi in carrier coordinates, after extending chi
/// to g* by `complement_values` on the canonical complement (zero by default).
Vector sharp_on_carrier(const Matrix& sharp, const Subalgebra& p, const Vector& chi,
                        const Vector* complement_values = nullptr);

struct Crosscheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModularClassReport {
  Subalgebra carrier;
  std::vector<Cochain> kernel;
  Cochain chi_kernel;    ///< on the carrier
  Cochain chi_quotient;  ///< on the carrier
  Vector representative; ///< in g, lies in the carrier
  std::vector<Crosscheck> crosschecks;
  bool all_passed() const;
};

struct InternalDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

/// Representative of the modular class, computed from the coadjoint action on
/// Ker r# and from the action on g/p; the two must agree. Over a point degree-1
/// coboundaries vanish, so the class is identified with this cocycle.
ModularClassReport modular_class(const TwistedTriangularStructure& s);

struct RelationIdentity {
  std::string name;
  Vector lhs;
  Vector rhs;
  Vector residual;
  bool holds() const { return is_zero(residual); }
};

struct RelationReport {
  std::vector<RelationIdentity> identities;
  bool all_hold() const;
};

/// Point-case relations between Mod(g*), Mod g, Mod p and the carrier character:
///   2 theta = Mod(g*) - (r#)^* Mod g
///   Mod(g*) = (r#_p)^* (Mod p + theta_p)
///   Mod g |_p = Mod p - theta_p
RelationReport relation_check(const TwistedTriangularStructure& s);

}  // namespace modtwist
