#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modtwist/frobenius.hpp"

namespace modtwist::catalog {

/// gl_n with the elementary matrices e_ij in row-major order (e11, e12, ..., enn).
LieAlgebra gl(int n);
/// sl_n with basis: off-diagonal e_ij in row-major order, then h_k = e_kk - e_{k+1,k+1}.
LieAlgebra sl(int n);

/// Index of e_ij (1-based i, j) in the gl_n basis.
Index gl_index(int n, int i, int j);
/// Index of e_ij (1-based, i != j) in the sl_n basis.
Index sl_index(int n, int i, int j);
/// Index of h_k (1-based, k < n) in the sl_n basis.
Index sl_h_index(int n, int k);
/// sl_n coordinates of a traceless n x n matrix.
Vector sl_coordinates(const Matrix& traceless);
/// Matrix of an element of sl_n given by coordinates.
Matrix sl_matrix(int n, const Vector& coords);

/// Entry names accepted by `entry`.
std::vector<std::string> names();

struct CatalogEntry {
  std::string name;
  TwistedTriangularStructure structure;
  std::size_t expected_carrier_dim = 0;
  Vector expected_representative;
  Subalgebra subalgebra;                ///< expected carrier
  std::optional<Cochain> mu;            ///< 2-cochain on g whose linearization yields r
  std::optional<Cochain> printed_psi;   ///< 3-cochain as printed alongside mu
  std::optional<Cochain> xi;            ///< Frobenius functional on g (restricted to the carrier)
  std::optional<Multivector> printed_r; ///< r as printed (GG / q families)
};

/// Affine subalgebra span{e_ij : i <= 2, j <= 3} of gl_3 with
/// r = e11^e22 + e13^e23 and psi = -(e11* + e22*)^e13*^e23*.
CatalogEntry affine_example();

/// gl_n with the carrier q_{n-1} = span{e_ij : i <= n-1}, r inverse to
/// mu = sum_{i<j<=n-1} e_ij*^e_ji* + sum_i e_ii*^e_in* and psi = -d mu.
CatalogEntry q_example(int n);

/// sl_n with the Gerstenhaber-Giaquinto generalized Jordanian r-matrix and psi = 0.
CatalogEntry gg_example(int n);

/// Dispatches by name ("affine", "q", "gg"); n is ignored for "affine".
/// Throws std::invalid_argument for unknown names or invalid n.
CatalogEntry entry(const std::string& name, int n);

}  // namespace modtwist::catalog
