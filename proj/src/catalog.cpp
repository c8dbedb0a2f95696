#include "modtwist/catalog.hpp"

#include <stdexcept>

namespace modtwist::catalog {

namespace {

std::string elementary_label(int n, int i, int j) {
  if (n < 10) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "_" + std::to_string(j);
}

Matrix elementary(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  return m;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Cochain covector(std::size_t dim, Index i) { return Cochain::basis(dim, {i}); }
Multivector vec(std::size_t dim, Index i) { return Multivector::basis(dim, {i}); }

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

Index gl_index(int n, int i, int j) {
  require(i >= 1 && i <= n && j >= 1 && j <= n, "gl index out of range");
  return static_cast<Index>((i - 1) * n + (j - 1));
}

Index sl_index(int n, int i, int j) {
  require(i >= 1 && i <= n && j >= 1 && j <= n && i != j, "sl off-diagonal index out of range");
  // Row-major over off-diagonal positions.
  const int before = (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
  return static_cast<Index>(before);
}

Index sl_h_index(int n, int k) {
  require(k >= 1 && k < n, "sl Cartan index out of range");
  return static_cast<Index>(n * (n - 1) + k - 1);
}

LieAlgebra gl(int n) {
  require(n >= 1, "gl(n) needs n >= 1");
  const std::size_t d = static_cast<std::size_t>(n * n);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) labels.push_back(elementary_label(n, i, j));
  // [e_ij, e_kl] = d_jk e_il - d_li e_kj
  StructureConstants sc;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const Index a = gl_index(n, i, j), b = gl_index(n, k, l);
          if (a >= b) continue;
          Vector v(d);
          if (j == k) v[gl_index(n, i, l)] += 1;
          if (l == i) v[gl_index(n, k, j)] -= 1;
          if (!is_zero(v)) sc.emplace(std::pair{a, b}, std::move(v));
        }
  return LieAlgebra(std::move(labels), sc);
}

LieAlgebra sl(int n) {
  require(n >= 2, "sl(n) needs n >= 2");
  std::vector<std::string> labels;
  std::vector<Matrix> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      labels.push_back(elementary_label(n, i, j));
      basis.push_back(elementary(n, i, j));
    }
  for (int k = 1; k < n; ++k) {
    labels.push_back("h" + std::to_string(k));
    basis.push_back(elementary(n, k, k) - elementary(n, k + 1, k + 1));
  }
  return matrix_lie_algebra(std::move(labels), basis);
}

Vector sl_coordinates(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  require(n >= 2 && m.cols() == m.rows(), "sl coordinates need a square matrix of size >= 2");
  require(m.trace().is_zero(), "matrix is not traceless");
  Vector v(static_cast<std::size_t>(n * n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) v[sl_index(n, i, j)] = m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  // diag(a) = sum_k c_k h_k with c_k = a_1 + ... + a_k.
  Rational partial;
  for (int k = 1; k < n; ++k) {
    partial += m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1));
    v[sl_h_index(n, k)] = partial;
  }
  return v;
}

Matrix sl_matrix(int n, const Vector& coords) {
  require(n >= 2 && coords.size() == static_cast<std::size_t>(n * n - 1), "sl coordinate vector has wrong length");
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = coords[sl_index(n, i, j)];
  for (int k = 1; k < n; ++k) {
    const Rational& c = coords[sl_h_index(n, k)];
    m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) += c;
    m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) -= c;
  }
  return m;
}

std::vector<std::string> names() { return {"affine", "q", "gg"}; }

CatalogEntry affine_example() {
  std::vector<std::string> labels;
  std::vector<Matrix> basis;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) {
      labels.push_back(elementary_label(3, i, j));
      basis.push_back(elementary(3, i, j));
    }
  const LieAlgebra g = matrix_lie_algebra(std::move(labels), basis);
  const std::size_t d = g.dim();
  auto at = [&](const char* l) { return *g.index_of(l); };
  auto e = [&](const char* l) { return vec(d, at(l)); };
  auto s = [&](const char* l) { return covector(d, at(l)); };

  Multivector r = wedge(e("e11"), e("e22")) + wedge(e("e13"), e("e23"));
  Cochain psi = -wedge(wedge(s("e11") + s("e22"), s("e13")), s("e23"));
  Cochain mu = wedge(s("e11"), s("e22")) + wedge(s("e13"), s("e23"));
  Cochain psi1 = -wedge(wedge(s("e11") + s("e22"), s("e13")), s("e23")) -
                 wedge(wedge(s("e12"), s("e21")), s("e22")) + wedge(wedge(s("e11"), s("e21")), s("e12"));

  std::vector<Vector> carrier;
  for (const char* l : {"e11", "e22", "e13", "e23"}) carrier.push_back(unit_vector(d, at(l)));

  return CatalogEntry{"affine",
                      TwistedTriangularStructure(g, r, psi),
                      4,
                      Vector(d),
                      span_subalgebra(g, carrier),
                      mu,
                      psi1,
                      std::nullopt,
                      r};
}

CatalogEntry q_example(int n) {
  require(n >= 2, "q example needs n >= 2");
  const LieAlgebra g = gl(n);
  const std::size_t d = g.dim();
  auto e = [&](int i, int j) { return vec(d, gl_index(n, i, j)); };
  auto s = [&](int i, int j) { return covector(d, gl_index(n, i, j)); };

  Cochain mu(d, 2);
  Multivector r(d, 2);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      mu += wedge(s(i, j), s(j, i));
      r += wedge(e(i, j), e(j, i));
    }
  for (int i = 1; i <= n - 1; ++i) {
    mu += wedge(s(i, i), s(i, n));
    r += wedge(e(i, i), e(i, n));
  }

  Cochain printed(d, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (int sg = sign(i - j); sg != 0)
          printed += Rational(sg) * wedge(wedge(s(i, k), s(k, j)), s(j, i));
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 1; k <= n - 1; ++k) {
      if (i != k) printed += wedge(wedge(s(i, k), s(k, i)), s(i, n));
      printed -= wedge(wedge(s(i, i), s(i, k)), s(k, n));
    }

  Vector expected(d);
  std::vector<Vector> carrier;
  for (int i = 1; i <= n - 1; ++i) {
    expected[gl_index(n, i, n)] = -1;
    for (int j = 1; j <= n; ++j) carrier.push_back(unit_vector(d, gl_index(n, i, j)));
  }

  Cochain psi = -ce_differential(g, mu);
  return CatalogEntry{"q",
                      TwistedTriangularStructure(g, r, psi),
                      static_cast<std::size_t>(n * (n - 1)),
                      std::move(expected),
                      span_subalgebra(g, carrier),
                      mu,
                      printed,
                      std::nullopt,
                      r};
}

CatalogEntry gg_example(int n) {
  require(n >= 2, "gg example needs n >= 2");
  const LieAlgebra g = sl(n);
  const std::size_t d = g.dim();
  auto e = [&](int i, int j) { return vec(d, sl_index(n, i, j)); };

  Multivector r(d, 2);
  for (int k = 1; k <= n - 1; ++k) {
    Matrix dk(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      dk(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) =
          i <= k ? Rational(n - k, n) : Rational(-k, n);
    r += wedge(Multivector::from_vector(sl_coordinates(dk)), e(k, k + 1));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int m = 1; m <= j - i - 1; ++m) r += wedge(e(i, j - m + 1), e(j, i + m));

  // p_1: everything except the entries below the diagonal in the first column.
  std::vector<Vector> carrier;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && !(j == 1 && i > 1)) carrier.push_back(unit_vector(d, sl_index(n, i, j)));
  for (int k = 1; k < n; ++k) carrier.push_back(unit_vector(d, sl_h_index(n, k)));

  Cochain xi(d, 1);
  Vector expected(d);
  for (int k = 1; k <= n - 1; ++k) {
    xi.add({sl_index(n, k, k + 1)}, 1);
    expected[sl_index(n, k, k + 1)] = -(n - k);
  }

  return CatalogEntry{"gg",
                      TwistedTriangularStructure(g, r, Cochain(d, 3)),
                      static_cast<std::size_t>(n * n - n),
                      std::move(expected),
                      span_subalgebra(g, carrier),
                      std::nullopt,
                      std::nullopt,
                      xi,
                      r};
}

CatalogEntry entry(const std::string& name, int n) {
  if (name == "affine") return affine_example();
  if (name == "q") return q_example(n);
  if (name == "gg") return gg_example(n);
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace modtwist::catalog
