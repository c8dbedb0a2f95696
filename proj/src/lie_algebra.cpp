#include "modtwist/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace modtwist {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants)
    : LieAlgebra(std::move(labels), constants, true) {}

LieAlgebra LieAlgebra::unchecked(std::vector<std::string> labels, const StructureConstants& constants) {
  return LieAlgebra(std::move(labels), constants, false);
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants, bool check) {
  const std::size_t n = labels.size();
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InvalidAlgebra("empty basis label");
    if (!seen.insert(l).second) throw InvalidAlgebra("duplicate basis label '" + l + "'");
  }
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->table.resize(n * n);
  data->producers.resize(n);
  for (const auto& [key, value] : constants) {
    auto [i, j] = key;
    if (i >= j || j >= n)
      throw InvalidAlgebra("structure constant key (" + std::to_string(i) + "," + std::to_string(j) +
                           ") must satisfy i < j < dim");
    if (value.size() != n) throw InvalidAlgebra("structure constant vector has wrong length");
    for (Index k = 0; k < n; ++k) {
      if (value[k].is_zero()) continue;
      data->table[i * n + j].emplace_back(k, value[k]);
      data->table[j * n + i].emplace_back(k, -value[k]);
      data->producers[k].push_back({{i, j}, value[k]});
    }
  }
  data_ = std::move(data);
  if (check) {
    if (auto v = check_jacobi(*this)) {
      throw InvalidAlgebra("Jacobi identity fails on (" + label(v->i) + ", " + label(v->j) + ", " +
                               label(v->k) + ")",
                           std::move(v));
    }
  }
}

std::optional<Index> LieAlgebra::index_of(const std::string& l) const {
  auto it = std::find(labels().begin(), labels().end(), l);
  if (it == labels().end()) return std::nullopt;
  return static_cast<Index>(it - labels().begin());
}

StructureConstants LieAlgebra::structure_constants() const {
  StructureConstants out;
  const std::size_t n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const auto& entries = basis_bracket(i, j);
      if (entries.empty()) continue;
      Vector v(n);
      for (const auto& [k, c] : entries) v[k] = c;
      out.emplace(std::pair{i, j}, std::move(v));
    }
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket argument dimension mismatch");
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [k, c] : basis_bracket(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch("ad argument dimension mismatch");
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : basis_bracket(i, j)) m(k, j) += x[i] * c;
  }
  return m;
}

std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Vector res(n);
  std::vector<Index> touched;
  // res += [[e_a, e_b], e_c], read from the sparse table.
  auto accumulate = [&](Index a, Index b, Index c) {
    for (const auto& [m, x] : g.basis_bracket(a, b))
      for (const auto& [k, y] : g.basis_bracket(m, c)) {
        if (res[k].is_zero()) touched.push_back(k);
        res[k] += x * y;
      }
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        accumulate(i, j, k);
        accumulate(j, k, i);
        accumulate(k, i, j);
        bool zero = true;
        for (Index t : touched) zero = zero && res[t].is_zero();
        if (!zero) return JacobiViolation{i, j, k, res};
        for (Index t : touched) res[t] = Rational();
        touched.clear();
      }
  return std::nullopt;
}

Cochain ce_differential(const LieAlgebra& g, const Cochain& c) {
  if (c.dim() != g.dim()) throw DimensionMismatch("cochain dimension does not match algebra");
  Cochain out(g.dim(), c.degree() + 1);
  for (const auto& [tuple, coeff] : c.terms()) {
    for (std::size_t p = 0; p < tuple.size(); ++p) {
      const Index m = tuple[p];
      IndexTuple rest;
      for (std::size_t u = 0; u < tuple.size(); ++u)
        if (u != p) rest.push_back(tuple[u]);
      const Rational base = p % 2 == 0 ? coeff : -coeff;
      for (const auto& [pair, sc] : g.producers(m)) {
        auto [x, y] = pair;
        if (std::binary_search(rest.begin(), rest.end(), x) || std::binary_search(rest.begin(), rest.end(), y))
          continue;
        IndexTuple target = rest;
        target.insert(std::upper_bound(target.begin(), target.end(), x), x);
        auto ypos = std::upper_bound(target.begin(), target.end(), y);
        const auto j = static_cast<std::size_t>(ypos - target.begin());
        target.insert(ypos, y);
        const auto i = static_cast<std::size_t>(std::find(target.begin(), target.end(), x) - target.begin());
        const Rational term = sc * base;
        out.add_sorted(target, (i + j) % 2 == 1 ? term : -term);
      }
    }
  }
  return out;
}

Cochain trace_adjoint(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Cochain out(n, 1);
  for (Index i = 0; i < n; ++i) {
    Rational t;
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : g.basis_bracket(i, j))
        if (k == j) t += c;
    out.add({i}, t);
  }
  return out;
}

LieAlgebra matrix_lie_algebra(std::vector<std::string> labels, const std::vector<Matrix>& basis) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw InvalidAlgebra("label count does not match basis size");
  if (d == 0) return LieAlgebra(std::move(labels), {});
  const std::size_t n = basis.front().rows();
  const std::size_t flat = n * n;
  auto flatten = [&](const Matrix& m) {
    if (m.rows() != n || m.cols() != n) throw InvalidAlgebra("basis matrices must share a square shape");
    Vector v(flat);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m(r, c);
    return v;
  };
  std::vector<Vector> cols;
  for (const auto& m : basis) cols.push_back(flatten(m));
  const Matrix coords = Matrix::from_columns(cols, flat);
  if (rank(coords) != d) throw InvalidAlgebra("basis matrices are linearly dependent");

  std::vector<std::pair<Index, Index>> pairs;
  std::vector<Vector> commutators;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      pairs.emplace_back(i, j);
      commutators.push_back(flatten(basis[i] * basis[j] - basis[j] * basis[i]));
    }
  Matrix solved;
  try {
    solved = solve_many(coords, Matrix::from_columns(commutators, flat));
  } catch (const NoSolution&) {
    throw InvalidAlgebra("span of matrices is not closed under the commutator");
  }
  StructureConstants sc;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Vector v = solved.column(p);
    if (!is_zero(v)) sc.emplace(pairs[p], std::move(v));
  }
  return LieAlgebra(std::move(labels), sc);
}

}  // namespace modtwist
