#include "modtwist/subalgebra.hpp"

#include <algorithm>

namespace modtwist {

namespace {

std::string subalgebra_label(const LieAlgebra& g, const Vector& v, std::size_t position) {
  // Reuse the parent label when the basis vector is a parent basis element.
  std::optional<Index> unit;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (unit || v[i] != Rational(1)) return "b" + std::to_string(position + 1);
    unit = i;
  }
  return unit ? g.label(*unit) : "b" + std::to_string(position + 1);
}

}  // namespace

bool Subalgebra::contains(const Vector& v) const {
  if (v.size() != parent_.dim()) throw DimensionMismatch("vector dimension does not match parent");
  Vector r = v;
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    const Rational c = v[pivots_[a]];
    if (!c.is_zero()) r = r - c * basis_[a];
  }
  return is_zero(r);
}

Vector Subalgebra::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subalgebra");
  Vector c(basis_.size());
  for (std::size_t a = 0; a < basis_.size(); ++a) c[a] = v[pivots_[a]];
  return c;
}

Vector Subalgebra::embed(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate vector has wrong length");
  Vector v(parent_.dim());
  for (std::size_t a = 0; a < basis_.size(); ++a)
    if (!coords[a].is_zero()) v += coords[a] * basis_[a];
  return v;
}

Subalgebra span_subalgebra(const LieAlgebra& g, std::span<const Vector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != g.dim()) throw DimensionMismatch("spanning vector dimension mismatch");
  auto span = canonical_span(vectors, g.dim());
  Subalgebra p;
  p.parent_ = g;
  p.basis_ = std::move(span.basis);
  p.pivots_ = std::move(span.pivots);
  for (Index i = 0; i < g.dim(); ++i)
    if (!std::binary_search(p.pivots_.begin(), p.pivots_.end(), i)) p.complement_.push_back(i);

  const std::size_t d = p.basis_.size();
  StructureConstants sc;
  for (Index a = 0; a < d; ++a)
    for (Index b = a + 1; b < d; ++b) {
      Vector br = g.bracket(p.basis_[a], p.basis_[b]);
      if (!p.contains(br)) throw NotClosed(a, b, std::move(br));
      Vector coords = p.coordinates(br);
      if (!is_zero(coords)) sc.emplace(std::pair{a, b}, std::move(coords));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) labels.push_back(subalgebra_label(g, p.basis_[a], a));
  // Fall back to positional labels if reuse produced duplicates.
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    for (std::size_t a = 0; a < d; ++a) labels[a] = "b" + std::to_string(a + 1);
  // Closed subspaces of a Lie algebra satisfy Jacobi automatically.
  p.algebra_ = LieAlgebra::unchecked(std::move(labels), sc);
  return p;
}

Subalgebra whole_algebra(const LieAlgebra& g) {
  std::vector<Vector> units;
  for (Index i = 0; i < g.dim(); ++i) units.push_back(unit_vector(g.dim(), i));
  return span_subalgebra(g, units);
}

Subalgebra zero_subalgebra(const LieAlgebra& g) { return span_subalgebra(g, {}); }

std::vector<Cochain> annihilator(const LieAlgebra& g, const Subalgebra& p) {
  std::vector<Cochain> out;
  for (auto& v : kernel_basis(Matrix::from_rows(p.basis(), g.dim()))) out.push_back(Cochain::from_vector(v));
  return out;
}

CovectorSpace canonical_covectors(std::span<const Cochain> covectors, std::size_t dim) {
  std::vector<Vector> rows;
  for (const auto& c : covectors) {
    if (c.degree() != 1 || c.dim() != dim) throw DimensionMismatch("expected 1-cochains on the algebra");
    rows.push_back(c.to_vector());
  }
  auto span = canonical_span(rows, dim);
  return {std::move(span.basis), std::move(span.pivots)};
}

}  // namespace modtwist
