#include "modtwist/exterior.hpp"

namespace modtwist {

namespace {

Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return Rational();
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

template <class Tag>
Exterior<Tag> wedge_of_degree_one(std::size_t dim, std::span<const Index> tuple,
                                  std::span<const Vector> images, const Rational& coeff) {
  // Product over t in tuple of (sum_j images[j][t] w_j), starting from coeff.
  Exterior<Tag> acc(dim, 0);
  acc.add({}, coeff);
  for (Index t : tuple) {
    Exterior<Tag> factor(dim, 1);
    for (Index j = 0; j < images.size(); ++j) factor.add({j}, images[j][t]);
    acc = wedge(acc, factor);
    if (acc.is_zero()) return Exterior<Tag>(dim, tuple.size());
  }
  return acc;
}

}  // namespace

template <class Tag>
Rational evaluate(const Exterior<Tag>& e, std::span<const Vector> args) {
  const std::size_t k = e.degree();
  if (args.size() != k) throw DimensionMismatch("wrong number of arguments for evaluation");
  for (const auto& a : args)
    if (a.size() != e.dim()) throw DimensionMismatch("argument dimension mismatch");
  Rational total;
  if (k <= 3) {
    // Expanded determinants for the common low degrees.
    for (const auto& [idx, c] : e.terms()) {
      auto a = [&](std::size_t r, std::size_t s) -> const Rational& { return args[r][idx[s]]; };
      Rational d;
      if (k == 0) d = 1;
      else if (k == 1) d = a(0, 0);
      else if (k == 2) d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      else
        d = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
            a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
      if (!d.is_zero()) total += c * d;
    }
    return total;
  }
  for (const auto& [idx, c] : e.terms()) {
    Matrix m(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) m(a, b) = args[a][idx[b]];
    Rational d = determinant(std::move(m));
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

template <class Tag>
Exterior<Tag> contract(const Vector& pairing, const Exterior<Tag>& m) {
  if (m.degree() == 0) throw DimensionMismatch("contraction into a degree-0 element");
  if (pairing.size() != m.dim()) throw DimensionMismatch("contraction dimension mismatch");
  Exterior<Tag> out(m.dim(), m.degree() - 1);
  for (const auto& [idx, c] : m.terms())
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Rational& p = pairing[idx[s]];
      if (p.is_zero()) continue;
      IndexTuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t u = 0; u < idx.size(); ++u)
        if (u != s) rest.push_back(idx[u]);
      out.add_sorted(rest, s % 2 == 0 ? c * p : -(c * p));
    }
  return out;
}

template Rational evaluate(const Multivector&, std::span<const Vector>);
template Rational evaluate(const Cochain&, std::span<const Vector>);
template Multivector contract(const Vector&, const Multivector&);
template Cochain contract(const Vector&, const Cochain&);

Multivector interior(const Cochain& alpha, const Multivector& m) {
  if (alpha.degree() != 1) throw DimensionMismatch("interior product needs a 1-cochain");
  return contract(alpha.to_vector(), m);
}

Cochain interior(const Vector& x, const Cochain& c) { return contract(x, c); }

namespace {

// Coefficients of f^*c on tuples (start <= a_1 < ... < a_k), found by
// peeling one argument at a time: (f^*c)(e_a, rest) = (i_{f e_a} c)(f rest).
void pullback_into(const Cochain& c, std::span<const Vector> images, Index start, IndexTuple& prefix, Cochain& out) {
  if (c.is_zero()) return;
  if (c.degree() == 0) {
    out.add_sorted(prefix, c.coeff({}));
    return;
  }
  for (Index a = start; a + c.degree() <= images.size(); ++a) {
    prefix.push_back(a);
    pullback_into(contract(images[a], c), images, a + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Cochain pullback(const Cochain& c, std::span<const Vector> images) {
  for (const auto& v : images)
    if (v.size() != c.dim()) throw DimensionMismatch("pullback image dimension mismatch");
  Cochain out(images.size(), c.degree());
  IndexTuple prefix;
  pullback_into(c, images, 0, prefix, out);
  return out;
}

Multivector pushforward(const Multivector& m, std::span<const Vector> images) {
  if (images.size() != m.dim()) throw DimensionMismatch("pushforward source dimension mismatch");
  const std::size_t target = images.empty() ? 0 : images.front().size();
  // Transpose so that entry [v][w] reads images[w][v].
  std::vector<Vector> transposed(target, Vector(images.size()));
  for (Index w = 0; w < images.size(); ++w) {
    if (images[w].size() != target) throw DimensionMismatch("ragged pushforward images");
    for (Index v = 0; v < target; ++v) transposed[v][w] = images[w][v];
  }
  Multivector out(target, m.degree());
  for (const auto& [idx, coeff] : m.terms())
    out += wedge_of_degree_one<VectorTag>(target, idx, transposed, coeff);
  return out;
}

}  // namespace modtwist
