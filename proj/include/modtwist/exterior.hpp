#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "modtwist/matrix.hpp"

namespace modtwist {

using Index = std::size_t;
/// Strictly increasing list of basis indices.
using IndexTuple = std::vector<Index>;

struct VectorTag {};
struct CovectorTag {};

/// Homogeneous element of an exterior power, stored as a sparse map from
/// strictly increasing index tuples to nonzero coefficients.
///
/// The basis element e_{i1} ^ ... ^ e_{ik} pairs with k arguments through
/// the determinant det[<arg_a, e_{ib}>], so a ^ b = a (x) b - b (x) a and the
/// coefficient of a sorted tuple equals the value on the matching dual basis
/// elements. `Tag` separates multivectors (in ^k g) from cochains (in ^k g*).
template <class Tag>
class Exterior {
public:
  using Terms = std::map<IndexTuple, Rational>;

  Exterior() = default;
  Exterior(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  /// Single basis element; `indices` may be in any order (sign applied).
  static Exterior basis(std::size_t dim, IndexTuple indices, Rational coeff = 1) {
    Exterior e(dim, indices.size());
    e.add(std::move(indices), coeff);
    return e;
  }

  static Exterior from_vector(const Vector& v) {
    Exterior e(v.size(), 1);
    for (Index i = 0; i < v.size(); ++i) e.add({i}, v[i]);
    return e;
  }

  /// Adds coeff * e_{indices}. Unsorted tuples are sorted with the
  /// permutation sign; tuples with a repeated index contribute nothing.
  void add(IndexTuple indices, const Rational& coeff) {
    if (indices.size() != degree_) throw DimensionMismatch("tuple length does not match degree");
    for (auto i : indices)
      if (i >= dim_) throw DimensionMismatch("basis index out of range");
    if (coeff.is_zero()) return;
    int sign = sort_with_sign(indices);
    if (sign == 0) return;
    add_sorted(indices, sign > 0 ? coeff : -coeff);
  }

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const IndexTuple& sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? Rational() : it->second;
  }

  /// Degree-1 element as a dense coordinate vector.
  Vector to_vector() const {
    if (degree_ != 1) throw DimensionMismatch("to_vector needs degree 1");
    Vector v(dim_);
    for (const auto& [idx, c] : terms_) v[idx[0]] = c;
    return v;
  }

  Exterior& operator+=(const Exterior& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) add_sorted(idx, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) add_sorted(idx, -c);
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator*(const Rational& s, const Exterior& a) {
    Exterior out(a.dim_, a.degree_);
    if (s.is_zero()) return out;
    for (const auto& [idx, c] : a.terms_) out.terms_.emplace(idx, s * c);
    return out;
  }
  Exterior operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Sorts in place; returns the permutation sign, or 0 on a repeated index.
  static int sort_with_sign(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
      for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
        if (t[j - 1] == t[j]) return 0;
        std::swap(t[j - 1], t[j]);
        sign = -sign;
      }
    return sign;
  }

  void add_sorted(const IndexTuple& idx, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_compatible(const Exterior& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw DimensionMismatch("exterior elements of different dimension or degree");
  }

private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  Terms terms_;
};

using Multivector = Exterior<VectorTag>;
using Cochain = Exterior<CovectorTag>;

template <class Tag>
Exterior<Tag> wedge(const Exterior<Tag>& a, const Exterior<Tag>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of elements over different spaces");
  Exterior<Tag> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      IndexTuple t = ia;
      t.insert(t.end(), ib.begin(), ib.end());
      int s = Exterior<Tag>::sort_with_sign(t);
      if (s != 0) out.add_sorted(t, s > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

/// Value of a homogeneous element on `args.size() == degree` arguments given
/// in the dual coordinates: sum of coeff * det[args[a][t_b]].
template <class Tag>
Rational evaluate(const Exterior<Tag>& e, std::span<const Vector> args);

/// Contraction in the first slot: (i_a m)(x_2, ..., x_k) = m(a, x_2, ..., x_k).
/// `pairing` lives in the dual space of m's arguments.
template <class Tag>
Exterior<Tag> contract(const Vector& pairing, const Exterior<Tag>& m);

/// i_alpha m for a covector alpha and a multivector m of degree >= 1.
Multivector interior(const Cochain& alpha, const Multivector& m);
/// i_X c for a vector X and a cochain c of degree >= 1.
Cochain interior(const Vector& x, const Cochain& c);

/// Pullback of c along the linear map whose columns are `images`:
/// (f^* c)(y_1..y_k) = c(f y_1, ..., f y_k).
Cochain pullback(const Cochain& c, std::span<const Vector> images);
/// Pushforward of a multivector along the map with the given column images.
Multivector pushforward(const Multivector& m, std::span<const Vector> images);

extern template Rational evaluate(const Multivector&, std::span<const Vector>);
extern template Rational evaluate(const Cochain&, std::span<const Vector>);
extern template Multivector contract(const Vector&, const Multivector&);
extern template Cochain contract(const Vector&, const Cochain&);

}  // namespace modtwist
