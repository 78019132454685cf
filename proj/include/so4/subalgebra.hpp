#pragma once

#include <span>
#include <vector>

#include "so4/element.hpp"
#include "so4/linalg.hpp"

namespace so4 {

/// A subspace of so(4,C) closed under the bracket.
///
/// The basis is the reduced row-echelon form of the span with columns in
/// coordinate order (h1, x1, y1, h2, x2, y2), rows sorted by pivot column.
/// Two subalgebras are equal iff their bases are equal. The derived-series
/// dimensions are computed at construction.
class Subalgebra {
 public:
  /// The zero subalgebra.
  Subalgebra() = default;

  /// Echelonizes the span of the generators and checks closure.
  /// Throws NotClosed carrying the indices of the first offending pair.
  static Subalgebra span_close(std::span<const Element> generators);
  static Subalgebra span_close(std::initializer_list<Element> generators) {
    return span_close(std::span<const Element>(generators.begin(), generators.size()));
  }
  static Subalgebra full();

  const std::vector<Element>& basis() const noexcept { return basis_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Element& v) const;
  /// Coordinates of v in basis(); throws InvalidArgument if v is not in the span.
  Vector coordinates(const Element& v) const;
  Element combination(const Vector& coords) const;

  /// dims of S, [S,S], [[S,S],[S,S]], ... until stable (the stable dim appears once).
  const std::vector<int>& derived_dims() const noexcept { return derived_dims_; }
  bool is_solvable() const { return derived_dims_.back() == 0; }
  bool is_abelian() const { return dim() == 0 || (derived_dims_.size() > 1 && derived_dims_[1] == 0); }

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.basis_ == b.basis_; }

 private:
  // Trusted constructor: the basis is already canonical and closed.
  explicit Subalgebra(std::vector<Element> canonical_basis);

  std::vector<Element> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<int> derived_dims_{0};
};

/// Canonical echelon basis of the span of arbitrary vectors (no closure check).
std::vector<Element> echelon_basis(std::span<const Element> vectors);

struct DerivedSeries {
  std::vector<Subalgebra> terms;  // terms[k+1] = [terms[k], terms[k]]; the last is perfect
};

/// [S, S] as a subalgebra.
Subalgebra derived_algebra(const Subalgebra& s);
DerivedSeries derived_series(const Subalgebra& s);

/// Matrix of ad(u) restricted to s, in the coordinates of s.basis().
/// u must lie in the normalizer of s.
Matrix ad_matrix(const Subalgebra& s, const Element& u);

/// K[i][j] = trace(ad b_i ad b_j) computed inside s.
Matrix killing_form(const Subalgebra& s);

/// Maximal solvable ideal: the Killing-orthogonal complement of [S, S].
Subalgebra radical(const Subalgebra& s);

/// Stable term of the derived series, checked to be semisimple and a vector
/// space complement of the radical. Throws InvalidArgument for solvable s and
/// StabilizationNotSemisimple if the checks fail.
Subalgebra levi_factor(const Subalgebra& s);

/// Image of s under the coordinate projection onto one sl2 factor.
Subalgebra factor_projection(const Subalgebra& s, Factor f);

/// s intersected with one sl2 factor.
Subalgebra factor_intersection(const Subalgebra& s, Factor f);

/// Intersection of two subalgebras.
Subalgebra intersect(const Subalgebra& a, const Subalgebra& b);

/// Centralizer in so(4,C) of a set of elements.
Subalgebra centralizer(std::span<const Element> elements);

}  // namespace so4
