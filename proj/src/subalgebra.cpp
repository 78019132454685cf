#include "so4/subalgebra.hpp"

#include "so4/errors.hpp"

namespace so4 {

namespace {

std::vector<Element> brackets_of(const std::vector<Element>& basis) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) out.push_back(bracket(basis[i], basis[j]));
  return out;
}

// 6x6 matrix of ad(u) on so(4,C) in Chevalley coordinates.
Matrix ambient_ad(const Element& u) {
  Matrix m(kDim, kDim);
  for (std::size_t c = 0; c < kDim; ++c) {
    Element image = bracket(u, Element::unit(static_cast<Coord>(c)));
    for (std::size_t r = 0; r < kDim; ++r) m(r, c) = image[r];
  }
  return m;
}

}  // namespace

std::vector<Element> echelon_basis(std::span<const Element> vectors) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(v.to_vector());
  std::vector<Element> out;
  for (const auto& r : span_basis(rows, kDim)) out.push_back(Element::from_vector(r));
  return out;
}

Subalgebra::Subalgebra(std::vector<Element> canonical_basis) : basis_(std::move(canonical_basis)) {
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    pivots_.push_back(p);
  }
  derived_dims_ = {dim()};
  std::vector<Element> current = basis_;
  while (!current.empty()) {
    std::vector<Element> next = echelon_basis(brackets_of(current));
    if (next.size() == current.size()) break;
    derived_dims_.push_back(static_cast<int>(next.size()));
    current = std::move(next);
  }
}

Subalgebra Subalgebra::span_close(std::span<const Element> generators) {
  std::vector<Element> basis = echelon_basis(generators);
  Subalgebra candidate(basis);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!candidate.contains(bracket(generators[i], generators[j]))) {
        throw NotClosed(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return candidate;
}

Subalgebra Subalgebra::full() {
  std::vector<Element> basis;
  for (std::size_t k = 0; k < kDim; ++k) basis.push_back(Element::unit(static_cast<Coord>(k)));
  return Subalgebra(std::move(basis));
}

bool Subalgebra::contains(const Element& v) const {
  Element rest = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (rest[pivots_[k]].is_zero()) continue;
    rest -= rest[pivots_[k]] * basis_[k];
  }
  return rest.is_zero();
}

Vector Subalgebra::coordinates(const Element& v) const {
  Vector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) coords[k] = v[pivots_[k]];
  if (combination(coords) != v) throw InvalidArgument("element " + render_element(v) + " is not in the subalgebra");
  return coords;
}

Element Subalgebra::combination(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw InvalidArgument("coordinate count mismatch");
  Element out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!coords[k].is_zero()) out += coords[k] * basis_[k];
  }
  return out;
}

Subalgebra derived_algebra(const Subalgebra& s) {
  // The bracket span of a subalgebra is again a subalgebra.
  return Subalgebra::span_close(echelon_basis(brackets_of(s.basis())));
}

DerivedSeries derived_series(const Subalgebra& s) {
  DerivedSeries series;
  series.terms.push_back(s);
  while (series.terms.back().dim() > 0) {
    Subalgebra next = derived_algebra(series.terms.back());
    if (next.dim() == series.terms.back().dim()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

Matrix ad_matrix(const Subalgebra& s, const Element& u) {
  const auto n = static_cast<std::size_t>(s.dim());
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = s.coordinates(bracket(u, s.basis()[j]));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix killing_form(const Subalgebra& s) {
  const auto n = static_cast<std::size_t>(s.dim());
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (const auto& b : s.basis()) ads.push_back(ad_matrix(s, b));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  }
  return k;
}

Subalgebra radical(const Subalgebra& s) {
  const auto n = static_cast<std::size_t>(s.dim());
  Subalgebra derived = derived_algebra(s);
  if (derived.dim() == 0) return s;
  Matrix k = killing_form(s);
  // Row per derived basis vector d: c -> c^T K d.
  Matrix constraints(static_cast<std::size_t>(derived.dim()), n);
  for (std::size_t r = 0; r < static_cast<std::size_t>(derived.dim()); ++r) {
    Vector d = s.coordinates(derived.basis()[r]);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[j].is_zero()) acc += k(i, j) * d[j];
      }
      constraints(r, i) = acc;
    }
  }
  std::vector<Element> elems;
  for (const auto& c : nullspace(constraints)) elems.push_back(s.combination(c));
  return Subalgebra::span_close(elems);
}

Subalgebra levi_factor(const Subalgebra& s) {
  if (s.is_solvable()) throw InvalidArgument("levi_factor: subalgebra is solvable");
  Subalgebra levi = derived_series(s).terms.back();
  if (determinant(killing_form(levi)).is_zero()) throw StabilizationNotSemisimple();
  Subalgebra rad = radical(s);
  std::vector<Element> joint = levi.basis();
  joint.insert(joint.end(), rad.basis().begin(), rad.basis().end());
  if (levi.dim() + rad.dim() != s.dim() || static_cast<int>(echelon_basis(joint).size()) != s.dim()) {
    throw StabilizationNotSemisimple();
  }
  return levi;
}

Subalgebra factor_projection(const Subalgebra& s, Factor f) {
  std::vector<Element> images;
  for (const auto& b : s.basis()) images.push_back(b.restrict_to(f));
  return Subalgebra::span_close(echelon_basis(images));
}

Subalgebra factor_intersection(const Subalgebra& s, Factor f) {
  const auto n = static_cast<std::size_t>(s.dim());
  const std::size_t o = f == Factor::First ? 3 : 0;  // coordinates that must vanish
  Matrix m(3, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < 3; ++r) m(r, j) = s.basis()[j][o + r];
  std::vector<Element> elems;
  for (const auto& c : nullspace(m)) elems.push_back(s.combination(c));
  return Subalgebra::span_close(elems);
}

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b) {
  const auto na = static_cast<std::size_t>(a.dim());
  const auto nb = static_cast<std::size_t>(b.dim());
  Matrix m(kDim, na + nb);
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t j = 0; j < na; ++j) m(r, j) = a.basis()[j][r];
    for (std::size_t j = 0; j < nb; ++j) m(r, na + j) = -b.basis()[j][r];
  }
  std::vector<Element> elems;
  for (const auto& c : nullspace(m)) elems.push_back(a.combination(Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(na))));
  return Subalgebra::span_close(elems);
}

Subalgebra centralizer(std::span<const Element> elements) {
  Matrix m(kDim * elements.size(), kDim);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    Matrix ad = ambient_ad(elements[e]);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) m(e * kDim + r, c) = ad(r, c);
  }
  std::vector<Element> elems;
  for (const auto& v : nullspace(m)) elems.push_back(Element::from_vector(v));
  return Subalgebra::span_close(elems);
}

}  // namespace so4
