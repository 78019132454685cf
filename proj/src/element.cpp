#include "so4/element.hpp"

#include "so4/errors.hpp"

namespace so4 {

namespace {

constexpr const char* kCoordNames[kDim] = {"h1", "x1", "y1", "h2", "x2", "y2"};

std::size_t offset(Factor f) { return f == Factor::First ? 0 : 3; }

// Bracket of two sl2 components given as (h, x, y).
void bracket_factor(const Scalar* u, const Scalar* v, Scalar* out) {
  out[0] = u[1] * v[2] - u[2] * v[1];
  out[1] = Scalar(2) * (u[0] * v[1] - u[1] * v[0]);
  out[2] = Scalar(2) * (u[2] * v[0] - u[0] * v[2]);
}

}  // namespace

Element Element::from_vector(const Vector& v) {
  if (v.size() != kDim) throw InvalidArgument("element needs 6 coordinates");
  Element e;
  for (std::size_t k = 0; k < kDim; ++k) e.c_[k] = v[k];
  return e;
}

Element Element::unit(Coord c) {
  Element e;
  e.c_[c] = 1;
  return e;
}

bool Element::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Element Element::restrict_to(Factor f) const {
  Element e;
  const std::size_t o = offset(f);
  for (std::size_t k = 0; k < 3; ++k) e.c_[o + k] = c_[o + k];
  return e;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& s : e.c_) s = -s;
  return e;
}

Element& Element::operator+=(const Element& o) {
  for (std::size_t k = 0; k < kDim; ++k) c_[k] += o.c_[k];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (std::size_t k = 0; k < kDim; ++k) c_[k] -= o.c_[k];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

std::string render_element(const Element& u) {
  std::string out;
  for (std::size_t k = 0; k < kDim; ++k) {
    const Scalar& s = u[k];
    if (s.is_zero()) continue;
    std::string coeff;
    if (s == Scalar(1)) {
      coeff = "";
    } else if (s == Scalar(-1)) {
      coeff = "-";
    } else if (s.is_real() || s.re() == 0) {
      coeff = render_scalar(s);
    } else {
      coeff = "(" + render_scalar(s) + ")";
    }
    if (!out.empty() && (coeff.empty() || coeff.front() != '-')) out += '+';
    out += coeff + kCoordNames[k];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Element& u) { return os << render_element(u); }

FactorComponent::FactorComponent(const Mat2& m) : m_(m) {
  if (!m.trace().is_zero()) throw InvalidArgument("factor component must be traceless");
}

FactorComponent component(const Element& u, Factor f) {
  const std::size_t o = offset(f);
  return FactorComponent(u[o], u[o + 1], u[o + 2]);
}

Element embed(const FactorComponent& c, Factor f) {
  Element e;
  const std::size_t o = offset(f);
  e[o] = c.h();
  e[o + 1] = c.x();
  e[o + 2] = c.y();
  return e;
}

Element bracket(const Element& u, const Element& v) {
  Element out;
  Scalar lhs[3], rhs[3], res[3];
  for (std::size_t o : {std::size_t{0}, std::size_t{3}}) {
    for (std::size_t k = 0; k < 3; ++k) {
      lhs[k] = u[o + k];
      rhs[k] = v[o + k];
    }
    bracket_factor(lhs, rhs, res);
    for (std::size_t k = 0; k < 3; ++k) out[o + k] = res[k];
  }
  return out;
}

Matrix matrix_form(const Element& u) {
  Matrix m(4, 4);
  m(0, 0) = u[H1];
  m(0, 1) = u[X1];
  m(1, 0) = u[Y1];
  m(1, 1) = -u[H1];
  m(2, 2) = u[H2];
  m(2, 3) = u[X2];
  m(3, 2) = u[Y2];
  m(3, 3) = -u[H2];
  return m;
}

Element from_matrix_form(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw InvalidArgument("expected a 4x4 matrix");
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if ((r < 2) != (c < 2) && !m(r, c).is_zero()) throw InvalidArgument("matrix is not block-diagonal");
    }
  }
  if (!(m(0, 0) + m(1, 1)).is_zero() || !(m(2, 2) + m(3, 3)).is_zero()) {
    throw InvalidArgument("diagonal blocks must be traceless");
  }
  return Element(m(0, 0), m(0, 1), m(1, 0), m(2, 2), m(2, 3), m(3, 2));
}

Sl2Type sl2_element_type(const FactorComponent& c) {
  if (c.is_zero()) return {Sl2Type::Kind::Zero, Scalar()};
  Scalar det = c.det();
  if (det.is_zero()) return {Sl2Type::Kind::Nilpotent, Scalar()};
  return {Sl2Type::Kind::Semisimple, det};
}

std::string to_string(Sl2Type::Kind kind) {
  switch (kind) {
    case Sl2Type::Kind::Zero:
      return "zero";
    case Sl2Type::Kind::Nilpotent:
      return "nilpotent";
    case Sl2Type::Kind::Semisimple:
      return "semisimple";
  }
  return "?";
}

}  // namespace so4
