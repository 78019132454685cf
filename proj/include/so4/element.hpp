#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>

#include "so4/linalg.hpp"
#include "so4/scalar.hpp"

namespace so4 {

/// Coordinates of so(4,C) = sl(2,C) + sl(2,C) in the Chevalley basis.
/// The order is fixed globally: h1, x1, y1, h2, x2, y2.
enum Coord : std::size_t { H1 = 0, X1, Y1, H2, X2, Y2 };
inline constexpr std::size_t kDim = 6;

enum class Factor { First = 1, Second = 2 };

inline Factor other(Factor f) { return f == Factor::First ? Factor::Second : Factor::First; }

class Element {
 public:
  Element() = default;
  Element(Scalar h1, Scalar x1, Scalar y1, Scalar h2, Scalar x2, Scalar y2)
      : c_{std::move(h1), std::move(x1), std::move(y1), std::move(h2), std::move(x2), std::move(y2)} {}
  static Element from_vector(const Vector& v);

  static Element unit(Coord c);
  static Element h1() { return unit(H1); }
  static Element x1() { return unit(X1); }
  static Element y1() { return unit(Y1); }
  static Element h2() { return unit(H2); }
  static Element x2() { return unit(X2); }
  static Element y2() { return unit(Y2); }

  const Scalar& operator[](std::size_t k) const { return c_[k]; }
  Scalar& operator[](std::size_t k) { return c_[k]; }
  const std::array<Scalar, kDim>& coeffs() const noexcept { return c_; }
  Vector to_vector() const { return Vector(c_.begin(), c_.end()); }

  bool is_zero() const;
  /// The part of the element living in one sl2 factor, the other zeroed.
  Element restrict_to(Factor f) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) = default;

 private:
  std::array<Scalar, kDim> c_{};
};

/// Renders e.g. "h1+3/2x2-iy2".
std::string render_element(const Element& u);
std::ostream& operator<<(std::ostream& os, const Element& u);

/// Plain 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  Scalar a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Scalar det() const { return a * d - b * c; }
  Scalar trace() const { return a + d; }
  /// Inverse of a determinant-one matrix.
  Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2& l, const Mat2& r) = default;
};

/// Image of one sl2 component in its 2x2 diagonal block: h x + ... maps to
/// [[h, x], [y, -h]].
class FactorComponent {
 public:
  FactorComponent() = default;
  FactorComponent(Scalar h, Scalar x, Scalar y) : m_{h, std::move(x), std::move(y), -h} {}
  /// Throws InvalidArgument if m is not traceless.
  explicit FactorComponent(const Mat2& m);

  const Mat2& matrix() const noexcept { return m_; }
  const Scalar& h() const noexcept { return m_.a; }
  const Scalar& x() const noexcept { return m_.b; }
  const Scalar& y() const noexcept { return m_.c; }
  Scalar det() const { return m_.det(); }
  bool is_zero() const { return m_.a.is_zero() && m_.b.is_zero() && m_.c.is_zero(); }

 private:
  Mat2 m_{0, 0, 0, 0};
};

FactorComponent component(const Element& u, Factor f);
/// Element with the given component in factor f and zero in the other.
Element embed(const FactorComponent& c, Factor f);

/// Lie bracket from the Chevalley relations [h,x]=2x, [h,y]=-2y, [x,y]=h in
/// each factor; the factors commute.
Element bracket(const Element& u, const Element& v);

/// 4x4 block-diagonal matrix of u.
Matrix matrix_form(const Element& u);

/// Inverse of matrix_form; throws InvalidArgument unless m is block-diagonal
/// with traceless 2x2 blocks.
Element from_matrix_form(const Matrix& m);

/// Conjugacy type of a factor component under SL(2,C).
struct Sl2Type {
  enum class Kind { Zero, Nilpotent, Semisimple };
  Kind kind = Kind::Zero;
  Scalar det;  // meaningful for Semisimple only; eigenvalues are +-l with l^2 = -det

  friend bool operator==(const Sl2Type&, const Sl2Type&) = default;
};

Sl2Type sl2_element_type(const FactorComponent& c);

std::string to_string(Sl2Type::Kind kind);

}  // namespace so4
