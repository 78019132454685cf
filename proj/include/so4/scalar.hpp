#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace so4 {

using Rational = mpq_class;

/// Exact Gaussian rational p/q + (r/s)i.
///
/// Both parts are GMP rationals kept in canonical form (reduced, positive
/// denominator), so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// num/den + 0i; throws DivisionByZero when den == 0.
  static Scalar fraction(long num, long den);
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws DivisionByZero for zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic (re, im) order. Not a field order; used for sorting only.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses `[sign] rat [sign rat 'i'] | [sign] [rat] 'i'`, rat = int['/'int].
/// Whitespace is ignored. Throws ParseError or DivisionByZero.
Scalar parse_scalar(std::string_view text);

/// Canonical text: reduced fractions, "i"/"-i" for unit imaginary parts,
/// "0" for zero. Inverse of parse_scalar.
std::string render_scalar(const Scalar& z);

std::ostream& operator<<(std::ostream& os, const Scalar& z);

/// Square root inside Q(i) when one exists, choosing the root in the open
/// upper half-plane or on the non-negative real axis.
std::optional<Scalar> exact_sqrt(const Scalar& z);

/// True iff z lies in the open upper half-plane or on the positive real axis.
bool in_principal_half_plane(const Scalar& z);

}  // namespace so4
