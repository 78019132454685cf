#include "so4/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "so4/errors.hpp"

namespace so4 {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// int['/'int] with an optional leading sign.
Rational parse_rational(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero();
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string render_rational(const Rational& q) { return q.get_str(10); }

}  // namespace

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar parse_scalar(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");

  std::string_view v(s);
  if (v.back() != 'i') return Scalar(parse_rational(v, text));

  v.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = v.size(); k-- > 1;) {
    if (v[k] == '+' || v[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : v.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? v : v.substr(split);

  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text, text);
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text, text);
  }
  return Scalar(re, im);
}

std::string render_scalar(const Scalar& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (sgn(z.re()) != 0) out = render_rational(z.re());
  if (sgn(z.im()) != 0) {
    if (sgn(z.im()) > 0 && !out.empty()) out += '+';
    if (z.im() == 1) {
      out += "i";
    } else if (z.im() == -1) {
      out += "-i";
    } else {
      out += render_rational(z.im()) + "i";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << render_scalar(z); }

bool in_principal_half_plane(const Scalar& z) {
  return sgn(z.im()) > 0 || (sgn(z.im()) == 0 && sgn(z.re()) > 0);
}

std::optional<Scalar> exact_sqrt(const Scalar& z) {
  if (z.is_zero()) return Scalar();
  const Rational& p = z.re();
  const Rational& q = z.im();
  if (sgn(q) == 0) {
    if (sgn(p) > 0) {
      auto r = rational_sqrt(p);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    auto r = rational_sqrt(Rational(-p));
    if (!r) return std::nullopt;
    return Scalar(Rational(0), *r);
  }
  // (x + yi)^2 = p + qi with x^2 = (p + |z|)/2, y = q / (2x).
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt(Rational((p + *modulus) / 2));
  if (!x || sgn(*x) == 0) return std::nullopt;
  Rational y = q / (2 * *x);
  Scalar root(*x, y);
  if (!in_principal_half_plane(root)) root = -root;
  return root;
}

}  // namespace so4
