#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilhodge {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Thrown by Scalar::parse. `offset` is the 0-based character position in the
/// input where parsing stopped.
class ScalarParseError : public std::runtime_error {
public:
  ScalarParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An element re + im*i of the Gaussian rationals Q(i).
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  Scalar operator-() const { return Scalar(Rational(-re_), Rational(-im_)); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text in the coefficient grammar of the algebra file format:
  /// "3", "-1/2", "3/4i", "1/2-3/4i".
  std::string to_string() const;

  /// Parses RAT | RAT 'i' | RAT ('+'|'-') RAT 'i' where
  /// RAT := '-'? digits ('/' digits)?. Surrounding whitespace is ignored.
  static Scalar parse(std::string_view text);

private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical text of a rational ("-3/4", "5").
std::string rational_to_string(const Rational& r);

} // namespace nilhodge
