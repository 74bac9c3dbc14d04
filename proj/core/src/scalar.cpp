#include "nilhodge/scalar.hpp"

#include <cctype>
#include <ostream>

namespace nilhodge {

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
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "i";
  std::string out = rational_to_string(re_);
  out += sgn(im_) < 0 ? '-' : '+';
  out += rational_to_string(abs(im_));
  out += 'i';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarParseError("invalid coefficient '" + std::string(s_) +
                               "': " + what + " at offset " +
                               std::to_string(pos_),
                           pos_);
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    if (out.empty()) fail("expected digits");
    return out;
  }

  Rational rational() {
    std::string text;
    if (peek() == '-') {
      text += '-';
      advance();
    }
    text += digits();
    if (peek() == '/') {
      advance();
      const std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos)
        fail("zero denominator");
      text += '/';
      text += den;
    }
    Rational r(text, 10);
    r.canonicalize();
    return r;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor c(trim(text));
  if (c.done()) c.fail("empty string");
  Rational first = c.rational();
  if (c.done()) return Scalar(std::move(first));
  if (c.peek() == 'i') {
    c.advance();
    if (!c.done()) c.fail("trailing characters");
    return Scalar(Rational(0), std::move(first));
  }
  if (c.peek() != '+' && c.peek() != '-') c.fail("expected '+', '-' or 'i'");
  const bool negative = c.peek() == '-';
  c.advance();
  Rational second = c.rational();
  if (c.peek() != 'i') c.fail("expected 'i'");
  c.advance();
  if (!c.done()) c.fail("trailing characters");
  if (negative) second = -second;
  return Scalar(std::move(first), std::move(second));
}

} // namespace nilhodge
