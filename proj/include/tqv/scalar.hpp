#ifndef TQV_SCALAR_HPP_
#define TQV_SCALAR_HPP_

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace tqv {

using Rational = mpq_class;

/// Parses "p/q" (or a bare integer "p") exactly. Requires q > 0.
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string format_rational(const Rational& r);

/// Element of the Gaussian rationals Q(i). Every operation is exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "p/q+p/q·i" with both parts in canonical "p/q" form.
std::string format_scalar(const Scalar& s);

/// Short human form: "2", "1/2", "-i", "1+2i", "(1/2)" is left to callers.
std::string pretty_scalar(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tqv

#endif  // TQV_SCALAR_HPP_
