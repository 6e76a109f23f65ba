#pragma once

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace covlab {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Complex number with exact rational real and imaginary parts.
class QComplex {
 public:
  QComplex() = default;
  QComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  QComplex(long v) : re_(v), im_(0) {}
  QComplex(int v) : re_(v), im_(0) {}
  static QComplex i() { return QComplex(0, 1); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  QComplex conj() const { return QComplex(re_, -im_); }
  /// Throws std::domain_error on zero.
  QComplex inverse() const;
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  QComplex& operator+=(const QComplex& o);
  QComplex& operator-=(const QComplex& o);
  QComplex& operator*=(const QComplex& o);
  QComplex& operator/=(const QComplex& o) { return *this *= o.inverse(); }

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return QComplex(-a.re_, -a.im_); }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Exact square root of a nonnegative rational when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace covlab
