#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace uniton::exactalg {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept in lowest terms with positive denominators (gmpxx
/// canonicalizes after every arithmetic operation), so structural equality is
/// value equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Builds (re_num/re_den) + (im_num/im_den) i; throws InputError on a zero denominator.
  static GaussianRational from_fractions(const mpz_class& re_num, const mpz_class& re_den,
                                         const mpz_class& im_num = 0, const mpz_class& im_den = 1);
  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(long e) const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Literal form accepted by the parser: `3/2`, `-1`, `(3/2+1/4i)`, `(-1/4i)`.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace uniton::exactalg
