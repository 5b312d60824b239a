#include "uniton/exactalg/gaussian.hpp"

#include <sstream>

#include "uniton/errors.hpp"

namespace uniton::exactalg {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fractions(const mpz_class& re_num, const mpz_class& re_den,
                                                  const mpz_class& im_num, const mpz_class& im_den) {
  if (re_den == 0 || im_den == 0) throw InputError("zero denominator in Gaussian rational");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero Gaussian rational");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  std::ostringstream os;
  os << '(';
  if (sgn(re_) != 0) {
    os << re_.get_str();
    os << (sgn(im_) > 0 ? "+" : "-");
    os << mpq_class(abs(im_)).get_str() << 'i';
  } else {
    os << im_.get_str() << 'i';
  }
  os << ')';
  return os.str();
}

}  // namespace uniton::exactalg
