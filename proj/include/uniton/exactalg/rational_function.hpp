#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>

#include <nlohmann/json.hpp>

#include "uniton/exactalg/polynomial.hpp"

namespace uniton::exactalg {

/// Exact element of Q(i)(z) in canonical form: gcd(num, den) = 1 and den monic.
/// The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const GaussianRational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  /// Reduces num/den to canonical form; throws InputError if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction z() { return RationalFunction(Polynomial::z()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Value of a constant function; throws std::logic_error otherwise.
  GaussianRational constant_value() const;

  RationalFunction derivative() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Evaluates in double precision. Callers decide what counts as a pole.
  std::complex<double> eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }
  GaussianRational eval(const GaussianRational& x) const;

  /// Text form, parseable by parse_rational_function.
  std::string str() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Witness that a rational integrand has no rational antiderivative: the
/// Hermite remainder, a proper fraction with squarefree denominator.
struct IntegrationObstruction {
  RationalFunction remainder;
};

using IntegrationResult = std::variant<RationalFunction, IntegrationObstruction>;

/// Antiderivative with zero constant of integration (polynomial part has zero
/// constant term, the rest is a proper fraction), or the logarithmic
/// obstruction found by Hermite reduction.
IntegrationResult integrate(const RationalFunction& f);

/// Zeros and poles of f on the Riemann sphere, with multiplicity, including
/// the point at infinity. Throws InputError for f == 0.
std::pair<int, int> sphere_degree_data(const RationalFunction& f);

RationalFunction derivative(const RationalFunction& f);

/// Parser for the text syntax: integers, Gaussian literals such as
/// `(3/2+1/4i)`, the unit `i`, the variable `z`, and `+ - * / ^` with integer
/// exponents. Throws InputError on malformed input.
RationalFunction parse_rational_function(const std::string& text);

/// JSON form {"num":[[re_n,re_d,im_n,im_d],...],"den":[...]}, ascending.
nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);

}  // namespace uniton::exactalg
