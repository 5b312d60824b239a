#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "uniton/exactalg/gaussian.hpp"

namespace uniton::exactalg {

/// Univariate polynomial in z over Q(i), coefficients stored ascending.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  Polynomial(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial z() { return monomial(1, 1); }
  static Polynomial monomial(const GaussianRational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  /// Coefficient of z^i (zero beyond the degree).
  GaussianRational coeff(int i) const;
  const GaussianRational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  GaussianRational eval(const GaussianRational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Quotient and remainder; throws InputError for division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::logic_error if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic gcd
  Polynomial s;  // s*a + t*b == g
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Solves s*a + t*b == c with deg s < deg b. Requires gcd(a,b) | c.
std::pair<Polynomial, Polynomial> solve_bezout(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& c);

/// Yun's algorithm: returns monic squarefree, pairwise coprime factors
/// f_1, f_2, ... with p = lc(p) * prod f_i^i.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace uniton::exactalg
