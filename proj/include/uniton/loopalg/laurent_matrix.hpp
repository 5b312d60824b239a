#pragma once

#include <map>
#include <vector>

#include "uniton/loopalg/rat_matrix.hpp"

namespace uniton::loopalg {

/// Finite Laurent polynomial in lambda with n x n RatMatrix coefficients.
/// Only nonzero coefficients are stored.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int n = 1) : n_(n) {}
  LaurentMatrix(const RatMatrix& m, int power = 0);  // NOLINT(google-explicit-constructor)
  static LaurentMatrix identity(int n) { return LaurentMatrix(RatMatrix::identity(n)); }
  /// diag(lambda^e_1, ..., lambda^e_n).
  static LaurentMatrix diagonal_hom(const std::vector<int>& exponents);

  int n() const { return n_; }
  const std::map<int, RatMatrix>& coeffs() const { return c_; }
  /// Coefficient of lambda^p (zero matrix if absent).
  RatMatrix coeff(int p) const;
  void set_coeff(int p, const RatMatrix& m);

  bool is_zero() const { return c_.empty(); }
  bool is_identity() const;
  bool is_z_independent() const;
  std::vector<int> support() const;
  /// Only meaningful when nonzero.
  int min_power() const { return c_.begin()->first; }
  int max_power() const { return c_.rbegin()->first; }

  /// Entrywise d/dz.
  LaurentMatrix derivative() const;
  /// lambda -> alpha * lambda.
  LaurentMatrix scale_lambda(const GaussianRational& alpha) const;
  /// Multiply by lambda^s.
  LaurentMatrix shift(int s) const;
  /// Keeps powers lo..hi inclusive.
  LaurentMatrix truncate(int lo, int hi) const;

  LaurentMatrix operator-() const;
  LaurentMatrix& operator+=(const LaurentMatrix& o);
  LaurentMatrix& operator-=(const LaurentMatrix& o);
  LaurentMatrix& operator*=(const RationalFunction& s);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(LaurentMatrix a, const RationalFunction& s) { return a *= s; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// Entry (r,c) as a map power -> rational function.
  std::map<int, RationalFunction> entry(int r, int c) const;

 private:
  int n_;
  std::map<int, RatMatrix> c_;
};

/// {"coeffs": {"-1": [[...]], ...}}
nlohmann::json to_json(const LaurentMatrix& m);
/// Accepts {"coeffs": {...}} or the bare coefficient map; n is inferred when omitted.
LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j, int n = 0);

/// [A, B] = AB - BA.
LaurentMatrix commutator(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace uniton::loopalg
