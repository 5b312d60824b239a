#pragma once

#include <variant>
#include <vector>

#include "uniton/loopalg/laurent_matrix.hpp"

namespace uniton::loopalg {

/// exp(B) for a nilpotent Laurent matrix B.
struct ExpNilpotent {
  LaurentMatrix B;
};

/// gamma(lambda) = diag(lambda^e_1, ..., lambda^e_n).
struct DiagonalHom {
  std::vector<int> exponents;
};

/// A lambda-independent matrix over Q(i)(z) together with its inverse.
struct ConstantInvertible {
  RatMatrix M;
  RatMatrix Minv;
};

/// An arbitrary Laurent matrix with a caller-supplied, verified inverse.
struct Explicit {
  LaurentMatrix L;
  LaurentMatrix Linv;
};

using Factor = std::variant<ExpNilpotent, DiagonalHom, ConstantInvertible, Explicit>;

/// Checked factor constructors; each throws InputError when the inverse
/// cannot be certified.
Factor make_exp(const LaurentMatrix& B);
Factor make_diag(std::vector<int> exponents);
Factor make_const(const RatMatrix& M);
Factor make_explicit(const LaurentMatrix& L, const LaurentMatrix& Linv);

LaurentMatrix expand(const Factor& f);
Factor inverse(const Factor& f);

/// Ordered product of structurally invertible factors.
class LoopProduct {
 public:
  explicit LoopProduct(int n = 1) : n_(n) {}
  LoopProduct(int n, std::vector<Factor> factors);

  static LoopProduct identity(int n) { return LoopProduct(n); }

  int n() const { return n_; }
  const std::vector<Factor>& factors() const { return f_; }

  LoopProduct& append(Factor f);
  LoopProduct& prepend(Factor f);
  /// this * other
  LoopProduct then(const LoopProduct& other) const;

  LaurentMatrix expand() const;
  LaurentMatrix expand_inverse() const;
  LoopProduct inverse() const;

  bool is_z_independent() const;

 private:
  int n_;
  std::vector<Factor> f_;
};

/// sum_{j<n} B^j / j!; throws InputError if B^n != 0.
LaurentMatrix nilpotent_exp(const LaurentMatrix& B);

/// sum_m (-1)^m/(m+1)! (ad B)^m B'; throws InputError if B is not nilpotent.
LaurentMatrix dexp_series(const LaurentMatrix& B);

/// H^{-1} H' via (PQ)^{-1}(PQ)' = Q^{-1}(P^{-1}P')Q + Q^{-1}Q'.
LaurentMatrix maurer_cartan(const LoopProduct& H);

enum class ExtendedMode { General, Normalized };

struct ExtendedReport {
  bool accepted = false;
  ExtendedMode mode = ExtendedMode::General;
  std::vector<int> offending_powers;
  RatMatrix A;  // lambda^{-1} coefficient of H^{-1}H'
  LaurentMatrix maurer_cartan;
};

ExtendedReport verify_extended(const LoopProduct& H, ExtendedMode mode);

/// lambda -> alpha*lambda in every factor; throws InputError for alpha = 0.
LoopProduct circle_action(const GaussianRational& alpha, const LoopProduct& H);

/// gamma * H for z-independent gamma; throws InputError otherwise.
LoopProduct dressing(const LoopProduct& gamma, const LoopProduct& H);

/// H * M for M with only nonnegative lambda powers; throws InputError otherwise.
LoopProduct gauge(const LoopProduct& H, const LoopProduct& M);

nlohmann::json to_json(const LoopProduct& H);
LoopProduct loop_product_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExtendedReport& r);

}  // namespace uniton::loopalg
