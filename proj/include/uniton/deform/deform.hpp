#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "uniton/grassmann/plane_family.hpp"

namespace uniton::deform {

using exactalg::GaussianRational;
using exactalg::RationalFunction;
using grassmann::PlaneFamily;
using loopalg::RatMatrix;

/// Type (2,1,0) data in the normal form
///   W = (A_0 + lambda delta E_13)(V_3 + lambda(V_3 + V_2) + lambda^2 H_+),
///   A_0 = [[1, gamma, alpha], [0, 1, beta], [0, 0, 1]],
/// subject to alpha' = gamma beta'.
struct NormalForm {
  RationalFunction alpha;
  RationalFunction beta;
  RationalFunction delta;
  RationalFunction gamma;

  /// Fills gamma = alpha'/beta' (gamma = 0 when beta is constant). Throws
  /// InputError when alpha' is not a multiple of beta'.
  static NormalForm from_alpha_beta(RationalFunction alpha, RationalFunction beta, RationalFunction delta);
  /// alpha = d + ac/2, beta = c, gamma = a, delta = b from a canonical potential.
  static NormalForm from_potential(const canonical::CanonicalPotential& pot);

  RatMatrix A0() const;
  /// W as a plane family in C^6 = H_+/lambda^2 H_+.
  PlaneFamily plane() const;
};

/// alpha and beta with every nonconstant coefficient scaled by (1 - t); delta
/// and gamma stay fixed, so alpha_t' = gamma beta_t' at every t.
struct DeformationPath {
  NormalForm start;
  int m = 1;
  /// Constant loop applied before the diagonal one at t = 1.
  RatMatrix premultiplier;
  std::vector<int> endpoint_diagonal;

  GaussianRational t(int j) const;
  NormalForm at(int j) const;
  /// Endpoint after the constant and diagonal premultipliers.
  PlaneFamily endpoint() const;
};

/// Throws InputError when delta vanishes identically (perturb it first), when
/// alpha or beta is not a polynomial, or when m < 1. The endpoint premultiplier
/// is A_0(1)^{-1} followed by diag(lambda^{-1}, 1, 1) when gamma is constant and
/// by diag(lambda^{-1}, lambda^{-1}, 1) otherwise.
DeformationPath lowering_path(const NormalForm& start, int m);

/// Zeros of delta on the sphere, with multiplicity, away from the poles of A_0.
int delta_zeros_in_domain(const NormalForm& d);

struct DeformationReport {
  std::vector<GaussianRational> t;
  std::vector<bool> ces_ok;
  std::vector<int> degree;
  int endpoint_width = -1;
  /// lambda^2 H_+ + lambda A_0 E_0 in W, and W in H_+ minus (A_0 E_0)^perp, at t = 1.
  bool sandwich_lower = false;
  bool sandwich_upper = false;
  /// Whether delta has |W| zeros in the domain of A_0 at t = 0.
  bool hypothesis = false;

  bool degree_constant() const;
  bool all_ces() const;
  bool passed() const;
};

DeformationReport verify_path(const DeformationPath& path);

/// Desk-scale connectivity check: both instances deform to width-1 endpoints
/// of equal degree.
struct ConnectivityWitness {
  DeformationReport first;
  DeformationReport second;
  bool connected() const;
};

ConnectivityWitness connectivity_witness(const NormalForm& a, const NormalForm& b, int m);

nlohmann::json to_json(const DeformationReport& r);
nlohmann::json to_json(const NormalForm& d);
NormalForm normal_form_from_json(const nlohmann::json& j);

}  // namespace uniton::deform
