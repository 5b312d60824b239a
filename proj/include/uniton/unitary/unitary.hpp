#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uniton/grassmann/plane_family.hpp"

namespace uniton::unitary {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Orthonormal basis of W(z0) mod lambda^k H_+ in C^{kn}; row i*n + a is slot (i, a).
struct NumericPlane {
  int n = 1;
  int k = 0;
  Mat Q;  // kn x r, orthonormal columns

  int dim() const { return static_cast<int>(Q.cols()); }
  /// Slot block lambda^i (an n x r matrix).
  Mat block(int i) const { return Q.middleRows(static_cast<Eigen::Index>(i) * n, n); }
};

/// Substitutes z0 and orthonormalizes. Throws NumericError at poles of basis
/// entries and where the basis loses rank (pivot below 1e-8).
NumericPlane evaluate_plane(const grassmann::PlaneFamily& W, cplx z0);

/// Orthonormal basis of the span of the columns of M (kn x m); singular
/// values below tol are discarded.
NumericPlane plane_from_columns(const Mat& M, int n, int k, double tol = 1e-8);

/// ||(I - QQ*) N Q||, zero for lambda-invariant planes.
double shift_invariance_residual(const NumericPlane& P);

/// Spectral-norm distance between the orthogonal projections; infinity when
/// the dimensions or model spaces differ.
double plane_distance(const NumericPlane& a, const NumericPlane& b);

enum class PeelConvention { ImageSide, KernelSide };
std::string to_string(PeelConvention c);

/// F(lambda) = prod_i (pi_{V_i} + lambda pi_{V_i^perp}), left to right.
struct UnitonFactorization {
  int n = 1;
  std::vector<Mat> V;  // orthonormal bases, one per factor
  PeelConvention convention = PeelConvention::ImageSide;
  double roundtrip_error = 0;  // distance between F H_+ and the input plane

  int k() const { return static_cast<int>(V.size()); }
};

/// Peels k factors off P, first with V = image of the lambda^0 slot, then with
/// V = P cap C^n if that fails the postcondition F H_+ = P (to 1e-9).
/// Throws NumericError if neither convention reproduces P.
UnitonFactorization uniton_factorize(const NumericPlane& P);

Mat projector(const Mat& V, int n);
/// pi_V + lambda pi_{V^perp} evaluated at lambda.
Mat factor_at(const Mat& V, int n, cplx lambda);
/// F(lambda) as a product of evaluated factors.
Mat evaluate_loop(const UnitonFactorization& F, cplx lambda);
/// Coefficients F_0..F_k of F(lambda) as a polynomial in lambda.
std::vector<Mat> loop_coefficients(const UnitonFactorization& F);
/// Coefficients of a lambda-polynomial of degree < m from its values at the
/// m-th roots of unity (discrete Fourier inversion).
std::vector<Mat> coefficients_from_samples(const std::vector<Mat>& samples);
/// F H_+ mod lambda^k for a lambda-polynomial loop given by coefficients.
NumericPlane plane_of_loop(const std::vector<Mat>& coeffs, int n, int k);

/// phi = F(-1) = prod_i (pi_{V_i} - pi_{V_i^perp}).
Mat phi_at(const UnitonFactorization& F);
/// evaluate_plane, uniton_factorize and phi_at in one step.
Mat phi_from_plane(const grassmann::PlaneFamily& W, cplx z0);

/// pi_L - pi_{L^perp} for L = ([f] + ... + [f^{(i)}]) minus ([f] + ... + [f^{(i-1)}]) at z0.
Mat eells_wood(const std::vector<exactalg::RationalFunction>& f, int i, cplx z0);

double unitarity_defect(const Mat& U);

/// phi on the square grid center + h (a + i b), -m <= a, b <= m; row-major in b then a.
struct HarmonicSample {
  cplx center;
  double h = 0;
  int half_width = 0;  // m
  std::vector<Mat> phi;

  int side() const { return 2 * half_width + 1; }
  cplx point(int a, int b) const { return center + h * cplx(a, b); }
  const Mat& at(int a, int b) const {
    return phi[static_cast<std::size_t>((b + half_width) * side() + (a + half_width))];
  }
};

HarmonicSample sample_harmonic(const std::function<Mat(cplx)>& phi, cplx center, double h, int half_width);

struct ResidualReport {
  double h = 0;
  double max_residual = 0;
  double mean_residual = 0;
};

/// Frobenius norm of (phi^{-1} phi_zbar)_z + (phi^{-1} phi_z)_zbar at interior
/// points, written as 2 phi^{-1} phi_{z zbar} - phi^{-1}(phi_z phi^{-1} phi_zbar +
/// phi_zbar phi^{-1} phi_z) with central differences. Throws InputError for
/// grids smaller than 3 x 3.
ResidualReport harmonic_residual(const HarmonicSample& s);

nlohmann::json to_json(const ResidualReport& r);
/// Header re_z,im_z,phi_{ab}_re,phi_{ab}_im,... with a, b one-based.
std::string to_csv(const HarmonicSample& s);

}  // namespace uniton::unitary
