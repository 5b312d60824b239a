#include "uniton/unitary/unitary.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "uniton/errors.hpp"

namespace uniton::unitary {

namespace {

constexpr double kRankTol = 1e-8;
constexpr double kRoundtripTol = 1e-9;

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

Mat orthonormal_columns(const Mat& M, double tol) {
  if (M.cols() == 0 || M.rows() == 0) return Mat(M.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU);
  Eigen::Index r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > tol) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace

NumericPlane plane_from_columns(const Mat& M, int n, int k, double tol) {
  return {n, k, orthonormal_columns(M, tol)};
}

NumericPlane evaluate_plane(const grassmann::PlaneFamily& W, cplx z0) {
  int n = W.n(), k = W.k(), r = W.dim();
  Mat M(n * k, r);
  for (int j = 0; j < r; ++j) {
    const auto& row = W.basis()[static_cast<std::size_t>(j)];
    for (int s = 0; s < n * k; ++s) {
      const auto& x = row[static_cast<std::size_t>(s)];
      if (x.is_zero()) {
        M(s, j) = 0;
        continue;
      }
      cplx d = x.den().eval(z0);
      if (std::abs(d) < kRankTol)
        throw NumericError("z0 = " + fmt(z0) + " is a pole of basis vector " + std::to_string(j) + ", slot (" +
                           std::to_string(s / n) + "," + std::to_string(s % n) + "): " + x.str());
      M(s, j) = x.num().eval(z0) / d;
    }
    double nrm = M.col(j).norm();
    if (nrm > 0) M.col(j) /= nrm;
  }
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU);
  if (r > 0 && svd.singularValues()(r - 1) < kRankTol)
    throw NumericError("W(z0) loses rank at z0 = " + fmt(z0) + " (smallest pivot " +
                       std::to_string(svd.singularValues()(r - 1)) + ")");
  return {n, k, svd.matrixU().leftCols(r)};
}

double shift_invariance_residual(const NumericPlane& P) {
  int n = P.n, k = P.k;
  Mat NQ = Mat::Zero(n * k, P.dim());
  if (k > 1) NQ.bottomRows((k - 1) * n) = P.Q.topRows((k - 1) * n);
  Mat res = NQ - P.Q * (P.Q.adjoint() * NQ);
  return res.size() ? res.norm() : 0.0;
}

double plane_distance(const NumericPlane& a, const NumericPlane& b) {
  if (a.n != b.n || a.k != b.k || a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  if (a.Q.rows() == 0) return 0;
  Mat D = a.Q * a.Q.adjoint() - b.Q * b.Q.adjoint();
  if (D.size() == 0) return 0;
  return Eigen::JacobiSVD<Mat>(D).singularValues()(0);
}

std::string to_string(PeelConvention c) { return c == PeelConvention::ImageSide ? "image-side" : "kernel-side"; }

Mat projector(const Mat& V, int n) {
  if (V.cols() == 0) return Mat::Zero(n, n);
  return V * V.adjoint();
}

Mat factor_at(const Mat& V, int n, cplx lambda) {
  Mat p = projector(V, n);
  return p + lambda * (Mat::Identity(n, n) - p);
}

Mat evaluate_loop(const UnitonFactorization& F, cplx lambda) {
  Mat out = Mat::Identity(F.n, F.n);
  for (const auto& V : F.V) out = out * factor_at(V, F.n, lambda);
  return out;
}

std::vector<Mat> loop_coefficients(const UnitonFactorization& F) {
  int n = F.n;
  std::vector<Mat> c{Mat::Identity(n, n)};
  for (const auto& V : F.V) {
    Mat p = projector(V, n), q = Mat::Identity(n, n) - p;
    std::vector<Mat> next(c.size() + 1, Mat::Zero(n, n));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * p;
      next[j + 1] += c[j] * q;
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Mat> coefficients_from_samples(const std::vector<Mat>& samples) {
  std::size_t m = samples.size();
  if (m == 0) throw InputError("no samples");
  std::vector<Mat> out(m, Mat::Zero(samples[0].rows(), samples[0].cols()));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t t = 0; t < m; ++t) {
      double ang = -2 * std::numbers::pi * static_cast<double>(j * t) / static_cast<double>(m);
      out[j] += samples[t] * std::polar(1.0, ang);
    }
  for (auto& x : out) x /= static_cast<double>(m);
  return out;
}

NumericPlane plane_of_loop(const std::vector<Mat>& coeffs, int n, int k) {
  Mat M = Mat::Zero(n * k, n * k);
  for (int s = 0; s < k; ++s)
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      int row = static_cast<int>(p) + s;
      if (row >= k) break;
      M.block(row * n, s * n, n, n) = coeffs[p];
    }
  return plane_from_columns(M, n, k);
}

namespace {

// One division step P -> (pi_V + lambda^{-1} pi_{V^perp}) P, reduced mod lambda^{k-1}.
// Returns false if part of P would leave H_+.
bool peel_once(const NumericPlane& P, const Mat& V, NumericPlane& out) {
  int n = P.n, k = P.k;
  Mat p = projector(V, n), q = Mat::Identity(n, n) - p;
  if ((q * P.block(0)).norm() > 1e-7) return false;
  Mat M((k - 1) * n, P.dim());
  for (int i = 0; i + 1 < k; ++i) M.middleRows(i * n, n) = p * P.block(i) + q * P.block(i + 1);
  out = plane_from_columns(M, n, k - 1);
  return true;
}

Mat peel_subspace(const NumericPlane& P, PeelConvention c) {
  int n = P.n;
  if (c == PeelConvention::ImageSide) return orthonormal_columns(P.block(0), kRankTol);
  if (P.k == 1) return orthonormal_columns(P.block(0), kRankTol);
  // coefficient vectors whose higher slots vanish
  Mat upper = P.Q.bottomRows((P.k - 1) * n);
  Eigen::JacobiSVD<Mat> svd(upper, Eigen::ComputeFullV);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > kRankTol) ++rank;
  Mat null = svd.matrixV().rightCols(upper.cols() - rank);
  return orthonormal_columns(P.block(0) * null, kRankTol);
}

bool try_factorize(const NumericPlane& P0, PeelConvention c, UnitonFactorization& F) {
  F = UnitonFactorization{P0.n, {}, c, 0};
  NumericPlane P = P0;
  while (P.k > 0) {
    Mat V = peel_subspace(P, c);
    NumericPlane next;
    if (!peel_once(P, V, next)) return false;
    F.V.push_back(V);
    P = next;
  }
  F.roundtrip_error = plane_distance(plane_of_loop(loop_coefficients(F), P0.n, P0.k), P0);
  return F.roundtrip_error <= kRoundtripTol;
}

}  // namespace

UnitonFactorization uniton_factorize(const NumericPlane& P) {
  UnitonFactorization F;
  if (try_factorize(P, PeelConvention::ImageSide, F)) return F;
  double first = F.roundtrip_error;
  if (try_factorize(P, PeelConvention::KernelSide, F)) return F;
  throw NumericError("uniton factorization failed with both peeling conventions (roundtrip errors " +
                     std::to_string(first) + ", " + std::to_string(F.roundtrip_error) +
                     "); the plane is probably not an extended solution");
}

Mat phi_at(const UnitonFactorization& F) { return evaluate_loop(F, cplx(-1, 0)); }

Mat phi_from_plane(const grassmann::PlaneFamily& W, cplx z0) {
  return phi_at(uniton_factorize(evaluate_plane(W, z0)));
}

Mat eells_wood(const std::vector<exactalg::RationalFunction>& f, int i, cplx z0) {
  int n = static_cast<int>(f.size());
  if (i < 0 || i >= n) throw InputError("eells_wood needs 0 <= i < n");
  std::vector<exactalg::RationalFunction> d = f;
  std::vector<Eigen::VectorXcd> basis;
  Eigen::VectorXcd last;
  for (int j = 0; j <= i; ++j) {
    Eigen::VectorXcd v(n);
    for (int a = 0; a < n; ++a) {
      const auto& x = d[static_cast<std::size_t>(a)];
      cplx den = x.den().eval(z0);
      if (std::abs(den) < kRankTol) throw NumericError("z0 = " + fmt(z0) + " is a pole of f^(" + std::to_string(j) + ")");
      v(a) = x.num().eval(z0) / den;
    }
    double scale = v.norm();
    for (const auto& b : basis) v -= b * b.dot(v);
    if (v.norm() < kRankTol * std::max(1.0, scale))
      throw NumericError("f, ..., f^(" + std::to_string(j) + ") are dependent at z0 = " + fmt(z0));
    v.normalize();
    basis.push_back(v);
    last = v;
    for (auto& x : d) x = x.derivative();
  }
  Mat p = last * last.adjoint();
  return 2 * p - Mat::Identity(n, n);
}

double unitarity_defect(const Mat& U) { return (U.adjoint() * U - Mat::Identity(U.cols(), U.cols())).norm(); }

HarmonicSample sample_harmonic(const std::function<Mat(cplx)>& phi, cplx center, double h, int half_width) {
  if (half_width < 1) throw InputError("harmonic sample needs at least a 3 x 3 grid");
  HarmonicSample s{center, h, half_width, {}};
  for (int b = -half_width; b <= half_width; ++b)
    for (int a = -half_width; a <= half_width; ++a) s.phi.push_back(phi(s.point(a, b)));
  return s;
}

ResidualReport harmonic_residual(const HarmonicSample& s) {
  int m = s.half_width;
  if (m < 1 || static_cast<int>(s.phi.size()) != s.side() * s.side())
    throw InputError("harmonic residual needs a complete grid of at least 3 x 3 points");
  double h = s.h;
  ResidualReport rep{h, 0, 0};
  int count = 0;
  for (int b = -m + 1; b <= m - 1; ++b)
    for (int a = -m + 1; a <= m - 1; ++a) {
      const Mat& c = s.at(a, b);
      Mat dx = (s.at(a + 1, b) - s.at(a - 1, b)) / (2 * h);
      Mat dy = (s.at(a, b + 1) - s.at(a, b - 1)) / (2 * h);
      Mat lap = (s.at(a + 1, b) + s.at(a - 1, b) + s.at(a, b + 1) + s.at(a, b - 1) - 4.0 * c) / (h * h);
      const cplx I(0, 1);
      Mat dz = 0.5 * (dx - I * dy), dzb = 0.5 * (dx + I * dy);
      Mat inv = c.inverse();
      Mat r = 0.5 * inv * lap - inv * (dz * inv * dzb + dzb * inv * dz);
      double nr = r.norm();
      rep.max_residual = std::max(rep.max_residual, nr);
      rep.mean_residual += nr;
      ++count;
    }
  if (count) rep.mean_residual /= count;
  return rep;
}

nlohmann::json to_json(const ResidualReport& r) {
  return {{"h", r.h}, {"max_residual", r.max_residual}, {"mean_residual", r.mean_residual}};
}

std::string to_csv(const HarmonicSample& s) {
  std::ostringstream os;
  os.precision(12);
  if (s.phi.empty()) return "";
  auto n = s.phi.front().rows();
  os << "re_z,im_z";
  for (Eigen::Index a = 1; a <= n; ++a)
    for (Eigen::Index b = 1; b <= n; ++b) os << ",phi_" << a << b << "_re,phi_" << a << b << "_im";
  os << "\n";
  int m = s.half_width;
  for (int b = -m; b <= m; ++b)
    for (int a = -m; a <= m; ++a) {
      cplx z = s.point(a, b);
      os << z.real() << "," << z.imag();
      const Mat& p = s.at(a, b);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) os << "," << p(r, c).real() << "," << p(r, c).imag();
      os << "\n";
    }
  return os.str();
}

}  // namespace uniton::unitary
