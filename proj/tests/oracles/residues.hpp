#pragma once

// Independent check for the integration obstruction: a rational function has
// a rational antiderivative iff every residue vanishes. Roots of the
// denominator come from Durand-Kerner at 50 digits; each residue (summed over a
// root cluster) is a trapezoid contour integral on a circle that stays well
// away from every other cluster.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "uniton/exactalg/rational_function.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Cx = boost::multiprecision::cpp_complex_50;

inline Real to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

inline std::vector<Cx> coeffs(const uniton::exactalg::Polynomial& p) {
  std::vector<Cx> out;
  for (const auto& c : p.coeffs()) out.emplace_back(to_real(c.re()), to_real(c.im()));
  return out;
}

inline Cx horner(const std::vector<Cx>& c, const Cx& x) {
  Cx acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<Cx> durand_kerner(std::vector<Cx> c) {
  int n = static_cast<int>(c.size()) - 1;
  Cx lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<Cx> r(n);
  Cx seed(Real("0.4"), Real("0.9"));
  Cx w(1);
  for (int i = 0; i < n; ++i) {
    r[i] = w;
    w *= seed;
  }
  for (int it = 0; it < 3000; ++it) {
    Real moved = 0;
    for (int i = 0; i < n; ++i) {
      Cx d(1);
      for (int j = 0; j < n; ++j)
        if (j != i) d *= r[i] - r[j];
      if (abs(d) == 0) d = Cx(Real("1e-40"));
      Cx step = horner(c, r[i]) / d;
      r[i] -= step;
      moved = std::max<Real>(moved, abs(step));
    }
    if (moved < Real("1e-45")) break;
  }
  return r;
}

/// Residue sums of f at each pole cluster.
inline std::vector<Cx> residues(const uniton::exactalg::RationalFunction& f) {
  std::vector<Cx> out;
  if (f.den().degree() <= 0) return out;
  auto num = coeffs(f.num());
  auto den = coeffs(f.den());
  auto roots = durand_kerner(den);

  std::vector<std::vector<Cx>> clusters;
  for (const auto& r : roots) {
    bool placed = false;
    for (auto& cl : clusters) {
      if (abs(cl.front() - r) < Real("1e-6")) {
        cl.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({r});
  }
  const Real pi = boost::math::constants::pi<Real>();
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    Cx centre(0);
    for (const auto& r : clusters[a]) centre += r;
    centre /= Real(clusters[a].size());
    Real gap = 4;
    for (std::size_t b = 0; b < clusters.size(); ++b)
      if (b != a) gap = std::min<Real>(gap, abs(clusters[b].front() - centre));
    Real radius = gap / 2;
    const int m = 256;
    Cx acc(0);
    for (int k = 0; k < m; ++k) {
      Real th = 2 * pi * k / m;
      Cx e(cos(th), sin(th));
      Cx zk = centre + radius * e;
      // (1/2 pi i) * integral f dz with dz = i r e dtheta
      acc += horner(num, zk) / horner(den, zk) * radius * e;
    }
    out.push_back(acc / Real(m));
  }
  return out;
}

inline bool has_rational_antiderivative(const uniton::exactalg::RationalFunction& f) {
  for (const auto& r : residues(f))
    if (abs(r) > Real("1e-30")) return false;
  return true;
}

}  // namespace oracle
