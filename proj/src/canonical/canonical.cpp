#include "uniton/canonical/canonical.hpp"

#include <regex>

#include "uniton/errors.hpp"

namespace uniton::canonical {

using exactalg::GaussianRational;
using exactalg::Polynomial;
using loopalg::make_const;
using loopalg::make_diag;
using loopalg::make_exp;

LaurentMatrix CanonicalPotential::full() const {
  LaurentMatrix out(type.n());
  for (std::size_t i = 0; i < B.size(); ++i) out += LaurentMatrix(B[i], -static_cast<int>(i) - 1);
  return out;
}

std::string CanonicalObstruction::message() const {
  return "integration obstruction while solving B_" + std::to_string(level) + " entry (" +
         std::to_string(row) + "," + std::to_string(col) + "): integrand " + integrand.str() +
         " has nonvanishing residues; Hermite remainder " + obstruction.remainder.str() +
         ", residue locus den = " + obstruction.remainder.den().str();
}

CanonicalResult solve_canonical(const UnitonType& type, const RatMatrix& B1) {
  return solve_canonical(type, B1, {});
}

CanonicalResult solve_canonical(const UnitonType& type, const RatMatrix& B1,
                                const std::vector<RatMatrix>& constants) {
  int n = type.n(), k = type.k();
  auto bad = profile_violation(type, 0, B1);
  if (bad.first >= 0)
    throw InputError("B1 entry (" + std::to_string(bad.first) + "," + std::to_string(bad.second) +
                     ") lies outside the block profile of type " + type.str());
  for (std::size_t j = 0; j < constants.size(); ++j) {
    int level = static_cast<int>(j) + 2;
    if (!constants[j].is_constant() || !in_profile(type, level - 1, constants[j]))
      throw InputError("integration constant for B_" + std::to_string(level) + " must be constant and lie in p^" +
                       std::to_string(level - 1));
  }

  CanonicalPotential pot{type, {}};
  if (k == 0) return pot;
  pot.B.push_back(B1);
  LaurentMatrix B(B1, -1);
  for (int i = 2; i <= k; ++i) {
    RatMatrix R = loopalg::dexp_series(B).coeff(-i);
    if (!in_profile(type, i - 1, R))
      throw std::logic_error("recursion produced an integrand outside p^" + std::to_string(i - 1));
    RatMatrix Bi(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (R(r, c).is_zero()) continue;
        RationalFunction integrand = -R(r, c);
        auto res = exactalg::integrate(integrand);
        if (auto* obs = std::get_if<IntegrationObstruction>(&res))
          return CanonicalObstruction{i, r, c, integrand, *obs};
        Bi(r, c) = std::get<RationalFunction>(res);
      }
    }
    if (static_cast<std::size_t>(i - 2) < constants.size()) Bi += constants[static_cast<std::size_t>(i - 2)];
    pot.B.push_back(Bi);
    B += LaurentMatrix(Bi, -i);
  }
  return pot;
}

LoopProduct build_H(const CanonicalPotential& pot) {
  LoopProduct H(pot.type.n());
  LaurentMatrix B = pot.full();
  if (!B.is_zero()) H.append(make_exp(B));
  return H;
}

LoopProduct BigCell::loop() const {
  LoopProduct H(static_cast<int>(gamma.size()));
  if (!C.is_zero()) H.append(make_exp(C));
  H.append(make_diag(gamma));
  return H;
}

BigCell to_big_cell(const CanonicalPotential& pot) {
  const auto& v = pot.type.v();
  int n = pot.type.n();
  LaurentMatrix C(n);
  for (std::size_t i = 0; i < pot.B.size(); ++i) {
    int p = -static_cast<int>(i) - 1;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const auto& x = pot.B[i](r, c);
        if (x.is_zero()) continue;
        int q = p + v[static_cast<std::size_t>(r)] - v[static_cast<std::size_t>(c)];
        C += LaurentMatrix(loopalg::unit_matrix(n, r, c, x), q);
      }
    }
  }
  return {C, v};
}

bool s1_invariance_check(const LoopProduct& H, const std::vector<int>& gamma_exponents) {
  if (static_cast<int>(gamma_exponents.size()) != H.n()) throw InputError("gamma has the wrong size");
  LaurentMatrix E = H.expand();
  for (const auto& [j, m] : E.coeffs())
    for (int r = 0; r < H.n(); ++r)
      for (int c = 0; c < H.n(); ++c)
        if (!m(r, c).is_zero() && j != gamma_exponents[static_cast<std::size_t>(c)]) return false;
  return true;
}

LoopProduct cpn_frame(const std::vector<RationalFunction>& f, int i) {
  int n = static_cast<int>(f.size());
  if (n < 1) throw InputError("cpn_frame needs a nonempty vector");
  if (i < 0 || i > n - 1) throw InputError("cpn_frame index i must satisfy 0 <= i <= n-1");
  RatMatrix W(n, n);
  std::vector<RationalFunction> d = f;
  // column n-1-j holds f^{(j)}
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < n; ++r) W(r, n - 1 - j) = d[static_cast<std::size_t>(r)];
    for (auto& x : d) x = x.derivative();
  }
  if (W.determinant().is_zero())
    throw InputError("cpn_frame: f, f', ..., f^(n-1) are linearly dependent (Wronskian vanishes)");
  std::vector<int> e;
  for (int j = 0; j < n - i - 1; ++j) e.push_back(2);
  e.push_back(1);
  for (int j = 0; j < i; ++j) e.push_back(0);
  return LoopProduct(n, {make_const(W), make_diag(e)});
}

const std::vector<BoundRow>& bound_table() {
  static const std::vector<BoundRow> rows = {
      {"SU_n", "n-1"}, {"SO_{2n+1}", "2n-1"}, {"Sp_n", "2n-1"}, {"SO_{2n}", "2n-3"}, {"G_2", "5"},
      {"F_4", "11"},   {"E_6", "11"},         {"E_7", "17"},    {"E_8", "29"},
  };
  return rows;
}

int uniton_bound(const std::string& label) {
  static const std::regex re(R"(^\s*(SU|U|SO|Sp|G|F|E)_?\{?(\d+)\}?\s*$)");
  std::smatch m;
  if (!std::regex_match(label, m, re)) throw InputError("unknown group label '" + label + "'");
  std::string g = m[1].str();
  int d = std::stoi(m[2].str());
  if (g == "SU" || g == "U") {
    if (d < 1) throw InputError("group rank must be positive in '" + label + "'");
    return d - 1;
  }
  if (g == "Sp") {
    if (d < 1) throw InputError("group rank must be positive in '" + label + "'");
    return 2 * d - 1;
  }
  if (g == "SO") {
    if (d % 2 == 1) {
      if (d < 3) throw InputError("SO_{2n+1} needs n >= 1 in '" + label + "'");
      return 2 * ((d - 1) / 2) - 1;
    }
    if (d < 4) throw InputError("SO_{2n} needs n >= 2 in '" + label + "'");
    return 2 * (d / 2) - 3;
  }
  if (g == "G" && d == 2) return 5;
  if (g == "F" && d == 4) return 11;
  if (g == "E" && d == 6) return 11;
  if (g == "E" && d == 7) return 17;
  if (g == "E" && d == 8) return 29;
  throw InputError("unknown group label '" + label + "'");
}

RatMatrix random_B1(const UnitonType& type, std::mt19937_64& rng, int max_degree, bool poles) {
  int n = type.n();
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  RatMatrix B1(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!profile_allows(type, 0, r, c)) continue;
      std::vector<GaussianRational> cs;
      int d = deg(rng);
      for (int j = 0; j <= d; ++j) cs.emplace_back(coef(rng));
      if (cs.back().is_zero()) cs.back() = 1;
      Polynomial num(cs);
      if (poles) {
        Polynomial den(std::vector<GaussianRational>{GaussianRational(coef(rng)), GaussianRational(1)});
        B1(r, c) = RationalFunction(num, den);
      } else {
        B1(r, c) = RationalFunction(num);
      }
    }
  }
  return B1;
}

nlohmann::json to_json(const CanonicalPotential& pot) {
  nlohmann::json Bs = nlohmann::json::array();
  for (const auto& b : pot.B) Bs.push_back(loopalg::to_json(b));
  return {{"type", pot.type.v()}, {"B", Bs}};
}

RatMatrix B1_from_json(const UnitonType& type, const nlohmann::json& j) {
  if (j.is_array()) return loopalg::rat_matrix_from_json(j);
  if (!j.is_object()) throw InputError("B1 must be a matrix or an object keyed by \"r,c\"");
  RatMatrix B1(type.n(), type.n());
  static const std::regex key(R"(^\s*(\d+)\s*,\s*(\d+)\s*$)");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::smatch m;
    const std::string& k = it.key();
    if (!std::regex_match(k, m, key)) throw InputError("bad entry key '" + k + "'");
    int r = std::stoi(m[1].str()), c = std::stoi(m[2].str());
    if (r >= type.n() || c >= type.n()) throw InputError("entry key '" + k + "' out of range");
    B1(r, c) = exactalg::rational_function_from_json(it.value());
  }
  return B1;
}

}  // namespace uniton::canonical
