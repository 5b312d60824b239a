#include "uniton/deform/deform.hpp"

#include <algorithm>

#include "uniton/errors.hpp"

namespace uniton::deform {

using exactalg::Polynomial;
using grassmann::ModelSpace;
using grassmann::Vec;

namespace {

RationalFunction constant_part(const RationalFunction& p) { return RationalFunction(Polynomial(p.num().coeff(0))); }

RationalFunction scaled(const RationalFunction& p, const GaussianRational& s) {
  RationalFunction c = constant_part(p);
  return c + (p - c) * RationalFunction(s);
}

bool parallel(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
  return true;
}

}  // namespace

NormalForm NormalForm::from_alpha_beta(RationalFunction alpha, RationalFunction beta, RationalFunction delta) {
  RationalFunction da = alpha.derivative(), db = beta.derivative();
  RationalFunction gamma;
  if (db.is_zero()) {
    if (!da.is_zero()) throw InputError("alpha' must be a multiple of beta'; beta is constant but alpha is not");
  } else {
    gamma = da / db;
  }
  return {std::move(alpha), std::move(beta), std::move(delta), std::move(gamma)};
}

NormalForm NormalForm::from_potential(const canonical::CanonicalPotential& pot) {
  if (pot.type.v() != std::vector<int>{2, 1, 0}) throw InputError("the normal form needs type (2,1,0), got " + pot.type.str());
  const RatMatrix& B1 = pot.B[0];
  RationalFunction d = pot.B.size() > 1 ? pot.B[1](0, 2) : RationalFunction();
  return {d + B1(0, 1) * B1(1, 2) / RationalFunction(2), B1(1, 2), B1(0, 2), B1(0, 1)};
}

RatMatrix NormalForm::A0() const {
  RatMatrix A = RatMatrix::identity(3);
  A(0, 1) = gamma;
  A(0, 2) = alpha;
  A(1, 2) = beta;
  return A;
}

PlaneFamily NormalForm::plane() const {
  ModelSpace sp{3, 2};
  std::vector<RationalFunction> l{alpha, beta, 1}, n{gamma, 1, 0};
  Vec s = sp.at_power(l, 0);
  s[static_cast<std::size_t>(sp.slot(1, 0))] = delta;
  return PlaneFamily(sp, {s, sp.at_power(l, 1), sp.at_power(n, 1)});
}

GaussianRational DeformationPath::t(int j) const { return GaussianRational(mpq_class(j, m)); }

NormalForm DeformationPath::at(int j) const {
  GaussianRational s = GaussianRational(1) - t(j);
  return {scaled(start.alpha, s), scaled(start.beta, s), start.delta, start.gamma};
}

PlaneFamily DeformationPath::endpoint() const {
  return grassmann::apply_diagonal(grassmann::apply_constant(at(m).plane(), premultiplier), endpoint_diagonal);
}

DeformationPath lowering_path(const NormalForm& start, int m) {
  if (m < 1) throw InputError("the deformation grid needs m >= 1");
  if (start.delta.is_zero())
    throw InputError("delta vanishes identically; perturb delta to a function with |W| zeros before deforming");
  if (!start.alpha.is_polynomial() || !start.beta.is_polynomial())
    throw InputError("alpha and beta must be polynomials so their coefficients can be deformed");
  if (!(start.alpha.derivative() - start.gamma * start.beta.derivative()).is_zero())
    throw InputError("the data violate alpha' = gamma beta'");
  DeformationPath path{start, m, RatMatrix::identity(3), {}};
  NormalForm end = path.at(m);
  RatMatrix P = RatMatrix::identity(3);
  P(0, 2) = end.alpha;
  P(1, 2) = end.beta;
  if (start.gamma.is_constant()) {
    P(0, 1) = start.gamma;
    path.endpoint_diagonal = {-1, 0, 0};
  } else {
    path.endpoint_diagonal = {-1, -1, 0};
  }
  path.premultiplier = *P.inverse();
  return path;
}

int delta_zeros_in_domain(const NormalForm& d) {
  if (d.delta.is_zero()) return 0;
  Polynomial q = d.delta.num();
  for (const auto& f : {d.gamma, d.alpha, d.beta}) {
    for (;;) {
      Polynomial g = exactalg::gcd(q, f.den());
      if (g.is_constant()) break;
      q = exactalg::exact_div(q, g);
    }
  }
  int zeros = q.degree();
  int at_inf = d.delta.den().degree() - d.delta.num().degree();
  bool regular_at_inf = true;
  for (const auto& f : {d.gamma, d.alpha, d.beta})
    if (f.num().degree() > f.den().degree()) regular_at_inf = false;
  if (at_inf > 0 && regular_at_inf) zeros += at_inf;
  return zeros;
}

bool DeformationReport::degree_constant() const {
  return std::adjacent_find(degree.begin(), degree.end(), std::not_equal_to<>()) == degree.end();
}

bool DeformationReport::all_ces() const { return std::all_of(ces_ok.begin(), ces_ok.end(), [](bool b) { return b; }); }

bool DeformationReport::passed() const {
  return all_ces() && degree_constant() && endpoint_width == 1 && sandwich_lower && sandwich_upper;
}

DeformationReport verify_path(const DeformationPath& path) {
  DeformationReport r;
  for (int j = 0; j <= path.m; ++j) {
    PlaneFamily W = path.at(j).plane();
    r.t.push_back(path.t(j));
    r.ces_ok.push_back(grassmann::check_ces(W).accepted);
    r.degree.push_back(grassmann::pluecker_degree(W));
  }
  r.hypothesis = delta_zeros_in_domain(path.start) == r.degree.front();

  NormalForm end = path.at(path.m);
  PlaneFamily W1 = end.plane();
  ModelSpace sp = W1.space();
  std::vector<RationalFunction> l{end.alpha, end.beta, 1};
  r.sandwich_lower = W1.contains(sp.at_power(l, 1));
  r.sandwich_upper = std::all_of(W1.basis().begin(), W1.basis().end(), [&](const Vec& row) {
    return parallel({row[0], row[1], row[2]}, l);
  });
  try {
    r.endpoint_width = grassmann::uniton_width(path.endpoint());
  } catch (const InputError&) {
    r.endpoint_width = -1;
  }
  return r;
}

bool ConnectivityWitness::connected() const {
  return first.passed() && second.passed() && first.degree.front() == second.degree.front();
}

ConnectivityWitness connectivity_witness(const NormalForm& a, const NormalForm& b, int m) {
  return {verify_path(lowering_path(a, m)), verify_path(lowering_path(b, m))};
}

nlohmann::json to_json(const DeformationReport& r) {
  nlohmann::json t = nlohmann::json::array(), ces = nlohmann::json::array();
  for (const auto& x : r.t) t.push_back(x.str());
  for (bool b : r.ces_ok) ces.push_back(b);
  return {{"t", t},
          {"ces_ok", ces},
          {"degree", r.degree},
          {"endpoint", {{"width", r.endpoint_width}, {"sandwich", {r.sandwich_lower, r.sandwich_upper}}}},
          {"hypothesis", r.hypothesis},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const NormalForm& d) {
  return {{"alpha", d.alpha.str()}, {"beta", d.beta.str()}, {"delta", d.delta.str()}, {"gamma", d.gamma.str()}};
}

NormalForm normal_form_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("delta"))
    throw InputError("normal form data needs string fields alpha, beta, delta");
  auto get = [&](const char* key) {
    if (!j.at(key).is_string()) throw InputError(std::string("field ") + key + " must be a string");
    return exactalg::parse_rational_function(j.at(key).get<std::string>());
  };
  if (!j.contains("gamma")) return NormalForm::from_alpha_beta(get("alpha"), get("beta"), get("delta"));
  NormalForm d{get("alpha"), get("beta"), get("delta"), get("gamma")};
  if (!(d.alpha.derivative() - d.gamma * d.beta.derivative()).is_zero())
    throw InputError("the data violate alpha' = gamma beta'");
  return d;
}

}  // namespace uniton::deform
