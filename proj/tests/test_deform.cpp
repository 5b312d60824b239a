#include <doctest.h>

#include <random>

#include "oracles/schubert.hpp"
#include "uniton/deform/deform.hpp"
#include "uniton/errors.hpp"

using namespace uniton::deform;
using uniton::InputError;
using uniton::canonical::CanonicalPotential;
using uniton::canonical::UnitonType;
using uniton::exactalg::parse_rational_function;
using uniton::grassmann::ModelSpace;
using uniton::grassmann::Vec;

namespace {

RationalFunction rf(const char* s) { return parse_rational_function(s); }

NormalForm data(const char* a, const char* b, const char* d) {
  return NormalForm::from_alpha_beta(rf(a), rf(b), rf(d));
}

int oracle_degree(const PlaneFamily& W) {
  auto c = oracle::schubert_count(W, uniton::grassmann::schubert_Z(UnitonType({2, 1, 0})));
  REQUIRE(c.has_value());
  return *c;
}

}  // namespace

TEST_CASE("normal form data") {
  auto d = data("z", "z^2", "z-2");
  CHECK(d.gamma == rf("1/(2*z)"));
  CHECK_THROWS_AS(data("z", "1", "z"), InputError);
  CHECK(data("4", "1", "z").gamma.is_zero());

  // the plane agrees with the canonical construction
  std::mt19937_64 rng(11);
  UnitonType t({2, 1, 0});
  for (int rep = 0; rep < 5; ++rep) {
    auto pot = std::get<CanonicalPotential>(uniton::canonical::solve_canonical(t, uniton::canonical::random_B1(t, rng, 2)));
    auto cd = NormalForm::from_potential(pot);
    uniton::loopalg::LoopProduct H(3, {uniton::loopalg::make_diag(t.v()), uniton::loopalg::make_exp(pot.full())});
    CHECK(cd.plane() == uniton::grassmann::model_from_loop(H, t));
    CHECK((cd.alpha.derivative() - cd.gamma * cd.beta.derivative()).is_zero());
  }
}

TEST_CASE("interpolation rule") {
  auto p = lowering_path(data("z", "z^2", "z-2"), 10);
  CHECK(p.at(0).alpha == rf("z"));
  CHECK(p.at(5).alpha == rf("z/2"));
  CHECK(p.at(5).beta == rf("z^2/2"));
  CHECK(p.at(10).alpha.is_zero());
  CHECK(p.at(10).beta.is_zero());
  for (int j = 0; j <= 10; ++j) {
    CHECK(p.at(j).delta == rf("z-2"));
    CHECK(p.at(j).gamma == rf("1/(2*z)"));
  }
  auto q = lowering_path(data("3+z^2", "1-z^2", "z"), 4);
  CHECK(q.at(1).alpha == rf("3+3*z^2/4"));
  CHECK(q.at(4).beta == rf("1"));

  auto c = lowering_path(data("3", "1", "z"), 5);
  for (int j = 0; j <= 5; ++j) CHECK(c.at(j).plane() == c.at(0).plane());
  auto r = verify_path(c);
  CHECK(r.passed());
  CHECK(r.degree == std::vector<int>(6, 1));

  CHECK_THROWS_AS(lowering_path(data("z", "z", "0"), 3), InputError);
  CHECK_THROWS_AS(lowering_path(data("1/z", "1/z", "z"), 3), InputError);
  CHECK_THROWS_AS(lowering_path(data("z", "z", "z"), 0), InputError);
}

TEST_CASE("endpoint has width one") {
  auto p = lowering_path(data("z", "z", "(z-1)*(z-2)"), 10);
  CHECK(p.endpoint_diagonal == std::vector<int>{-1, 0, 0});
  // after the constant loop the endpoint is (I + lambda delta E_13)(V_3 + lambda(V_3 + V_2))
  ModelSpace sp{3, 2};
  Vec x = sp.at_power({0, 0, 1}, 0);
  x[static_cast<std::size_t>(sp.slot(1, 0))] = rf("(z-1)*(z-2)");
  PlaneFamily expected(sp, {x, sp.at_power({0, 0, 1}, 1), sp.at_power({0, 1, 0}, 1)});
  CHECK(uniton::grassmann::apply_constant(p.at(10).plane(), p.premultiplier) == expected);
  PlaneFamily end = p.endpoint();
  CHECK(end == PlaneFamily(ModelSpace{3, 1}, {{rf("(z-1)*(z-2)"), 0, 1}}));
  CHECK(uniton::grassmann::uniton_width(end) == 1);
  CHECK(uniton::grassmann::pluecker_degree(end) == 2);

  auto r = verify_path(p);
  CHECK(r.hypothesis);
  CHECK(r.passed());
  CHECK(r.degree == std::vector<int>(11, 2));
  for (int j : {0, 3, 10}) CHECK(oracle_degree(p.at(j).plane()) == 2);
}

TEST_CASE("random polynomial data satisfying the zero hypothesis") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int rep = 0; rep < 40 && checked < 8; ++rep) {
    // beta linear keeps gamma constant; alpha = gamma beta + const
    int b1 = coef(rng), b0 = coef(rng), g = coef(rng), a0 = coef(rng);
    if (b1 == 0) continue;
    RationalFunction beta = RationalFunction(b1) * RationalFunction::z() + RationalFunction(b0);
    RationalFunction alpha = RationalFunction(g) * beta + RationalFunction(a0);
    RationalFunction delta = RationalFunction(1);
    int deg = 1 + rep % 3;
    for (int i = 0; i < deg; ++i) delta *= RationalFunction::z() - RationalFunction(coef(rng));
    auto d = NormalForm::from_alpha_beta(alpha, beta, delta);
    auto p = lowering_path(d, 6);
    auto r = verify_path(p);
    if (!r.hypothesis) continue;
    ++checked;
    CHECK(r.passed());
    CHECK(r.degree.front() == deg);
    CHECK(oracle_degree(p.at(0).plane()) == deg);
    CHECK(oracle_degree(p.at(6).plane()) == deg);
  }
  CHECK(checked >= 5);
}

TEST_CASE("zeros outside the domain") {
  // gamma = 1/(2z) has poles at 0 and alpha, beta at infinity
  auto d = data("z", "z^2", "(z-1)*(z-2)");
  CHECK(delta_zeros_in_domain(d) == 2);
  auto p = lowering_path(d, 10);
  CHECK(p.endpoint_diagonal == std::vector<int>{-1, -1, 0});
  auto r = verify_path(p);
  CHECK_FALSE(r.hypothesis);
  CHECK(r.all_ces());
  CHECK(r.endpoint_width == 1);
  CHECK(r.sandwich_lower);
  CHECK(r.sandwich_upper);
  // degree 4 = 2 zeros of delta + 2 from the poles; one unit escapes through infinity at t = 1
  for (int j = 0; j < 10; ++j) CHECK(r.degree[static_cast<std::size_t>(j)] == 4);
  CHECK(r.degree.back() == 3);
  CHECK(oracle_degree(p.at(0).plane()) == 4);
  CHECK(oracle_degree(p.at(10).plane()) == 3);
  CHECK_FALSE(r.degree_constant());
  CHECK_FALSE(r.passed());
}

TEST_CASE("connectivity witness") {
  auto a = data("z", "z", "(z-1)*(z-2)");
  auto b = data("2*z+1", "z+5", "z^2+3");
  auto c = data("1", "z", "z");
  auto w = connectivity_witness(a, b, 8);
  CHECK(w.connected());
  CHECK(w.first.degree.front() == 2);
  CHECK_FALSE(connectivity_witness(a, c, 8).connected());
}

TEST_CASE("json") {
  auto d = data("z", "z", "(z-1)*(z-2)");
  auto back = normal_form_from_json(to_json(d));
  CHECK(back.plane() == d.plane());
  auto noga = normal_form_from_json({{"alpha", "z^2"}, {"beta", "z^2"}, {"delta", "z"}});
  CHECK(noga.gamma == rf("1"));
  CHECK_THROWS_AS(normal_form_from_json({{"alpha", "z"}, {"beta", "z"}, {"delta", "z"}, {"gamma", "2"}}), InputError);
  CHECK_THROWS_AS(normal_form_from_json({{"alpha", "z"}}), InputError);

  auto j = to_json(verify_path(lowering_path(d, 2)));
  CHECK(j["t"] == nlohmann::json({"0", "1/2", "1"}));
  CHECK(j["ces_ok"] == nlohmann::json({true, true, true}));
  CHECK(j["degree"] == nlohmann::json({2, 2, 2}));
  CHECK(j["endpoint"]["width"] == 1);
  CHECK(j["endpoint"]["sandwich"] == nlohmann::json({true, true}));
}
