#include <doctest.h>

#include "uniton/canonical/canonical.hpp"
#include "uniton/errors.hpp"

using namespace uniton::canonical;
using uniton::InputError;
using uniton::exactalg::GaussianRational;
using uniton::exactalg::parse_rational_function;
using uniton::loopalg::ExtendedMode;
using uniton::loopalg::unit_matrix;
using uniton::loopalg::verify_extended;

namespace {

RationalFunction rf(const char* s) { return parse_rational_function(s); }

RatMatrix b1_210(const char* a, const char* b, const char* c) {
  RatMatrix m(3, 3);
  m(0, 1) = rf(a);
  m(0, 2) = rf(b);
  m(1, 2) = rf(c);
  return m;
}

const RationalFunction kHalf(GaussianRational(mpq_class(1, 2)));

}  // namespace

TEST_CASE("type enumeration") {
  auto t3 = enumerate_types(3);
  REQUIRE(t3.size() == 4);
  CHECK(t3[0].v() == std::vector<int>{2, 1, 0});
  CHECK(t3[1].v() == std::vector<int>{1, 1, 0});
  CHECK(t3[2].v() == std::vector<int>{1, 0, 0});
  CHECK(t3[3].v() == std::vector<int>{0, 0, 0});
  CHECK(enumerate_types(1).size() == 1);
  CHECK(enumerate_types(1)[0].v() == std::vector<int>{0});
  auto t4 = enumerate_types(4);
  CHECK(t4.size() == 8);
  CHECK(t4.front().v() == std::vector<int>{3, 2, 1, 0});
  CHECK(t4.back().v() == std::vector<int>{0, 0, 0, 0});
  for (int n = 1; n <= 7; ++n) {
    auto ts = enumerate_types(n);
    CHECK(ts.size() == (1u << (n - 1)));
    for (const auto& t : ts) {
      int total = 0;
      for (int a : t.multiplicities()) total += a;
      CHECK(total == n);
      CHECK(t.v().back() == 0);
    }
  }
  CHECK_THROWS_AS(UnitonType({2, 0, 0}), InputError);
  CHECK_THROWS_AS(UnitonType({1, 1}), InputError);
  CHECK_THROWS_AS(UnitonType::parse("2,x,0"), InputError);
  CHECK(UnitonType::parse("2,1,1,0").multiplicities() == std::vector<int>{1, 2, 1});
}

TEST_CASE("block profiles") {
  UnitonType t({2, 1, 1, 0});
  CHECK(profile_allows(t, 0, 0, 1));
  CHECK(profile_allows(t, 0, 1, 3));
  CHECK_FALSE(profile_allows(t, 0, 1, 2));
  CHECK_FALSE(profile_allows(t, 1, 0, 1));
  CHECK(profile_allows(t, 1, 0, 3));
  CHECK_FALSE(profile_allows(t, 2, 0, 3));
}

TEST_CASE("solve_canonical: d = z^3/6") {
  UnitonType t({2, 1, 0});
  auto res = solve_canonical(t, b1_210("z", "0", "z^2"));
  REQUIRE(std::holds_alternative<CanonicalPotential>(res));
  const auto& pot = std::get<CanonicalPotential>(res);
  REQUIRE(pot.B.size() == 2);
  RationalFunction d = pot.B[1](0, 2);
  // oracle: d' = (a c' - a' c)/2 by differentiation
  RationalFunction a = rf("z"), c = rf("z^2");
  CHECK(d.derivative() == kHalf * (a * c.derivative() - a.derivative() * c));
  CHECK(d == rf("z^3/6"));
  CHECK(pot.B[1] == unit_matrix(3, 0, 2, d));
}

TEST_CASE("solve_canonical: obstruction with residue at 0") {
  auto res = solve_canonical(UnitonType({2, 1, 0}), b1_210("1/z", "0", "z"));
  REQUIRE(std::holds_alternative<CanonicalObstruction>(res));
  const auto& obs = std::get<CanonicalObstruction>(res);
  CHECK(obs.level == 2);
  CHECK(obs.row == 0);
  CHECK(obs.col == 2);
  CHECK(obs.integrand == rf("1/z"));
  CHECK(obs.obstruction.remainder == rf("1/z"));
}

TEST_CASE("solve_canonical rejects B1 outside the profile") {
  RatMatrix bad(3, 3);
  bad(1, 0) = 1;
  CHECK_THROWS_AS(solve_canonical(UnitonType({2, 1, 0}), bad), InputError);
  RatMatrix bad2(3, 3);
  bad2(1, 2) = 1;
  CHECK_THROWS_AS(solve_canonical(UnitonType({1, 1, 0}), RatMatrix(4, 4)), InputError);
  CHECK_NOTHROW(solve_canonical(UnitonType({1, 1, 0}), bad2));
  CHECK_THROWS_AS(solve_canonical(UnitonType({1, 1, 0}), unit_matrix(3, 0, 1)), InputError);
}

TEST_CASE("zero potential gives the identity") {
  auto pot = std::get<CanonicalPotential>(solve_canonical(UnitonType({2, 1, 0}), RatMatrix(3, 3)));
  CHECK(pot.full().is_zero());
  CHECK(build_H(pot).expand().is_identity());
  CHECK(to_big_cell(pot).C.is_zero());
}

TEST_CASE("canonical contract on random polynomial data") {
  std::mt19937_64 rng(1729);
  for (int n : {3, 4, 5}) {
    for (const auto& t : enumerate_types(n)) {
      if (t.k() < 2 && n > 3) continue;
      int reps = n == 5 ? 1 : 3;
      for (int rep = 0; rep < reps; ++rep) {
        RatMatrix B1 = random_B1(t, rng, 3);
        auto res = solve_canonical(t, B1);
        REQUIRE(std::holds_alternative<CanonicalPotential>(res));
        const auto& pot = std::get<CanonicalPotential>(res);
        for (std::size_t i = 0; i < pot.B.size(); ++i) CHECK(in_profile(t, static_cast<int>(i), pot.B[i]));
        auto rep_n = verify_extended(build_H(pot), ExtendedMode::Normalized);
        CHECK(rep_n.accepted);
        CHECK(rep_n.A == B1.derivative());
        if (pot.B.size() >= 2) {
          // first recursion step
          CHECK(pot.B[1].derivative() == kHalf * (B1 * B1.derivative() - B1.derivative() * B1));
        }
      }
    }
  }
}

TEST_CASE("big cell form") {
  RationalFunction a = rf("z+1"), b = rf("2*z"), c = rf("z^2");
  auto pot = std::get<CanonicalPotential>(solve_canonical(UnitonType({2, 1, 0}), b1_210("z+1", "2*z", "z^2")));
  RationalFunction d = pot.B[1](0, 2);
  BigCell bc = to_big_cell(pot);
  RatMatrix C0(3, 3), C1(3, 3);
  C0(0, 1) = a;
  C0(0, 2) = d;
  C0(1, 2) = c;
  C1(0, 2) = b;
  CHECK(bc.C.coeff(0) == C0);
  CHECK(bc.C.coeff(1) == C1);
  CHECK(bc.C.support() == std::vector<int>{0, 1});
  // gamma^{-1} exp C gamma = exp B
  auto g = LaurentMatrix::diagonal_hom({2, 1, 0});
  auto ginv = LaurentMatrix::diagonal_hom({-2, -1, 0});
  CHECK(ginv * uniton::loopalg::nilpotent_exp(bc.C) * g == build_H(pot).expand());
  CHECK(verify_extended(bc.loop(), ExtendedMode::General).accepted);

  std::mt19937_64 rng(99);
  for (const auto& t : enumerate_types(4)) {
    auto p = std::get<CanonicalPotential>(solve_canonical(t, random_B1(t, rng, 2)));
    BigCell cell = to_big_cell(p);
    for (const auto& [pw, m] : cell.C.coeffs()) {
      CHECK(pw >= 0);
      CHECK(pw <= t.k() - 1);
      CHECK(in_profile(t, pw, m));
    }
    std::vector<int> neg;
    for (int x : t.v()) neg.push_back(-x);
    CHECK(LaurentMatrix::diagonal_hom(neg) * uniton::loopalg::nilpotent_exp(cell.C) *
              LaurentMatrix::diagonal_hom(t.v()) ==
          build_H(p).expand());
    CHECK(verify_extended(cell.loop(), ExtendedMode::General).accepted);
  }
}

TEST_CASE("S1 invariance") {
  std::vector<int> v{2, 1, 0};
  CHECK(s1_invariance_check(LoopProduct::identity(3), {0, 0, 0}));
  // C = C0 only: b = 0
  auto pot0 = std::get<CanonicalPotential>(solve_canonical(UnitonType(v), b1_210("z", "0", "z^2")));
  CHECK(to_big_cell(pot0).C.support() == std::vector<int>{0});
  CHECK(s1_invariance_check(to_big_cell(pot0).loop(), v));
  auto pot1 = std::get<CanonicalPotential>(solve_canonical(UnitonType(v), b1_210("z", "z-1", "z^2")));
  CHECK_FALSE(s1_invariance_check(to_big_cell(pot1).loop(), v));
}

TEST_CASE("integration constants act by dressing") {
  UnitonType t({2, 1, 0});
  RatMatrix B1 = b1_210("z^2", "z", "z^3-1");
  auto p0 = std::get<CanonicalPotential>(solve_canonical(t, B1));
  auto p1 = std::get<CanonicalPotential>(solve_canonical(t, B1, {unit_matrix(3, 0, 2, 5)}));
  auto D = build_H(p1).expand() * build_H(p0).expand_inverse();
  CHECK(D.is_z_independent());
  CHECK_FALSE(D.is_identity());

  UnitonType t4({3, 2, 1, 0});
  std::mt19937_64 rng(5);
  RatMatrix C1 = random_B1(t4, rng, 2);
  RatMatrix K2(4, 4), K3(4, 4);
  K2(0, 2) = 3;
  K2(1, 3) = -1;
  K3(0, 3) = 7;
  auto q0 = std::get<CanonicalPotential>(solve_canonical(t4, C1));
  auto q1 = std::get<CanonicalPotential>(solve_canonical(t4, C1, {K2, K3}));
  CHECK((build_H(q1).expand() * build_H(q0).expand_inverse()).is_z_independent());
  CHECK(verify_extended(build_H(q1), ExtendedMode::Normalized).accepted);
  CHECK_THROWS_AS(solve_canonical(t, B1, {unit_matrix(3, 0, 2, rf("z"))}), InputError);
}

TEST_CASE("projective space frames") {
  auto H = cpn_frame({rf("z^2"), rf("z"), 1}, 1);
  CHECK(verify_extended(H, ExtendedMode::General).accepted);
  for (int i = 0; i < 3; ++i) CHECK(verify_extended(cpn_frame({rf("z^2"), rf("z^3+1"), rf("z")}, i), ExtendedMode::General).accepted);
  CHECK_THROWS_AS(cpn_frame({rf("z"), rf("2*z")}, 0), InputError);
  CHECK_THROWS_AS(cpn_frame({rf("z"), 1}, 2), InputError);

  // n = 2, i = 0 agrees with exp((1/l) [[0,p],[0,0]]) up to dressing and gauge
  RationalFunction p = rf("z^3-2*z");
  LoopProduct H9(2, {uniton::loopalg::make_exp(LaurentMatrix(unit_matrix(2, 0, 1, p), -1))});
  auto lhs = uniton::loopalg::dressing(LoopProduct(2, {uniton::loopalg::make_diag({-2, -1})}), cpn_frame({p, 1}, 0));
  auto rhs = uniton::loopalg::gauge(H9, LoopProduct(2, {uniton::loopalg::make_const(RatMatrix::diagonal({p.derivative(), 1}))}));
  CHECK(lhs.expand() == rhs.expand());
}

TEST_CASE("uniton bound table") {
  const auto& rows = bound_table();
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].group == "SU_n");
  CHECK(rows[0].bound == "n-1");
  CHECK(rows[8].group == "E_8");
  CHECK(rows[8].bound == "29");
  CHECK(uniton_bound("SU_4") == 3);
  CHECK(uniton_bound("E8") == 29);
  CHECK(uniton_bound("U_1") == 0);
  CHECK(uniton_bound("SO_7") == 5);
  CHECK(uniton_bound("SO_8") == 5);
  CHECK(uniton_bound("Sp_3") == 5);
  CHECK(uniton_bound("G2") == 5);
  CHECK(uniton_bound("F_4") == 11);
  CHECK(uniton_bound("E_6") == 11);
  CHECK(uniton_bound("E_7") == 17);
  CHECK_THROWS_AS(uniton_bound("E_9"), InputError);
  CHECK_THROWS_AS(uniton_bound("Spin_7"), InputError);
}
