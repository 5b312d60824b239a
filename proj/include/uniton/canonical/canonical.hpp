#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "uniton/canonical/uniton_type.hpp"

namespace uniton::canonical {

using exactalg::IntegrationObstruction;
using exactalg::RationalFunction;
using loopalg::LaurentMatrix;
using loopalg::LoopProduct;

/// B(z, lambda) = sum_{i=1..k} lambda^{-i} B_i(z) with B_i in p^{i-1}_v.
struct CanonicalPotential {
  UnitonType type;
  std::vector<RatMatrix> B;  // B[0] is B_1

  LaurentMatrix full() const;
};

/// Where the recursion hit a logarithm.
struct CanonicalObstruction {
  int level;  // i of the B_i being integrated
  int row;
  int col;
  RationalFunction integrand;
  IntegrationObstruction obstruction;

  std::string message() const;
};

using CanonicalResult = std::variant<CanonicalPotential, CanonicalObstruction>;

/// Solves the lambda^{-i} (i >= 2) equations of the d-exp series for
/// B_2..B_k with zero constants of integration. Throws InputError when B1
/// leaves p^0_v or has the wrong size.
CanonicalResult solve_canonical(const UnitonType& type, const RatMatrix& B1);

/// Same recursion with caller-chosen constants: constants[i-2] is added to
/// B_i after integration (it must lie in p^{i-1}_v and be z-independent).
CanonicalResult solve_canonical(const UnitonType& type, const RatMatrix& B1,
                                const std::vector<RatMatrix>& constants);

/// exp B as a single-factor loop.
LoopProduct build_H(const CanonicalPotential& pot);

struct BigCell {
  LaurentMatrix C;             // gamma_v B gamma_v^{-1}, powers 0..k-1
  std::vector<int> gamma;      // exponents of gamma_v
  /// (exp C) gamma_v, which equals gamma_v exp B.
  LoopProduct loop() const;
};

BigCell to_big_cell(const CanonicalPotential& pot);

/// True iff H(z, alpha*lambda) = H(z, lambda) gamma(alpha) identically in alpha.
bool s1_invariance_check(const LoopProduct& H, const std::vector<int>& gamma_exponents);

/// Frame [f^{(n-1)} ... f' f] diag(lambda^2,...,lambda^2, lambda, 1,...,1)
/// with n-i-1 entries lambda^2 and i entries 1. Throws InputError if the
/// Wronskian vanishes or i is out of range.
LoopProduct cpn_frame(const std::vector<RationalFunction>& f, int i);

struct BoundRow {
  std::string group;
  std::string bound;
};
/// The simple-group table, rows in printed order.
const std::vector<BoundRow>& bound_table();
/// Evaluates a concrete label such as "SU_4", "SO_7", "Sp_2", "E8", "U_1".
/// Throws InputError for unknown labels.
int uniton_bound(const std::string& label);

/// Random B_1 in p^0_v. Entries are polynomials of degree <= max_degree with
/// small integer coefficients; with poles = true each entry is divided by a
/// random linear factor.
RatMatrix random_B1(const UnitonType& type, std::mt19937_64& rng, int max_degree = 3, bool poles = false);

nlohmann::json to_json(const CanonicalPotential& pot);
/// Potentials as JSON: {"0,1":"z","1,2":"z^2"} keyed by zero-based matrix entry.
RatMatrix B1_from_json(const UnitonType& type, const nlohmann::json& j);

}  // namespace uniton::canonical
