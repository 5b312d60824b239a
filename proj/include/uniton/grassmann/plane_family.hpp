#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniton/canonical/canonical.hpp"

namespace uniton::grassmann {

using exactalg::RationalFunction;
using loopalg::LaurentMatrix;
using loopalg::LoopProduct;
using loopalg::RatMatrix;

/// A vector in C^{kn} = H_+/lambda^k H_+ with entries in Q(i)(z).
/// Slot (i, a) sits at index i*n + a.
using Vec = std::vector<RationalFunction>;

/// H_+/lambda^k H_+ with its shift operator N (multiplication by lambda).
struct ModelSpace {
  int n = 1;
  int k = 1;

  int dim() const { return n * k; }
  int slot(int power, int coord) const { return power * n + coord; }
  /// N v: slot i moves to slot i+1, the lambda^{k-1} slot is dropped.
  Vec shift(const Vec& v, int times = 1) const;
  Vec zero() const { return Vec(static_cast<std::size_t>(dim())); }
  /// Embeds a C^n vector at power p.
  Vec at_power(const std::vector<RationalFunction>& x, int p) const;
};

Vec derivative(const Vec& v);

/// W(z) mod lambda^k H_+, kept as a reduced row echelon basis over Q(i)(z).
/// Pivots sit on the lowest nonzero slot of each row and are 1, and rows are
/// ordered by pivot.
class PlaneFamily {
 public:
  PlaneFamily(ModelSpace space, const std::vector<Vec>& vectors);
  static PlaneFamily full(ModelSpace space);

  const ModelSpace& space() const { return space_; }
  int n() const { return space_.n; }
  int k() const { return space_.k; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residue of v after reduction by the basis (zero iff v is in W).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const PlaneFamily& other) const;
  friend bool operator==(const PlaneFamily& a, const PlaneFamily& b);

  /// Number of basis rows whose pivot lies at lambda^j.
  std::vector<int> graded_dims() const;

  std::string str() const;

 private:
  ModelSpace space_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

struct CesReport {
  bool accepted = true;
  int vector_index = -1;   // offending basis vector
  std::string which;       // "N s" or "N s'"
  std::string message() const;
};

/// lambda W' in W, checked as N s in W and N s' in W for every basis vector s.
CesReport check_ces(const PlaneFamily& W);

/// X + N X' + ... + N^{k-1} X^{(k-1)} where X^{(j)} is the span of the
/// derivatives of order <= j.
PlaneFamily generate_from_X(const std::vector<Vec>& X, ModelSpace space);

/// Frenet data for a row of the U_3 / U_4 tables. Vectors are C^n valued;
/// the number used depends on the row (l, m, n in order).
struct FrenetData {
  std::vector<int> row;
  std::vector<std::vector<RationalFunction>> vectors;
};
/// Truncation depth and number of vectors for a table row; throws InputError for unknown rows.
std::pair<int, int> frenet_row_shape(const std::vector<int>& row);
/// The X generators of a row (before derivative closure).
std::vector<Vec> frenet_X(const FrenetData& data);
PlaneFamily frenet(const FrenetData& data);
/// The ten rows of the U_3 and U_4 tables.
std::vector<std::vector<int>> frenet_rows();

/// W = (expand H) gamma_v H_+ mod lambda^k H_+, k = v_1. A trailing DiagonalHom
/// equal to gamma_v is treated as already applied. Throws InputError unless
/// lambda^k H_+ in W in H_+.
PlaneFamily model_from_loop(const LoopProduct& H, const canonical::UnitonType& type);

/// W = lambda^s L H_+ for L = expand(H), with s making L polynomial in lambda
/// and k read off from the inverse. Returns the shift s through the pointer.
PlaneFamily plane_from_frame(const LoopProduct& H, int* shift_out = nullptr);

/// X_0 = (A_0 + lambda A_1 + ...) E_0 as vectors of C^{kn}.
std::vector<Vec> extract_X0(const LoopProduct& H, const canonical::UnitonType& type);
/// pluecker_degree(W) == pluecker_degree(X_0). Holds when neither meets the
/// incidence subspace at z = infinity; fails in general.
bool x0_degree_matches(const LoopProduct& H, const canonical::UnitonType& type);

/// Echelon pieces X_0, X_1, ...: X_i collects the rows of the echelon form of X
/// whose lowest power is i, divided by lambda^i. X_i lives in ModelSpace(n, k-i).
std::vector<std::vector<Vec>> echelon_split(const std::vector<Vec>& X, ModelSpace space);

/// Type read off from graded dimensions, if those come from a valid type.
std::optional<canonical::UnitonType> infer_type(const PlaneFamily& W);

/// Plucker degree |W| of z -> W(z) viewed in P(Lambda^r C^{kn}).
/// Throws InputError for an empty basis.
int pluecker_degree(const PlaneFamily& W);
int pluecker_degree(const std::vector<Vec>& span, ModelSpace space);

/// Coordinate slots spanning the incidence test subspace Z for the given type.
std::vector<int> schubert_Z(const canonical::UnitonType& type);

/// Smallest k' with lambda^{s+k'} H_+ in W in lambda^s H_+.
int uniton_width(const PlaneFamily& W);

/// D W for D = diag(lambda^e); throws InputError if the image leaves H_+.
PlaneFamily apply_diagonal(const PlaneFamily& W, const std::vector<int>& e);
/// M W for a lambda-independent invertible M.
PlaneFamily apply_constant(const PlaneFamily& W, const RatMatrix& M);
/// Re-expresses W modulo lambda^{k'}; throws InputError when lambda^{k'} H_+ is not in W.
PlaneFamily retruncate(const PlaneFamily& W, int k_new);

nlohmann::json to_json(const PlaneFamily& W);
PlaneFamily plane_family_from_json(const nlohmann::json& j);

}  // namespace uniton::grassmann
