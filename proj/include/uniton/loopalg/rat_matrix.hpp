#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uniton/exactalg/rational_function.hpp"

namespace uniton::loopalg {

using exactalg::GaussianRational;
using exactalg::Polynomial;
using exactalg::RationalFunction;

/// Dense matrix over Q(i)(z), row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<RationalFunction>& d);
  /// Builds from nested rows; throws InputError for ragged or empty input.
  static RatMatrix from_rows(const std::vector<std::vector<RationalFunction>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  RationalFunction& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
  const RationalFunction& operator()(int r, int c) const {
    return e_[static_cast<std::size_t>(r * cols_ + c)];
  }

  bool is_zero() const;
  bool is_identity() const;
  /// True when every entry is a constant (z-independent).
  bool is_constant() const;

  RatMatrix derivative() const;
  RatMatrix transpose() const;

  RatMatrix operator-() const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const RationalFunction& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const RationalFunction& s) { return a *= s; }
  friend RatMatrix operator*(const RationalFunction& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  /// Gauss-Jordan inverse; nullopt when singular over Q(i)(z).
  std::optional<RatMatrix> inverse() const;
  RationalFunction determinant() const;
  /// Rank over Q(i)(z).
  int rank() const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RationalFunction> e_;
};

/// Rows of rational-function strings.
nlohmann::json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

/// Elementary matrix with a single entry value at (r, c).
RatMatrix unit_matrix(int n, int r, int c, const RationalFunction& value = 1);

}  // namespace uniton::loopalg
