#pragma once

#include <string>
#include <vector>

#include "uniton/loopalg/loop_product.hpp"

namespace uniton::canonical {

using loopalg::RatMatrix;

/// Schubert symbol v = (v_1, ..., v_n): v_1 >= ... >= v_n = 0 with unit or
/// zero steps. k = v_1 bounds the uniton number.
class UnitonType {
 public:
  /// Throws InputError unless v is a valid type.
  explicit UnitonType(std::vector<int> v);
  /// Parses "2,1,0".
  static UnitonType parse(const std::string& text);

  int n() const { return static_cast<int>(v_.size()); }
  int k() const { return v_.front(); }
  const std::vector<int>& v() const { return v_; }
  /// a_j = #{i : v_i = k - j}, j = 0..k.
  const std::vector<int>& multiplicities() const { return a_; }
  /// Block index of coordinate i: k - v_i (0 for the lambda^k block).
  int block(int i) const { return k() - v_[static_cast<std::size_t>(i)]; }

  /// gamma_v = diag(lambda^v_1, ..., lambda^v_n).
  loopalg::Factor gamma() const { return loopalg::make_diag(v_); }

  std::string str() const;
  friend bool operator==(const UnitonType& a, const UnitonType& b) { return a.v_ == b.v_; }

 private:
  std::vector<int> v_;
  std::vector<int> a_;
};

/// Membership in p^i_v: entry (r, c) is allowed iff block(c) - block(r) > i.
/// p^0_v is the strictly block upper triangular algebra.
bool profile_allows(const UnitonType& t, int level, int r, int c);
bool in_profile(const UnitonType& t, int level, const RatMatrix& m);
/// First entry of m outside p^level_v, or {-1,-1}.
std::pair<int, int> profile_violation(const UnitonType& t, int level, const RatMatrix& m);

/// All 2^{n-1} types, lexicographically descending.
std::vector<UnitonType> enumerate_types(int n);

}  // namespace uniton::canonical
