#include "uniton/loopalg/rat_matrix.hpp"

#include <sstream>

#include "uniton/errors.hpp"

namespace uniton::loopalg {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 1 || cols < 1) throw InputError("matrix dimensions must be positive");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<RationalFunction>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<RationalFunction>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("empty matrix");
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols_)
      throw InputError("ragged matrix rows");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (!square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) return false;
  return true;
}

bool RatMatrix::is_constant() const {
  for (const auto& x : e_)
    if (!x.is_constant()) return false;
  return true;
}

RatMatrix RatMatrix::derivative() const {
  RatMatrix d = *this;
  for (auto& x : d.e_) x = x.derivative();
  return d;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const RationalFunction& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in *");
  RatMatrix p(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const RationalFunction& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        const RationalFunction& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
  int n = rows_;
  RatMatrix a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    RationalFunction s = a(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      a(col, c) *= s;
      inv(col, c) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      RationalFunction f = a(r, col);
      for (int c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalFunction RatMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = rows_;
  RatMatrix a = *this;
  RationalFunction det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    RationalFunction s = a(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      RationalFunction f = a(r, col) * s;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

int RatMatrix::rank() const {
  RatMatrix a = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(a(piv, c), a(rank, c));
    RationalFunction s = a(rank, col).inverse();
    for (int r = rank + 1; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      RationalFunction f = a(r, col) * s;
      for (int c = col; c < cols_; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

nlohmann::json to_json(const RatMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("matrix JSON must be an array of rows");
  std::vector<std::vector<RationalFunction>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<RationalFunction> r;
    for (const auto& x : row) r.push_back(exactalg::rational_function_from_json(x));
    rows.push_back(std::move(r));
  }
  return RatMatrix::from_rows(rows);
}

RatMatrix unit_matrix(int n, int r, int c, const RationalFunction& value) {
  RatMatrix m(n, n);
  m(r, c) = value;
  return m;
}

}  // namespace uniton::loopalg
