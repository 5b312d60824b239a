#include "uniton/loopalg/laurent_matrix.hpp"

#include <string>

#include "uniton/errors.hpp"

namespace uniton::loopalg {

LaurentMatrix::LaurentMatrix(const RatMatrix& m, int power) : n_(m.rows()) {
  if (!m.square()) throw std::invalid_argument("Laurent coefficients must be square");
  set_coeff(power, m);
}

LaurentMatrix LaurentMatrix::diagonal_hom(const std::vector<int>& exponents) {
  int n = static_cast<int>(exponents.size());
  LaurentMatrix out(n);
  for (int i = 0; i < n; ++i) {
    int p = exponents[static_cast<std::size_t>(i)];
    auto it = out.c_.find(p);
    if (it == out.c_.end()) it = out.c_.emplace(p, RatMatrix(n, n)).first;
    it->second(i, i) = 1;
  }
  return out;
}

RatMatrix LaurentMatrix::coeff(int p) const {
  auto it = c_.find(p);
  if (it == c_.end()) return RatMatrix(n_, n_);
  return it->second;
}

void LaurentMatrix::set_coeff(int p, const RatMatrix& m) {
  if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("coefficient size mismatch");
  if (m.is_zero()) {
    c_.erase(p);
  } else {
    c_[p] = m;
  }
}

bool LaurentMatrix::is_identity() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_identity();
}

bool LaurentMatrix::is_z_independent() const {
  for (const auto& [p, m] : c_)
    if (!m.is_constant()) return false;
  return true;
}

std::vector<int> LaurentMatrix::support() const {
  std::vector<int> s;
  for (const auto& [p, m] : c_) s.push_back(p);
  return s;
}

LaurentMatrix LaurentMatrix::derivative() const {
  LaurentMatrix d(n_);
  for (const auto& [p, m] : c_) d.set_coeff(p, m.derivative());
  return d;
}

LaurentMatrix LaurentMatrix::scale_lambda(const GaussianRational& alpha) const {
  LaurentMatrix out(n_);
  for (const auto& [p, m] : c_) out.set_coeff(p, m * RationalFunction(alpha.pow(p)));
  return out;
}

LaurentMatrix LaurentMatrix::shift(int s) const {
  LaurentMatrix out(n_);
  for (const auto& [p, m] : c_) out.c_.emplace(p + s, m);
  return out;
}

LaurentMatrix LaurentMatrix::truncate(int lo, int hi) const {
  LaurentMatrix out(n_);
  for (const auto& [p, m] : c_)
    if (p >= lo && p <= hi) out.c_.emplace(p, m);
  return out;
}

LaurentMatrix LaurentMatrix::operator-() const {
  LaurentMatrix out(n_);
  for (const auto& [p, m] : c_) out.c_.emplace(p, -m);
  return out;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("Laurent size mismatch in +");
  for (const auto& [p, m] : o.c_) {
    auto it = c_.find(p);
    if (it == c_.end()) {
      c_.emplace(p, m);
    } else {
      it->second += m;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) { return *this += -o; }

LaurentMatrix& LaurentMatrix::operator*=(const RationalFunction& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [p, m] : c_) m *= s;
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Laurent size mismatch in *");
  std::map<int, RatMatrix> acc;
  for (const auto& [p, x] : a.c_) {
    for (const auto& [q, y] : b.c_) {
      RatMatrix prod = x * y;
      auto it = acc.find(p + q);
      if (it == acc.end()) {
        acc.emplace(p + q, std::move(prod));
      } else {
        it->second += prod;
      }
    }
  }
  LaurentMatrix out(a.n_);
  for (auto& [p, m] : acc)
    if (!m.is_zero()) out.c_.emplace(p, std::move(m));
  return out;
}

std::map<int, RationalFunction> LaurentMatrix::entry(int r, int c) const {
  std::map<int, RationalFunction> out;
  for (const auto& [p, m] : c_)
    if (!m(r, c).is_zero()) out.emplace(p, m(r, c));
  return out;
}

LaurentMatrix commutator(const LaurentMatrix& a, const LaurentMatrix& b) { return a * b - b * a; }

nlohmann::json to_json(const LaurentMatrix& m) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [p, c] : m.coeffs()) coeffs[std::to_string(p)] = to_json(c);
  return {{"n", m.n()}, {"coeffs", coeffs}};
}

LaurentMatrix laurent_matrix_from_json(const nlohmann::json& j, int n) {
  const nlohmann::json* coeffs = &j;
  if (j.is_object() && j.contains("coeffs")) {
    coeffs = &j.at("coeffs");
    if (j.contains("n")) {
      int jn = j.at("n").get<int>();
      if (n != 0 && jn != n) throw InputError("Laurent matrix size disagrees with enclosing n");
      n = jn;
    }
  }
  if (!coeffs->is_object()) throw InputError("Laurent coefficients must be an object keyed by power");
  std::vector<std::pair<int, RatMatrix>> parsed;
  for (auto it = coeffs->begin(); it != coeffs->end(); ++it) {
    int p;
    try {
      std::size_t used = 0;
      p = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad lambda power key '" + it.key() + "'");
    }
    RatMatrix m = rat_matrix_from_json(it.value());
    if (!m.square()) throw InputError("Laurent coefficient must be square");
    if (n == 0) n = m.rows();
    if (m.rows() != n) throw InputError("Laurent coefficient has wrong size");
    parsed.emplace_back(p, std::move(m));
  }
  if (n <= 0) throw InputError("cannot infer size of an empty Laurent matrix");
  LaurentMatrix out(n);
  for (auto& [p, m] : parsed) out += LaurentMatrix(m, p);
  return out;
}

}  // namespace uniton::loopalg
