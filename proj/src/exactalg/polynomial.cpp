#include "uniton/exactalg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "uniton/errors.hpp"

namespace uniton::exactalg {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial Polynomial::monomial(const GaussianRational& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return c_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  GaussianRational inv = leading().inverse();
  Polynomial p = *this;
  for (auto& c : p.c_) c *= inv;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<GaussianRational> a(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / GaussianRational(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const GaussianRational& c = c_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    // Real coefficients carry their sign as the term separator.
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussianRational mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    std::string var = d == 0 ? "" : (d == 1 ? "z" : "z^" + std::to_string(d));
    if (var.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << var;
    } else {
      os << mag.str() << '*' << var;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<GaussianRational> r = a.coeffs();
  std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  GaussianRational inv_lead = b.leading().inverse();
  bool monic = b.leading().is_one();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    GaussianRational& top = r[static_cast<std::size_t>(i + b.degree())];
    if (top.is_zero()) continue;
    GaussianRational f = monic ? top : top * inv_lead;
    q[static_cast<std::size_t>(i)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(i) + j] -= f * bc[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = 1, s1 = Polynomial();
  Polynomial t0 = Polynomial(), t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
  GaussianRational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<Polynomial, Polynomial> solve_bezout(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& c) {
  ExtendedGcd e = extended_gcd(a, b);
  Polynomial q = exact_div(c, e.g);
  Polynomial s = e.s * q;
  Polynomial t = e.t * q;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    auto [qq, rr] = divmod(s, b);
    s = rr;
    t += qq * a;
  }
  return {s, t};
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(fp, a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace uniton::exactalg
