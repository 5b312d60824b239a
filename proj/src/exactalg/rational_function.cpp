#include "uniton/exactalg/rational_function.hpp"

#include <cctype>
#include <limits>
#include <regex>
#include <stdexcept>

#include "uniton/errors.hpp"

namespace uniton::exactalg {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  GaussianRational lc = den.leading();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

GaussianRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant rational function");
  return num_.coeff(0);
}

RationalFunction RationalFunction::derivative() const {
  if (den_.is_one()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial a = exact_div(o.den_, g);
  Polynomial b = exact_div(den_, g);
  *this = RationalFunction(num_ * a + o.num_ * b, den_ * a);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel first so the products stay small.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Polynomial d = exact_div(den_, g2) * exact_div(o.den_, g1);
  *this = RationalFunction(std::move(n), std::move(d));
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

GaussianRational RationalFunction::eval(const GaussianRational& x) const {
  GaussianRational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

IntegrationResult integrate(const RationalFunction& f) {
  if (f.is_zero()) return RationalFunction();
  auto [q, a] = divmod(f.num(), f.den());
  RationalFunction poly_part(q.antiderivative());
  if (a.is_zero()) return poly_part;

  // Hermite reduction on the proper part a/D.
  const Polynomial& D = f.den();
  RationalFunction g;
  Polynomial A = a;
  Polynomial Dm = gcd(D, D.derivative());
  Polynomial Ds = exact_div(D, Dm);
  while (Dm.degree() > 0) {
    Polynomial Dm2 = gcd(Dm, Dm.derivative());
    Polynomial Dms = exact_div(Dm, Dm2);
    Polynomial lhs = -exact_div(Ds * Dm.derivative(), Dm);
    auto [B, C] = solve_bezout(lhs, Dms, A);
    A = C - exact_div(B.derivative() * Ds, Dms);
    g += RationalFunction(B, Dm);
    Dm = Dm2;
  }
  if (!A.is_zero()) return IntegrationObstruction{RationalFunction(A, Ds)};
  return poly_part + g;
}

std::pair<int, int> sphere_degree_data(const RationalFunction& f) {
  if (f.is_zero()) throw InputError("degree data of the zero function");
  int d = std::max(f.num().degree(), f.den().degree());
  return {d, d};
}

RationalFunction derivative(const RationalFunction& f) { return f.derivative(); }

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse rational function '" + s_ + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (neg && base.is_zero()) fail("negative power of zero");
    return base.pow(neg ? -e : e);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      static const std::regex literal(
          R"(^\(\s*(?:([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)i|([+-]?\d+(?:/\d+)?)i)\s*\))");
      std::smatch m;
      auto it = s_.cbegin() + static_cast<std::ptrdiff_t>(pos_);
      if (std::regex_search(it, s_.cend(), m, literal)) {
        pos_ += static_cast<std::size_t>(m.length(0));
        if (m[4].matched) return GaussianRational(0, rational(m[4].str()));
        mpq_class im = rational(m[3].str());
        if (m[2].str() == "-") im = -im;
        return GaussianRational(rational(m[1].str()), im);
      }
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      return RationalFunction::z();
    }
    if (c == 'i') {
      ++pos_;
      return GaussianRational::i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        ++pos_;
        return GaussianRational(0, mpq_class(v));
      }
      return GaussianRational(mpq_class(v));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  static mpq_class rational(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    mpq_class q(t);
    if (q.get_den() == 0) throw InputError("zero denominator in literal '" + text + "'");
    q.canonicalize();
    return q;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

nlohmann::json int_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  throw InputError("expected integer (number or string) in rational function JSON");
}

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    out.push_back({int_to_json(c.re().get_num()), int_to_json(c.re().get_den()),
                   int_to_json(c.im().get_num()), int_to_json(c.im().get_den())});
  }
  return out;
}

Polynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial JSON must be an array");
  std::vector<GaussianRational> cs;
  for (const auto& c : j) {
    if (!c.is_array() || (c.size() != 4 && c.size() != 2))
      throw InputError("coefficient must be [re_num, re_den] or [re_num, re_den, im_num, im_den]");
    if (c.size() == 2) {
      cs.push_back(GaussianRational::from_fractions(int_from_json(c[0]), int_from_json(c[1])));
    } else {
      cs.push_back(GaussianRational::from_fractions(int_from_json(c[0]), int_from_json(c[1]),
                                                    int_from_json(c[2]), int_from_json(c[3])));
    }
  }
  return Polynomial(std::move(cs));
}

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  Parser p(text);
  try {
    return p.parse();
  } catch (const std::domain_error& e) {
    throw InputError("cannot parse rational function '" + text + "': " + e.what());
  }
}

nlohmann::json to_json(const RationalFunction& f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational_function(j.get<std::string>());
  if (j.is_number_integer()) return RationalFunction(j.get<long>());
  if (!j.is_object() || !j.contains("num")) throw InputError("rational function JSON needs 'num'");
  Polynomial num = poly_from_json(j.at("num"));
  Polynomial den = j.contains("den") ? poly_from_json(j.at("den")) : Polynomial(1);
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace uniton::exactalg
