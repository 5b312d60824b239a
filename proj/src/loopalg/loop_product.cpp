#include "uniton/loopalg/loop_product.hpp"

#include "uniton/errors.hpp"

namespace uniton::loopalg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_nilpotent(const LaurentMatrix& B) {
  LaurentMatrix p = B;
  for (int i = 1; i < B.n(); ++i) {
    if (p.is_zero()) return true;
    p = p * B;
  }
  return p.is_zero();
}

int factor_size(const Factor& f) {
  return std::visit(overloaded{[](const ExpNilpotent& e) { return e.B.n(); },
                               [](const DiagonalHom& d) { return static_cast<int>(d.exponents.size()); },
                               [](const ConstantInvertible& c) { return c.M.rows(); },
                               [](const Explicit& x) { return x.L.n(); }},
                    f);
}

LaurentMatrix factor_maurer_cartan(const Factor& f) {
  return std::visit(
      overloaded{[](const ExpNilpotent& e) { return nilpotent_exp(-e.B) * nilpotent_exp(e.B).derivative(); },
                 [](const DiagonalHom& d) { return LaurentMatrix(static_cast<int>(d.exponents.size())); },
                 [](const ConstantInvertible& c) { return LaurentMatrix(c.Minv * c.M.derivative()); },
                 [](const Explicit& x) { return x.Linv * x.L.derivative(); }},
      f);
}

/// Q^{-1} X Q for a single factor Q.
LaurentMatrix conjugate_by(const Factor& f, const LaurentMatrix& X) {
  if (X.is_zero()) return X;
  if (const auto* d = std::get_if<DiagonalHom>(&f)) {
    // entry (r,c) picks up lambda^{e_c - e_r}
    LaurentMatrix out(X.n());
    for (const auto& [p, m] : X.coeffs()) {
      for (int r = 0; r < X.n(); ++r) {
        for (int c = 0; c < X.n(); ++c) {
          if (m(r, c).is_zero()) continue;
          int q = p + d->exponents[static_cast<std::size_t>(c)] - d->exponents[static_cast<std::size_t>(r)];
          out += LaurentMatrix(unit_matrix(X.n(), r, c, m(r, c)), q);
        }
      }
    }
    return out;
  }
  return expand(inverse(f)) * X * expand(f);
}

bool factor_z_independent(const Factor& f) {
  return std::visit(overloaded{[](const ExpNilpotent& e) { return e.B.is_z_independent(); },
                               [](const DiagonalHom&) { return true; },
                               [](const ConstantInvertible& c) { return c.M.is_constant(); },
                               [](const Explicit& x) { return x.L.is_z_independent(); }},
                    f);
}

}  // namespace

Factor make_exp(const LaurentMatrix& B) {
  if (!is_nilpotent(B)) throw InputError("exp factor: B is not nilpotent (B^n != 0)");
  return ExpNilpotent{B};
}

Factor make_diag(std::vector<int> exponents) {
  if (exponents.empty()) throw InputError("diagonal homomorphism needs at least one exponent");
  return DiagonalHom{std::move(exponents)};
}

Factor make_const(const RatMatrix& M) {
  if (!M.square()) throw InputError("constant factor must be square");
  auto inv = M.inverse();
  if (!inv) throw InputError("constant factor is singular");
  return ConstantInvertible{M, *inv};
}

Factor make_explicit(const LaurentMatrix& L, const LaurentMatrix& Linv) {
  if (L.n() != Linv.n()) throw InputError("explicit factor and inverse differ in size");
  if (!(L * Linv).is_identity() || !(Linv * L).is_identity())
    throw InputError("explicit factor: supplied inverse does not multiply to the identity");
  return Explicit{L, Linv};
}

LaurentMatrix expand(const Factor& f) {
  return std::visit(overloaded{[](const ExpNilpotent& e) { return nilpotent_exp(e.B); },
                               [](const DiagonalHom& d) { return LaurentMatrix::diagonal_hom(d.exponents); },
                               [](const ConstantInvertible& c) { return LaurentMatrix(c.M); },
                               [](const Explicit& x) { return x.L; }},
                    f);
}

Factor inverse(const Factor& f) {
  return std::visit(overloaded{[](const ExpNilpotent& e) -> Factor { return ExpNilpotent{-e.B}; },
                               [](const DiagonalHom& d) -> Factor {
                                 std::vector<int> e = d.exponents;
                                 for (auto& x : e) x = -x;
                                 return DiagonalHom{e};
                               },
                               [](const ConstantInvertible& c) -> Factor { return ConstantInvertible{c.Minv, c.M}; },
                               [](const Explicit& x) -> Factor { return Explicit{x.Linv, x.L}; }},
                    f);
}

LoopProduct::LoopProduct(int n, std::vector<Factor> factors) : n_(n) {
  for (auto& f : factors) append(std::move(f));
}

LoopProduct& LoopProduct::append(Factor f) {
  if (factor_size(f) != n_) throw InputError("factor size does not match loop size");
  f_.push_back(std::move(f));
  return *this;
}

LoopProduct& LoopProduct::prepend(Factor f) {
  if (factor_size(f) != n_) throw InputError("factor size does not match loop size");
  f_.insert(f_.begin(), std::move(f));
  return *this;
}

LoopProduct LoopProduct::then(const LoopProduct& other) const {
  LoopProduct out = *this;
  for (const auto& f : other.f_) out.append(f);
  return out;
}

LaurentMatrix LoopProduct::expand() const {
  LaurentMatrix acc = LaurentMatrix::identity(n_);
  for (const auto& f : f_) acc = acc * loopalg::expand(f);
  return acc;
}

LaurentMatrix LoopProduct::expand_inverse() const { return inverse().expand(); }

LoopProduct LoopProduct::inverse() const {
  LoopProduct out(n_);
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) out.f_.push_back(loopalg::inverse(*it));
  return out;
}

bool LoopProduct::is_z_independent() const {
  for (const auto& f : f_)
    if (!factor_z_independent(f)) return false;
  return true;
}

LaurentMatrix nilpotent_exp(const LaurentMatrix& B) {
  int n = B.n();
  LaurentMatrix sum = LaurentMatrix::identity(n);
  LaurentMatrix term = LaurentMatrix::identity(n);
  mpz_class f = 1;
  for (int j = 1; j < n; ++j) {
    term = term * B;
    if (term.is_zero()) return sum;
    f *= j;
    sum += term * RationalFunction(GaussianRational(mpq_class(mpz_class(1), f)));
  }
  if (!(term * B).is_zero()) throw InputError("nilpotent_exp: B^n != 0");
  return sum;
}

LaurentMatrix dexp_series(const LaurentMatrix& B) {
  if (!is_nilpotent(B)) throw InputError("dexp_series: B is not nilpotent");
  LaurentMatrix term = B.derivative();
  LaurentMatrix sum = term;
  mpz_class f = 1;
  for (int m = 1; !term.is_zero(); ++m) {
    term = commutator(B, term);
    f *= m + 1;
    if (term.is_zero()) break;
    mpq_class c(mpz_class(m % 2 ? -1 : 1), f);
    c.canonicalize();
    sum += term * RationalFunction(GaussianRational(c));
  }
  return sum;
}

LaurentMatrix maurer_cartan(const LoopProduct& H) {
  LaurentMatrix acc(H.n());
  for (const auto& f : H.factors()) acc = conjugate_by(f, acc) + factor_maurer_cartan(f);
  return acc;
}

ExtendedReport verify_extended(const LoopProduct& H, ExtendedMode mode) {
  ExtendedReport r;
  r.mode = mode;
  r.maurer_cartan = maurer_cartan(H);
  for (int p : r.maurer_cartan.support()) {
    bool bad = mode == ExtendedMode::General ? p < -1 : p != -1;
    if (bad) r.offending_powers.push_back(p);
  }
  r.A = r.maurer_cartan.coeff(-1);
  r.accepted = r.offending_powers.empty();
  return r;
}

LoopProduct circle_action(const GaussianRational& alpha, const LoopProduct& H) {
  if (alpha.is_zero()) throw InputError("circle action needs a nonzero alpha");
  LoopProduct out(H.n());
  for (const auto& f : H.factors()) {
    std::visit(overloaded{[&](const ExpNilpotent& e) { out.append(ExpNilpotent{e.B.scale_lambda(alpha)}); },
                          [&](const DiagonalHom& d) {
                            // diag((alpha lambda)^e) = diag(alpha^e) diag(lambda^e)
                            std::vector<RationalFunction> s;
                            for (int e : d.exponents) s.emplace_back(alpha.pow(e));
                            out.append(make_const(RatMatrix::diagonal(s)));
                            out.append(d);
                          },
                          [&](const ConstantInvertible& c) { out.append(c); },
                          [&](const Explicit& x) {
                            out.append(Explicit{x.L.scale_lambda(alpha), x.Linv.scale_lambda(alpha)});
                          }},
               f);
  }
  return out;
}

LoopProduct dressing(const LoopProduct& gamma, const LoopProduct& H) {
  if (gamma.n() != H.n()) throw InputError("dressing loop has the wrong size");
  if (!gamma.is_z_independent()) throw InputError("dressing loop must be z-independent");
  return gamma.then(H);
}

LoopProduct gauge(const LoopProduct& H, const LoopProduct& M) {
  if (M.n() != H.n()) throw InputError("gauge loop has the wrong size");
  LaurentMatrix e = M.expand();
  if (!e.is_zero() && e.min_power() < 0)
    throw InputError("gauge loop has negative lambda powers (lowest " + std::to_string(e.min_power()) + ")");
  return H.then(M);
}

nlohmann::json to_json(const LoopProduct& H) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : H.factors()) {
    factors.push_back(std::visit(
        overloaded{[](const ExpNilpotent& e) -> nlohmann::json {
                     return {{"kind", "exp"}, {"coeffs", to_json(e.B)["coeffs"]}};
                   },
                   [](const DiagonalHom& d) -> nlohmann::json {
                     return {{"kind", "diag"}, {"exponents", d.exponents}};
                   },
                   [](const ConstantInvertible& c) -> nlohmann::json {
                     return {{"kind", "const"}, {"matrix", to_json(c.M)}, {"inverse", to_json(c.Minv)}};
                   },
                   [](const Explicit& x) -> nlohmann::json {
                     return {{"kind", "explicit"},
                             {"coeffs", to_json(x.L)["coeffs"]},
                             {"inverse", to_json(x.Linv)["coeffs"]}};
                   }},
        f));
  }
  return {{"n", H.n()}, {"factors", factors}};
}

LoopProduct loop_product_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("factors"))
    throw InputError("loop JSON needs 'n' and 'factors'");
  if (!j.at("n").is_number_integer() || j.at("n").get<int>() < 1) throw InputError("loop 'n' must be a positive integer");
  int n = j.at("n").get<int>();
  LoopProduct H(n);
  for (const auto& f : j.at("factors")) {
    std::string kind = f.value("kind", "");
    if (kind == "exp") {
      H.append(make_exp(laurent_matrix_from_json(f.at("coeffs"), n)));
    } else if (kind == "diag") {
      if (!f.contains("exponents") || !f.at("exponents").is_array())
        throw InputError("diag factor needs an 'exponents' array");
      H.append(make_diag(f.at("exponents").get<std::vector<int>>()));
    } else if (kind == "const") {
      RatMatrix M = rat_matrix_from_json(f.at("matrix"));
      Factor c = make_const(M);
      if (f.contains("inverse") && !(std::get<ConstantInvertible>(c).Minv == rat_matrix_from_json(f.at("inverse"))))
        throw InputError("const factor: stored inverse is wrong");
      H.append(std::move(c));
    } else if (kind == "explicit") {
      H.append(make_explicit(laurent_matrix_from_json(f.at("coeffs"), n),
                             laurent_matrix_from_json(f.at("inverse"), n)));
    } else {
      throw InputError("unknown factor kind '" + kind + "'");
    }
  }
  return H;
}

nlohmann::json to_json(const ExtendedReport& r) {
  return {{"accepted", r.accepted},
          {"mode", r.mode == ExtendedMode::General ? "general" : "normalized"},
          {"offending_powers", r.offending_powers},
          {"A", r.A.rows() > 0 ? to_json(r.A) : nlohmann::json()},
          {"maurer_cartan", to_json(r.maurer_cartan)}};
}

}  // namespace uniton::loopalg
