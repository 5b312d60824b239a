#include "uniton/grassmann/plane_family.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "uniton/errors.hpp"

namespace uniton::grassmann {

using exactalg::Polynomial;

Vec ModelSpace::shift(const Vec& v, int times) const {
  Vec out = zero();
  int off = times * n;
  for (int i = 0; i + off < dim(); ++i) out[static_cast<std::size_t>(i + off)] = v[static_cast<std::size_t>(i)];
  return out;
}

Vec ModelSpace::at_power(const std::vector<RationalFunction>& x, int p) const {
  if (static_cast<int>(x.size()) != n) throw InputError("vector has " + std::to_string(x.size()) +
                                                        " entries, expected " + std::to_string(n));
  Vec out = zero();
  if (p < k)
    for (int a = 0; a < n; ++a) out[static_cast<std::size_t>(slot(p, a))] = x[static_cast<std::size_t>(a)];
  return out;
}

Vec derivative(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.derivative());
  return out;
}

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

void axpy(Vec& y, const RationalFunction& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] -= a * x[i];
}

}  // namespace

PlaneFamily::PlaneFamily(ModelSpace space, const std::vector<Vec>& vectors) : space_(space) {
  if (space.n < 1 || space.k < 0) throw InputError("model space needs n >= 1 and k >= 0");
  int N = space.dim();
  std::vector<Vec> work;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != N)
      throw InputError("vector of length " + std::to_string(v.size()) + " in a model space of dimension " +
                       std::to_string(N));
    if (!is_zero(v)) work.push_back(v);
  }
  // Gauss-Jordan with columns in slot order
  std::size_t next = 0;
  for (int col = 0; col < N && next < work.size(); ++col) {
    std::size_t piv = work.size();
    for (std::size_t r = next; r < work.size(); ++r)
      if (!work[r][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
    if (piv == work.size()) continue;
    std::swap(work[next], work[piv]);
    Vec& row = work[next];
    RationalFunction inv = row[static_cast<std::size_t>(col)].inverse();
    for (auto& x : row)
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == next) continue;
      RationalFunction f = work[r][static_cast<std::size_t>(col)];
      if (!f.is_zero()) axpy(work[r], f, row);
    }
    pivots_.push_back(col);
    ++next;
  }
  work.resize(next);
  rows_ = std::move(work);
}

PlaneFamily PlaneFamily::full(ModelSpace space) {
  std::vector<Vec> vs;
  for (int i = 0; i < space.dim(); ++i) {
    Vec e = space.zero();
    e[static_cast<std::size_t>(i)] = 1;
    vs.push_back(e);
  }
  return PlaneFamily(space, vs);
}

Vec PlaneFamily::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != space_.dim()) throw InputError("vector length does not match the model space");
  Vec out = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    RationalFunction f = out[static_cast<std::size_t>(pivots_[i])];
    if (!f.is_zero()) axpy(out, f, rows_[i]);
  }
  return out;
}

bool PlaneFamily::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool PlaneFamily::contains(const PlaneFamily& other) const {
  if (other.n() != n() || other.k() != k()) throw InputError("plane families live in different model spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
}

bool operator==(const PlaneFamily& a, const PlaneFamily& b) {
  return a.n() == b.n() && a.k() == b.k() && a.rows_ == b.rows_;
}

std::vector<int> PlaneFamily::graded_dims() const {
  std::vector<int> g(static_cast<std::size_t>(k()), 0);
  for (int p : pivots_) ++g[static_cast<std::size_t>(p / n())];
  return g;
}

std::string PlaneFamily::str() const {
  std::ostringstream os;
  os << "W in C^" << space_.dim() << " (n=" << n() << ", k=" << k() << "), dim " << dim() << "\n";
  for (const auto& r : rows_) {
    os << "  [";
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << (i % static_cast<std::size_t>(n()) == 0 ? " | " : ", ");
      os << r[i].str();
    }
    os << "]\n";
  }
  return os.str();
}

std::string CesReport::message() const {
  if (accepted) return "lambda W' is contained in W";
  return "basis vector " + std::to_string(vector_index) + ": " + which + " is not in W";
}

CesReport check_ces(const PlaneFamily& W) {
  const auto& sp = W.space();
  for (std::size_t i = 0; i < W.basis().size(); ++i) {
    const Vec& s = W.basis()[i];
    if (!W.contains(sp.shift(s))) return {false, static_cast<int>(i), "N s"};
    if (!W.contains(sp.shift(derivative(s)))) return {false, static_cast<int>(i), "N s'"};
  }
  return {};
}

PlaneFamily generate_from_X(const std::vector<Vec>& X, ModelSpace space) {
  std::vector<Vec> gens;
  for (const auto& x : X) {
    std::vector<Vec> ders{x};
    for (int j = 1; j < space.k; ++j) ders.push_back(derivative(ders.back()));
    for (int j = 0; j < space.k; ++j)
      for (int m = 0; m <= j; ++m) gens.push_back(space.shift(ders[static_cast<std::size_t>(m)], j));
  }
  return PlaneFamily(space, gens);
}

std::vector<std::vector<int>> frenet_rows() {
  return {{2, 1, 0},    {1, 1, 0},    {1, 0, 0},    {3, 2, 1, 0}, {2, 2, 1, 0},
          {2, 1, 1, 0}, {2, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}};
}

std::pair<int, int> frenet_row_shape(const std::vector<int>& row) {
  static const std::map<std::vector<int>, std::pair<int, int>> shapes = {
      {{2, 1, 0}, {2, 2}},    {{1, 1, 0}, {1, 1}},    {{1, 0, 0}, {1, 2}},    {{3, 2, 1, 0}, {3, 3}},
      {{2, 2, 1, 0}, {2, 2}}, {{2, 1, 1, 0}, {2, 3}}, {{2, 1, 0, 0}, {2, 3}}, {{1, 1, 1, 0}, {1, 1}},
      {{1, 1, 0, 0}, {1, 2}}, {{1, 0, 0, 0}, {1, 3}},
  };
  auto it = shapes.find(row);
  if (it == shapes.end()) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    throw InputError("no Frenet table row (" + s + ")");
  }
  return it->second;
}

std::vector<Vec> frenet_X(const FrenetData& data) {
  auto [k, count] = frenet_row_shape(data.row);
  int n = static_cast<int>(data.row.size());
  if (static_cast<int>(data.vectors.size()) != count)
    throw InputError("row needs " + std::to_string(count) + " vectors, got " + std::to_string(data.vectors.size()));
  for (const auto& v : data.vectors)
    if (static_cast<int>(v.size()) != n)
      throw InputError("Frenet vectors must have " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  ModelSpace sp{n, k};
  const auto& l = data.vectors[0];
  auto at = [&](const std::vector<RationalFunction>& x, int p) { return sp.at_power(x, p); };
  auto add = [](Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  const auto& r = data.row;
  using V = std::vector<int>;
  if (r == V{2, 1, 0} || r == V{2, 2, 1, 0}) return {add(at(l, 0), at(data.vectors[1], 1))};
  if (r == V{3, 2, 1, 0}) return {add(add(at(l, 0), at(data.vectors[1], 1)), at(data.vectors[2], 2))};
  if (r == V{2, 1, 1, 0}) return {add(at(l, 0), at(data.vectors[1], 1)), at(data.vectors[2], 1)};
  if (r == V{2, 1, 0, 0}) {
    std::vector<RationalFunction> dl;
    for (const auto& x : l) dl.push_back(x.derivative());
    return {add(at(l, 0), at(data.vectors[1], 1)), add(at(dl, 0), at(data.vectors[2], 1))};
  }
  // k = 1 rows: X_0 spanned by the given vectors
  std::vector<Vec> X;
  for (const auto& v : data.vectors) X.push_back(at(v, 0));
  return X;
}

PlaneFamily frenet(const FrenetData& data) {
  auto [k, count] = frenet_row_shape(data.row);
  (void)count;
  return generate_from_X(frenet_X(data), ModelSpace{static_cast<int>(data.row.size()), k});
}

namespace {

// Columns lambda^i L e_c (c in cols, 0 <= i < shifts) of a lambda-polynomial L, cut at lambda^k.
std::vector<Vec> shifted_columns(const LaurentMatrix& L, ModelSpace sp, const std::vector<int>& cols, int shifts) {
  std::vector<Vec> out;
  for (int c : cols) {
    for (int i = 0; i < shifts; ++i) {
      Vec v = sp.zero();
      for (const auto& [p, m] : L.coeffs()) {
        if (p + i >= sp.k) continue;
        for (int r = 0; r < sp.n; ++r) v[static_cast<std::size_t>(sp.slot(p + i, r))] = m(r, c);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(-x);
  return out;
}

struct BigCellPart {
  LaurentMatrix A;
  bool carried_gamma;
};

// H is either A or A gamma_v; the second reading applies when H gamma_v^{-1}
// is still lambda-polynomial, which cannot happen for A with invertible A_0.
BigCellPart big_cell_part(const LoopProduct& H, const canonical::UnitonType& type) {
  if (H.n() != type.n()) throw InputError("loop size does not match the type");
  LaurentMatrix M = H.expand();
  LaurentMatrix A = M * LaurentMatrix::diagonal_hom(negated(type.v()));
  if (type.k() > 0 && !A.is_zero() && A.min_power() >= 0) return {A, true};
  return {M, false};
}

}  // namespace

PlaneFamily model_from_loop(const LoopProduct& H, const canonical::UnitonType& type) {
  int n = type.n(), k = type.k();
  auto [A, carried] = big_cell_part(H, type);
  LaurentMatrix L = A * LaurentMatrix::diagonal_hom(type.v());
  if (!L.is_zero() && L.min_power() < 0)
    throw InputError("H gamma_v H_+ is not contained in H_+ (lambda^" + std::to_string(L.min_power()) + " term)");
  LaurentMatrix Linv = H.expand_inverse();
  if (!carried) Linv = LaurentMatrix::diagonal_hom(negated(type.v())) * Linv;
  if (!Linv.is_zero() && Linv.min_power() < -k)
    throw InputError("lambda^" + std::to_string(k) + " H_+ is not contained in H gamma_v H_+");
  std::vector<int> cols;
  for (int c = 0; c < n; ++c) cols.push_back(c);
  ModelSpace sp{n, k};
  return PlaneFamily(sp, shifted_columns(L, sp, cols, k));
}

PlaneFamily plane_from_frame(const LoopProduct& H, int* shift_out) {
  int n = H.n();
  LaurentMatrix L = H.expand();
  LaurentMatrix Linv = H.expand_inverse();
  int s = -L.min_power();
  int k = s - Linv.min_power();
  if (shift_out) *shift_out = s;
  ModelSpace sp{n, k};
  std::vector<int> cols;
  for (int c = 0; c < n; ++c) cols.push_back(c);
  return PlaneFamily(sp, shifted_columns(L.shift(s), sp, cols, k));
}

std::vector<Vec> extract_X0(const LoopProduct& H, const canonical::UnitonType& type) {
  int n = type.n(), k = type.k();
  LaurentMatrix A = big_cell_part(H, type).A;
  if (A.is_zero() || A.min_power() < 0)
    throw InputError("H is not in big-cell form (exp C) gamma_v: negative powers of lambda remain");
  if (!A.coeff(0).inverse()) throw InputError("H is not in big-cell form (exp C) gamma_v: A_0 is singular");
  std::vector<int> cols;
  for (int c = 0; c < n; ++c)
    if (type.v()[static_cast<std::size_t>(c)] == 0) cols.push_back(c);
  return shifted_columns(A, ModelSpace{n, k}, cols, 1);
}

bool x0_degree_matches(const LoopProduct& H, const canonical::UnitonType& type) {
  PlaneFamily W = model_from_loop(H, type);
  auto X0 = extract_X0(H, type);
  return pluecker_degree(W) == pluecker_degree(X0, W.space());
}

std::vector<std::vector<Vec>> echelon_split(const std::vector<Vec>& X, ModelSpace space) {
  PlaneFamily P(space, X);
  std::vector<std::vector<Vec>> out;
  for (std::size_t r = 0; r < P.basis().size(); ++r) {
    int i = P.pivots()[r] / space.n;
    if (static_cast<int>(out.size()) <= i) out.resize(static_cast<std::size_t>(i) + 1);
    const Vec& row = P.basis()[r];
    Vec x(static_cast<std::size_t>((space.k - i) * space.n));
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = row[j + static_cast<std::size_t>(i * space.n)];
    out[static_cast<std::size_t>(i)].push_back(std::move(x));
  }
  return out;
}

std::optional<canonical::UnitonType> infer_type(const PlaneFamily& W) {
  int n = W.n();
  auto g = W.graded_dims();
  // dim(W cap lambda^j H_+ / lambda^{j+1}) = #{c : v_c <= j}
  std::vector<int> v;
  int prev = 0;
  for (int j = 0; j <= W.k(); ++j) {
    int cnt = j < W.k() ? g[static_cast<std::size_t>(j)] : n;
    if (cnt < prev) return std::nullopt;
    for (int c = prev; c < cnt; ++c) v.push_back(j);
    prev = cnt;
  }
  std::reverse(v.begin(), v.end());
  // trailing full slots mean a smaller k
  try {
    return canonical::UnitonType(v);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

namespace {

Polynomial bareiss_det(std::vector<std::vector<Polynomial>> a) {
  std::size_t r = a.size();
  Polynomial prev(1);
  bool neg = false;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t piv = i;
    while (piv < r && a[piv][i].is_zero()) ++piv;
    if (piv == r) return Polynomial();
    if (piv != i) {
      std::swap(a[piv], a[i]);
      neg = !neg;
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t c = i + 1; c < r; ++c)
        a[j][c] = exactalg::exact_div(a[i][i] * a[j][c] - a[j][i] * a[i][c], prev);
      a[j][i] = Polynomial();
    }
    prev = a[i][i];
  }
  return neg ? -a[r - 1][r - 1] : a[r - 1][r - 1];
}

void next_subset(std::vector<int>& idx, int N, bool& done) {
  int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - r + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
}

}  // namespace

int pluecker_degree(const std::vector<Vec>& span, ModelSpace space) {
  PlaneFamily P(space, span);
  if (P.dim() < static_cast<int>(span.size()))
    throw InputError("pluecker_degree: spanning vectors are linearly dependent over Q(i)(z)");
  return pluecker_degree(P);
}

int pluecker_degree(const PlaneFamily& W) {
  int r = W.dim(), N = W.space().dim();
  if (r == 0 || r == N) return 0;
  // clear denominators row by row
  std::vector<std::vector<Polynomial>> M;
  for (const auto& row : W.basis()) {
    Polynomial l(1);
    for (const auto& x : row)
      if (!x.is_zero() && !x.den().is_one()) l = exactalg::exact_div(l * x.den(), exactalg::gcd(l, x.den()));
    std::vector<Polynomial> pr;
    for (const auto& x : row) pr.push_back(x.is_zero() ? Polynomial() : exactalg::exact_div(l, x.den()) * x.num());
    M.push_back(std::move(pr));
  }
  std::vector<bool> zero_col(static_cast<std::size_t>(N), true);
  for (int c = 0; c < N; ++c)
    for (int i = 0; i < r; ++i)
      if (!M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) zero_col[static_cast<std::size_t>(c)] = false;

  std::vector<Polynomial> minors;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  bool done = false;
  while (!done) {
    bool skip = false;
    for (int c : idx) skip = skip || zero_col[static_cast<std::size_t>(c)];
    if (!skip) {
      std::vector<std::vector<Polynomial>> sub(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i)
        for (int c : idx) sub[static_cast<std::size_t>(i)].push_back(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
      Polynomial d = bareiss_det(std::move(sub));
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
    next_subset(idx, N, done);
  }
  if (minors.empty()) throw InputError("pluecker_degree: basis is rank deficient");
  Polynomial g = minors.front();
  for (const auto& m : minors) {
    g = exactalg::gcd(g, m);
    if (g.is_constant()) break;
  }
  int deg = 0;
  for (const auto& m : minors) deg = std::max(deg, m.degree() - g.degree());
  return deg;
}

std::vector<int> schubert_Z(const canonical::UnitonType& type) {
  int n = type.n(), k = type.k();
  const auto& v = type.v();
  std::vector<int> Z;
  if (k == 0) return Z;
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < n; ++c) {
      int vc = v[static_cast<std::size_t>(c)];
      bool in = vc >= j + 1;
      if (j == k - 1 && c == 0) in = false;
      if (j == 0 && c == n - 1) in = true;
      if (in) Z.push_back(j * n + c);
    }
  }
  return Z;
}

int uniton_width(const PlaneFamily& W) {
  if (!check_ces(W).accepted)
    throw InputError("uniton_width needs a lambda-invariant extended solution W");
  int k = W.k(), n = W.n();
  if (W.dim() == 0) return 0;
  int s = W.pivots().front() / n;
  auto g = W.graded_dims();
  int t = k;
  while (t > 0 && g[static_cast<std::size_t>(t - 1)] == n) --t;
  return std::max(0, t - s);
}

PlaneFamily apply_diagonal(const PlaneFamily& W, const std::vector<int>& e) {
  int n = W.n(), k = W.k();
  if (static_cast<int>(e.size()) != n) throw InputError("diagonal exponents have the wrong size");
  int emax = *std::max_element(e.begin(), e.end());
  int K = std::max(0, k + emax);
  ModelSpace out{n, K};
  std::vector<Vec> gens;
  auto push = [&](int power, int c, const RationalFunction& x, Vec& v) {
    int p = power + e[static_cast<std::size_t>(c)];
    if (x.is_zero()) return;
    if (p < 0) throw InputError("diag(lambda^e) W leaves H_+");
    if (p < K) v[static_cast<std::size_t>(out.slot(p, c))] = x;
  };
  for (const auto& row : W.basis()) {
    Vec v = out.zero();
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < n; ++c) push(i, c, row[static_cast<std::size_t>(i * n + c)], v);
    gens.push_back(std::move(v));
  }
  // images of the implicit lambda^k H_+
  for (int c = 0; c < n; ++c)
    for (int p = k; p + e[static_cast<std::size_t>(c)] < K; ++p) {
      Vec v = out.zero();
      push(p, c, RationalFunction(1), v);
      gens.push_back(std::move(v));
    }
  PlaneFamily res(out, gens);
  // drop trailing full slots so k matches the data
  int t = K;
  auto g = res.graded_dims();
  while (t > 0 && g[static_cast<std::size_t>(t - 1)] == n) --t;
  return t == K ? res : retruncate(res, t);
}

PlaneFamily apply_constant(const PlaneFamily& W, const RatMatrix& M) {
  int n = W.n(), k = W.k();
  if (M.rows() != n || M.cols() != n) throw InputError("constant matrix has the wrong size");
  if (!M.inverse()) throw InputError("constant matrix is singular");
  std::vector<Vec> gens;
  for (const auto& row : W.basis()) {
    Vec v(row.size());
    for (int i = 0; i < k; ++i)
      for (int r = 0; r < n; ++r) {
        RationalFunction acc;
        for (int c = 0; c < n; ++c) {
          const auto& x = row[static_cast<std::size_t>(i * n + c)];
          if (!x.is_zero() && !M(r, c).is_zero()) acc += M(r, c) * x;
        }
        v[static_cast<std::size_t>(i * n + r)] = acc;
      }
    gens.push_back(std::move(v));
  }
  return PlaneFamily(W.space(), gens);
}

PlaneFamily retruncate(const PlaneFamily& W, int k_new) {
  int n = W.n(), k = W.k();
  if (k_new < 0) throw InputError("truncation depth must be nonnegative");
  ModelSpace out{n, k_new};
  std::vector<Vec> gens;
  if (k_new <= k) {
    auto g = W.graded_dims();
    for (int j = k_new; j < k; ++j)
      if (g[static_cast<std::size_t>(j)] != n)
        throw InputError("lambda^" + std::to_string(k_new) + " H_+ is not contained in W");
    for (const auto& row : W.basis()) gens.emplace_back(row.begin(), row.begin() + k_new * n);
  } else {
    for (const auto& row : W.basis()) {
      Vec v = row;
      v.resize(static_cast<std::size_t>(k_new * n));
      gens.push_back(std::move(v));
    }
    for (int i = k * n; i < k_new * n; ++i) {
      Vec v = out.zero();
      v[static_cast<std::size_t>(i)] = 1;
      gens.push_back(std::move(v));
    }
  }
  return PlaneFamily(out, gens);
}

nlohmann::json to_json(const PlaneFamily& W) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : W.basis()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.str());
    basis.push_back(r);
  }
  return {{"n", W.n()}, {"k", W.k()}, {"basis", basis}};
}

PlaneFamily plane_family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("basis"))
    throw InputError("plane family JSON needs n, k and basis");
  ModelSpace sp{j.at("n").get<int>(), j.at("k").get<int>()};
  std::vector<Vec> vs;
  for (const auto& r : j.at("basis")) {
    Vec v;
    for (const auto& x : r) v.push_back(exactalg::rational_function_from_json(x));
    vs.push_back(std::move(v));
  }
  return PlaneFamily(sp, vs);
}

}  // namespace uniton::grassmann
