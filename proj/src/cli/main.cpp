// uniton: command line front end for the exact and numeric uniton pipeline.
//
// Exit codes: 0 success, 1 a verifier said no, 2 integration obstruction,
// 3 input error, 4 numeric postcondition failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "uniton/canonical/canonical.hpp"
#include "uniton/deform/deform.hpp"
#include "uniton/errors.hpp"
#include "uniton/grassmann/plane_family.hpp"
#include "uniton/unitary/unitary.hpp"

namespace {

using namespace uniton;
using exactalg::parse_rational_function;
using exactalg::RationalFunction;
using nlohmann::json;

constexpr int kVerifyFailed = 1;
constexpr int kObstruction = 2;
constexpr int kInputError = 3;
constexpr int kNumericError = 4;

double default_tolerance() {
  const char* env = std::getenv("UNITON_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0)) throw InputError(std::string("UNITON_TOL must be a positive number, got ") + env);
  return v;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

// "(z,0,1)" or "z,0,1"; commas inside nested parentheses stay put.
std::vector<RationalFunction> parse_vector(const std::string& text) {
  std::string s = text;
  auto trim = [](std::string x) {
    auto b = x.find_first_not_of(" \t"), e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) wraps = false;
    }
    if (wraps) s = s.substr(1, s.size() - 2);
  }
  std::vector<RationalFunction> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(parse_rational_function(trim(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(parse_rational_function(trim(cur)));
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

void echo_plane(const grassmann::PlaneFamily& W) {
  std::cout << "dim " << W.dim() << ", k " << W.k() << "\n";
  if (W.dim() > 0) std::cout << "degree " << grassmann::pluecker_degree(W) << "\n";
  if (grassmann::check_ces(W).accepted) std::cout << "width " << grassmann::uniton_width(W) << "\n";
}

// ---- generate ---------------------------------------------------------------

struct GenerateOptions {
  std::string type, a, b, c, f, row, l, m, n, alpha, beta, delta;
  std::vector<std::string> entries;
  std::string out_loop, out_plane, out_data;
  int i = 0;
  int degree = 2;
  std::uint64_t seed = 0;
  bool random = false;
};

int generate_canonical(const GenerateOptions& o) {
  auto type = canonical::UnitonType::parse(o.type);
  loopalg::RatMatrix B1(type.n(), type.n());
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    B1 = canonical::random_B1(type, rng, o.degree);
  }
  auto set = [&](int r, int c, const std::string& text) {
    if (r < 0 || c < 0 || r >= type.n() || c >= type.n()) throw InputError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is outside the matrix");
    B1(r, c) = parse_rational_function(text);
  };
  bool shorthand = !o.a.empty() || !o.b.empty() || !o.c.empty();
  if (shorthand && type.v() != std::vector<int>{2, 1, 0}) throw InputError("--a/--b/--c need --type 2,1,0; use --entry");
  if (!o.a.empty()) set(0, 1, o.a);
  if (!o.b.empty()) set(0, 2, o.b);
  if (!o.c.empty()) set(1, 2, o.c);
  for (const auto& e : o.entries) {
    auto eq = e.find('='), comma = e.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq)
      throw InputError("--entry expects r,c=expr with 1-based indices, got " + e);
    int r = 0, c = 0;
    try {
      r = std::stoi(e.substr(0, comma));
      c = std::stoi(e.substr(comma + 1, eq - comma - 1));
    } catch (const std::exception&) {
      throw InputError("--entry expects r,c=expr with 1-based indices, got " + e);
    }
    set(r - 1, c - 1, e.substr(eq + 1));
  }

  auto res = canonical::solve_canonical(type, B1);
  if (auto* ob = std::get_if<canonical::CanonicalObstruction>(&res)) {
    std::cerr << ob->message() << "\n";
    return kObstruction;
  }
  const auto& pot = std::get<canonical::CanonicalPotential>(res);
  loopalg::LoopProduct H = canonical::build_H(pot);
  loopalg::LoopProduct extended(type.n(), {type.gamma(), loopalg::make_exp(pot.full())});
  auto W = grassmann::model_from_loop(extended, type);

  if (!o.out_loop.empty()) write_json(o.out_loop, loopalg::to_json(H));
  if (!o.out_plane.empty()) write_json(o.out_plane, grassmann::to_json(W));
  if (!o.out_data.empty()) write_json(o.out_data, canonical::to_json(pot));
  for (std::size_t i = 0; i < pot.B.size(); ++i) std::cout << "B_" << i + 1 << " = " << pot.B[i].str() << "\n";
  echo_plane(W);
  return 0;
}

int generate_frenet(const GenerateOptions& o) {
  grassmann::FrenetData data;
  data.row = canonical::UnitonType::parse(o.row).v();
  for (const auto* v : {&o.l, &o.m, &o.n})
    if (!v->empty()) data.vectors.push_back(parse_vector(*v));
  auto W = grassmann::frenet(data);
  auto ces = grassmann::check_ces(W);
  if (!o.out_plane.empty()) write_json(o.out_plane, grassmann::to_json(W));
  std::cout << W.str() << "\n";
  echo_plane(W);
  std::cout << (ces.accepted ? "ces PASS" : "ces FAIL: " + ces.message()) << "\n";
  return ces.accepted ? 0 : kVerifyFailed;
}

int generate_cpn(const GenerateOptions& o) {
  auto H = canonical::cpn_frame(parse_vector(o.f), o.i);
  auto W = grassmann::plane_from_frame(H);
  if (!o.out_loop.empty()) write_json(o.out_loop, loopalg::to_json(H));
  if (!o.out_plane.empty()) write_json(o.out_plane, grassmann::to_json(W));
  echo_plane(W);
  return 0;
}

int generate_normal_form(const GenerateOptions& o) {
  auto d = deform::NormalForm::from_alpha_beta(parse_rational_function(o.alpha), parse_rational_function(o.beta),
                                                  parse_rational_function(o.delta));
  auto W = d.plane();
  if (!o.out_data.empty()) write_json(o.out_data, deform::to_json(d));
  if (!o.out_plane.empty()) write_json(o.out_plane, grassmann::to_json(W));
  std::cout << "gamma = " << d.gamma.str() << "\n";
  echo_plane(W);
  return 0;
}

// ---- verify / degree --------------------------------------------------------

int cmd_verify(const std::string& loop_path, const std::string& plane_path, const std::string& mode) {
  if (loop_path.empty() == plane_path.empty()) throw InputError("verify needs exactly one of --loop and --plane");
  if (!loop_path.empty()) {
    auto H = loopalg::loop_product_from_json(read_json(loop_path));
    auto m = mode == "general" ? loopalg::ExtendedMode::General : loopalg::ExtendedMode::Normalized;
    auto r = loopalg::verify_extended(H, m);
    if (r.accepted) {
      std::cout << "PASS (" << mode << ")\nA = " << r.A.str() << "\n";
      return 0;
    }
    std::cout << "FAIL (" << mode << "): offending lambda powers";
    for (int p : r.offending_powers) std::cout << " " << p;
    std::cout << "\n";
    return kVerifyFailed;
  }
  auto W = grassmann::plane_family_from_json(read_json(plane_path));
  auto ces = grassmann::check_ces(W);
  if (ces.accepted) {
    std::cout << "PASS\n";
    echo_plane(W);
    return 0;
  }
  std::cout << "FAIL: " << ces.message() << "\n";
  return kVerifyFailed;
}

int cmd_degree(const std::string& plane_path) {
  auto W = grassmann::plane_family_from_json(read_json(plane_path));
  std::cout << grassmann::pluecker_degree(W) << "\n";
  return 0;
}

// ---- factor -----------------------------------------------------------------

unitary::cplx parse_point(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("expected a point re,im, got " + text);
  }
}

int cmd_factor(const std::string& plane_path, const std::string& center, double h, int half_width,
               const std::string& csv, const std::string& out_json, double tol) {
  if (!(h > 0)) throw InputError("mesh h must be positive");
  if (half_width < 1) throw InputError("half-width must be at least 1");
  auto W = grassmann::plane_family_from_json(read_json(plane_path));
  if (!grassmann::check_ces(W).accepted) throw InputError("the plane family is not an extended solution");
  unitary::cplx z0 = parse_point(center);

  auto phi = [&](unitary::cplx z) {
    auto P = unitary::evaluate_plane(W, z);
    auto F = unitary::uniton_factorize(P);
    if (F.roundtrip_error > tol)
      throw NumericError("factorization roundtrip " + fmt(F.roundtrip_error) + " exceeds tolerance " + fmt(tol) + " at z = " + fmt(z.real()) + "," + fmt(z.imag()));
    auto U = unitary::phi_at(F);
    if (unitary::unitarity_defect(U) > tol)
      throw NumericError("phi is not unitary to " + fmt(tol) + " at z = " + fmt(z.real()) + "," + fmt(z.imag()));
    return U;
  };
  auto sample = unitary::sample_harmonic(phi, z0, h, half_width);
  auto report = unitary::harmonic_residual(sample);
  if (!csv.empty()) write_text(csv, unitary::to_csv(sample));
  json j = unitary::to_json(report);
  if (!out_json.empty()) write_json(out_json, j);
  std::cout << "factors " << W.k() << "\nmax_residual " << fmt(report.max_residual) << "\nmean_residual "
            << fmt(report.mean_residual) << "\n";
  return 0;
}

// ---- deform -----------------------------------------------------------------

int cmd_deform(const std::string& input, const std::string& alpha, const std::string& beta, const std::string& delta,
               int m, const std::string& out) {
  deform::NormalForm d;
  if (!input.empty()) {
    d = deform::normal_form_from_json(read_json(input));
  } else {
    if (alpha.empty() || beta.empty() || delta.empty()) throw InputError("deform needs --input or all of --alpha --beta --delta");
    d = deform::NormalForm::from_alpha_beta(parse_rational_function(alpha), parse_rational_function(beta),
                                               parse_rational_function(delta));
  }
  auto report = deform::verify_path(deform::lowering_path(d, m));
  json j = deform::to_json(report);
  if (!out.empty()) write_json(out, j);
  std::cout << "degrees";
  for (int x : report.degree) std::cout << " " << x;
  std::cout << "\nces " << (report.all_ces() ? "all accepted" : "REJECTED somewhere") << "\nendpoint width "
            << report.endpoint_width << "\nsandwich " << report.sandwich_lower << " " << report.sandwich_upper
            << "\nzero hypothesis " << (report.hypothesis ? "holds" : "fails") << "\n"
            << (report.passed() ? "PASS" : "FAIL") << "\n";
  return 0;
}

// ---- types / bound ----------------------------------------------------------

int cmd_types(int n) {
  if (n < 1) throw InputError("--n must be positive");
  for (const auto& t : canonical::enumerate_types(n)) {
    std::cout << t.str() << "  k=" << t.k() << "  a=(";
    const auto& a = t.multiplicities();
    for (std::size_t i = 0; i < a.size(); ++i) std::cout << (i ? "," : "") << a[i];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_bound(const std::string& label) {
  if (!label.empty()) {
    std::cout << canonical::uniton_bound(label) << "\n";
    return 0;
  }
  for (const auto& row : canonical::bound_table()) std::cout << row.group << "\t" << row.bound << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric tools for harmonic maps into U(n) via unitons"};
  app.require_subcommand(1);

  GenerateOptions g;
  auto* gen = app.add_subcommand("generate", "Build a complex extended solution and its plane family");
  gen->require_subcommand(1);
  auto* gcan = gen->add_subcommand("canonical", "Solve the canonical recursion for a type and B_1");
  gcan->add_option("--type", g.type, "Uniton type, e.g. 2,1,0")->required();
  gcan->add_option("--a", g.a, "B_1 entry (1,2) for type 2,1,0");
  gcan->add_option("--b", g.b, "B_1 entry (1,3) for type 2,1,0");
  gcan->add_option("--c", g.c, "B_1 entry (2,3) for type 2,1,0");
  gcan->add_option("--entry", g.entries, "B_1 entry as r,c=expr (1-based)");
  gcan->add_flag("--random", g.random, "Start from a seeded random B_1");
  gcan->add_option("--seed", g.seed, "Seed for --random");
  gcan->add_option("--degree", g.degree, "Maximal degree of random entries");
  gcan->add_option("--out-loop", g.out_loop, "Write the loop H = exp B as JSON");
  gcan->add_option("--out-plane", g.out_plane, "Write W as JSON");
  gcan->add_option("--out-potential", g.out_data, "Write B_1..B_k as JSON");
  auto* gfre = gen->add_subcommand("frenet", "Plane family from Frenet data of a row");
  gfre->add_option("--row", g.row, "Row type, e.g. 2,1,0")->required();
  gfre->add_option("--l", g.l, "First vector, e.g. (z,0,1)")->required();
  gfre->add_option("--m", g.m, "Second vector");
  gfre->add_option("--n", g.n, "Third vector");
  gfre->add_option("--out-plane", g.out_plane, "Write W as JSON");
  auto* gcpn = gen->add_subcommand("cpn", "Frame of a holomorphic curve in CP^{n-1}");
  gcpn->add_option("--f", g.f, "Curve, e.g. (1,z,z^2)")->required();
  gcpn->add_option("--i", g.i, "Index of the harmonic sequence map");
  gcpn->add_option("--out-loop", g.out_loop, "Write the frame as JSON");
  gcpn->add_option("--out-plane", g.out_plane, "Write W as JSON");
  auto* gapc = gen->add_subcommand("normal-form", "Type 2,1,0 normal form from alpha, beta, delta");
  gapc->add_option("--alpha", g.alpha)->required();
  gapc->add_option("--beta", g.beta)->required();
  gapc->add_option("--delta", g.delta)->required();
  gapc->add_option("--out-data", g.out_data, "Write the data as JSON");
  gapc->add_option("--out-plane", g.out_plane, "Write W as JSON");

  std::string loop_path, plane_path, mode = "normalized";
  auto* ver = app.add_subcommand("verify", "Check a loop or a plane family for the extended-solution property");
  ver->add_option("--loop", loop_path, "Loop JSON");
  ver->add_option("--plane", plane_path, "Plane family JSON");
  ver->add_option("--mode", mode, "normalized or general")->check(CLI::IsMember({"normalized", "general"}));

  auto* deg = app.add_subcommand("degree", "Exact Plucker degree of a plane family");
  deg->add_option("--plane", plane_path, "Plane family JSON")->required();

  double tol = 0, h = 0.1;
  int half_width = 2;
  std::string center = "0,0", csv, out_json;
  auto* fac = app.add_subcommand("factor", "Factor W(z) on a grid, write phi and the harmonic residual");
  fac->add_option("--plane", plane_path, "Plane family JSON")->required();
  fac->add_option("--center", center, "Grid center re,im");
  fac->add_option("--mesh", h, "Mesh width h");
  fac->add_option("--half-width", half_width, "Grid is (2m+1) x (2m+1)");
  fac->add_option("--csv", csv, "Write the phi grid as CSV");
  fac->add_option("--json", out_json, "Write the residual report as JSON");
  fac->add_option("--tol", tol, "Roundtrip and unitarity tolerance (default UNITON_TOL or 1e-9)");

  std::string input, alpha, beta, delta, out;
  int m = 10;
  auto* dfm = app.add_subcommand("deform", "Run the uniton-number-lowering deformation and report");
  dfm->add_option("--input", input, "Normal form data JSON");
  dfm->add_option("--alpha", alpha);
  dfm->add_option("--beta", beta);
  dfm->add_option("--delta", delta);
  dfm->add_option("--m", m, "Grid size");
  dfm->add_option("--out", out, "Write the report JSON");

  int n = 3;
  auto* typ = app.add_subcommand("types", "List the uniton types for U(n)");
  typ->add_option("--n", n, "Matrix size");

  std::string label;
  auto* bnd = app.add_subcommand("bound", "Uniton number bounds for simple groups");
  bnd->add_option("--label", label, "Concrete group such as SU_4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (tol <= 0) tol = default_tolerance();
    if (gcan->parsed()) return generate_canonical(g);
    if (gfre->parsed()) return generate_frenet(g);
    if (gcpn->parsed()) return generate_cpn(g);
    if (gapc->parsed()) return generate_normal_form(g);
    if (ver->parsed()) return cmd_verify(loop_path, plane_path, mode);
    if (deg->parsed()) return cmd_degree(plane_path);
    if (fac->parsed()) return cmd_factor(plane_path, center, h, half_width, csv, out_json, tol);
    if (dfm->parsed()) return cmd_deform(input, alpha, beta, delta, m, out);
    if (typ->parsed()) return cmd_types(n);
    if (bnd->parsed()) return cmd_bound(label);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericError;
  }
  return kInputError;
}
