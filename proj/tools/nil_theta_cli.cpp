// nil-theta: command-line front end for the nilmanifold theta library.
// Subcommands: group | orbits | subalg | foliate | intpoints | theta | spectrum
// | bnf | quantize | verify.  Exit codes: 0 ok, 1 failed check, 2 validation
// error, 3 non-convergence.  Validation errors emit machine-readable JSON on
// stderr.  Reruns with identical flags produce byte-identical output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nil_theta/coadjoint.hpp"
#include "nil_theta/ladder.hpp"
#include "nil_theta/lie.hpp"
#include "nil_theta/reps.hpp"
#include "nil_theta/spectral.hpp"
#include "nil_theta/symplectic.hpp"
#include "nil_theta/theta.hpp"
#include "nil_theta/verify.hpp"

using json = nlohmann::ordered_json;
using namespace niltheta;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

struct CliError {
  int code;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& kind, const std::string& msg) {
  throw CliError{code, kind, msg};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_rat_arg(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    fail(kExitValidation, "validation", std::string(what) + ": not a rational: " + s);
  }
}

// reals accept a decimal literal or an exact "p/q"
double parse_real_arg(const std::string& s, const char* what) {
  if (s.find('/') != std::string::npos) return to_double(parse_rat_arg(s, what));
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(kExitValidation, "validation", std::string(what) + ": not a number: " + s);
  }
}

GroupElement parse_group_arg(const std::string& s, const char* what) {
  auto parts = split(s, ',');
  if (parts.size() != 5)
    fail(kExitValidation, "validation",
         std::string(what) + ": expected 5 comma-separated rationals, got " + s);
  return {parse_rat_arg(parts[0], what), parse_rat_arg(parts[1], what),
          parse_rat_arg(parts[2], what), parse_rat_arg(parts[3], what),
          parse_rat_arg(parts[4], what)};
}

Covector parse_covector_arg(const std::string& s, const char* what) {
  auto parts = split(s, ',');
  if (parts.size() != 5)
    fail(kExitValidation, "validation",
         std::string(what) + ": expected 5 comma-separated rationals, got " + s);
  return {parse_rat_arg(parts[0], what), parse_rat_arg(parts[1], what),
          parse_rat_arg(parts[2], what), parse_rat_arg(parts[3], what),
          parse_rat_arg(parts[4], what)};
}

ExtRational parse_ext_arg(const std::string& s, const char* what) {
  if (s == "inf" || s == "+inf") return ExtRational::pos_inf();
  if (s == "-inf") return ExtRational::neg_inf();
  return ExtRational::finite(parse_rat_arg(s, what));
}

GaussianSpec parse_gaussian_arg(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3 && parts.size() != 4)
    fail(kExitValidation, "validation",
         "--gaussian: expected \"x0,t0,sigma[,amplitude]\", got " + s);
  GaussianSpec spec;
  spec.x0 = parse_real_arg(parts[0], "--gaussian x0");
  spec.t0 = parse_real_arg(parts[1], "--gaussian t0");
  spec.sigma = parse_real_arg(parts[2], "--gaussian sigma");
  if (parts.size() == 4) spec.amplitude = parse_real_arg(parts[3], "--gaussian amplitude");
  if (spec.sigma <= 0) fail(kExitValidation, "validation", "--gaussian: sigma must be > 0");
  return spec;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json group_json(const GroupElement& g) {
  return json{{"a1", to_string(g.a1)}, {"a2", to_string(g.a2)}, {"a3", to_string(g.a3)},
              {"r", to_string(g.r)},   {"v", to_string(g.v)}};
}

json covector_json(const Covector& c) {
  return json{{"alpha1", to_string(c.alpha1)}, {"alpha2", to_string(c.alpha2)},
              {"alpha3", to_string(c.alpha3)}, {"rho", to_string(c.rho)},
              {"mu", to_string(c.mu)}};
}

json vector_json(const LieVector& v) {
  return json{{"x1", to_string(v.x1)}, {"x2", to_string(v.x2)}, {"x3", to_string(v.x3)},
              {"t", to_string(v.t)},   {"u", to_string(v.u)}};
}

json polynomial_json(const LadderPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms)
    terms.push_back(json{{"a1", m.a1},
                         {"a2", m.a2},
                         {"b1", m.b1},
                         {"b2", m.b2},
                         {"coeff", to_string(c.a)},
                         {"coeff_sqrt2", to_string(c.b)}});
  return json{{"display", to_string(p)}, {"terms", terms}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(kExitValidation, "io", "cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

void emit_json(const json& j, const std::string& path) { emit(j.dump(2), path); }

// ---- subcommand payloads ----

int cmd_group(const std::string& op, const std::string& left, const std::string& right,
              const std::string& out_path) {
  json j;
  if (op == "mul") {
    if (right.empty())
      fail(kExitValidation, "validation", "group mul: --right is required");
    GroupElement a = parse_group_arg(left, "--left");
    GroupElement b = parse_group_arg(right, "--right");
    GroupElement p = multiply(a, b);
    j = json{{"op", "mul"},
             {"left", group_json(a)},
             {"right", group_json(b)},
             {"product", group_json(p)},
             {"cocycle_psi", to_string(cocycle_psi(a.base(), b.base()))}};
  } else if (op == "inv") {
    GroupElement a = parse_group_arg(left, "--left");
    j = json{{"op", "inv"}, {"element", group_json(a)}, {"inverse", group_json(inverse(a))}};
  } else if (op == "matrix") {
    GroupElement a = parse_group_arg(left, "--left");
    Matrix5 m = to_matrix(a);
    json rows = json::array();
    for (int i = 0; i < 5; ++i) {
      json row = json::array();
      for (int k = 0; k < 5; ++k) row.push_back(to_string(m(i, k)));
      rows.push_back(row);
    }
    j = json{{"op", "matrix"}, {"element", group_json(a)}, {"matrix", rows}};
  } else if (op == "reduce") {
    GroupElement a = parse_group_arg(left, "--left");
    auto [gamma, g0] = lattice_reduce(a);
    j = json{{"op", "reduce"},
             {"element", group_json(a)},
             {"lattice", json{{"n1", gamma.n1},
                              {"n2", gamma.n2},
                              {"n3", gamma.n3},
                              {"nr", gamma.nr},
                              {"v", to_string(gamma.v)}}},
             {"reduced", group_json(g0)}};
  } else {
    fail(kExitValidation, "validation", "group: unknown --op " + op);
  }
  emit_json(j, out_path);
  return 0;
}

int cmd_orbits_classify(const std::string& covector, const std::string& out_path) {
  Covector lam = parse_covector_arg(covector, "--covector");
  OrbitClass cls = classify_orbit(lam);
  const char* name = cls.kind == OrbitKind::FourDim  ? "FourDim"
                     : cls.kind == OrbitKind::TwoDim ? "TwoDim"
                                                     : "ZeroDim";
  json j{{"class", name},
         {"mu", to_string(lam.mu)},
         {"covector", covector_json(lam)},
         {"canonical_rep", covector_json(cls.canonical_rep)}};
  if (cls.kind == OrbitKind::FourDim) {
    GroupElement g = orbit_normalizer(lam);
    j["normalizer"] = group_json(g);
    j["normalized"] = covector_json(coadjoint_action(g, lam));
  }
  emit_json(j, out_path);
  return 0;
}

int cmd_subalg(const std::string& family, const std::string& p1s, const std::string& p2s,
               const std::string& mus, const std::string& out_path) {
  FamilyTag tag;
  if (family == "c")
    tag = FamilyTag::C;
  else if (family == "bd")
    tag = FamilyTag::BD;
  else if (family == "e")
    tag = FamilyTag::E;
  else
    fail(kExitValidation, "validation", "--family must be c, bd, or e");
  ExtRational p1 = parse_ext_arg(p1s, "--p1");
  ExtRational p2 = parse_ext_arg(p2s, "--p2");
  if (tag == FamilyTag::BD && (p1.infinite() || (!p1.infinite() && p1.value == 0)))
    fail(kExitValidation, "validation", "bd family needs finite nonzero --p1");
  Rational mu = parse_rat_arg(mus, "--mu");
  if (mu == 0) fail(kExitValidation, "validation", "--mu must be nonzero");

  SubalgebraSpec s = subordinate_family(tag, p1, p2);
  Covector lam{Rational(0), Rational(0), Rational(0), Rational(0), mu};
  json basis = json::array();
  for (const auto& v : s.basis) basis.push_back(vector_json(v));
  auto L = subalgebra_to_lagrangian(s.basis);
  json lag = json::array();
  for (const auto& v : L) lag.push_back(vector_json(v));
  json j{{"family", family},
         {"basis", basis},
         {"is_subalgebra", is_subalgebra(s.basis)},
         {"is_subordinate", is_subordinate(s.basis, lam)},
         {"is_ideal", is_ideal(s.basis)},
         {"mu", to_string(mu)},
         {"lagrangian_projection", lag},
         {"is_lagrangian", is_lagrangian(L)}};
  emit_json(j, out_path);
  return 0;
}

int cmd_foliate(const std::string& es, const std::string& out_path) {
  Rational e = parse_rat_arg(es, "--e");
  CYStructure cy = cy_structure(e);
  CYReport rep = verify_cy(cy);
  LieVector le{Rational(0), Rational(1), Rational(0), e, Rational(0)};
  LieVector x3{Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)};
  json j{{"e", to_string(e)},
         {"pass", rep.pass()},
         {"j_squared_residual", rep.j_squared_residual},
         {"compatibility_residual", rep.compatibility_residual},
         {"metric_symmetry_residual", rep.metric_symmetry_residual},
         {"metric_min_eigenvalue", rep.metric_min_eigenvalue},
         {"volume_ratio", json{{"re", rep.volume_ratio.real()}, {"im", rep.volume_ratio.imag()}}},
         {"det_im_omega", rep.det_im_omega},
         {"d_re_epsilon_residual", rep.d_re_epsilon_residual},
         {"leaf_is_special_lagrangian", is_special_lagrangian({le, x3}, cy)}};
  if (has_exact_cy(e)) {
    CYStructureExact ex = cy_structure_exact(e);
    CYReportExact xrep = verify_cy_exact(ex);
    j["exact"] = json{{"sqrt_abs_e", to_string(ex.sqrt_abs_e)},
                      {"j_squared_ok", xrep.j_squared_ok},
                      {"compatibility_ok", xrep.compatibility_ok},
                      {"metric_symmetric", xrep.metric_symmetric},
                      {"ratio_is_one", xrep.ratio_is_one},
                      {"d_re_epsilon_zero", xrep.d_re_epsilon_zero},
                      {"leaf_is_special_lagrangian",
                       is_special_lagrangian_exact({le, x3}, ex)}};
  }
  emit_json(j, out_path);
  return 0;
}

int cmd_intpoints(long k, int window, const std::string& fmt, const std::string& out_path) {
  if (k < 1) fail(kExitValidation, "validation", "--k must be >= 1");
  if (fmt != "csv" && fmt != "json")
    fail(kExitValidation, "validation", "--emit must be csv or json");
  struct Row {
    long m, n, id;
  };
  std::vector<Row> rows;
  auto orbit_id = [k](long m, long n) {
    auto c = canonical_orbit_rep(k, m, n);
    return c.first * 2 * k + c.second;
  };
  if (window == 0) {
    for (const auto& p : enumerate_integral_points(k))
      rows.push_back({p.m, p.n, orbit_id(p.m, p.n)});
  } else {
    for (long m = -window; m <= window; ++m)
      for (long n = -window; n <= window; ++n) rows.push_back({m, n, orbit_id(m, n)});
  }
  if (fmt == "csv") {
    std::ostringstream os;
    os << "m,n,orbit_id\n";
    for (const auto& r : rows) os << r.m << ',' << r.n << ',' << r.id << '\n';
    emit(os.str(), out_path);
  } else {
    json pts = json::array();
    for (const auto& r : rows) pts.push_back(json{{"m", r.m}, {"n", r.n}, {"orbit_id", r.id}});
    emit_json(json{{"k", k}, {"count", rows.size()}, {"points", pts}}, out_path);
  }
  return 0;
}

int cmd_theta_eval(long k, long m, long n, const std::string& gauss, int grid,
                   const std::string& zs, const std::string& ts, double tol,
                   const std::string& fmt, const std::string& out_path) {
  if (k == 0) fail(kExitValidation, "validation", "--k must be nonzero");
  if (grid < 1) fail(kExitValidation, "validation", "--grid must be >= 1");
  if (tol <= 0 || tol >= 1) fail(kExitValidation, "validation", "--tol must be in (0,1)");
  if (fmt != "csv" && fmt != "json")
    fail(kExitValidation, "validation", "--out must be csv or json");
  GaussianSpec spec = parse_gaussian_arg(gauss);
  WindowedFunction wf = gaussian2d(spec);
  double z = parse_real_arg(zs, "--z");
  double t = parse_real_arg(ts, "--t");
  double reach = std::max({std::abs(0.0 - spec.x0), std::abs(1.0 - spec.x0),
                           std::abs(t - spec.t0)}) +
                 0.1;
  TruncationWindow w = auto_window(spec, reach, tol);
  IntegralPoint p{k, m, n};

  std::ostringstream csv;
  json rows = json::array();
  if (fmt == "csv") csv << "x,y,z,t,re,im\n";
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double x = double(i) / grid, y = double(j) / grid;
      std::complex<double> v = theta_R4(p, wf, R4Point{x, y, z, t}, w);
      if (fmt == "csv")
        csv << num(x) << ',' << num(y) << ',' << num(z) << ',' << num(t) << ','
            << num(v.real()) << ',' << num(v.imag()) << '\n';
      else
        rows.push_back(json{{"x", x}, {"y", y}, {"z", z}, {"t", t},
                            {"re", v.real()}, {"im", v.imag()}});
    }
  if (fmt == "csv")
    emit(csv.str(), out_path);
  else
    emit_json(json{{"k", k}, {"m", m}, {"n", n}, {"grid", grid},
                   {"window", json{{"W", w.W}, {"tol", w.tol}}}, {"values", rows}},
              out_path);
  return 0;
}

int cmd_theta_check(long k, long m, long n, const std::string& gauss, int points,
                    double tol, const std::string& out_path) {
  if (k == 0) fail(kExitValidation, "validation", "--k must be nonzero");
  if (points < 1) fail(kExitValidation, "validation", "--points must be >= 1");
  GaussianSpec spec = parse_gaussian_arg(gauss);
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 3.0, tol);
  IntegralPoint p{k, m, n};
  // deterministic rational sample points
  double max_resid = 0, max_mismatch = 0;
  json samples = json::array();
  for (int i = 0; i < points; ++i) {
    BaseElement pt{rat(2 * i - points, 2 * points), rat(i + 1, points + 2),
                   rat(-i, 3 * points), rat(points - 3 * i, 4 * points)};
    auto rep = check_pseudoperiodicity(p, wf, pt, w);
    max_resid = std::max(max_resid, rep.max_residual());
    max_mismatch = std::max(max_mismatch, rep.max_factor_mismatch());
    samples.push_back(json{{"point",
                            json{{"x", to_string(pt.a1)}, {"y", to_string(pt.a2)},
                                 {"z", to_string(pt.a3)}, {"t", to_string(pt.r)}}},
                           {"residuals",
                            json{rep.residual[0], rep.residual[1], rep.residual[2],
                                 rep.residual[3]}}});
  }
  // the residual floor scales with the requested truncation tolerance
  bool ok = max_resid < std::max(1e-10, 20 * tol) && max_mismatch < 1e-12;
  emit_json(json{{"k", k}, {"m", m}, {"n", n},
                 {"window", json{{"W", w.W}, {"tol", w.tol}}},
                 {"rules", json::array({"(x+1,y,z,t) -> 1",
                                        "(x,y+1,z-x,t) -> exp(-2 pi i k x^2)",
                                        "(x,y,z+1,t) -> exp(4 pi i k x)",
                                        "(x,y,z,t+1) -> exp(4 pi i k y)"})},
                 {"max_residual", max_resid},
                 {"max_factor_mismatch", max_mismatch},
                 {"pass", ok},
                 {"samples", samples}},
            out_path);
  return ok ? 0 : 1;
}

int cmd_spectrum(long k, double eps, bool eps_set, int basis, int count,
                 const std::string& fmt, const std::string& out_path) {
  if (basis < 4 || basis > 120)
    fail(kExitValidation, "validation", "--basis must be in [4, 120]");
  if (count < 1) fail(kExitValidation, "validation", "--count must be >= 1");
  if (fmt != "csv" && fmt != "json")
    fail(kExitValidation, "validation", "--emit must be csv or json");
  if (eps_set && k != 0)
    fail(kExitValidation, "validation", "give either --k or --eps, not both");
  if (!eps_set && k < 1) fail(kExitValidation, "validation", "--k must be >= 1");

  SpectrumReport rep = eps_set ? spectrum_scaled(eps, basis, count)
                               : spectrum_delta_k(k, basis, count);
  json j;
  if (eps_set) {
    j = json{{"kind", "scaled"}, {"eps", eps}};
  } else {
    double l0 = rep.eigenvalues[0];
    j = json{{"kind", "delta_k"},
             {"k", k},
             {"four_pi_k", 4 * M_PI * k},
             {"eight_pi_k", 8 * M_PI * k},
             {"lambda0_minus_8pik", l0 - 8 * M_PI * k}};
    if (rep.eigenvalues.size() > 1) {
      j["gap"] = rep.eigenvalues[1] - l0;
      j["gap_over_4pik"] = (rep.eigenvalues[1] - l0) / (4 * M_PI * k);
    }
  }
  j["basis"] = basis;
  j["count"] = count;
  j["eigenvalues"] = rep.eigenvalues;
  j["converged"] = rep.converged;
  j["convergence_delta"] = rep.convergence_delta;

  if (fmt == "csv") {
    std::ostringstream os;
    os << "index,eigenvalue\n";
    for (size_t i = 0; i < rep.eigenvalues.size(); ++i)
      os << i << ',' << num(rep.eigenvalues[i]) << '\n';
    emit(os.str(), out_path);
  } else {
    emit_json(j, out_path);
  }
  if (!rep.converged) {
    json err{{"error", json{{"code", kExitNoConvergence},
                            {"kind", "non-convergence"},
                            {"message", "ground eigenvalue did not settle under basis growth"}}}};
    std::cerr << err.dump() << '\n';
    return kExitNoConvergence;
  }
  return 0;
}

int cmd_bnf(int order, const std::string& fmt, const std::string& out_path) {
  if (order != 3 && order != 4)
    fail(kExitValidation, "validation", "--order must be 3 or 4");
  if (fmt != "json")
    fail(kExitValidation, "validation", "--emit must be json");
  auto steps = bnf(order);
  json arr = json::array();
  for (const auto& s : steps)
    arr.push_back(json{{"order", s.order},
                       {"K", polynomial_json(s.K)},
                       {"A", polynomial_json(s.A)}});
  auto H = hamiltonian_grading();
  emit_json(json{{"order", order},
                 {"grading", json{{"H2", to_string(H.H2)},
                                  {"H3", to_string(H.H3)},
                                  {"H4", to_string(H.H4)}}},
                 {"steps", arr}},
            out_path);
  return 0;
}

int cmd_quantize(long k, int grid, int basis, const std::string& zs, const std::string& ts,
                 const std::string& fmt, const std::string& out_path) {
  if (k < 1) fail(kExitValidation, "validation", "--k must be >= 1");
  if (grid < 1) fail(kExitValidation, "validation", "--grid must be >= 1");
  if (basis < 8 || basis > 80)
    fail(kExitValidation, "validation", "--basis must be in [8, 80]");
  if (fmt != "csv" && fmt != "json")
    fail(kExitValidation, "validation", "--out must be csv or json");
  double z = parse_real_arg(zs, "--z");
  double t = parse_real_arg(ts, "--t");

  GroundState gs = ground_state(k, basis);
  if (!gs.converged) {
    json err{{"error", json{{"code", kExitNoConvergence},
                            {"kind", "non-convergence"},
                            {"message", "ground state did not settle under basis growth"}}}};
    std::cerr << err.dump() << '\n';
    return kExitNoConvergence;
  }
  TruncationWindow w = auto_window(ground_state_bound(k), std::max(2.5, std::abs(t) + 1.5), 1e-10);
  auto basis_fns = quantization_basis(k, basis, w);
  auto pts = enumerate_integral_points(k);

  std::ostringstream csv;
  json rows = json::array();
  if (fmt == "csv") csv << "m,n,x,y,z,t,re,im\n";
  for (size_t s = 0; s < basis_fns.size(); ++s) {
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        double x = double(i) / grid, y = double(j) / grid;
        std::complex<double> v = basis_fns[s](R4Point{x, y, z, t});
        if (fmt == "csv")
          csv << pts[s].m << ',' << pts[s].n << ',' << num(x) << ',' << num(y) << ','
              << num(z) << ',' << num(t) << ',' << num(v.real()) << ',' << num(v.imag())
              << '\n';
        else
          rows.push_back(json{{"m", pts[s].m}, {"n", pts[s].n}, {"x", x}, {"y", y},
                              {"z", z}, {"t", t}, {"re", v.real()}, {"im", v.imag()}});
      }
  }
  if (fmt == "csv")
    emit(csv.str(), out_path);
  else
    emit_json(json{{"k", k},
                   {"basis", basis},
                   {"grid", grid},
                   {"lambda0", gs.lambda0},
                   {"window", json{{"W", w.W}, {"tol", w.tol}}},
                   {"sections", (json::number_unsigned_t)basis_fns.size()},
                   {"values", rows}},
              out_path);
  return 0;
}

int cmd_verify(const std::string& which, const std::string& fmt,
               const std::string& out_path) {
  std::vector<CriterionResult> results;
  if (which == "all") {
    results = run_all_criteria();
  } else {
    int id = 0;
    try {
      size_t pos = 0;
      id = std::stoi(which, &pos);
      if (pos != which.size()) throw std::invalid_argument(which);
    } catch (const std::exception&) {
      fail(kExitValidation, "validation", "verify: criterion id must be 1..12 or all");
    }
    if (id < 1 || id > 12)
      fail(kExitValidation, "validation", "verify: criterion id must be 1..12 or all");
    results.push_back(run_criterion(id));
  }
  bool all_pass = true;
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                         {"elapsed_s", r.elapsed_s}, {"limit_s", r.limit_s},
                         {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    emit_json(results.size() == 1 ? arr[0] : json{{"criteria", arr}}, out_path);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      char timing[64];
      std::snprintf(timing, sizeof(timing), "(%.2fs / %.0fs)", r.elapsed_s, r.limit_s);
      os << '[' << (r.id < 10 ? " " : "") << r.id << "] " << (r.pass ? "PASS" : "FAIL")
         << "  " << r.name << "  " << timing << "  " << r.detail << '\n';
      all_pass = all_pass && r.pass;
    }
    emit(os.str(), out_path);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta functions, coadjoint orbits and spectra on the Kodaira-Thurston nilmanifold"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--output", out_path, "write the payload to this file instead of stdout")
      ->capture_default_str();

  // group
  auto* sc_group = app.add_subcommand("group", "exact arithmetic in the extended group");
  std::string g_op = "mul", g_left, g_right;
  sc_group->add_option("--op", g_op, "mul | inv | matrix | reduce")->capture_default_str();
  sc_group->add_option("--left", g_left, "element a1,a2,a3,r,v (rationals)")->required();
  sc_group->add_option("--right", g_right, "second element for mul");

  // orbits classify
  auto* sc_orbits = app.add_subcommand("orbits", "coadjoint orbit tools");
  auto* sc_classify = sc_orbits->add_subcommand("classify", "classify a covector's orbit");
  std::string o_cov;
  sc_classify->add_option("--covector", o_cov, "alpha1,alpha2,alpha3,rho,mu")->required();

  // subalg
  auto* sc_subalg = app.add_subcommand("subalg", "subordinate subalgebra families");
  std::string s_family, s_p1 = "0", s_p2 = "0", s_mu = "-2";
  sc_subalg->add_option("--family", s_family, "c | bd | e")->required();
  sc_subalg->add_option("--p1", s_p1, "family parameter (rational, inf, -inf)")
      ->capture_default_str();
  sc_subalg->add_option("--p2", s_p2, "second parameter d (bd family)")->capture_default_str();
  sc_subalg->add_option("--mu", s_mu, "central covector value for subordination")
      ->capture_default_str();

  // foliate
  auto* sc_foliate = app.add_subcommand("foliate", "almost CY verification for a leaf parameter");
  std::string f_e;
  sc_foliate->add_option("--e", f_e, "leaf parameter e (rational)")->required();

  // intpoints
  auto* sc_ip = app.add_subcommand("intpoints", "integral points of the level-k lattice");
  long ip_k = 1;
  int ip_window = 0;
  std::string ip_fmt = "csv";
  sc_ip->add_option("--k", ip_k, "level (>= 1)")->capture_default_str();
  sc_ip->add_option("--window", ip_window,
                    "also emit all (m,n) in [-W,W]^2 with their orbit ids")
      ->capture_default_str();
  sc_ip->add_option("--emit", ip_fmt, "csv | json")->capture_default_str();

  // theta eval / check
  auto* sc_theta = app.add_subcommand("theta", "periodized theta sections");
  auto* sc_te = sc_theta->add_subcommand("eval", "evaluate one section on a base grid");
  long te_k = 1, te_m = 0, te_n = 0;
  std::string te_gauss = "0,0,1";
  int te_grid = 32;
  std::string te_z = "0", te_t = "0", te_fmt = "csv";
  double te_tol = 1e-12;
  sc_te->add_option("--k", te_k, "level")->capture_default_str();
  sc_te->add_option("--m", te_m, "character index m")->capture_default_str();
  sc_te->add_option("--n", te_n, "character index n")->capture_default_str();
  sc_te->add_option("--gaussian", te_gauss, "x0,t0,sigma[,amplitude]")->capture_default_str();
  sc_te->add_option("--grid", te_grid, "nodes per axis over (x,y) in [0,1)^2")
      ->capture_default_str();
  sc_te->add_option("--z", te_z, "fixed z coordinate")->capture_default_str();
  sc_te->add_option("--t", te_t, "fixed t coordinate")->capture_default_str();
  sc_te->add_option("--tol", te_tol, "window truncation tolerance")->capture_default_str();
  sc_te->add_option("--out", te_fmt, "csv | json")->capture_default_str();

  auto* sc_tc = sc_theta->add_subcommand("check", "pseudoperiodicity residual report");
  long tc_k = 1, tc_m = 0, tc_n = 0;
  std::string tc_gauss = "0,0,1";
  int tc_points = 5;
  double tc_tol = 1e-12;
  sc_tc->add_option("--k", tc_k, "level")->capture_default_str();
  sc_tc->add_option("--m", tc_m, "character index m")->capture_default_str();
  sc_tc->add_option("--n", tc_n, "character index n")->capture_default_str();
  sc_tc->add_option("--gaussian", tc_gauss, "x0,t0,sigma[,amplitude]")->capture_default_str();
  sc_tc->add_option("--points", tc_points, "number of sample points")->capture_default_str();
  sc_tc->add_option("--tol", tc_tol, "window truncation tolerance")->capture_default_str();

  // spectrum
  auto* sc_spec = app.add_subcommand("spectrum", "filtered Laplacian spectrum");
  long sp_k = 0;
  double sp_eps = 0;
  int sp_basis = 40, sp_count = 10;
  std::string sp_fmt = "json";
  sc_spec->add_option("--k", sp_k, "level (direct Delta_k spectrum)");
  auto* eps_opt = sc_spec->add_option("--eps", sp_eps, "scaled-form parameter instead of --k");
  sc_spec->add_option("--basis", sp_basis, "total-degree basis cut N")->capture_default_str();
  sc_spec->add_option("--count", sp_count, "number of eigenvalues")->capture_default_str();
  sc_spec->add_option("--emit", sp_fmt, "csv | json")->capture_default_str();

  // bnf
  auto* sc_bnf = app.add_subcommand("bnf", "quantum Birkhoff normal form, exact");
  int bnf_order = 4;
  std::string bnf_fmt = "json";
  sc_bnf->add_option("--order", bnf_order, "3 or 4")->capture_default_str();
  sc_bnf->add_option("--emit", bnf_fmt, "json")->capture_default_str();

  // quantize
  auto* sc_q = app.add_subcommand("quantize", "theta sections of the ground state");
  long q_k = 1;
  int q_grid = 32, q_basis = 40;
  std::string q_z = "0", q_t = "0", q_fmt = "csv";
  sc_q->add_option("--k", q_k, "level")->capture_default_str();
  sc_q->add_option("--grid", q_grid, "nodes per axis over (x,y) in [0,1)^2")
      ->capture_default_str();
  sc_q->add_option("--basis", q_basis, "Hermite basis cut for the ground state")
      ->capture_default_str();
  sc_q->add_option("--z", q_z, "fixed z coordinate")->capture_default_str();
  sc_q->add_option("--t", q_t, "fixed t coordinate")->capture_default_str();
  sc_q->add_option("--out", q_fmt, "csv | json")->capture_default_str();

  // verify
  auto* sc_v = app.add_subcommand("verify", "run a shipped acceptance criterion");
  std::string v_id;
  std::string v_fmt = "text";
  sc_v->add_option("id", v_id, "criterion id 1..12, or all")->required();
  sc_v->add_option("--emit", v_fmt, "text | json")->capture_default_str();

  // let --output (held by the root app) appear after any subcommand
  for (CLI::App* sc : {sc_group, sc_orbits, sc_classify, sc_subalg, sc_foliate, sc_ip,
                       sc_theta, sc_te, sc_tc, sc_spec, sc_bnf, sc_q, sc_v})
    sc->fallthrough();
  sc_orbits->require_subcommand(1);
  sc_theta->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::ostringstream msg;
    msg << e.what();
    json err{{"error", json{{"code", kExitValidation},
                            {"kind", "validation"},
                            {"message", msg.str()}}}};
    std::cerr << err.dump() << '\n';
    return kExitValidation;
  }

  try {
    if (sc_group->parsed()) return cmd_group(g_op, g_left, g_right, out_path);
    if (sc_classify->parsed()) return cmd_orbits_classify(o_cov, out_path);
    if (sc_orbits->parsed())
      fail(kExitValidation, "validation", "orbits: expected a subcommand (classify)");
    if (sc_subalg->parsed()) return cmd_subalg(s_family, s_p1, s_p2, s_mu, out_path);
    if (sc_foliate->parsed()) return cmd_foliate(f_e, out_path);
    if (sc_ip->parsed()) return cmd_intpoints(ip_k, ip_window, ip_fmt, out_path);
    if (sc_te->parsed())
      return cmd_theta_eval(te_k, te_m, te_n, te_gauss, te_grid, te_z, te_t, te_tol,
                            te_fmt, out_path);
    if (sc_tc->parsed())
      return cmd_theta_check(tc_k, tc_m, tc_n, tc_gauss, tc_points, tc_tol, out_path);
    if (sc_theta->parsed())
      fail(kExitValidation, "validation", "theta: expected a subcommand (eval | check)");
    if (sc_spec->parsed())
      return cmd_spectrum(sp_k, sp_eps, eps_opt->count() > 0, sp_basis, sp_count, sp_fmt,
                          out_path);
    if (sc_bnf->parsed()) return cmd_bnf(bnf_order, bnf_fmt, out_path);
    if (sc_q->parsed())
      return cmd_quantize(q_k, q_grid, q_basis, q_z, q_t, q_fmt, out_path);
    if (sc_v->parsed()) return cmd_verify(v_id, v_fmt, out_path);
    fail(kExitValidation, "validation", "no subcommand given");
  } catch (const CliError& e) {
    json err{{"error",
              json{{"code", e.code}, {"kind", e.kind}, {"message", e.message}}}};
    std::cerr << err.dump() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    json err{{"error", json{{"code", kExitValidation},
                            {"kind", "validation"},
                            {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return kExitValidation;
  }
  return 0;
}
