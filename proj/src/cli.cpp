#include "tridirac/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tridirac/dirac_operator.hpp"
#include "tridirac/errors.hpp"
#include "tridirac/recursion.hpp"
#include "tridirac/solution.hpp"

namespace tridirac::cli {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ParameterError("setting " + key + ": cannot read '" + text + "' as a real number");
  }
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ParameterError("setting " + key + ": cannot read '" + text + "' as an integer");
  }
  return v;
}

Representation parse_representation(const std::string& text) {
  if (text == "A" || text == "a") {
    return Representation::A;
  }
  if (text == "B" || text == "b") {
    return Representation::B;
  }
  if (text == "C" || text == "c") {
    return Representation::C;
  }
  throw ParameterError("representation must be A, B or C, got '" + text + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Check make_check(std::string name, double measured, double tolerance) {
  const bool pass = std::isfinite(measured) && measured <= tolerance;
  return {std::move(name), measured, tolerance, pass};
}

json check_json(const Check& c) {
  return {{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

json config_json(const RunConfig& c) {
  json j = {{"mode", to_string(c.mode)},
            {"A", c.phys.A},
            {"mu", c.phys.mu},
            {"kappa", c.phys.kappa},
            {"lambda", c.phys.lambda},
            {"epsilon", c.phys.epsilon},
            {"N", c.N},
            {"quad_order", c.quad_order},
            {"grid_points", c.grid_points},
            {"x_min", c.x_min},
            {"x_max", c.x_max},
            {"seed", c.seed}};
  j["omega"] = c.omega ? json(*c.omega) : json(nullptr);
  j["alpha"] = c.alpha ? json(*c.alpha) : json(nullptr);
  j["representation"] = c.representation ? json(to_string(*c.representation)) : json(nullptr);
  return j;
}

json basis_json(const BasisParams& b) {
  return {{"representation", to_string(b.rep)},
          {"beta", b.beta},
          {"omega", b.omega},
          {"alpha", b.alpha},
          {"nu", b.nu},
          {"gamma", b.gamma},
          {"rho", b.rho},
          {"tau", b.tau},
          {"kinetic_balance", b.kinetic_balance}};
}

json derived_json(const BasisParams& b, const DerivedParams& d) {
  json j = {{"p", d.p}, {"q", d.q}, {"sigma_plus", d.sigma_plus}, {"sigma_minus", d.sigma_minus}, {"zeta", d.zeta}};
  if (b.rep == Representation::C) {
    j["u"] = d.u;
    j["z"] = d.z;
    j["d"] = d.d;
    j["y_sq"] = d.y_sq;
  } else {
    j["family"] = d.family == PolyFamily::HyperbolicMP ? "hyperbolic Meixner-Pollaczek" : "Meixner-Pollaczek";
    j["theta"] = d.theta;
    j["y"] = d.y;
    j["lambda_mp"] = d.lambda_mp;
    j["sign"] = d.sign;
  }
  return j;
}

json solution_json(const SeriesSolution& sol) {
  json j = {{"basis", basis_json(sol.basis)},
            {"derived", derived_json(sol.basis, sol.derived)},
            {"N", sol.N},
            {"normalization", sol.normalization},
            {"mirrored", sol.mirrored}};
  return j;
}

// g_n or h_n for the representation of the solution
json coefficient_table(const SeriesSolution& sol) {
  CoefficientSequence seq;
  seq.values = sol.f;
  seq.scaling = Scaling::F;
  seq.nu = sol.basis.nu;
  const Scaling target = sol.basis.rep == Representation::C ? Scaling::H : Scaling::G;
  const CoefficientSequence reduced = rescale(seq, target);
  json arr = json::array();
  for (int n = 0; n <= sol.N; ++n) {
    arr.push_back({{"n", n}, {"f_n", sol.f[n]}, {"g_or_h_n", reduced.values[n]}});
  }
  return arr;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw ParameterError("cannot open output file " + path.string());
  }
  os << text;
}

std::filesystem::path prepare_out(const RunConfig& config) {
  std::filesystem::path dir(config.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) {
    throw ParameterError("output directory " + config.out + " cannot be created");
  }
  return dir;
}

std::string wavefunction_csv(const SeriesSolution& sol, const std::vector<double>& grid) {
  std::ostringstream os;
  os << "r,phi_plus,phi_minus,residual_plus,residual_minus\n";
  for (double r : grid) {
    const SpinorSample s = evaluate(sol, r);
    const DiracResidual res = dirac_residual(sol, r);
    os << fmt(r) << ',' << fmt(s.phi_plus) << ',' << fmt(s.phi_minus) << ',' << fmt(res.plus) << ','
       << fmt(res.minus) << '\n';
  }
  return os.str();
}

json residual_json(const ResidualStats& s) {
  return {{"max_residual", s.max_residual}, {"max_scale", s.max_scale}, {"relative", s.relative()}};
}

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const double s = std::max(std::abs(a[i]), std::abs(b[i]));
    if (s > 0.0) {
      worst = std::max(worst, std::abs(a[i] - b[i]) / s);
    }
  }
  return worst;
}

// The problem the basis is built for: epsilon = +1, mirrored when needed.
PhysicalParams positive_problem(const PhysicalParams& phys) {
  return phys.epsilon == 1 ? phys : mirrored_params(phys);
}

std::vector<Check> weak_form_checks(const SeriesSolution& sol) {
  const std::vector<double> w = weak_form_residual(sol);
  const std::vector<double> scale = weak_form_scale(sol);
  double interior = 0.0;
  for (int n = 0; n < sol.N; ++n) {
    interior = std::max(interior, std::abs(w[n]) / std::max(scale[n], 1e-300));
  }
  const double boundary = weak_form_boundary_error(sol);
  return {make_check("weak form <psi_n|H-eps|chi_N> vanishes for n < N (three-term recursion)", interior, 1e-8),
          make_check("weak form at n = N equals the boundary term -B_N f_{N+1} Nc", boundary, 1e-6)};
}

Check norm_check(const SeriesSolution& sol) {
  const RadialMeasure m = sol.basis.measure();
  const double norm = radial_overlap(sol.upper, sol.upper, m) + radial_overlap(sol.lower, sol.lower, m);
  return make_check("normalized series has unit norm", std::abs(norm - 1.0), 1e-10);
}

std::vector<Check> verify_checks(const RunConfig& config, json& detail) {
  std::vector<Check> checks;
  const BasisOptions opts = config.basis_options();
  const PhysicalParams pos = positive_problem(config.phys);
  const BasisParams b = select_representation(pos, opts);
  const DerivedParams d = derived_params(b);
  const int nmax = 12;

  // tridiagonal structure of H - 1 by quadrature
  double band_scale = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    band_scale = std::max({band_scale, std::abs(matrix_element_analytic(b, d, n, n)),
                           std::abs(matrix_element_analytic(b, d, n + 1, n))});
  }
  double off_band = 0.0;
  double band_err = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    for (int m = std::max(0, n - 4); m <= std::min(nmax, n + 4); ++m) {
      const double num = matrix_element_numeric(b, n, m, 1, config.quad_order);
      if (std::abs(n - m) >= 2) {
        off_band = std::max(off_band, std::abs(num) / band_scale);
      } else {
        const double ana = matrix_element_analytic(b, d, n, m);
        band_err = std::max(band_err, std::abs(num - ana) / std::max(std::abs(ana), 1e-12 * band_scale));
      }
    }
  }
  checks.push_back(make_check("<psi_n|H-1|psi_m> vanishes for 2 <= |n-m| <= 4 (tridiagonal representation)",
                              off_band, 1e-8));
  checks.push_back(make_check("quadrature bands match the closed-form matrix elements", band_err, 1e-8));

  // closed-form coefficients against the forward recurrence and the recursion
  const int ncoef = std::max(config.N, 20);
  const CoefficientSequence closed = closed_form_sequence(b, d, ncoef + 1);
  const ThreeTermRecursion rec = build_recursion(b, d);
  const CoefficientSequence forward = solve_forward(rec, ncoef + 1);
  std::vector<double> cf(closed.values.begin(), closed.values.begin() + 21);
  std::vector<double> fw(forward.values.begin(), forward.values.begin() + 21);
  checks.push_back(make_check("polynomial closed form matches the forward recurrence, n <= 20", max_rel_diff(cf, fw),
                              1e-6));
  double rec_res = 0.0;
  for (int n = 0; n <= 20; ++n) {
    rec_res = std::max(rec_res, std::abs(rec.residual(closed.values, n)) / rec.magnitude(closed.values, n));
  }
  checks.push_back(make_check("closed-form coefficients satisfy the three-term recursion", rec_res, 1e-10));

  // solution level
  const SeriesSolution sol = assemble(config.phys, opts, config.N);
  const std::vector<double> grid = report_grid(sol.basis, config.grid_points, config.x_min, config.x_max);
  double kb = 0.0;
  for (int n = 0; n <= std::min(10, config.N); ++n) {
    double diff = 0.0;
    double size = 0.0;
    for (double r : grid) {
      const auto [res, target] = kinetic_balance_residual(sol, n, r);
      diff = std::max(diff, std::abs(res));
      size = std::max(size, target);
    }
    kb = std::max(kb, diff / size);
  }
  checks.push_back(make_check(config.phys.epsilon == 1
                                  ? "kinetic balance: lambda/2 (kappa/r + W + d/dr) phi_n^+ = phi_n^-"
                                  : "kinetic balance: lambda/(eps-1) (kappa/r + W - d/dr) phi_n^- = phi_n^+",
                              kb, 1e-8));
  checks.push_back(norm_check(sol));
  for (auto& c : weak_form_checks(sol)) {
    checks.push_back(c);
  }

  // mirror map at seeded random points
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> pick(std::log(grid[kGridEdge]), std::log(grid[grid.size() - 1 - kGridEdge]));
  const SeriesSolution twice = mirror(mirror(sol));
  double inv = 0.0;
  json points = json::array();
  for (int i = 0; i < 10; ++i) {
    const double r = std::exp(pick(rng));
    points.push_back(r);
    const SpinorSample a = evaluate(sol, r);
    const SpinorSample c = evaluate(twice, r);
    const double s = std::max(std::abs(a.phi_plus), std::abs(a.phi_minus));
    inv = std::max(inv, std::max(std::abs(a.phi_plus - c.phi_plus), std::abs(a.phi_minus - c.phi_minus)) / s);
  }
  checks.push_back(make_check("mapping (A, kappa, eps, phi+, phi-) -> (-A, -kappa, -eps, phi-, phi+) is an involution",
                              inv, 1e-8));
  if (config.phys.epsilon == -1 && sol.basis.rep == Representation::C && !config.alpha) {
    const SeriesSolution direct = negative_energy_direct_c(config.phys, opts, config.N);
    double worst = 0.0;
    for (double r : points) {
      const SpinorSample a = evaluate(sol, r);
      const SpinorSample c = evaluate(direct, r);
      const double s = std::max(std::abs(a.phi_plus), std::abs(a.phi_minus));
      worst = std::max(worst, std::max(std::abs(a.phi_plus - c.phi_plus), std::abs(a.phi_minus - c.phi_minus)) / s);
    }
    checks.push_back(make_check("direct negative-energy construction agrees with the mapped solution", worst, 1e-8));
  }
  detail["solution"] = solution_json(sol);
  detail["random_r"] = points;
  return checks;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Solve:
      return "solve";
    case Mode::Verify:
      return "verify";
    case Mode::Convergence:
      return "convergence";
    case Mode::SpecialCase:
      return "special-case";
  }
  return "?";
}

BasisOptions RunConfig::basis_options() const {
  BasisOptions o;
  o.omega = omega;
  o.alpha = alpha;
  o.representation = representation;
  return o;
}

void RunConfig::validate() const {
  phys.validate();
  if (N < 1) {
    throw ParameterError("truncation N must be at least 1");
  }
  if (quad_order < 0) {
    throw ParameterError("quadrature order must be non-negative (0 selects the exact order)");
  }
  if (grid_points < 2 * kGridEdge + 2) {
    throw ParameterError("r-grid needs at least " + std::to_string(2 * kGridEdge + 2) + " points");
  }
  if (!(x_min > 0.0) || !(x_max > x_min)) {
    throw ParameterError("r-grid needs 0 < x_min < x_max");
  }
  if (omega && !(*omega > 0.0 && std::isfinite(*omega))) {
    throw ParameterError("omega must be positive and finite");
  }
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "A") {
    c.phys.A = parse_double(key, value);
  } else if (key == "mu") {
    c.phys.mu = parse_double(key, value);
  } else if (key == "kappa") {
    c.phys.kappa = static_cast<int>(parse_integer(key, value));
  } else if (key == "lambda") {
    c.phys.lambda = parse_double(key, value);
  } else if (key == "epsilon") {
    c.phys.epsilon = static_cast<int>(parse_integer(key, value));
  } else if (key == "omega") {
    c.omega = parse_double(key, value);
  } else if (key == "alpha") {
    c.alpha = parse_double(key, value);
  } else if (key == "representation") {
    c.representation = parse_representation(value);
  } else if (key == "N") {
    c.N = static_cast<int>(parse_integer(key, value));
  } else if (key == "quad_order") {
    c.quad_order = static_cast<int>(parse_integer(key, value));
  } else if (key == "grid_points") {
    c.grid_points = static_cast<int>(parse_integer(key, value));
  } else if (key == "x_min") {
    c.x_min = parse_double(key, value);
  } else if (key == "x_max") {
    c.x_max = parse_double(key, value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "seed") {
    c.seed = static_cast<std::uint64_t>(parse_integer(key, value));
  } else {
    throw ParameterError("unknown setting '" + key + "'");
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw ParameterError("cannot read config file " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Report run(const RunConfig& config) {
  config.validate();
  Report report;
  json& j = report.json;
  j["config"] = config_json(config);
  const std::filesystem::path dir = prepare_out(config);

  switch (config.mode) {
    case Mode::Solve: {
      const SeriesSolution sol = assemble(config.phys, config.basis_options(), config.N);
      const std::vector<double> grid = report_grid(sol.basis, config.grid_points, config.x_min, config.x_max);
      report.checks.push_back(norm_check(sol));
      for (auto& c : weak_form_checks(sol)) {
        report.checks.push_back(c);
      }
      j["solution"] = solution_json(sol);
      j["residual"] = residual_json(interior_residual(sol, grid));
      write_text(dir / "wavefunction.csv", wavefunction_csv(sol, grid));
      write_text(dir / "coefficients.json", coefficient_table(sol).dump(2) + "\n");
      break;
    }
    case Mode::Verify: {
      json detail;
      report.checks = verify_checks(config, detail);
      j.update(detail);
      break;
    }
    case Mode::Convergence: {
      std::vector<int> sweep;
      for (int n = 5; n < config.N; n *= 2) {
        sweep.push_back(n);
      }
      sweep.push_back(config.N);
      std::ostringstream csv;
      csv << "N,max_residual,max_scale,relative,weak_boundary,expected_boundary\n";
      json rows = json::array();
      std::vector<double> rel;
      double boundary_err = 0.0;
      for (int n : sweep) {
        const SeriesSolution sol = assemble(config.phys, config.basis_options(), n);
        const std::vector<double> grid = report_grid(sol.basis, config.grid_points, config.x_min, config.x_max);
        const ResidualStats stats = interior_residual(sol, grid);
        const double w = weak_form_residual(sol).back();
        const double expected = weak_form_boundary(sol);
        boundary_err = std::max(boundary_err, weak_form_boundary_error(sol));
        rel.push_back(stats.relative());
        csv << n << ',' << fmt(stats.max_residual) << ',' << fmt(stats.max_scale) << ',' << fmt(stats.relative()) << ','
            << fmt(w) << ',' << fmt(expected) << '\n';
        json row = residual_json(stats);
        row["N"] = n;
        row["weak_boundary"] = w;
        row["expected_boundary"] = expected;
        rows.push_back(row);
        if (n == sweep.back()) {
          j["solution"] = solution_json(sol);
        }
      }
      // worst step ratio, allowing 10% jitter, and net decrease over the sweep
      double worst_step = 0.0;
      for (std::size_t i = 1; i < rel.size(); ++i) {
        worst_step = std::max(worst_step, rel[i] / rel[i - 1]);
      }
      report.checks.push_back(make_check("interior Dirac residual decreases with N (10% jitter allowed)", worst_step, 1.1));
      report.checks.push_back(
          make_check("interior Dirac residual at the largest N below the smallest N", rel.back() / rel.front(), 0.5));
      report.checks.push_back(make_check("weak form at n = N equals the boundary term -B_N f_{N+1} Nc", boundary_err, 1e-6));
      j["sweep"] = rows;
      write_text(dir / "convergence.csv", csv.str());
      break;
    }
    case Mode::SpecialCase: {
      const DiagonalCase dc = diagonal_special_case(config.phys);
      const SeriesSolution& sol = dc.solution;
      const std::vector<double> grid = report_grid(sol.basis, config.grid_points, config.x_min, config.x_max);
      const double d1 = std::abs(matrix_element_analytic(sol.basis, sol.derived, 1, 1));
      report.checks.push_back(make_check("diagonal element (H-1)_00 vanishes", std::abs(dc.diag0) / d1, 1e-12));
      report.checks.push_back(make_check("off-diagonal element (H-1)_10 vanishes", std::abs(dc.offdiag0) / d1, 1e-12));
      report.checks.push_back(make_check("sigma- = rho^2 - 1 vanishes at the tuned omega", std::abs(dc.sigma_minus), 1e-12));
      const ResidualStats first = interior_residual(sol, grid);
      report.checks.push_back(make_check("single-term solution satisfies the first-order Dirac equation",
                                         first.relative(), 1e-8));
      for (int comp : {1, -1}) {
        double res = 0.0;
        double scale = 0.0;
        for (int i = kGridEdge; i < static_cast<int>(grid.size()) - kGridEdge; ++i) {
          const SecondOrderResidual s = second_order_residual(sol, grid[i], comp);
          res = std::max(res, std::abs(s.value));
          scale = std::max(scale, s.scale);
        }
        report.checks.push_back(make_check(comp == 1 ? "single-term solution satisfies the second-order equation for phi+"
                                                     : "single-term solution satisfies the second-order equation for phi-",
                                           scale > 0.0 ? res / scale : res, 1e-8));
      }
      std::vector<double> betas;
      for (int k = -8; k <= 8; ++k) {
        if (k != 0) {
          betas.push_back(k / 4.0);
          betas.push_back(1.0 / k);
        }
      }
      betas.push_back(sol.basis.beta);
      const std::vector<DiagonalCandidate> found = scan_diagonal_conditions(betas, 6, 40);
      int other = 0;
      json zeros = json::array();
      for (const auto& c : found) {
        zeros.push_back({{"n", c.n}, {"rho", c.rho}, {"kappa", c.kappa}, {"beta", c.beta}});
        if (!(c.n == 0 && c.rho == 1.0 && c.beta * c.kappa < 0.0)) {
          ++other;
        }
      }
      report.checks.push_back(
          make_check("diagonal conditions admit only n = 0, rho = +1, beta kappa < 0", static_cast<double>(other), 0.0));
      j["solution"] = solution_json(sol);
      j["scan_zeros"] = zeros;
      j["earlier_parametrization"] = {{"nu", dc.legacy_nu}, {"lambda", dc.legacy_lambda}};
      write_text(dir / "wavefunction.csv", wavefunction_csv(sol, grid));
      write_text(dir / "coefficients.json", coefficient_table(sol).dump(2) + "\n");
      break;
    }
  }

  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(check_json(c));
  }
  j["checks"] = checks;
  j["all_pass"] = report.all_pass();
  write_text(dir / "report.json", j.dump(2) + "\n");
  return report;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"L2 series solutions of the radial Dirac equation with W = A/r^mu at rest-mass energy"};
  app.require_subcommand(1);

  std::string config_file;
  std::optional<double> A, mu, lambda, omega, alpha, x_min, x_max;
  std::optional<int> kappa, epsilon, N, quad_order, grid_points;
  std::optional<std::string> out_dir, rep;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "flat key=value config file");
    sub->add_option("--A", A, "potential strength");
    sub->add_option("--mu", mu, "potential exponent");
    sub->add_option("--kappa", kappa, "spin-orbit quantum number");
    sub->add_option("--lambda", lambda, "Compton wavelength");
    sub->add_option("--epsilon", epsilon, "rest-mass energy, +1 or -1");
    sub->add_option("--omega", omega, "basis length scale");
    sub->add_option("--alpha", alpha, "basis power (representation C)");
    sub->add_option("--rep", rep, "force representation A, B or C");
    sub->add_option("--N", N, "truncation");
    sub->add_option("--quad-order", quad_order, "Gauss-Laguerre order (0: exact)");
    sub->add_option("--grid-points", grid_points, "r-grid size");
    sub->add_option("--x-min", x_min, "r-grid lower end in x");
    sub->add_option("--x-max", x_max, "r-grid upper end in x");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "seed for random sample points");
  };
  Mode mode = Mode::Solve;
  const std::pair<Mode, const char*> modes[] = {
      {Mode::Solve, "write wavefunction samples and coefficients"},
      {Mode::Verify, "run the invariant suite"},
      {Mode::Convergence, "sweep N and report residuals"},
      {Mode::SpecialCase, "single-term diagonal solution"},
  };
  for (const auto& [m, help] : modes) {
    CLI::App* sub = app.add_subcommand(to_string(m), help);
    add_common(sub);
    sub->callback([&mode, m = m] { mode = m; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig config;
  try {
    config.mode = mode;
    if (!config_file.empty()) {
      load_config_file(config, config_file);
    }
    auto set = [&](const char* key, const auto& v) {
      if (v) {
        std::ostringstream os;
        os.precision(17);
        os << *v;
        apply_setting(config, key, os.str());
      }
    };
    set("A", A);
    set("mu", mu);
    set("kappa", kappa);
    set("lambda", lambda);
    set("epsilon", epsilon);
    set("omega", omega);
    set("alpha", alpha);
    set("representation", rep);
    set("N", N);
    set("quad_order", quad_order);
    set("grid_points", grid_points);
    set("x_min", x_min);
    set("x_max", x_max);
    set("out", out_dir);
    set("seed", seed);
    config.validate();
  } catch (const ParameterError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  }

  Report report;
  try {
    report = run(config);
  } catch (const ParameterError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  }
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured " << fmt(c.measured) << "  tolerance "
        << fmt(c.tolerance) << '\n';
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace tridirac::cli
