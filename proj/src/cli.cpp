#include "salpeter/cli.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/nboson.hpp"
#include "salpeter/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace salpeter::cli {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_number(double x) {
  if (x == 0.0)
    x = 0.0; // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::stod(format_number(x)); }

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::string discrepancy_log;
  double tol_abs = 1e-12;
  double tol_rel = 1e-10;

  Tolerance tolerance() const { return {tol_abs, tol_rel}; }
};

void add_common(CLI::App *cmd, CommonOptions &opt, bool needs_config) {
  auto *config =
      cmd->add_option("--config", opt.config_path, "problem JSON file");
  if (needs_config)
    config->required();
  cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
  cmd->add_option("--format", opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tol-abs", opt.tol_abs, "absolute quadrature tolerance");
  cmd->add_option("--tol-rel", opt.tol_rel, "relative quadrature tolerance");
  cmd->add_option("--discrepancy-log", opt.discrepancy_log,
                  "append convention-adjudication findings to this file");
}

void write_output(const CommonOptions &opt, const std::string &content,
                  std::ostream &out) {
  if (opt.out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f)
    throw InvalidParameter("out", "cannot open " + opt.out_path);
  f << content;
}

std::string to_csv(const std::vector<std::string> &header,
                   const std::vector<std::vector<std::string>> &rows) {
  std::ostringstream s;
  for (std::size_t i = 0; i < header.size(); ++i)
    s << (i ? "," : "") << header[i];
  s << "\n";
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      s << (i ? "," : "") << row[i];
    s << "\n";
  }
  return s.str();
}

std::string dump_json(const ordered_json &j) { return j.dump(2) + "\n"; }

void append_discrepancy(const std::string &path, const std::string &line) {
  if (path.empty())
    return;
  std::ofstream f(path, std::ios::app);
  if (!f)
    throw InvalidParameter("discrepancy-log", "cannot open " + path);
  f << "- " << line << "\n";
}

// --- reference-value adjudication -------------------------------------
//
// The two-term exponential kernel with a = 1, b = 2, v_a = v_b = 1 has
// published ground energies at m = 0, 1/2, 1. Cross-checking shows those
// numbers solve the secular equation only when every coupling is halved;
// solve/oracle runs on this configuration report both variants.

struct ReferencePoint {
  double mass;
  double energy;
};

constexpr ReferencePoint two_term_reference[] = {
    {0.0, -1.14462}, {0.5, -0.814543}, {1.0, -0.36131}};

constexpr double reference_match_tol = 1e-3;

bool matches_two_term_shape(const Problem &p) {
  if (p.dimension != Dimension::OneD ||
      p.kinetic.variant != KineticVariant::Salpeter || p.rank() != 2)
    return false;
  const auto *f0 = std::get_if<Exponential1D>(&p.terms[0].f.variant());
  const auto *f1 = std::get_if<Exponential1D>(&p.terms[1].f.variant());
  return f0 && f1 && p.terms[0].symmetric && p.terms[1].symmetric &&
         f0->a == 1.0 && f1->a == 2.0 && p.terms[0].v == 1.0 &&
         p.terms[1].v == 1.0;
}

std::optional<double> reference_energy(const Problem &p) {
  if (!matches_two_term_shape(p))
    return std::nullopt;
  for (const auto &r : two_term_reference)
    if (std::abs(p.kinetic.mass - r.mass) < 1e-12)
      return r.energy;
  return std::nullopt;
}

ordered_json reference_check_json(const Problem &p, double as_configured,
                                  double reference, const Tolerance &tol,
                                  const std::string &log_path) {
  const double halved = solve_ground_energy(p, 0.5, tol).energy();
  const bool configured_matches =
      std::abs(as_configured - reference) <= reference_match_tol;
  const bool halved_matches = std::abs(halved - reference) <= reference_match_tol;
  ordered_json check;
  check["reference_E"] = round12(reference);
  check["as_configured_E"] = round12(as_configured);
  check["halved_couplings_E"] = round12(halved);
  check["as_configured_matches"] = configured_matches;
  check["halved_couplings_match"] = halved_matches;
  append_discrepancy(
      log_path,
      "two-term exponential kernel, m = " + format_number(p.kinetic.mass) +
          ": reference energy " + format_number(reference) +
          (halved_matches ? " matches" : " does not match") +
          " the half-coupling variant (E = " + format_number(halved) +
          "); the equations as configured give E = " +
          format_number(as_configured) +
          (configured_matches ? " (matches reference)"
                              : " (does not match reference)"));
  return check;
}

// --- solve -------------------------------------------------------------

struct SolveReport {
  BoundState state;
  double det_residual;
  double consistency;
  double quad_error;
};

SolveReport solve_with_diagnostics(const Problem &p, const Tolerance &tol) {
  BoundState state = solve_ground_energy(p, std::nullopt, tol);
  SecularMatrix j = j_matrix(p, state.energy(), tol);
  const auto n = j.entries.rows();
  const double det =
      (Eigen::MatrixXd::Identity(n, n) - j.entries).determinant();
  const double residual = consistency_residual(state, tol);
  return {std::move(state), std::abs(det), residual, j.quad_error};
}

ordered_json result_json(const Problem &p, const SolveReport &r) {
  ordered_json res;
  res["E"] = round12(r.state.energy());
  res["e"] = round12(r.state.energy() - p.kinetic.mass);
  ordered_json cs = ordered_json::array();
  for (double c : r.state.coefficients())
    cs.push_back(round12(c));
  res["coefficients"] = cs;
  res["det_residual"] = round12(r.det_residual);
  res["consistency_residual"] = round12(r.consistency);
  res["quad_error"] = round12(r.quad_error);
  res["iterations"] = r.state.iterations();
  ordered_json roots = ordered_json::array();
  for (double e : r.state.all_roots())
    roots.push_back(round12(e));
  res["all_roots"] = roots;
  return res;
}

int cmd_solve(const CommonOptions &opt, std::ostream &out) {
  const Problem p = load_problem_file(opt.config_path);
  const Tolerance tol = opt.tolerance();
  const SolveReport r = solve_with_diagnostics(p, tol);

  ordered_json res = result_json(p, r);
  if (auto ref = reference_energy(p))
    res["reference_check"] = reference_check_json(p, r.state.energy(), *ref,
                                                  tol, opt.discrepancy_log);

  if (opt.format == "csv") {
    std::vector<std::string> header{"E",          "e",
                                    "det_residual", "consistency_residual",
                                    "quad_error", "iterations"};
    std::vector<std::string> row{
        format_number(r.state.energy()),
        format_number(r.state.energy() - p.kinetic.mass),
        format_number(r.det_residual),
        format_number(r.consistency),
        format_number(r.quad_error),
        std::to_string(r.state.iterations())};
    for (std::size_t i = 0; i < r.state.coefficients().size(); ++i) {
      header.push_back("c" + std::to_string(i + 1));
      row.push_back(format_number(r.state.coefficients()[i]));
    }
    write_output(opt, to_csv(header, {row}), out);
  } else {
    ordered_json doc;
    doc["command"] = "solve";
    doc["problem"] = problem_to_json(p);
    doc["result"] = res;
    write_output(opt, dump_json(doc), out);
  }
  return exit_ok;
}

// --- sweeps ------------------------------------------------------------

struct SweepFailures {
  int no_bound_state = 0;
  int other = 0;

  int exit_code() const {
    if (other > 0)
      return exit_convergence_failure;
    if (no_bound_state > 0)
      return exit_no_bound_state;
    return exit_ok;
  }
};

int cmd_sweep_mass(const CommonOptions &opt, double m_min, double m_max,
                   int steps, std::ostream &out) {
  if (!(m_min >= 0 && m_min < m_max))
    throw InvalidParameter("m-min/m-max", "need 0 <= m_min < m_max");
  if (steps < 2)
    throw InvalidParameter("steps", "sweeps need at least 2 steps");
  Problem p = load_problem_file(opt.config_path);
  const Tolerance tol = opt.tolerance();

  SweepFailures failures;
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (int i = 0; i < steps; ++i) {
    const double m = m_min + (m_max - m_min) * i / (steps - 1);
    p.kinetic.mass = m;
    ordered_json jr;
    jr["m"] = round12(m);
    try {
      const BoundState st = solve_ground_energy(p, std::nullopt, tol);
      rows.push_back({format_number(m), format_number(st.energy()),
                      format_number(st.energy() - m)});
      jr["E"] = round12(st.energy());
      jr["e"] = round12(st.energy() - m);
    } catch (const NoBoundState &ex) {
      ++failures.no_bound_state;
      rows.push_back({format_number(m), "", ""});
      jr["error"] = ex.what();
    } catch (const Error &ex) {
      ++failures.other;
      rows.push_back({format_number(m), "", ""});
      jr["error"] = ex.what();
    }
    jrows.push_back(jr);
  }

  if (opt.format == "csv") {
    write_output(opt, to_csv({"m", "E", "e"}, rows), out);
  } else {
    ordered_json doc;
    doc["command"] = "sweep-mass";
    doc["problem"] = problem_to_json(p);
    doc["rows"] = jrows;
    write_output(opt, dump_json(doc), out);
  }
  return failures.exit_code();
}

int cmd_coupling_curve(const CommonOptions &opt, double e_min, double e_max,
                       int steps, std::ostream &out) {
  if (steps < 2)
    throw InvalidParameter("steps", "sweeps need at least 2 steps");
  if (!(e_min < e_max))
    throw InvalidParameter("e-min/e-max", "need e_min < e_max");
  const Problem p = load_problem_file(opt.config_path);
  const Tolerance tol = opt.tolerance();

  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (int i = 0; i < steps; ++i) {
    const double energy = e_min + (e_max - e_min) * i / (steps - 1);
    const double rc = reciprocal_coupling(p, energy, tol);
    rows.push_back({format_number(energy), format_number(rc)});
    ordered_json jr;
    jr["E"] = round12(energy);
    jr["one_over_v"] = round12(rc);
    jrows.push_back(jr);
  }

  if (opt.format == "csv") {
    write_output(opt, to_csv({"E", "one_over_v"}, rows), out);
  } else {
    ordered_json doc;
    doc["command"] = "coupling-curve";
    doc["problem"] = problem_to_json(p);
    doc["rows"] = jrows;
    write_output(opt, dump_json(doc), out);
  }
  return exit_ok;
}

int cmd_nboson(const CommonOptions &opt, double u_min, double u_max, int steps,
               std::vector<double> lambdas, int n_particles,
               std::ostream &out) {
  if (!(u_min > 0 && u_min < u_max))
    throw InvalidParameter("u-min/u-max", "need 0 < u_min < u_max");
  if (steps < 2)
    throw InvalidParameter("steps", "sweeps need at least 2 steps");
  if (lambdas.empty()) {
    if (n_particles > 0) {
      BosonSystem probe{n_particles, 1.0};
      validate_boson_system(probe);
      lambdas.push_back(probe.lambda());
    } else {
      lambdas = {0.5, 1.0};
    }
  }
  for (double l : lambdas)
    if (!(l >= 0.5 && l <= 1.0))
      throw InvalidParameter("lambda", "(N-1)/N lies in [1/2, 1]");
  const Tolerance tol = opt.tolerance();

  std::vector<std::string> header{"u", "lower_pp", "lower_bound_exists"};
  for (double l : lambdas) {
    header.push_back("upper_pp_lambda_" + format_number(l));
    header.push_back("s_star_lambda_" + format_number(l));
  }

  SweepFailures failures;
  std::vector<std::vector<std::string>> rows;
  ordered_json jrows = ordered_json::array();
  for (int i = 0; i < steps; ++i) {
    const double u = u_min + (u_max - u_min) * i / (steps - 1);
    std::vector<std::string> row{format_number(u)};
    ordered_json jr;
    jr["u"] = round12(u);
    try {
      const LowerBound lower = lower_bound_curve(u, tol);
      row.push_back(format_number(lower.energy_pp));
      row.push_back(lower.bound ? "1" : "0");
      jr["lower_pp"] = round12(lower.energy_pp);
      jr["lower_bound_exists"] = lower.bound;
    } catch (const Error &ex) {
      ++failures.other;
      row.insert(row.end(), {"", ""});
      jr["error"] = ex.what();
    }
    ordered_json juppers = ordered_json::array();
    for (double l : lambdas) {
      try {
        const UpperBound upper = upper_bound_curve(u, l);
        row.push_back(format_number(upper.energy_pp));
        row.push_back(format_number(upper.s_star));
        ordered_json ju;
        ju["lambda"] = round12(l);
        ju["upper_pp"] = round12(upper.energy_pp);
        ju["s_star"] = round12(upper.s_star);
        juppers.push_back(ju);
      } catch (const Error &ex) {
        ++failures.other;
        row.insert(row.end(), {"", ""});
        ordered_json ju;
        ju["lambda"] = round12(l);
        ju["error"] = ex.what();
        juppers.push_back(ju);
      }
    }
    jr["upper"] = juppers;
    rows.push_back(row);
    jrows.push_back(jr);
  }

  if (opt.format == "csv") {
    write_output(opt, to_csv(header, rows), out);
  } else {
    ordered_json doc;
    doc["command"] = "nboson";
    doc["rows"] = jrows;
    write_output(opt, dump_json(doc), out);
  }
  return failures.exit_code();
}

int cmd_critical(const CommonOptions &opt, std::ostream &out) {
  const Tolerance tol = opt.tolerance();
  ordered_json doc;
  doc["command"] = "critical";
  std::vector<std::string> header;
  std::vector<std::string> row;
  if (opt.config_path.empty()) {
    const double uc = critical_u(tol);
    doc["result"]["u_c"] = round12(uc);
    doc["result"]["one_over_u_c"] = round12(1.0 / uc);
    header = {"u_c", "one_over_u_c"};
    row = {format_number(uc), format_number(1.0 / uc)};
  } else {
    const Problem p = load_problem_file(opt.config_path);
    const CriticalThreshold c = critical_threshold(p, tol);
    doc["problem"] = problem_to_json(p);
    doc["result"]["diverges_at_threshold"] = c.diverges;
    if (c.diverges) {
      doc["result"]["v_c"] = nullptr;
      header = {"diverges_at_threshold", "v_c"};
      row = {"1", ""};
    } else {
      doc["result"]["v_c"] = round12(c.vc);
      doc["result"]["one_over_v_c"] = round12(c.reciprocal_vc);
      header = {"diverges_at_threshold", "v_c", "one_over_v_c"};
      row = {"0", format_number(c.vc), format_number(c.reciprocal_vc)};
    }
  }
  if (opt.format == "csv")
    write_output(opt, to_csv(header, {row}), out);
  else
    write_output(opt, dump_json(doc), out);
  return exit_ok;
}

int cmd_oracle(const CommonOptions &opt, int grid, double k_max,
               std::ostream &out) {
  if (grid < 64)
    throw InvalidParameter("grid", "oracle grid needs >= 64 points");
  const Problem p = load_problem_file(opt.config_path);
  const Tolerance tol = opt.tolerance();

  const int n_coarse = grid % 2 == 0 ? grid + 1 : grid;
  const int n_fine = 2 * n_coarse - 1;
  const OracleResult coarse = oracle_discretized_energy(p, {k_max, n_coarse});
  const OracleResult fine = oracle_discretized_energy(p, {k_max, n_fine});
  // Simpson weights converge as h^4 on the mapped grid.
  const double extrapolated =
      fine.energy + (fine.energy - coarse.energy) / 15.0;
  const BoundState solver = solve_ground_energy(p, std::nullopt, tol);
  const double deviation = std::abs(solver.energy() - extrapolated);

  ordered_json res;
  res["grids"] = ordered_json::array(
      {ordered_json{{"n_points", n_coarse},
                    {"k_max", round12(k_max)},
                    {"energy", round12(coarse.energy)}},
       ordered_json{{"n_points", n_fine},
                    {"k_max", round12(k_max)},
                    {"energy", round12(fine.energy)}}});
  res["richardson"] = round12(extrapolated);
  res["solver_E"] = round12(solver.energy());
  res["deviation"] = round12(deviation);
  res["secular_fallback"] = coarse.secular_fallback;
  if (auto ref = reference_energy(p)) {
    ordered_json check = reference_check_json(p, solver.energy(), *ref, tol,
                                              opt.discrepancy_log);
    check["oracle_matches_as_configured"] =
        deviation <= 1e-4 * std::max(1.0, std::abs(solver.energy()));
    res["reference_check"] = check;
  }

  if (opt.format == "csv") {
    write_output(
        opt,
        to_csv({"n_coarse", "E_coarse", "n_fine", "E_fine", "richardson",
                "solver_E", "deviation", "secular_fallback"},
               {{std::to_string(n_coarse), format_number(coarse.energy),
                 std::to_string(n_fine), format_number(fine.energy),
                 format_number(extrapolated), format_number(solver.energy()),
                 format_number(deviation), fine.secular_fallback ? "1" : "0"}}),
        out);
  } else {
    ordered_json doc;
    doc["command"] = "oracle";
    doc["problem"] = problem_to_json(p);
    doc["result"] = res;
    write_output(opt, dump_json(doc), out);
  }
  return exit_ok;
}

} // namespace

Problem problem_from_json(const json &j) {
  try {
    Problem p;
    const std::string dim = j.at("dimension").get<std::string>();
    if (dim == "1d")
      p.dimension = Dimension::OneD;
    else if (dim == "3d")
      p.dimension = Dimension::ThreeD;
    else
      throw InvalidParameter("dimension", "expected \"1d\" or \"3d\"");

    const json &kin = j.at("kinetic");
    const std::string form = kin.at("form").get<std::string>();
    if (form == "salpeter")
      p.kinetic.variant = KineticVariant::Salpeter;
    else if (form == "nonrelativistic")
      p.kinetic.variant = KineticVariant::NonRelativistic;
    else
      throw InvalidParameter("kinetic.form",
                             "expected \"salpeter\" or \"nonrelativistic\"");
    p.kinetic.mass = kin.at("mass").get<double>();

    auto parse_profile = [](const json &pj) -> MomentumProfile {
      const std::string type = pj.at("type").get<std::string>();
      if (type == "exponential")
        return MomentumProfile(Exponential1D{pj.at("a").get<double>()});
      if (type == "yamaguchi")
        return MomentumProfile(Yamaguchi3D{pj.at("beta").get<double>()});
      if (type == "gauss")
        return MomentumProfile(Gauss3D{pj.at("beta").get<double>()});
      throw InvalidParameter("profile.type", "unknown profile \"" + type +
                                                 "\"");
    };

    for (const json &tj : j.at("terms")) {
      const double v = tj.at("v").get<double>();
      MomentumProfile f = parse_profile(tj.at("f"));
      if (tj.contains("g"))
        p.terms.emplace_back(v, std::move(f), parse_profile(tj.at("g")));
      else
        p.terms.emplace_back(v, std::move(f));
    }
    return validate_problem(p), p;
  } catch (const json::exception &ex) {
    throw InvalidParameter("config", ex.what());
  }
}

ordered_json problem_to_json(const Problem &p) {
  ordered_json j;
  j["dimension"] = p.dimension == Dimension::OneD ? "1d" : "3d";
  j["kinetic"] = {
      {"form", p.kinetic.variant == KineticVariant::Salpeter
                   ? "salpeter"
                   : "nonrelativistic"},
      {"mass", round12(p.kinetic.mass)}};
  ordered_json terms = ordered_json::array();
  for (const auto &t : p.terms) {
    ordered_json tj;
    tj["v"] = round12(t.v);
    auto profile_json = [](const MomentumProfile &mp) -> ordered_json {
      if (const auto *e = std::get_if<Exponential1D>(&mp.variant()))
        return {{"type", "exponential"}, {"a", round12(e->a)}};
      if (const auto *y = std::get_if<Yamaguchi3D>(&mp.variant()))
        return {{"type", "yamaguchi"}, {"beta", round12(y->beta)}};
      if (const auto *g = std::get_if<Gauss3D>(&mp.variant()))
        return {{"type", "gauss"}, {"beta", round12(g->beta)}};
      return {{"type", "numeric"}};
    };
    tj["f"] = profile_json(t.f);
    if (!t.symmetric)
      tj["g"] = profile_json(t.g);
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j;
}

Problem load_problem_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw InvalidParameter("config", "cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception &ex) {
    throw InvalidParameter("config", std::string("parse error: ") + ex.what());
  }
  return problem_from_json(j);
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"bound states of semirelativistic Hamiltonians with "
               "separable non-local kernels"};
  app.require_subcommand(1);

  CommonOptions solve_opt, sweep_opt, curve_opt, nb_opt, crit_opt, oracle_opt;

  CLI::App *solve = app.add_subcommand("solve", "ground state of a problem");
  add_common(solve, solve_opt, true);

  CLI::App *sweep =
      app.add_subcommand("sweep-mass", "ground energy as a function of mass");
  add_common(sweep, sweep_opt, true);
  double m_min = 0.0, m_max = 10.0;
  int sweep_steps = 21;
  sweep->add_option("--m-min", m_min, "first mass");
  sweep->add_option("--m-max", m_max, "last mass");
  sweep->add_option("--steps", sweep_steps, "number of rows (>= 2)");

  CLI::App *curve = app.add_subcommand(
      "coupling-curve", "reciprocal coupling 1/v against energy");
  add_common(curve, curve_opt, true);
  double e_min = -2.0, e_max = 0.5;
  int curve_steps = 21;
  curve->add_option("--e-min", e_min, "first energy");
  curve->add_option("--e-max", e_max, "last energy (must stay below m)");
  curve->add_option("--steps", curve_steps, "number of rows (>= 2)");

  CLI::App *nb = app.add_subcommand(
      "nboson", "per-particle bounds for the N-boson Gauss problem");
  add_common(nb, nb_opt, false);
  double u_min = 0.8, u_max = 3.0;
  int nb_steps = 23;
  std::vector<double> lambdas;
  int n_particles = 0;
  nb->add_option("--u-min", u_min, "first scaled coupling u = (N-1)v");
  nb->add_option("--u-max", u_max, "last scaled coupling");
  nb->add_option("--steps", nb_steps, "number of rows (>= 2)");
  nb->add_option("--lambda", lambdas,
                 "lambda = (N-1)/N columns (default: 0.5 and 1)");
  nb->add_option("--N", n_particles, "particle count (alternative to --lambda)");

  CLI::App *crit = app.add_subcommand(
      "critical", "critical coupling (N-boson u_c, or v_c of --config)");
  add_common(crit, crit_opt, false);

  CLI::App *oracle = app.add_subcommand(
      "oracle", "dense-grid cross-check of the ground energy");
  add_common(oracle, oracle_opt, true);
  int grid = 800;
  double k_max = 1200.0;
  oracle->add_option("--grid", grid, "coarse grid size (fine = 2n-1)");
  oracle->add_option("--kmax", k_max, "grid cutoff in momentum");

  std::vector<const char *> argv{"salpeter"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return exit_invalid_config;
  }

  try {
    if (solve->parsed())
      return cmd_solve(solve_opt, out);
    if (sweep->parsed())
      return cmd_sweep_mass(sweep_opt, m_min, m_max, sweep_steps, out);
    if (curve->parsed())
      return cmd_coupling_curve(curve_opt, e_min, e_max, curve_steps, out);
    if (nb->parsed())
      return cmd_nboson(nb_opt, u_min, u_max, nb_steps, lambdas, n_particles,
                        out);
    if (crit->parsed())
      return cmd_critical(crit_opt, out);
    if (oracle->parsed())
      return cmd_oracle(oracle_opt, grid, k_max, out);
    err << "no subcommand\n";
    return exit_invalid_config;
  } catch (const NoBoundState &ex) {
    err << ex.what() << "\n";
    return exit_no_bound_state;
  } catch (const InvalidParameter &ex) {
    err << ex.what() << "\n";
    return exit_invalid_config;
  } catch (const ThresholdViolation &ex) {
    err << ex.what() << "\n";
    return exit_invalid_config;
  } catch (const Error &ex) {
    err << ex.what() << "\n";
    return exit_convergence_failure;
  }
}

} // namespace salpeter::cli
