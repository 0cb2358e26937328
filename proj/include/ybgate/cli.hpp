// Copyright 2026 The ybgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end: verify, matrix, synthesize and sweep subcommands.
// run() never throws; it returns 0 on pass, 1 on a failed verification and
// 2 on usage or I/O errors.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ybgate/document.hpp"
#include "ybgate/eightvertex.hpp"
#include "ybgate/entangle.hpp"
#include "ybgate/errors.hpp"
#include "ybgate/gates.hpp"
#include "ybgate/hamiltonian.hpp"
#include "ybgate/linalg.hpp"
#include "ybgate/state.hpp"
#include "ybgate/yangbaxter.hpp"

namespace ybgate::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSeedEnv = "YBG_SEED";

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct Options {
  std::string target;
  std::string sign;
  double phi = 0.0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.5;
  std::string q;
  double tol = 0.0;
  int grid = 0;
  int phi_grid = 0;
  std::string format;
  std::string out;
  std::string matrix_file;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  double step = kDefaultStep;

  // Set when the corresponding flag appeared on the command line.
  bool has_phi = false, has_theta = false, has_x = false, has_q = false;
  bool has_tol = false, has_grid = false, has_phi_grid = false;
  bool has_matrix_file = false;
};

inline std::vector<Sign> parse_signs(const std::string& s, bool allow_both) {
  if (s == "+") return {Sign::kPlus};
  if (s == "-") return {Sign::kMinus};
  if (allow_both && s == "both") return {Sign::kPlus, Sign::kMinus};
  throw UsageError("--sign must be '+' or '-'" +
                   std::string(allow_both ? " or 'both'" : ""));
}

inline Sign parse_sign(const std::string& s) { return parse_signs(s, false).front(); }

inline double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError("cannot parse " + what + " from '" + text + "'");
  }
  return v;
}

/// "re,im" or "re".
inline Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, "--q"), 0.0};
  return {parse_real(text.substr(0, comma), "--q"),
          parse_real(text.substr(comma + 1), "--q")};
}

inline std::uint64_t seed_from_env() {
  const char* raw = std::getenv(kSeedEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  const std::string text(raw);
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  if (used != text.size()) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return seed;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  file << text;
  if (!file) throw UsageError("write to '" + o.out + "' failed");
}

/// k * 2pi / n for k = 0..n-1.
inline std::vector<double> periodic_grid(int n) {
  if (n < 1) throw UsageError("grid size must be positive");
  std::vector<double> g;
  for (int k = 0; k < n; ++k) g.push_back(2.0 * std::numbers::pi * k / n);
  return g;
}

/// n points from `from` to `to` inclusive.
inline std::vector<double> linspace(double from, double to, int n) {
  if (n < 2) throw UsageError("at least two grid points are required");
  std::vector<double> g;
  for (int k = 0; k < n; ++k) g.push_back(from + (to - from) * k / (n - 1));
  return g;
}

inline std::string sign_label(Sign s) { return std::string("sign=") + sign_char(s); }

inline double resolved_theta(const Options& o) {
  if (o.has_theta && o.has_x) throw UsageError("--theta and --x are mutually exclusive");
  return o.has_x ? theta_from_x(o.x) : o.theta;
}

inline Complex resolved_q(const Options& o) {
  if (o.has_q && o.has_phi) throw UsageError("--q and --phi are mutually exclusive");
  if (o.has_q) return parse_complex(o.q);
  return deformation_from_phi(o.phi);
}

inline double tolerance_or(const Options& o, double fallback) {
  if (!o.has_tol) return fallback;
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  return o.tol;
}

template <std::size_t N>
double unitarity_of_document(const MatrixDocument& doc) {
  return unitarity_residual(doc.to_matrix<N>());
}

// verify --------------------------------------------------------------------

inline SweepReport verify_braid(const Options& o) {
  SweepReport r{"braid_residual", "phi", tolerance_or(o, 1e-12), {}};
  if (o.has_matrix_file) {
    r.param = "matrix";
    const MatrixDocument doc = MatrixDocument::parse(read_file(o.matrix_file));
    const double res = braid_residual(doc.to_matrix<4>());
    r.points.push_back({"matrix-file", 0.0, res, res});
    return r;
  }
  for (Sign s : parse_signs(o.sign, true)) {
    for (double phi : periodic_grid(o.has_phi_grid ? o.phi_grid : 32)) {
      const double res = braid_residual(build_b_phi(s, phi));
      r.points.push_back({"phi;" + sign_label(s), phi, res, res});
    }
    for (double angle : periodic_grid(8)) {
      const double res = braid_residual(build_b(s, deformation_from_phi(angle)));
      r.points.push_back({"q-angle;unnormalized;" + sign_label(s), angle, res, res});
    }
  }
  return r;
}

inline SweepReport verify_qybe(const Options& o) {
  if (o.has_matrix_file) throw UsageError("qybe verification takes a family, not a matrix file");
  SweepReport r{"qybe_residual", "x", tolerance_or(o, 1e-10), {}};
  const int n = o.has_grid ? o.grid : 16;
  if (n < 1) throw UsageError("--grid must be positive");
  for (Sign s : parse_signs(o.sign, true)) {
    for (double phi : periodic_grid(o.has_phi_grid ? o.phi_grid : 8)) {
      const Complex q = deformation_from_phi(phi);
      auto family = [&](double t) { return build_R_x(s, q, t); };
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const double x = 2.0 * i / n;
          const double y = 2.0 * j / n;
          const double res = qybe_residual(family, x, y);
          r.points.push_back({"x;y=" + format_double(y) + ";phi=" + format_double(phi) +
                                  ";" + sign_label(s),
                              x, res, res});
        }
      }
    }
  }
  return r;
}

inline SweepReport verify_unitarity(const Options& o) {
  SweepReport r{"unitarity_residual", "x", tolerance_or(o, 1e-12), {}};
  if (o.has_matrix_file) {
    r.param = "matrix";
    const MatrixDocument doc = MatrixDocument::parse(read_file(o.matrix_file));
    double res = 0.0;
    switch (doc.dim) {
      case 2: res = unitarity_of_document<2>(doc); break;
      case 4: res = unitarity_of_document<4>(doc); break;
      case 8: res = unitarity_of_document<8>(doc); break;
      default: throw DimMismatch("matrix dimension must be 2, 4 or 8");
    }
    r.points.push_back({"matrix-file", 0.0, res, res});
    return r;
  }
  for (Sign s : parse_signs(o.sign, true)) {
    for (double phi : periodic_grid(o.has_phi_grid ? o.phi_grid : 8)) {
      for (double x : linspace(-3.0, 3.0, o.has_grid ? o.grid : 61)) {
        const double res = unitarity_residual(build_R_x_normalized(s, phi, x));
        r.points.push_back({"x;phi=" + format_double(phi) + ";" + sign_label(s), x, res, res});
      }
    }
  }
  return r;
}

inline SweepReport verify_schrodinger(const Options& o) {
  if (o.has_matrix_file) throw UsageError("schrodinger verification takes no matrix file");
  if (!(o.step > 0.0)) throw UsageError("--step must be positive");
  SweepReport r{"schrodinger_residual", "x", tolerance_or(o, 1e-6), {}};
  std::mt19937_64 rng(seed_from_env());
  std::vector<PureState2Q> states;
  for (int k = 0; k < 8; ++k) states.push_back(random_state(rng));
  for (Sign s : parse_signs(o.sign, true)) {
    for (std::size_t k = 0; k < states.size(); ++k) {
      for (double x : {0.4, 1.0, 2.0}) {
        const double res = schrodinger_residual(s, o.phi, states[k], x, o.step);
        r.points.push_back({"x;state=" + std::to_string(k) + ";" + sign_label(s), x, res, res});
      }
    }
  }
  return r;
}

inline SweepReport verify_exponential(const Options& o) {
  if (o.has_matrix_file) throw UsageError("exponential verification takes no matrix file");
  SweepReport r{"exponential_residual", "theta", tolerance_or(o, 1e-12), {}};
  const int n = o.has_grid ? o.grid : 16;
  for (Sign s : parse_signs(o.sign, true)) {
    for (double phi : periodic_grid(o.has_phi_grid ? o.phi_grid : 8)) {
      for (double t : periodic_grid(n)) {
        const double theta = t - std::numbers::pi;
        const std::string tail = ";phi=" + format_double(phi) + ";" + sign_label(s);
        const double r_res = residual(R_from_H(s, phi, theta), build_R_theta(s, phi, theta));
        r.points.push_back({"R_from_H" + tail, theta, r_res, r_res});
        const Mat4 generator = Complex{0.0, -0.5 * theta} * axis_coupling(s, phi);
        const double u_res = residual(evolution_U(s, phi, theta), expm(generator));
        r.points.push_back({"evolution_U" + tail, theta, u_res, u_res});
      }
    }
  }
  return r;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  static const std::map<std::string, std::function<SweepReport(const Options&)>> kRelations{
      {"braid", verify_braid},
      {"qybe", verify_qybe},
      {"unitarity", verify_unitarity},
      {"schrodinger", verify_schrodinger},
      {"exponential", verify_exponential},
  };
  const SweepReport report = kRelations.at(o.target)(o);
  emit(o, o.format == "csv" ? report.to_csv() : report.to_json(), out);
  return report.pass() ? kExitPass : kExitFail;
}

// matrix --------------------------------------------------------------------

inline int cmd_matrix(const Options& o, std::ostream& out) {
  std::map<std::string, std::string> meta{{"family", o.target}};
  auto with_sign = [&] {
    const Sign s = parse_sign(o.sign);
    meta["sign"] = std::string(1, sign_char(s));
    return s;
  };
  auto with_phi = [&] {
    meta["phi"] = format_double(o.phi);
    return o.phi;
  };
  auto with_q = [&] {
    const Complex q = resolved_q(o);
    meta["q"] = format_double(q.real()) + "," + format_double(q.imag());
    return q;
  };
  auto with_theta = [&] {
    const double theta = resolved_theta(o);
    meta["theta"] = format_double(theta);
    return theta;
  };
  auto with_x = [&] {
    meta["x"] = format_double(o.x);
    return o.x;
  };

  Mat4 m;
  if (o.target == "b") {
    const Sign s = with_sign();
    m = build_b(s, with_q());
  } else if (o.target == "bphi") {
    const Sign s = with_sign();
    m = build_b_phi(s, with_phi());
  } else if (o.target == "Rx") {
    const Sign s = with_sign();
    const Complex q = with_q();
    m = build_R_x(s, q, with_x());
  } else if (o.target == "Rtheta") {
    const Sign s = with_sign();
    const double phi = with_phi();
    m = build_R_theta(s, phi, with_theta());
  } else if (o.target == "H") {
    const Sign s = with_sign();
    m = hamiltonian_const(s, with_phi());
  } else if (o.target == "Hx") {
    const Sign s = with_sign();
    const double phi = with_phi();
    m = hamiltonian_x(s, phi, with_x());
  } else if (o.target == "U") {
    const Sign s = with_sign();
    const double phi = with_phi();
    m = evolution_U(s, phi, with_theta());
  } else {
    m = cnot();
  }
  emit(o, MatrixDocument::from_matrix(m, std::move(meta)).to_json(), out);
  return kExitPass;
}

// synthesize ----------------------------------------------------------------

inline int cmd_synthesize(const Options& o, std::ostream& out) {
  const double tol = tolerance_or(o, 1e-12);
  nlohmann::ordered_json j;
  j["route"] = o.target;
  Mat4 m;
  std::map<std::string, std::string> meta{{"family", "synthesized"}, {"route", o.target}};
  if (o.target == "theorem1") {
    m = cnot_via_theorem1();
    const EntanglingVerdict v = is_entangling(build_b_phi(Sign::kMinus, 0.0),
                                              kEntanglingThreshold, seed_from_env());
    j["generator_entangling"] = v.entangling;
    j["generator_concurrence_max"] = v.concurrence_max;
  } else {
    const double theta = o.has_theta ? o.theta : std::numbers::pi / 2.0;
    meta["phi"] = format_double(o.phi);
    meta["theta"] = format_double(theta);
    m = cnot_via_evolution(o.phi, theta);
    j["phi"] = o.phi;
    j["theta"] = theta;
    j["phase_gate"] = "diag(1,-i)";
  }
  const PhaseComparison cmp = compare_up_to_phase(m, cnot(), tol);
  j["matrix"] = nlohmann::ordered_json::parse(MatrixDocument::from_matrix(m, meta).to_json());
  j["cnot_residual"] = cmp.residual;
  j["phase_verdict"] = verdict_name(cmp.verdict);
  j["phase"] = cmp.phase;
  j["phase_residual"] = cmp.phase_residual;
  j["tolerance"] = tol;
  const bool pass = cmp.residual < tol;
  j["pass"] = pass;
  emit(o, j.dump(2) + "\n", out);
  return pass ? kExitPass : kExitFail;
}

// sweep ---------------------------------------------------------------------

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const std::vector<double> grid = linspace(o.from, o.to, o.steps);
  const Sign s = parse_sign(o.sign);
  const std::string& p = o.param;
  auto unsupported = [&] {
    return UsageError("sweep " + o.target + " does not support --param " + p);
  };

  SweepReport r{o.target, p, 0.0, {}};
  if (o.target == "concurrence") {
    r.tolerance = tolerance_or(o, 1e-12);
    for (double v : grid) {
      double theta = 0.0;
      double phi = o.phi;
      if (p == "theta") {
        theta = v;
      } else if (p == "x") {
        theta = theta_from_x(v);
      } else if (p == "phi") {
        theta = o.theta;
        phi = v;
      } else {
        throw unsupported();
      }
      const double c = concurrence(r_theta_action(s, phi, theta, 0));
      r.points.push_back({p, v, c, std::abs(c - std::abs(std::cos(2.0 * theta)))});
    }
  } else if (o.target == "unitarity") {
    r.tolerance = tolerance_or(o, 1e-12);
    for (double v : grid) {
      double res = 0.0;
      if (p == "x") {
        res = unitarity_residual(build_R_x_normalized(s, o.phi, v));
      } else if (p == "theta") {
        res = unitarity_residual(build_R_theta(s, o.phi, v));
      } else if (p == "phi") {
        res = unitarity_residual(build_b_phi(s, v));
      } else {
        throw unsupported();
      }
      r.points.push_back({p, v, res, res});
    }
  } else if (o.target == "braid") {
    r.tolerance = tolerance_or(o, 1e-12);
    if (p != "phi") throw unsupported();
    for (double v : grid) {
      const double res = braid_residual(build_b_phi(s, v));
      r.points.push_back({p, v, res, res});
    }
  } else {
    r.tolerance = tolerance_or(o, 1e-10);
    if (p != "x" && p != "phi") throw unsupported();
    for (double v : grid) {
      const double phi = p == "phi" ? v : o.phi;
      const double x = p == "x" ? v : (o.has_x ? o.x : 0.3);
      const Complex q = deformation_from_phi(phi);
      const double res = qybe_residual([&](double t) { return build_R_x(s, q, t); }, x, o.y);
      r.points.push_back({p, v, res, res});
    }
  }
  emit(o, o.format == "json" ? r.to_json() : r.to_csv(), out);
  return r.pass() ? kExitPass : kExitFail;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Yang-Baxter gate toolkit: eight-vertex braid generators, "
               "their Hamiltonians and CNOT synthesis",
               "ybgate"};
  app.require_subcommand(1);

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Pass threshold on the max residual")
        ->each([&](const std::string&) { o.has_tol = true; });
  };
  auto add_phi = [&](CLI::App* sub) {
    sub->add_option("--phi", o.phi, "Deformation angle phi (radians), q = e^{-i phi}")
        ->each([&](const std::string&) { o.has_phi = true; });
  };
  auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", o.theta, "Angle variable theta (radians)")
        ->each([&](const std::string&) { o.has_theta = true; });
  };
  auto add_x = [&](CLI::App* sub) {
    sub->add_option("--x", o.x, "Spectral parameter x")
        ->each([&](const std::string&) { o.has_x = true; });
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this path instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check a relation over a parameter grid");
  verify->add_option("relation", o.target, "Relation to check")
      ->required()
      ->check(CLI::IsMember({"braid", "qybe", "unitarity", "schrodinger", "exponential"}));
  o.sign = "both";
  verify->add_option("--sign", o.sign, "Branch: +, - or both (default both)");
  verify->add_option("--grid", o.grid, "Points per spectral axis")
      ->each([&](const std::string&) { o.has_grid = true; });
  verify->add_option("--phi-grid", o.phi_grid, "Points on the phi circle")
      ->each([&](const std::string&) { o.has_phi_grid = true; });
  verify->add_option("--matrix-file", o.matrix_file, "Matrix document to check instead")
      ->each([&](const std::string&) { o.has_matrix_file = true; });
  verify->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--step", o.step, "Finite-difference step (schrodinger)");
  add_phi(verify);
  add_tol(verify);
  add_out(verify);

  CLI::App* matrix = app.add_subcommand("matrix", "Emit a matrix document");
  matrix->add_option("family", o.target, "Matrix family")
      ->required()
      ->check(CLI::IsMember({"b", "bphi", "Rx", "Rtheta", "H", "Hx", "U", "cnot"}));
  matrix->add_option("--q", o.q, "Deformation parameter as re,im")
      ->each([&](const std::string&) { o.has_q = true; });
  add_phi(matrix);
  add_theta(matrix);
  add_x(matrix);
  add_out(matrix);

  CLI::App* synth = app.add_subcommand("synthesize", "Build CNOT from the braid generator");
  synth->add_option("route", o.target, "Construction route")
      ->required()
      ->check(CLI::IsMember({"theorem1", "evolution"}));
  add_phi(synth);
  add_theta(synth);
  add_tol(synth);
  add_out(synth);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate a quantity along one parameter");
  sweep->add_option("quantity", o.target, "Quantity to tabulate")
      ->required()
      ->check(CLI::IsMember({"concurrence", "unitarity", "braid", "qybe"}));
  sweep->add_option("--param", o.param, "Swept parameter: theta, x or phi")
      ->required()
      ->check(CLI::IsMember({"theta", "x", "phi"}));
  sweep->add_option("--from", o.from, "First grid value")->required();
  sweep->add_option("--to", o.to, "Last grid value")->required();
  sweep->add_option("--steps", o.steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--format", o.format, "Output format (default csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--y", o.y, "Second spectral argument for qybe sweeps");
  add_phi(sweep);
  add_theta(sweep);
  add_x(sweep);
  add_tol(sweep);
  add_out(sweep);

  // --sign is shared by matrix and sweep with a single-branch default.
  for (CLI::App* sub : {matrix, sweep}) {
    sub->add_option("--sign", o.sign, "Branch: + or - (default -)");
  }
  matrix->preparse_callback([&](std::size_t) { o.sign = "-"; });
  sweep->preparse_callback([&](std::size_t) { o.sign = "-"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return detail::cmd_verify(o, out);
    if (matrix->parsed()) return detail::cmd_matrix(o, out);
    if (synth->parsed()) return detail::cmd_synthesize(o, out);
    return detail::cmd_sweep(o, out);
  } catch (const std::exception& e) {
    err << "ybgate: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ybgate::cli
