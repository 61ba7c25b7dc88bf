#include "qgs/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgs/analysis.hpp"
#include "qgs/density.hpp"
#include "qgs/pulse.hpp"
#include "qgs/search.hpp"

namespace qgs::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  return value;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("angle: empty value");

  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) return parse_number(s, "angle");

  std::string prefix = s.substr(0, pos);
  std::string suffix = s.substr(pos + 2);

  double coefficient = 1.0;
  if (prefix == "-") {
    coefficient = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    if (prefix.back() == '*') prefix.pop_back();
    coefficient = parse_number(prefix, "angle");
  }

  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix[0] != '/') throw std::invalid_argument("angle: cannot parse '" + text + "'");
    divisor = parse_number(suffix.substr(1), "angle");
    if (divisor == 0.0) throw std::invalid_argument("angle: division by zero");
  }
  return coefficient * kPi / divisor;
}

namespace {

struct AngleRange {
  double lo = 0.0;
  double hi = 0.0;
};

AngleRange parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range: expected LO:HI, got '" + text + "'");
  AngleRange r;
  r.lo = parse_angle(text.substr(0, colon));
  r.hi = parse_angle(text.substr(colon + 1));
  if (!(r.lo > 0.0) || r.hi > kTwoPi + 1e-12 || r.lo > r.hi)
    throw std::invalid_argument("range: endpoints must satisfy 0 < LO <= HI <= 2pi");
  return r;
}

void check_open_phase(double value, const std::string& what) {
  if (!(value > 0.0) || !(value < kTwoPi))
    throw std::invalid_argument(what + ": must lie strictly inside (0, 2pi)");
}

void write_output(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::ios_base::failure("write failed for '" + path + "'");
}

std::string format_double(double x) { return nlohmann::json(x).dump(); }

// ---- subcommand bodies ----

int cmd_search(int n, std::size_t tau, const std::string& theta_text,
               const std::string& phi_text, int iters, std::optional<int> round_digits,
               const std::string& format, const std::string& out_path, std::ostream& out) {
  SearchConfig config;
  config.n = n;
  config.tau = tau;
  config.theta = parse_angle(theta_text);
  config.phi = parse_angle(phi_text);
  config.iterations = iters;
  config.validate();

  const IterationTrace trace = grover_generalized(config);
  const std::string body =
      format == "json" ? trace_json(trace) : trace_csv(trace, round_digits);
  write_output(body, out_path, out);
  return 0;
}

int cmd_sweep(int n, std::size_t tau, const std::string& theta_range,
              const std::string& phi_range, int steps, int iters,
              const std::string& out_path, std::ostream& out) {
  const AngleRange tr = parse_range(theta_range);
  const AngleRange pr = parse_range(phi_range);
  if (steps < 1) throw std::invalid_argument("sweep: --steps must be >= 1 (empty range)");
  if (iters < 1) throw std::invalid_argument("sweep: --iters must be >= 1");

  auto grid_value = [steps](const AngleRange& r, int i) {
    if (steps == 1) return r.lo;
    return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  };

  std::ostringstream body;
  body << "theta,phi,max_p_success,argmax_step\n";
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      SearchConfig config;
      config.n = n;
      config.tau = tau;
      config.theta = grid_value(tr, i);
      config.phi = grid_value(pr, j);
      config.iterations = iters;
      config.validate();
      const IterationTrace trace = grover_generalized(config);
      double best = -1.0;
      int best_step = 0;
      for (int k = 1; k <= iters; ++k) {
        const double p = trace.steps[static_cast<std::size_t>(k)].p_success;
        if (p > best) {
          best = p;
          best_step = k;
        }
      }
      body << format_double(config.theta) << ',' << format_double(config.phi) << ','
           << format_double(best) << ',' << best_step << "\n";
    }
  }
  write_output(body.str(), out_path, out);
  return 0;
}

int cmd_compile(const std::string& theta_text, const std::string& phi_text, std::size_t tau,
                double j_coupling, const std::string& out_path, std::ostream& out) {
  const double theta = parse_angle(theta_text);
  const double phi = parse_angle(phi_text);
  check_open_phase(theta, "compile: --theta");
  check_open_phase(phi, "compile: --phi");
  if (tau > 3) throw std::invalid_argument("compile: --tau must be in [0, 3]");
  if (!(j_coupling > 0.0)) throw std::invalid_argument("compile: --j must be positive");

  SpinSystem sys;
  sys.j_coupling = j_coupling;
  const PulseSequence seq = compile_iteration(theta, phi, tau);
  write_output(sequence_to_text(seq, sys), out_path, out);
  return 0;
}

int cmd_pulse_sim(const std::string& sequence_path, const std::string& theta_text,
                  const std::string& phi_text, int iters, double epsilon,
                  const std::string& out_path, const std::string& density_path,
                  const std::string& figure_path, std::ostream& out) {
  if (iters < 0) throw std::invalid_argument("pulse-sim: --iters must be >= 0");
  SpinSystem sys;

  PulsePathResult result;
  if (!sequence_path.empty()) {
    std::ifstream in(sequence_path);
    if (!in) throw std::ios_base::failure("cannot open '" + sequence_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const PulseSequence seq = parse_sequence_text(buf.str());
    result = run_pulse_path(seq, iters, sys, epsilon);
  } else {
    if (theta_text.empty() || phi_text.empty())
      throw std::invalid_argument("pulse-sim: need --theta and --phi (or --sequence FILE)");
    const double theta = parse_angle(theta_text);
    const double phi = parse_angle(phi_text);
    check_open_phase(theta, "pulse-sim: --theta");
    check_open_phase(phi, "pulse-sim: --phi");
    result = run_pulse_path(theta, phi, iters, sys, epsilon);
  }

  std::ostringstream body;
  body << "step,marked_population\n";
  for (std::size_t k = 0; k < result.marked_population.size(); ++k)
    body << k << ',' << format_double(result.marked_population[k]) << "\n";
  write_output(body.str(), out_path, out);

  if (!density_path.empty()) save_density(result.final_rho, density_path);
  if (!figure_path.empty())
    write_output(figure_data_json(figure_data(result.final_rho)) + "\n", figure_path, out);
  return 0;
}

int cmd_compare(const std::string& theory_path, const std::string& experiment_path,
                std::ostream& out) {
  const LoadedDensity theory = load_density(theory_path);
  const LoadedDensity experiment = load_density(experiment_path);
  const double delta = relative_error(theory.rho, experiment.rho);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", delta * 100.0);
  out << "delta_rho = " << buf << "%\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized quantum search simulator with an NMR pulse path"};
  app.name("qgs");
  app.require_subcommand(1);

  // search
  auto* search = app.add_subcommand("search", "Run the ideal search and emit the trace");
  int s_n = 2;
  std::size_t s_tau = 3;
  std::string s_theta, s_phi;
  int s_iters = 10;
  int s_round = -1;
  std::string s_format = "csv", s_out;
  search->add_option("--n", s_n, "qubit count");
  search->add_option("--tau", s_tau, "marked basis index");
  search->add_option("--theta", s_theta, "prepared-state rotation")->required();
  search->add_option("--phi", s_phi, "marked-state rotation")->required();
  search->add_option("--iters", s_iters, "iteration count");
  search->add_option("--round", s_round, "round magnitude columns to this many decimals");
  search->add_option("--format", s_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--out", s_out, "output path (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Grid of max success probability over (theta, phi)");
  int w_n = 2;
  std::size_t w_tau = 3;
  std::string w_theta_range, w_phi_range, w_out;
  int w_steps = 0, w_iters = 10;
  sweep->add_option("--n", w_n, "qubit count");
  sweep->add_option("--tau", w_tau, "marked basis index");
  sweep->add_option("--theta-range", w_theta_range, "LO:HI within (0, 2pi]")->required();
  sweep->add_option("--phi-range", w_phi_range, "LO:HI within (0, 2pi]")->required();
  sweep->add_option("--steps", w_steps, "grid points per axis")->required();
  sweep->add_option("--iters", w_iters, "iterations searched per cell");
  sweep->add_option("--out", w_out, "output path (default stdout)");

  // compile
  auto* compile = app.add_subcommand("compile", "Compile one search iteration to pulses");
  std::string c_theta, c_phi, c_out;
  std::size_t c_tau = 3;
  double c_j = SpinSystem{}.j_coupling;
  compile->add_option("--theta", c_theta, "prepared-state rotation in (0, 2pi)")->required();
  compile->add_option("--phi", c_phi, "marked-state rotation in (0, 2pi)")->required();
  compile->add_option("--tau", c_tau, "marked basis index in [0, 3]");
  compile->add_option("--j", c_j, "J coupling in Hz (header only)");
  compile->add_option("--out", c_out, "output path (default stdout)");

  // pulse-sim
  auto* psim = app.add_subcommand("pulse-sim", "Pseudo-pure prep and compiled-path evolution");
  std::string p_sequence, p_theta, p_phi, p_out, p_density, p_figure;
  int p_iters = 10;
  double p_epsilon = 0.1;
  auto* p_seq_opt =
      psim->add_option("--sequence", p_sequence, "pulse file applied per iteration (skips W)");
  p_seq_opt->excludes(
      psim->add_option("--theta", p_theta, "built-in iteration: prepared-state rotation"));
  p_seq_opt->excludes(
      psim->add_option("--phi", p_phi, "built-in iteration: marked-state rotation"));
  psim->add_option("--iters", p_iters, "iteration count");
  psim->add_option("--epsilon", p_epsilon, "thermal deviation scale");
  psim->add_option("--out", p_out, "marked-population CSV path (default stdout)");
  psim->add_option("--density-out", p_density, "write final density matrix JSON here");
  psim->add_option("--figure-out", p_figure, "write figure-data JSON here");

  // compare
  auto* compare = app.add_subcommand("compare", "Relative error between two density files");
  std::string m_theory, m_experiment;
  compare->add_option("theory", m_theory, "theory density JSON")->required();
  compare->add_option("experiment", m_experiment, "experiment density JSON")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (search->parsed())
      return cmd_search(s_n, s_tau, s_theta, s_phi, s_iters,
                        s_round >= 0 ? std::optional<int>(s_round) : std::nullopt,
                        s_format, s_out, out);
    if (sweep->parsed())
      return cmd_sweep(w_n, w_tau, w_theta_range, w_phi_range, w_steps, w_iters, w_out, out);
    if (compile->parsed()) return cmd_compile(c_theta, c_phi, c_tau, c_j, c_out, out);
    if (psim->parsed())
      return cmd_pulse_sim(p_sequence, p_theta, p_phi, p_iters, p_epsilon, p_out, p_density,
                           p_figure, out);
    if (compare->parsed()) return cmd_compare(m_theory, m_experiment, out);
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const SequenceParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qgs::cli
