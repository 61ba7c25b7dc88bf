#include "qgs/pulse.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qgs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix one_spin_rotation(Axis axis, double angle) {
  // exp(-i angle sigma/2)
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Matrix m(2);
  if (axis == Axis::X) {
    m(0, 0) = c;
    m(0, 1) = cdouble{0.0, -s};
    m(1, 0) = cdouble{0.0, -s};
    m(1, 1) = c;
  } else {
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
  }
  return m;
}

void check_phase_range(double value, const char* who) {
  if (!(value >= 0.0) || value >= kTwoPi)
    throw std::invalid_argument(std::string(who) + ": phase must lie in [0, 2pi)");
}

}  // namespace

Pulse Pulse::delay(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("delay: coupling phase must be >= 0");
  return {Kind::Delay, Spin::A, Axis::X, alpha};
}

void PulseSequence::append(const PulseSequence& other) {
  if (empty()) {
    time_order = other.time_order;
  } else if (!other.empty() && other.time_order != time_order) {
    throw std::invalid_argument("append: mixed time-order conventions");
  }
  pulses.insert(pulses.end(), other.pulses.begin(), other.pulses.end());
}

Matrix pulse_unitary(const Pulse& p, const SpinSystem&) {
  if (p.kind == Pulse::Kind::Delay) {
    // IzA IzB has eigenvalues +1/4 on |00>,|11> and -1/4 on |01>,|10>.
    const cdouble same = std::polar(1.0, -p.angle / 4.0);
    const cdouble diff = std::polar(1.0, p.angle / 4.0);
    return Matrix::diagonal({same, diff, diff, same});
  }
  const Matrix r = one_spin_rotation(p.axis, p.angle);
  const Matrix id = Matrix::identity(2);
  return p.spin == Spin::A ? kron(r, id) : kron(id, r);
}

Matrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys) {
  Matrix u = Matrix::identity(4);
  if (seq.time_order == TimeOrder::FirstListedFirst) {
    for (const Pulse& p : seq.pulses) u = pulse_unitary(p, sys) * u;
  } else {
    for (auto it = seq.pulses.rbegin(); it != seq.pulses.rend(); ++it)
      u = pulse_unitary(*it, sys) * u;
  }
  return u;
}

PulseSequence compile_rz_gadget(Spin target, double angle) {
  PulseSequence seq;
  seq.append(Pulse::hard(target, Axis::Y, kPi / 2.0));
  seq.append(Pulse::hard(target, Axis::X, angle));
  seq.append(Pulse::hard(target, Axis::Y, -kPi / 2.0));
  return seq;
}

PulseSequence compile_oracle(double phi, std::size_t tau) {
  check_phase_range(phi, "compile_oracle");
  if (tau > 3) throw std::invalid_argument("compile_oracle: tau out of range");
  PulseSequence seq;
  if (phi == 0.0) return seq;

  // diag(1,1,1,e^{i phi}) splits into z rotations of phi/2 - pi on each spin
  // plus a coupling phase of 2 pi - phi (one global phase left over).
  const double z_angle = phi / 2.0 - kPi;
  PulseSequence core;
  core.append(compile_rz_gadget(Spin::A, z_angle));
  core.append(compile_rz_gadget(Spin::B, z_angle));
  core.append(Pulse::delay(kTwoPi - phi));

  // Flip spins whose target bit is 0 so the native |11> phase lands on |tau>.
  std::vector<Spin> flips;
  if (((tau >> 1) & 1) == 0) flips.push_back(Spin::A);
  if ((tau & 1) == 0) flips.push_back(Spin::B);
  for (Spin s : flips) seq.append(Pulse::hard(s, Axis::X, kPi));
  seq.append(core);
  for (Spin s : flips) seq.append(Pulse::hard(s, Axis::X, kPi));
  return seq;
}

PulseSequence compile_diffusion(double theta) {
  check_phase_range(theta, "compile_diffusion");
  PulseSequence seq;
  if (theta == 0.0) return seq;

  // Phase on |00> instead of |11>: the per-spin z angle flips sign and gains
  // the same pi offset, pi - theta/2.
  const double z_angle = kPi - theta / 2.0;
  seq.append(compile_walsh());
  seq.append(compile_rz_gadget(Spin::A, z_angle));
  seq.append(compile_rz_gadget(Spin::B, z_angle));
  seq.append(Pulse::delay(kTwoPi - theta));
  seq.append(compile_walsh());
  return seq;
}

PulseSequence compile_iteration(double theta, double phi, std::size_t tau) {
  PulseSequence seq = compile_oracle(phi, tau);
  seq.append(compile_diffusion(theta));
  return seq;
}

PulseSequence compile_walsh() {
  PulseSequence seq;
  for (Spin s : {Spin::A, Spin::B}) {
    seq.append(Pulse::hard(s, Axis::X, kPi));
    seq.append(Pulse::hard(s, Axis::Y, -kPi / 2.0));
  }
  return seq;
}

std::array<PulseSequence, 3> compile_pseudopure() {
  PulseSequence p0;

  // Each [Y^{pi/2}, delay(pi), X^{pi/2}] block acts on populations as a CNOT
  // controlled by the other spin. P1 applies the B block then the A block and
  // cycles populations |01> <- |10> <- |11> <- |01>; P2 mirrors the spin roles
  // and produces the inverse cycle.
  PulseSequence p1;
  p1.append(Pulse::hard(Spin::B, Axis::Y, kPi / 2.0));
  p1.append(Pulse::delay(kPi));
  p1.append(Pulse::hard(Spin::B, Axis::X, kPi / 2.0));
  p1.append(Pulse::hard(Spin::A, Axis::Y, kPi / 2.0));
  p1.append(Pulse::delay(kPi));
  p1.append(Pulse::hard(Spin::A, Axis::X, kPi / 2.0));

  PulseSequence p2;
  p2.append(Pulse::hard(Spin::A, Axis::Y, kPi / 2.0));
  p2.append(Pulse::delay(kPi));
  p2.append(Pulse::hard(Spin::A, Axis::X, kPi / 2.0));
  p2.append(Pulse::hard(Spin::B, Axis::Y, kPi / 2.0));
  p2.append(Pulse::delay(kPi));
  p2.append(Pulse::hard(Spin::B, Axis::X, kPi / 2.0));

  return {p0, p1, p2};
}

double sequence_duration(const PulseSequence& seq, const SpinSystem& sys) {
  if (!(sys.j_coupling > 0.0))
    throw std::invalid_argument("sequence_duration: J coupling must be positive");
  double seconds = 0.0;
  for (const Pulse& p : seq.pulses) {
    if (p.kind == Pulse::Kind::Delay)
      seconds += p.angle / (kTwoPi * sys.j_coupling);
    else
      seconds += sys.hard_pulse_duration;
  }
  return seconds;
}

namespace {

std::string format_degrees(double rad) {
  const double deg = rad * 180.0 / kPi;
  char buf[64];
  if (std::abs(deg - std::round(deg)) < 1e-9)
    std::snprintf(buf, sizeof buf, "%.1f", std::round(deg));
  else
    std::snprintf(buf, sizeof buf, "%.10g", deg);
  return buf;
}

}  // namespace

std::string sequence_to_text(const PulseSequence& seq, const SpinSystem& sys) {
  std::ostringstream out;
  out << "# order="
      << (seq.time_order == TimeOrder::FirstListedFirst ? "first-listed-first"
                                                        : "last-listed-first")
      << "\n";
  char jbuf[64];
  std::snprintf(jbuf, sizeof jbuf, "%.10g", sys.j_coupling);
  out << "# J=" << jbuf << "Hz\n";
  for (const Pulse& p : seq.pulses) {
    if (p.kind == Pulse::Kind::Delay) {
      out << "DELAY " << format_degrees(p.angle) << "\n";
    } else {
      out << (p.axis == Axis::X ? 'X' : 'Y') << ' ' << (p.spin == Spin::A ? 'A' : 'B')
          << ' ' << format_degrees(p.angle) << "\n";
    }
  }
  return out.str();
}

namespace {

double parse_degrees(const std::string& token, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw SequenceParseError(line, "bad angle '" + token + "'");
  }
  if (used != token.size()) throw SequenceParseError(line, "bad angle '" + token + "'");
  if (!std::isfinite(value)) throw SequenceParseError(line, "non-finite angle");
  return value * kPi / 180.0;
}

}  // namespace

PulseSequence parse_sequence_text(const std::string& text) {
  PulseSequence seq;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == '#') {
      std::string rest = line.substr(line.find('#') + 1);
      const auto eq = rest.find("order=");
      if (eq != std::string::npos) {
        std::string value = rest.substr(eq + 6);
        value.erase(value.find_last_not_of(" \t\r") + 1);
        if (value == "first-listed-first")
          seq.time_order = TimeOrder::FirstListedFirst;
        else if (value == "last-listed-first")
          seq.time_order = TimeOrder::LastListedFirst;
        else
          throw SequenceParseError(lineno, "unknown order '" + value + "'");
      }
      continue;  // other # lines (J=..., comments) carry no state
    }
    if (tok == "DELAY") {
      std::string angle;
      if (!(ls >> angle)) throw SequenceParseError(lineno, "DELAY needs an angle");
      const double rad = parse_degrees(angle, lineno);
      if (rad < 0.0) throw SequenceParseError(lineno, "DELAY phase must be >= 0");
      seq.append(Pulse::delay(rad));
    } else if (tok == "X" || tok == "Y") {
      std::string spin, angle;
      if (!(ls >> spin >> angle))
        throw SequenceParseError(lineno, "pulse needs spin and angle");
      if (spin != "A" && spin != "B")
        throw SequenceParseError(lineno, "unknown spin '" + spin + "'");
      seq.append(Pulse::hard(spin == "A" ? Spin::A : Spin::B,
                             tok == "X" ? Axis::X : Axis::Y,
                             parse_degrees(angle, lineno)));
    } else {
      throw SequenceParseError(lineno, "unknown directive '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) throw SequenceParseError(lineno, "trailing token '" + extra + "'");
  }
  return seq;
}

}  // namespace qgs
