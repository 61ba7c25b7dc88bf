#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgs/algebra.hpp"

namespace qgs {

enum class Spin { A, B };
enum class Axis { X, Y };

// Two-spin heteronuclear system in the doubly rotating frame: only the
// J-coupling term survives between pulses, so delays are stored as coupling
// phase (2 pi J t) and seconds enter through duration accounting only.
struct SpinSystem {
  double j_coupling = 647.451;          // Hz
  double larmor_a = 500e6;              // Hz, documentation only
  double larmor_b = 220e6;              // Hz, documentation only
  double hard_pulse_duration = 10e-6;   // seconds per hard pulse
};

struct Pulse {
  enum class Kind { Hard, Delay };

  Kind kind = Kind::Hard;
  Spin spin = Spin::A;   // hard pulses only
  Axis axis = Axis::X;   // hard pulses only
  double angle = 0.0;    // hard: signed rotation (rad); delay: coupling phase (rad, >= 0)

  static Pulse hard(Spin s, Axis ax, double rad) { return {Kind::Hard, s, ax, rad}; }
  static Pulse delay(double alpha);  // throws on negative phase
};

enum class TimeOrder { FirstListedFirst, LastListedFirst };

struct PulseSequence {
  std::vector<Pulse> pulses;
  TimeOrder time_order = TimeOrder::FirstListedFirst;

  std::size_t size() const { return pulses.size(); }
  bool empty() const { return pulses.empty(); }
  void append(const Pulse& p) { pulses.push_back(p); }
  void append(const PulseSequence& other);  // requires matching time_order
};

// Hard pulse: exp(-i angle I_axis) on one spin (spin A is the high-order
// tensor factor). Delay: exp(-i alpha IzA IzB), diagonal with phases -+ alpha/4.
Matrix pulse_unitary(const Pulse& p, const SpinSystem& sys);

// Ordered product of the pulse unitaries under the sequence's time order.
Matrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys);

// Three-pulse composite realizing exp(-i angle I_z) on the target spin.
// The sign layout (Y+90, X angle, Y-90 in time order) is the one combination
// out of the eight candidate Y/X sign choices that reproduces the z rotation
// exactly (no residual global phase); tests enumerate the alternatives.
PulseSequence compile_rz_gadget(Spin target, double angle);

// Sequence equal (up to global phase) to the phase oracle diag(..e^{i phi}..)
// with the phase on |tau>. Native target is tau = 3; other indices are
// reached by conjugating with X^pi pulses on the spins whose bits differ.
// phi = 0 returns the empty sequence; phi outside [0, 2 pi) throws.
PulseSequence compile_oracle(double phi, std::size_t tau = 3);

// W sandwich around the |00> phase gadget; equals diffusion_general(2, theta)
// up to global phase.
PulseSequence compile_diffusion(double theta);

// Oracle then diffusion: one complete search iteration.
PulseSequence compile_iteration(double theta, double phi, std::size_t tau = 3);

// Per spin: X^pi then Y^{-pi/2}, giving -i H per spin (-W overall).
PulseSequence compile_walsh();

// Preparation sequences {P0, P1, P2} for temporal averaging. P0 is empty;
// P1 and P2 cyclically permute the populations of |01>,|10>,|11> (in opposite
// directions) while leaving |00> fixed, so the three outputs average to an
// effective pure |00>.
std::array<PulseSequence, 3> compile_pseudopure();

// Sum of hard-pulse durations plus delay times alpha / (2 pi J).
double sequence_duration(const PulseSequence& seq, const SpinSystem& sys);

// Text form: "# order=..." and "# J=...Hz" headers, then one pulse per line,
// angles in degrees ("X A 90.0", "DELAY 270.0").
std::string sequence_to_text(const PulseSequence& seq, const SpinSystem& sys);

class SequenceParseError : public std::runtime_error {
 public:
  SequenceParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PulseSequence parse_sequence_text(const std::string& text);

}  // namespace qgs
