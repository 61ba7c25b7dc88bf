#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgs/density.hpp"
#include "qgs/search.hpp"

namespace qgs {

enum class PhaseSetting { Matched, Mismatched };

// Two-decimal (|a_tau|, |b|) magnitudes for ten iterations of the n=2, tau=3
// experiment: theta = phi = pi/2 (matched) and theta = pi/2, phi = 3pi/2
// (mismatched).
struct ReferenceRow {
  double abs_a_tau;
  double abs_c;
};
const std::array<ReferenceRow, 10>& reference_trace(PhaseSetting setting);

// Per-step relative errors (percent) reported for the original hardware runs
// of the two demonstrations. Reference data only: they measure spectrometer
// imperfections plus manual spectrum integration, so no simulator output is
// expected to reproduce them.
const std::array<double, 10>& reference_hardware_error_percent(PhaseSetting setting);

// Round x to `digits` decimals, nearest, with exact ties (snapped against
// float noise) going to even. 0.625 -> 0.62; 0.976281 -> 0.98.
double round_decimals(double x, int digits);

struct RowCheck {
  int step = 0;
  double got_abs_a = 0.0;
  double got_abs_c = 0.0;
  double ref_abs_a = 0.0;
  double ref_abs_c = 0.0;
  bool pass = false;
};

// Rounds steps 1..10 of the trace to two decimals and compares against the
// reference rows. Requires exactly ten post-start steps.
std::vector<RowCheck> compare_to_reference(const IterationTrace& trace,
                                           PhaseSetting setting);

// ||rho_th - rho_exp||_F / ||rho_th||_F. Rejects a zero theory matrix.
double relative_error(const DensityMatrix& rho_th, const DensityMatrix& rho_exp);

struct ErrorReport {
  std::vector<double> delta;                  // per-step relative error
  static constexpr const char* norm = "frobenius";
  std::vector<std::string> percent_rows() const;  // two-digit style, e.g. "18%"
};
ErrorReport error_table(const std::vector<DensityMatrix>& theory,
                        const std::vector<DensityMatrix>& experiment);

// JSON density-matrix files: {"n": 2, "re": [[...]], "im": [[...]]},
// 12 significant digits on write. Loading validates the schema, requires a
// power-of-two dimension, and rejects gross non-Hermiticity (defect > 0.1);
// smaller defects are recorded and tolerated (experimental data is noisy).
struct LoadedDensity {
  DensityMatrix rho;
  double hermiticity_defect = 0.0;
};
LoadedDensity load_density(const std::string& path);
void save_density(const DensityMatrix& rho, const std::string& path);
std::string density_to_json(const DensityMatrix& rho);
LoadedDensity density_from_json(const std::string& text);

// Real/imaginary bar-chart grids plus the |11> corner population.
struct FigureData {
  std::vector<std::vector<double>> re;
  std::vector<std::vector<double>> im;
  double marked_population = 0.0;
};
FigureData figure_data(const DensityMatrix& rho);
std::string figure_data_json(const FigureData& fig);

// CSV trace: header step,re_a_tau,im_a_tau,abs_a_tau,abs_c,p_success.
// round_digits switches the magnitude columns to fixed-decimal output.
std::string trace_csv(const IterationTrace& trace, std::optional<int> round_digits = {});
std::string trace_json(const IterationTrace& trace);

}  // namespace qgs
