// Copyright 2026 The holochip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Four-waveguide coupled-mode model. The central waveguide couples to the
// east, west and auxiliary waveguides through Gaussian profiles; all
// propagation constants are equal, so the Hamiltonian has a zero diagonal
// and a two-dimensional single-photon dark subspace. When the auxiliary
// coupling dominates at both facets, that subspace is span{east, west} at
// input and output and the facet-to-facet map on it is a holonomy.

#include <array>
#include <filesystem>
#include <string_view>
#include <vector>

#include "holochip/holonomy.hpp"
#include "holochip/types.hpp"

namespace holochip::adiabatic {

/// Mode order of every 4-vector and 4x4 matrix in this module.
enum Mode : int { kEast = 0, kCentral = 1, kWest = 2, kAux = 3 };
inline constexpr int kModeCount = 4;

using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

/// peak * exp(-(z - center)^2 / (2 sigma^2)); sigma = T / sqrt 2.
struct CouplingProfile {
  double peak = 0.0;
  double center = 0.0;
  double sigma = 1.0;

  double operator()(double z) const;
};

struct PulseSchedule {
  CouplingProfile east;
  CouplingProfile west;
  CouplingProfile aux;
  double z_start = 0.0;
  double z_end = 1.0;
  int steps = 1000;
};

/// Throws ScheduleError unless every profile has a positive peak and width,
/// every profile is below 1e-6 of its peak at both ends of the span, and
/// z_start < z_end with steps >= 1.
void validate_schedule(const PulseSchedule& schedule);

/// Peak coupling times T for the east profile: peak * sqrt 2 * sigma.
double omega_t(const PulseSchedule& schedule);

/// Stretches the schedule about its midpoint by `factor` (centers, widths and
/// span), keeping the step length; steps never drop below 200.
PulseSchedule scaled(const PulseSchedule& schedule, double factor);

/// Mirror image in z about the span midpoint.
PulseSchedule reversed(const PulseSchedule& schedule);

/// Counterintuitive tripod sequence at omega_t = 10: the broad auxiliary
/// pulse brackets the east pulse (centred first) and the west pulse.
PulseSchedule default_schedule();

/// JSON text with keys east/west/aux (each {peak, center, sigma}), z_span
/// ([start, end]) and steps. Throws ScheduleError on malformed input; does
/// not apply validate_schedule.
PulseSchedule parse_schedule(std::string_view json_text);
PulseSchedule load_schedule(const std::filesystem::path& path);
std::string schedule_to_json(const PulseSchedule& schedule);

/// H(z): real couplings between the central mode and each of east, west, aux.
Matrix4c hamiltonian_at(const PulseSchedule& schedule, double z);

struct TransferMatrix {
  Matrix4c entries;
  /// max |U^dagger U - I|.
  double unitarity_error = 0.0;
};

/// Solves i dU/dz = H(z) U from z_start to z_end with fixed-step RK4.
/// Throws IntegrationError when the unitarity error exceeds 1e-6.
TransferMatrix propagate_single_photon(const PulseSchedule& schedule);

struct HolonomyEstimate {
  /// (P+1) x (P+1) facet-to-facet block over dark_basis(P).
  CMatrix block;
  /// 1 - (smallest singular value of block)^2.
  double leakage = 0.0;
};

/// Lifts the single-photon transfer matrix to the P-photon sector of all four
/// modes and keeps the rows and columns of the dark facet states
/// |n_E, 0, n_W, 0>.
HolonomyEstimate dark_holonomy(const PulseSchedule& schedule, int photon_count);

/// Same projection applied to a known transfer matrix.
HolonomyEstimate dark_holonomy(const TransferMatrix& transfer, int photon_count);

/// Phase phi minimizing || block - rotation_lift(phi, P) ||_F, P = rows - 1,
/// searched over [-pi, pi). For even P the lift only fixes phi modulo pi and
/// the result lies in [-pi/2, pi/2].
holonomy::Phase fit_phase(const CMatrix& block);

/// Landau-Zener style single-photon estimate exp(-sqrt(2) * omega_t).
double lz_error(double omega_t);

struct DiabaticPoint {
  double omega_t = 0.0;
  /// Population left outside {east, west}, averaged over the two facet inputs.
  double leakage = 0.0;
  double lz_error = 0.0;
};

/// Mean facet leakage 1 - ||B||_F^2 / 2 of the single-photon dark block.
double diabatic_leakage(const TransferMatrix& transfer);

/// One propagation per requested omega_t, each on `base` rescaled by
/// omega_t / omega_t(base).
std::vector<DiabaticPoint> diabatic_scan(const PulseSchedule& base,
                                         const std::vector<double>& omega_t_values);

}  // namespace holochip::adiabatic
