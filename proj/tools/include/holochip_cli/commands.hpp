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

// Dataset builders behind the `holochip` subcommands. Each returns a Table
// whose header is the command's published column list.

#include <string>

#include "holochip/adiabatic.hpp"
#include "holochip/fock.hpp"
#include "holochip_cli/table.hpp"

namespace holochip::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidLabel = 2,
  kUnwritablePath = 3,
  kIntegratorAbort = 4,
  kScheduleViolation = 5,
};

inline constexpr int kMaxVolumePhotons = 6;

/// Raised for an input label that is malformed or not in dark_basis(P).
class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `label` and checks it belongs to dark_basis(photons).
fock::OccupationState parse_input_label(const std::string& label, int photons);

/// Columns: index, label, n_east, n_west.
Table basis_table(int photons);

/// Entanglement of the chip output versus phase on a uniform [0, pi) grid,
/// followed by marker rows at the maximally entangling phase ("phi_me") and
/// at pi/4 ("pi_over_4"). Columns: phi, entropy_bits, purity, renyi2_bits,
/// input_label, marker (empty on grid rows).
Table sweep_table(const fock::OccupationState& input, int points);

/// Negativity under symmetric single-photon loss for the holonomic qutrit
/// state and the qutrit Bell state, sampled every step up to gamma*t = t_max.
/// Columns: t_gamma, negativity_holonomic, negativity_bell, exp_decay.
Table loss_table(double t_max, int steps);

/// Best entanglement over phase and basis input for P = 1..max_photons.
/// Columns: photons, dimension, volume_bits, entropy_bits, phi, input_label,
/// maximal.
Table volume_table(int max_photons);

/// Numeric leakage against the analytic estimate over `count` evenly spaced
/// omega_t values in [from, to]. Columns: omega_T, leakage, lz_error,
/// u3_total.
Table diabatic_table(const adiabatic::PulseSchedule& schedule, double from, double to, int count);

}  // namespace holochip::cli
