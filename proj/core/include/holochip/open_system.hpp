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

// Post-chip single-photon loss in the east and west continuation waveguides:
//   d rho / dt = gamma * sum_{m in {E, W}} (a_m rho a_m^dag - {a_m^dag a_m, rho} / 2)
// integrated with fixed-step RK4. No Hamiltonian term: free propagation only
// adds local phases, which leave negativity and populations unchanged.

#include <vector>

#include "holochip/entanglement.hpp"
#include "holochip/types.hpp"

namespace holochip::open_system {

/// Integration settings. `t_max` is an absolute time; the step-size guard is
/// gamma * t_max / steps <= 0.01.
struct LossConfig {
  double gamma = 1.0;
  int cutoff = 2;
  double t_max = 10.0;
  int steps = 1000;

  double dt() const { return t_max / steps; }
  /// Throws std::invalid_argument when a field is out of range or the step
  /// guard fails.
  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> negativity;
  /// <n_E>(t) / <n_E>(0), or the west mode when the east mode starts empty;
  /// zero for the vacuum.
  std::vector<double> single_photon_population;
  std::vector<double> trace_error;
  std::vector<double> min_eigenvalue;
};

/// The loss generator for a fixed pair of local dimensions. Modes with a
/// single level carry no loss channel.
class LossGenerator {
 public:
  LossGenerator(double gamma, entanglement::LocalDims dims);

  /// Throws std::invalid_argument when rho does not match the generator's
  /// dimensions.
  CMatrix operator()(const CMatrix& rho) const;

  entanglement::LocalDims dims() const { return dims_; }

 private:
  double gamma_;
  entanglement::LocalDims dims_;
  std::vector<CMatrix> jumps_;
  std::vector<CMatrix> jumps_adjoint_;
  CMatrix half_number_;  // (1/2) sum_m a_m^dag a_m
};

/// d rho / dt for `rho` under loss rate `gamma`; the cutoff follows rho's
/// local dimensions.
CMatrix lindblad_rhs(const entanglement::DensityMatrix& rho, double gamma);

/// Integrates from rho0. Samples every step: log negativity (east side),
/// normalized single-mode population, |Tr rho - 1| and the smallest
/// eigenvalue. Throws std::invalid_argument when rho0's local dimensions
/// differ from cutoff + 1, and IntegrationError when an eigenvalue drops
/// below -1e-6.
Trajectory evolve(const entanglement::DensityMatrix& rho0, const LossConfig& cfg);

/// (|0,0> + |1,1> + |2,2>) / sqrt 3 on the 3 x 3 occupation space.
entanglement::DensityMatrix bell_qutrit_state();

/// Chip output for input |1,1> at the maximally entangling phase:
/// (-|2,0> + |1,1> + |0,2>) / sqrt 3.
entanglement::DensityMatrix holonomic_qutrit_state();

}  // namespace holochip::open_system
