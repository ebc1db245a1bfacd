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

// U(N) holonomies acting on dark Fock bases.
//
// The U(3) matrix of the two-photon sector is available in closed form
// (u3). Higher sectors are generated as the bosonic representation of the
// single-photon 2x2 rotation (fock_lift); at two photons the two routes agree.

#include <cstddef>
#include <optional>

#include "holochip/fock.hpp"
#include "holochip/types.hpp"

namespace holochip::holonomy {

/// Accumulated non-Abelian phase, in radians.
struct Phase {
  double radians = 0.0;
};

inline constexpr int kDefaultPhaseGrid = 2048;

/// N x N unitary over dark_basis(N - 1).
class HolonomyMatrix {
 public:
  /// Throws std::invalid_argument unless `entries` is square and unitary
  /// within 1e-9 (max-entry norm of U U^dagger - I).
  HolonomyMatrix(CMatrix entries, std::optional<Phase> phi = std::nullopt);

  std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
  int photon_count() const { return static_cast<int>(entries_.rows()) - 1; }
  const CMatrix& entries() const { return entries_; }
  const std::optional<Phase>& phi() const { return phi_; }

  HolonomyMatrix operator*(const HolonomyMatrix& rhs) const;

 private:
  CMatrix entries_;
  std::optional<Phase> phi_;
};

/// Unit-norm amplitude vector over a dark basis.
class PureState {
 public:
  /// Throws std::invalid_argument on a length mismatch or when the norm
  /// differs from 1 by more than 1e-12.
  PureState(fock::DarkBasis basis, CVector amplitudes);

  /// |s> as a state of its own dark basis.
  static PureState basis_state(const fock::OccupationState& s);

  const fock::DarkBasis& basis() const { return basis_; }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(const fock::OccupationState& s) const;

  /// Amplitudes reshaped into an east x west matrix: entry (n_E, n_W).
  CMatrix coefficient_matrix() const;

 private:
  fock::DarkBasis basis_;
  CVector amplitudes_;
};

/// Closed-form U(3) holonomy over {|2,0>, |1,1>, |0,2>}.
HolonomyMatrix u3(Phase phi);

/// [[cos, -sin], [sin, cos]] over the single-photon basis {|1,0>, |0,1>}.
Eigen::Matrix2d single_mode_rotation(Phase phi);

/// Representation of a K x K single-photon unitary on the P-photon sector,
/// over fock::occupation_basis(P, K). Each input column is obtained by
/// expanding prod_j (sum_i u(i, j) a_i^dagger)^{n_j} |0> / sqrt(prod n_j!)
/// as a polynomial in the creation operators. No unitarity check.
CMatrix bosonic_lift(const CMatrix& single_particle, int photon_count);

/// Two-mode bosonic lift of `u2` onto dark_basis(P). Rejects a non-unitary
/// u2 (tolerance 1e-9) and P < 1 with std::invalid_argument.
HolonomyMatrix fock_lift(const CMatrix& u2, int photon_count,
                         std::optional<Phase> phi = std::nullopt);

/// fock_lift(single_mode_rotation(phi), P).
HolonomyMatrix rotation_lift(Phase phi, int photon_count);

/// amplitudes_out = U * amplitudes_in. Throws std::invalid_argument on a
/// dimension mismatch.
PureState apply_holonomy(const HolonomyMatrix& u, const PureState& input);

/// (1/2) arctan(sqrt 2): the phase that equalizes the three output
/// amplitudes of the |1,1> input.
Phase phi_maximally_entangled();

struct PhaseOptimum {
  Phase phi;
  double entropy_bits = 0.0;
};

/// Von Neumann entanglement entropy (bits) of rotation_lift(phi, P) applied to
/// basis state `input_index` of dark_basis(P).
double output_entropy_bits(int photon_count, std::size_t input_index, Phase phi);

/// Maximizes output_entropy_bits over phi in [0, pi): uniform grid scan, then
/// golden-section refinement around the best grid point down to a bracket of
/// 1e-10 rad. Ties on the grid (within 1e-12 bits) go to the lowest phi.
PhaseOptimum max_entropy_over_phase(int photon_count, std::size_t input_index,
                                    int grid_points = kDefaultPhaseGrid);

}  // namespace holochip::holonomy
