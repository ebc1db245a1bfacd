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

// Bipartite (east | west) entanglement measures.

#include <cstddef>
#include <vector>

#include "holochip/holonomy.hpp"
#include "holochip/types.hpp"

namespace holochip::entanglement {

enum class Side { east, west };

/// Local dimensions of the east and west modes. A single-mode density
/// matrix uses west = 1.
struct LocalDims {
  std::size_t east = 1;
  std::size_t west = 1;

  std::size_t total() const { return east * west; }
  friend bool operator==(const LocalDims&, const LocalDims&) = default;
};

/// Hermitian, unit-trace, positive semidefinite matrix over the east-major
/// product basis. Construction validates: Hermiticity and trace within 1e-10,
/// eigenvalues >= -1e-9. Violations throw std::invalid_argument.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix entries, LocalDims dims);

  /// |psi><psi| of a two-mode amplitude vector (east-major).
  static DensityMatrix from_pure(const CVector& amplitudes, LocalDims dims);

  const CMatrix& matrix() const { return entries_; }
  LocalDims dims() const { return dims_; }
  /// Spectrum in ascending order as computed at construction (not clipped).
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  CMatrix entries_;
  LocalDims dims_;
  Eigen::VectorXd eigenvalues_;
};

/// Schmidt coefficients in descending order.
struct SchmidtSpectrum {
  std::vector<double> coefficients;
};

struct InequalityWitness {
  bool east = false;
  bool west = false;
};

/// Embeds a dark-basis state into the (P+1) x (P+1) occupation space and
/// returns its projector.
DensityMatrix density_from_pure(const holonomy::PureState& state);

/// Partial trace over the mode not kept; the result has dims {d_keep, 1}.
DensityMatrix reduce(const DensityMatrix& rho, Side keep);

/// reduce(density_from_pure(state), keep) without forming the global matrix.
DensityMatrix reduced_from_pure(const holonomy::PureState& state, Side keep);

/// -sum lambda log2 lambda; eigenvalues below 1e-12 count as zero.
double von_neumann_entropy_bits(const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// -log2 Tr(rho^2).
double renyi2_bits(const DensityMatrix& rho);

/// Each flag is set when Tr(rho_side^2) < Tr(rho^2) - 1e-12, i.e. the
/// separable-state purity inequality for that side is violated.
InequalityWitness entropic_inequality_violated(const DensityMatrix& global);

SchmidtSpectrum schmidt(const holonomy::PureState& state);

/// Transposes the indices of `side`. The result is Hermitian with unit trace
/// but may have negative eigenvalues.
CMatrix partial_transpose(const DensityMatrix& rho, Side side);

/// log2 of the trace norm of the partial transpose, clamped at 0.
double log_negativity(const DensityMatrix& rho, Side side = Side::east);

/// Entropy of the east reduced state of a pure dark-basis state.
double entanglement_entropy_bits(const holonomy::PureState& state);

namespace detail {

/// Unvalidated kernels shared with the integrators, which apply their own
/// positivity thresholds.
CMatrix partial_transpose(const CMatrix& rho, LocalDims dims, Side side);
double log_negativity(const CMatrix& rho, LocalDims dims, Side side);

}  // namespace detail

}  // namespace holochip::entanglement
