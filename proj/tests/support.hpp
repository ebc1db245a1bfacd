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

// Seeded generators shared by the property-style tests.

#include <cmath>
#include <numbers>
#include <random>

#include "holochip/entanglement.hpp"
#include "holochip/holonomy.hpp"
#include "holochip/types.hpp"

namespace holochip::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double phase() { return uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi); }

  Complex gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng_), n(rng_)};
  }

  CVector unit_vector(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = gaussian();
    return v / v.norm();
  }

  /// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
  /// diagonal folded back into Q.
  CMatrix unitary(Eigen::Index n) {
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gaussian();
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
  }

  /// Random mixed state of the given local dimensions (normalized Wishart).
  entanglement::DensityMatrix mixed_state(entanglement::LocalDims dims, Eigen::Index rank) {
    const auto n = static_cast<Eigen::Index>(dims.total());
    CMatrix g(n, rank);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = gaussian();
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return {rho, dims};
  }

  holonomy::PureState dark_state(int photons) {
    fock::DarkBasis basis(photons);
    return {basis, unit_vector(static_cast<Eigen::Index>(basis.dimension()))};
  }

 private:
  std::mt19937_64 rng_;
};

inline holonomy::PureState make_state(int photons, std::initializer_list<Complex> amplitudes) {
  CVector v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (const auto& a : amplitudes) v(i++) = a;
  return {fock::DarkBasis(photons), v};
}

}  // namespace holochip::testing
