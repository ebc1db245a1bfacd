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

#include "holochip/holonomy.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden_section.hpp"
#include "holochip/entanglement.hpp"

namespace holochip::holonomy {

namespace {

constexpr double kUnitarityTolerance = 1e-9;

double unitarity_error(const CMatrix& u) {
  const auto n = u.rows();
  return max_abs(u * u.adjoint() - CMatrix::Identity(n, n));
}

double sqrt_factorial_product(const std::vector<int>& occupations) {
  double product = 1.0;
  for (int n : occupations) {
    for (int k = 2; k <= n; ++k) product *= k;
  }
  return std::sqrt(product);
}

double wrap_phase(double phi) {
  double wrapped = std::fmod(phi, std::numbers::pi);
  if (wrapped < 0) wrapped += std::numbers::pi;
  return wrapped;
}

}  // namespace

HolonomyMatrix::HolonomyMatrix(CMatrix entries, std::optional<Phase> phi)
    : entries_(std::move(entries)), phi_(phi) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("HolonomyMatrix: entries must be a non-empty square matrix");
  }
  if (unitarity_error(entries_) > kUnitarityTolerance) {
    throw std::invalid_argument("HolonomyMatrix: entries are not unitary");
  }
}

HolonomyMatrix HolonomyMatrix::operator*(const HolonomyMatrix& rhs) const {
  if (dimension() != rhs.dimension()) {
    throw std::invalid_argument("HolonomyMatrix: dimension mismatch in product");
  }
  std::optional<Phase> phi;
  if (phi_ && rhs.phi_) phi = Phase{phi_->radians + rhs.phi_->radians};
  return HolonomyMatrix(entries_ * rhs.entries_, phi);
}

PureState::PureState(fock::DarkBasis basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dimension()) {
    throw std::invalid_argument("PureState: amplitude count does not match basis dimension");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes are not unit norm");
  }
}

PureState PureState::basis_state(const fock::OccupationState& s) {
  fock::DarkBasis basis(s.total());
  CVector amplitudes = CVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  amplitudes(static_cast<Eigen::Index>(*basis.index_of(s))) = 1.0;
  return PureState(std::move(basis), std::move(amplitudes));
}

Complex PureState::amplitude(const fock::OccupationState& s) const {
  const auto index = basis_.index_of(s);
  return index ? amplitudes_(static_cast<Eigen::Index>(*index)) : Complex{};
}

CMatrix PureState::coefficient_matrix() const {
  const auto side = static_cast<Eigen::Index>(basis_.dimension());
  CMatrix m = CMatrix::Zero(side, side);
  for (std::size_t k = 0; k < basis_.dimension(); ++k) {
    m(basis_[k].n_east, basis_[k].n_west) = amplitudes_(static_cast<Eigen::Index>(k));
  }
  return m;
}

HolonomyMatrix u3(Phase phi) {
  const double c = std::cos(phi.radians);
  const double s = std::sin(phi.radians);
  const double r = std::numbers::sqrt2 * s * c;
  CMatrix u(3, 3);
  u << c * c, -r, s * s,
       r, std::cos(2.0 * phi.radians), -r,
       s * s, r, c * c;
  return HolonomyMatrix(std::move(u), phi);
}

Eigen::Matrix2d single_mode_rotation(Phase phi) {
  const double c = std::cos(phi.radians);
  const double s = std::sin(phi.radians);
  Eigen::Matrix2d r;
  r << c, -s,
       s, c;
  return r;
}

CMatrix bosonic_lift(const CMatrix& single_particle, int photon_count) {
  if (single_particle.rows() != single_particle.cols() || single_particle.rows() == 0) {
    throw std::invalid_argument("bosonic_lift: single-particle matrix must be square");
  }
  if (photon_count < 0) throw std::invalid_argument("bosonic_lift: negative photon count");

  const int modes = static_cast<int>(single_particle.rows());
  const auto basis = fock::occupation_basis(photon_count, modes);
  std::map<std::vector<int>, Eigen::Index> position;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    position.emplace(basis[k], static_cast<Eigen::Index>(k));
  }

  const auto dim = static_cast<Eigen::Index>(basis.size());
  CMatrix lifted = CMatrix::Zero(dim, dim);
  using Polynomial = std::map<std::vector<int>, Complex>;

  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& input = basis[col];
    // Coefficients of creation-operator monomials prod_i (a_i^dagger)^{m_i}.
    Polynomial poly{{std::vector<int>(static_cast<std::size_t>(modes), 0), Complex{1.0}}};
    for (int j = 0; j < modes; ++j) {
      for (int rep = 0; rep < input[static_cast<std::size_t>(j)]; ++rep) {
        Polynomial next;
        for (const auto& [exponents, coeff] : poly) {
          for (int i = 0; i < modes; ++i) {
            const Complex u = single_particle(i, j);
            if (u == Complex{}) continue;
            auto raised = exponents;
            ++raised[static_cast<std::size_t>(i)];
            next[raised] += coeff * u;
          }
        }
        poly = std::move(next);
      }
    }
    const double input_norm = sqrt_factorial_product(input);
    for (const auto& [exponents, coeff] : poly) {
      lifted(position.at(exponents), static_cast<Eigen::Index>(col)) =
          coeff * sqrt_factorial_product(exponents) / input_norm;
    }
  }
  return lifted;
}

HolonomyMatrix fock_lift(const CMatrix& u2, int photon_count, std::optional<Phase> phi) {
  if (u2.rows() != 2 || u2.cols() != 2) {
    throw std::invalid_argument("fock_lift: expected a 2x2 single-photon matrix");
  }
  if (photon_count < 1) throw std::invalid_argument("fock_lift: photon count must be >= 1");
  if (unitarity_error(u2) > kUnitarityTolerance) {
    throw std::invalid_argument("fock_lift: single-photon matrix is not unitary");
  }
  return HolonomyMatrix(bosonic_lift(u2, photon_count), phi);
}

HolonomyMatrix rotation_lift(Phase phi, int photon_count) {
  return fock_lift(single_mode_rotation(phi).cast<Complex>(), photon_count, phi);
}

PureState apply_holonomy(const HolonomyMatrix& u, const PureState& input) {
  if (u.dimension() != input.basis().dimension()) {
    throw std::invalid_argument("apply_holonomy: holonomy dimension " +
                                std::to_string(u.dimension()) + " does not match state dimension " +
                                std::to_string(input.basis().dimension()));
  }
  return PureState(input.basis(), u.entries() * input.amplitudes());
}

Phase phi_maximally_entangled() { return Phase{0.5 * std::atan(std::numbers::sqrt2)}; }

double output_entropy_bits(int photon_count, std::size_t input_index, Phase phi) {
  const fock::DarkBasis basis(photon_count);
  if (input_index >= basis.dimension()) {
    throw std::out_of_range("output_entropy_bits: input index outside the dark basis");
  }
  const auto input = PureState::basis_state(basis[input_index]);
  return entanglement::entanglement_entropy_bits(apply_holonomy(rotation_lift(phi, photon_count), input));
}

PhaseOptimum max_entropy_over_phase(int photon_count, std::size_t input_index, int grid_points) {
  if (photon_count < 1) throw std::invalid_argument("max_entropy_over_phase: photon count must be >= 1");
  if (input_index > static_cast<std::size_t>(photon_count)) {
    throw std::out_of_range("max_entropy_over_phase: input index outside the dark basis");
  }
  if (grid_points < 3) throw std::invalid_argument("max_entropy_over_phase: grid needs >= 3 points");

  const double step = std::numbers::pi / grid_points;
  auto entropy = [&](double phi) { return output_entropy_bits(photon_count, input_index, Phase{phi}); };

  std::vector<double> values(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) values[static_cast<std::size_t>(k)] = entropy(k * step);
  double best_value = values.front();
  for (double v : values) best_value = std::max(best_value, v);
  int best = 0;
  while (values[static_cast<std::size_t>(best)] < best_value - 1e-12) ++best;

  const double centre = best * step;
  const auto [phi, value] = detail::golden_section_max(entropy, centre - step, centre + step, 1e-10);
  if (value < values[static_cast<std::size_t>(best)]) {
    return {Phase{centre}, values[static_cast<std::size_t>(best)]};
  }
  return {Phase{wrap_phase(phi)}, value};
}

}  // namespace holochip::holonomy
