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

#include "holochip/open_system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "holochip/fock.hpp"
#include "holochip/holonomy.hpp"

namespace holochip::open_system {

namespace {

using entanglement::DensityMatrix;
using entanglement::LocalDims;

constexpr double kPositivityAbort = -1e-6;

fock::ModeOperator lowering_or_zero(std::size_t local_dimension) {
  if (local_dimension < 2) return {0, CMatrix::Zero(1, 1)};
  return fock::lowering_operator(static_cast<int>(local_dimension) - 1);
}

double mean_photons(const CMatrix& rho, const CMatrix& number) {
  return (rho * number).trace().real();
}

}  // namespace

void LossConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("LossConfig: gamma must be positive and finite");
  }
  if (cutoff < 1) throw std::invalid_argument("LossConfig: cutoff must be >= 1");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("LossConfig: t_max must be positive and finite");
  }
  if (steps < 1) throw std::invalid_argument("LossConfig: steps must be >= 1");
  if (gamma * dt() > 0.01 + 1e-15) {
    throw std::invalid_argument("LossConfig: gamma*dt = " + std::to_string(gamma * dt()) +
                                " exceeds 0.01; increase steps");
  }
}

LossGenerator::LossGenerator(double gamma, LocalDims dims) : gamma_(gamma), dims_(dims) {
  const auto a_east = lowering_or_zero(dims.east);
  const auto a_west = lowering_or_zero(dims.west);
  const fock::ModeOperator id_east{static_cast<int>(dims.east) - 1,
                                   CMatrix::Identity(static_cast<Eigen::Index>(dims.east),
                                                     static_cast<Eigen::Index>(dims.east))};
  const fock::ModeOperator id_west{static_cast<int>(dims.west) - 1,
                                   CMatrix::Identity(static_cast<Eigen::Index>(dims.west),
                                                     static_cast<Eigen::Index>(dims.west))};
  const auto n = static_cast<Eigen::Index>(dims.total());
  half_number_ = CMatrix::Zero(n, n);
  if (dims.east > 1) jumps_.push_back(fock::two_mode_embed(a_east, id_west));
  if (dims.west > 1) jumps_.push_back(fock::two_mode_embed(id_east, a_west));
  for (const auto& jump : jumps_) {
    jumps_adjoint_.push_back(jump.adjoint());
    half_number_ += 0.5 * jumps_adjoint_.back() * jump;
  }
}

CMatrix LossGenerator::operator()(const CMatrix& rho) const {
  const auto n = static_cast<Eigen::Index>(dims_.total());
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("lindblad_rhs: density matrix side " + std::to_string(rho.rows()) +
                                " does not match the mode operators (" + std::to_string(n) + ")");
  }
  CMatrix out = -(half_number_ * rho + rho * half_number_);
  for (std::size_t m = 0; m < jumps_.size(); ++m) out += jumps_[m] * rho * jumps_adjoint_[m];
  return gamma_ * out;
}

CMatrix lindblad_rhs(const DensityMatrix& rho, double gamma) {
  return LossGenerator(gamma, rho.dims())(rho.matrix());
}

Trajectory evolve(const DensityMatrix& rho0, const LossConfig& cfg) {
  cfg.validate();
  const auto local = static_cast<std::size_t>(cfg.cutoff) + 1;
  if (rho0.dims() != LocalDims{local, local}) {
    throw std::invalid_argument("evolve: initial state dimensions do not match cutoff " +
                                std::to_string(cfg.cutoff));
  }
  const LossGenerator rhs(cfg.gamma, rho0.dims());
  const auto number_east = fock::two_mode_embed(fock::number_operator(cfg.cutoff),
                                                fock::identity_operator(cfg.cutoff));
  const auto number_west = fock::two_mode_embed(fock::identity_operator(cfg.cutoff),
                                                fock::number_operator(cfg.cutoff));

  CMatrix rho = rho0.matrix();
  const CMatrix* population_op = &number_east;
  double initial_population = mean_photons(rho, number_east);
  if (initial_population <= 1e-15) {
    population_op = &number_west;
    initial_population = mean_photons(rho, number_west);
  }

  Trajectory out;
  const auto samples = static_cast<std::size_t>(cfg.steps) + 1;
  out.times.reserve(samples);
  out.negativity.reserve(samples);
  out.single_photon_population.reserve(samples);
  out.trace_error.reserve(samples);
  out.min_eigenvalue.reserve(samples);

  const double h = cfg.dt();
  for (int step = 0;; ++step) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    const double t = step * h;
    if (min_eig < kPositivityAbort) {
      throw IntegrationError("evolve: eigenvalue " + std::to_string(min_eig) + " at t = " +
                             std::to_string(t) + " (gamma*dt = " + std::to_string(cfg.gamma * h) +
                             "); reduce the step size");
    }
    out.times.push_back(t);
    out.negativity.push_back(
        entanglement::detail::log_negativity(rho, rho0.dims(), entanglement::Side::east));
    out.single_photon_population.push_back(
        initial_population > 1e-15 ? mean_photons(rho, *population_op) / initial_population : 0.0);
    out.trace_error.push_back(std::abs(rho.trace() - Complex{1.0}));
    out.min_eigenvalue.push_back(min_eig);
    if (step == cfg.steps) break;

    const CMatrix k1 = rhs(rho);
    const CMatrix k2 = rhs(rho + 0.5 * h * k1);
    const CMatrix k3 = rhs(rho + 0.5 * h * k2);
    const CMatrix k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = (0.5 * (rho + rho.adjoint())).eval();
  }
  return out;
}

DensityMatrix bell_qutrit_state() {
  CVector psi = CVector::Zero(9);
  const double a = 1.0 / std::sqrt(3.0);
  for (int n = 0; n < 3; ++n) psi(static_cast<Eigen::Index>(fock::two_mode_index(n, n, 3))) = a;
  return DensityMatrix::from_pure(psi, {3, 3});
}

DensityMatrix holonomic_qutrit_state() {
  using namespace holonomy;
  const auto out = apply_holonomy(u3(phi_maximally_entangled()), PureState::basis_state({1, 1}));
  return entanglement::density_from_pure(out);
}

}  // namespace holochip::open_system
