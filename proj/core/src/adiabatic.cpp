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

#include "holochip/adiabatic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "golden_section.hpp"
#include "holochip/fock.hpp"

namespace holochip::adiabatic {

namespace {

constexpr double kFacetRatio = 1e-6;
constexpr double kUnitarityAbort = 1e-6;
constexpr int kMinScaledSteps = 200;

void check_profile(const CouplingProfile& p, const char* name, double z_start, double z_end) {
  const std::string label(name);
  if (!(p.peak > 0.0) || !std::isfinite(p.peak)) {
    throw ScheduleError(label + " profile: peak coupling must be positive (got " +
                        std::to_string(p.peak) + ")");
  }
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma) || !std::isfinite(p.center)) {
    throw ScheduleError(label + " profile: sigma must be positive and center finite");
  }
  for (double z : {z_start, z_end}) {
    if (p(z) >= kFacetRatio * p.peak) {
      throw ScheduleError(label + " profile is " + std::to_string(p(z) / p.peak) +
                          " of its peak at z = " + std::to_string(z) +
                          "; facet states are not dark (need < 1e-6)");
    }
  }
}

CouplingProfile stretch(const CouplingProfile& p, double mid, double factor) {
  return {p.peak, mid + (p.center - mid) * factor, p.sigma * factor};
}

CouplingProfile mirror(const CouplingProfile& p, double mid) {
  return {p.peak, 2.0 * mid - p.center, p.sigma};
}

}  // namespace

double CouplingProfile::operator()(double z) const {
  const double x = (z - center) / sigma;
  return peak * std::exp(-0.5 * x * x);
}

void validate_schedule(const PulseSchedule& s) {
  if (!(s.z_start < s.z_end)) throw ScheduleError("schedule: z_span must satisfy start < end");
  if (s.steps < 1) throw ScheduleError("schedule: steps must be >= 1");
  check_profile(s.east, "east", s.z_start, s.z_end);
  check_profile(s.west, "west", s.z_start, s.z_end);
  check_profile(s.aux, "aux", s.z_start, s.z_end);
}

double omega_t(const PulseSchedule& s) { return s.east.peak * std::numbers::sqrt2 * s.east.sigma; }

PulseSchedule scaled(const PulseSchedule& s, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("scaled: factor must be positive");
  }
  const double mid = 0.5 * (s.z_start + s.z_end);
  const double half = 0.5 * (s.z_end - s.z_start) * factor;
  PulseSchedule out = s;
  out.east = stretch(s.east, mid, factor);
  out.west = stretch(s.west, mid, factor);
  out.aux = stretch(s.aux, mid, factor);
  out.z_start = mid - half;
  out.z_end = mid + half;
  out.steps = std::max(kMinScaledSteps, static_cast<int>(std::ceil(s.steps * factor)));
  return out;
}

PulseSchedule reversed(const PulseSchedule& s) {
  const double mid = 0.5 * (s.z_start + s.z_end);
  PulseSchedule out = s;
  out.east = mirror(s.east, mid);
  out.west = mirror(s.west, mid);
  out.aux = mirror(s.aux, mid);
  return out;
}

PulseSchedule default_schedule() {
  // Unit shape: east/west sigma 1 at +-0.6, aux sigma 3.5 with peak 1.4,
  // stretched so that omega_t = 10.
  const double sigma = 10.0 / std::numbers::sqrt2;
  PulseSchedule s;
  s.east = {1.0, -0.6 * sigma, sigma};
  s.west = {1.0, 0.6 * sigma, sigma};
  s.aux = {1.4, 0.0, 3.5 * sigma};
  s.z_start = -135.0;
  s.z_end = 135.0;
  s.steps = 40000;
  return s;
}

Matrix4c hamiltonian_at(const PulseSchedule& s, double z) {
  Matrix4c h = Matrix4c::Zero();
  const double east = s.east(z);
  const double west = s.west(z);
  const double aux = s.aux(z);
  h(kCentral, kEast) = h(kEast, kCentral) = east;
  h(kCentral, kWest) = h(kWest, kCentral) = west;
  h(kCentral, kAux) = h(kAux, kCentral) = aux;
  return h;
}

TransferMatrix propagate_single_photon(const PulseSchedule& s) {
  if (s.steps < 1 || !(s.z_start < s.z_end)) {
    throw std::invalid_argument("propagate_single_photon: empty span or no steps");
  }
  const Complex minus_i{0.0, -1.0};
  const double h = (s.z_end - s.z_start) / s.steps;
  Matrix4c u = Matrix4c::Identity();
  for (int n = 0; n < s.steps; ++n) {
    const double z = s.z_start + n * h;
    const Matrix4c h0 = minus_i * hamiltonian_at(s, z);
    const Matrix4c h_mid = minus_i * hamiltonian_at(s, z + 0.5 * h);
    const Matrix4c h1 = minus_i * hamiltonian_at(s, z + h);
    const Matrix4c k1 = h0 * u;
    const Matrix4c k2 = h_mid * (u + 0.5 * h * k1);
    const Matrix4c k3 = h_mid * (u + 0.5 * h * k2);
    const Matrix4c k4 = h1 * (u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  TransferMatrix out{u, (u.adjoint() * u - Matrix4c::Identity()).cwiseAbs().maxCoeff()};
  if (out.unitarity_error > kUnitarityAbort) {
    throw IntegrationError("propagate_single_photon: unitarity drift " +
                           std::to_string(out.unitarity_error) + " with " +
                           std::to_string(s.steps) + " steps; increase the step count");
  }
  return out;
}

HolonomyEstimate dark_holonomy(const TransferMatrix& transfer, int photon_count) {
  if (photon_count < 1) throw std::invalid_argument("dark_holonomy: photon count must be >= 1");
  const CMatrix lifted = holonomy::bosonic_lift(CMatrix(transfer.entries), photon_count);
  const auto basis = fock::occupation_basis(photon_count, kModeCount);
  const fock::DarkBasis dark(photon_count);

  std::vector<Eigen::Index> rows;
  rows.reserve(dark.dimension());
  for (const auto& s : dark.states()) {
    const std::vector<int> facet{s.n_east, 0, s.n_west, 0};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k] == facet) {
        rows.push_back(static_cast<Eigen::Index>(k));
        break;
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix block(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) block(i, j) = lifted(rows[i], rows[j]);

  Eigen::JacobiSVD<CMatrix> svd(block);
  const double smallest = svd.singularValues().minCoeff();
  return {std::move(block), 1.0 - smallest * smallest};
}

HolonomyEstimate dark_holonomy(const PulseSchedule& schedule, int photon_count) {
  return dark_holonomy(propagate_single_photon(schedule), photon_count);
}

holonomy::Phase fit_phase(const CMatrix& block) {
  if (block.rows() != block.cols() || block.rows() < 2) {
    throw std::invalid_argument("fit_phase: block must be square with side >= 2");
  }
  if (block.rows() == 2) {
    // Least squares against [[c, -s], [s, c]] has a closed form.
    return {std::atan2((block(1, 0) - block(0, 1)).real(), (block(0, 0) + block(1, 1)).real())};
  }
  const int photons = static_cast<int>(block.rows()) - 1;
  auto score = [&](double phi) {
    return -(block - holonomy::bosonic_lift(
                         holonomy::single_mode_rotation({phi}).cast<Complex>(), photons))
                .squaredNorm();
  };
  constexpr int kGrid = 720;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double best_phi = -std::numbers::pi;
  double best = score(best_phi);
  for (int k = 1; k < kGrid; ++k) {
    const double phi = -std::numbers::pi + k * step;
    const double v = score(phi);
    if (v > best) {
      best = v;
      best_phi = phi;
    }
  }
  const double phi = detail::golden_section_max(score, best_phi - step, best_phi + step, 1e-12).first;
  // An even photon number cannot tell phi from phi + pi.
  return {photons % 2 == 0 ? std::remainder(phi, std::numbers::pi) : phi};
}

double lz_error(double omega_t) {
  if (!(omega_t > 0.0)) throw std::invalid_argument("lz_error: omega_t must be positive");
  return std::exp(-std::numbers::sqrt2 * omega_t);
}

double diabatic_leakage(const TransferMatrix& transfer) {
  const auto& u = transfer.entries;
  double kept = 0.0;
  for (int in : {kEast, kWest})
    for (int out : {kEast, kWest}) kept += std::norm(u(out, in));
  return 1.0 - 0.5 * kept;
}

std::vector<DiabaticPoint> diabatic_scan(const PulseSchedule& base,
                                         const std::vector<double>& omega_t_values) {
  const double base_omega_t = omega_t(base);
  std::vector<DiabaticPoint> out;
  out.reserve(omega_t_values.size());
  for (double target : omega_t_values) {
    const double lz = lz_error(target);
    const auto schedule = scaled(base, target / base_omega_t);
    validate_schedule(schedule);
    out.push_back({target, diabatic_leakage(propagate_single_photon(schedule)), lz});
  }
  return out;
}

}  // namespace holochip::adiabatic
