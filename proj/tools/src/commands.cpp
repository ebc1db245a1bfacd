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

#include "holochip_cli/commands.hpp"

#include <cmath>
#include <numbers>

#include "holochip/entanglement.hpp"
#include "holochip/holonomy.hpp"
#include "holochip/open_system.hpp"

namespace holochip::cli {

namespace {

using holonomy::Phase;

holonomy::HolonomyMatrix chip_holonomy(Phase phi, int photons) {
  return photons == 2 ? holonomy::u3(phi) : holonomy::rotation_lift(phi, photons);
}

std::vector<Cell> sweep_row(const fock::OccupationState& input, Phase phi, const std::string& marker) {
  const auto out =
      holonomy::apply_holonomy(chip_holonomy(phi, input.total()), holonomy::PureState::basis_state(input));
  const auto reduced = entanglement::reduced_from_pure(out, entanglement::Side::east);
  return {phi.radians,
          entanglement::von_neumann_entropy_bits(reduced),
          entanglement::purity(reduced),
          entanglement::renyi2_bits(reduced),
          fock::to_label(input),
          marker};
}

}  // namespace

fock::OccupationState parse_input_label(const std::string& label, int photons) {
  const auto state = fock::parse_label(label);
  if (!state) throw InvalidLabel("invalid basis label '" + label + "' (expected \"n_E,n_W\")");
  if (state->total() != photons) {
    throw InvalidLabel("basis label '" + label + "' does not carry " + std::to_string(photons) +
                       " photons");
  }
  return *state;
}

Table basis_table(int photons) {
  Table t{{"index", "label", "n_east", "n_west"}, {}};
  const fock::DarkBasis basis(photons);
  for (std::size_t k = 0; k < basis.dimension(); ++k) {
    t.add_row({static_cast<long long>(k), fock::to_label(basis[k]),
               static_cast<long long>(basis[k].n_east), static_cast<long long>(basis[k].n_west)});
  }
  return t;
}

Table sweep_table(const fock::OccupationState& input, int points) {
  if (input.total() < 1) throw InvalidLabel("sweep needs at least one photon");
  if (points < 1) throw std::invalid_argument("sweep: points must be >= 1");
  Table t{{"phi", "entropy_bits", "purity", "renyi2_bits", "input_label", "marker"}, {}};
  const double step = std::numbers::pi / points;
  for (int k = 0; k < points; ++k) t.add_row(sweep_row(input, Phase{k * step}, ""));
  t.add_row(sweep_row(input, holonomy::phi_maximally_entangled(), "phi_me"));
  t.add_row(sweep_row(input, Phase{std::numbers::pi / 4}, "pi_over_4"));
  return t;
}

Table loss_table(double t_max, int steps) {
  const open_system::LossConfig cfg{1.0, 2, t_max, steps};
  cfg.validate();
  const auto holonomic = open_system::evolve(open_system::holonomic_qutrit_state(), cfg);
  const auto bell = open_system::evolve(open_system::bell_qutrit_state(), cfg);
  Table t{{"t_gamma", "negativity_holonomic", "negativity_bell", "exp_decay"}, {}};
  for (std::size_t k = 0; k < holonomic.times.size(); ++k) {
    const double t_gamma = cfg.gamma * holonomic.times[k];
    t.add_row({t_gamma, holonomic.negativity[k], bell.negativity[k], std::exp(-t_gamma)});
  }
  return t;
}

Table volume_table(int max_photons) {
  if (max_photons < 1 || max_photons > kMaxVolumePhotons) {
    throw std::invalid_argument("volume: max photons must be in [1, " +
                                std::to_string(kMaxVolumePhotons) + "]");
  }
  Table t{{"photons", "dimension", "volume_bits", "entropy_bits", "phi", "input_label", "maximal"}, {}};
  for (int p = 1; p <= max_photons; ++p) {
    const fock::DarkBasis basis(p);
    holonomy::PhaseOptimum best;
    std::size_t best_input = 0;
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
      const auto opt = holonomy::max_entropy_over_phase(p, k);
      if (k == 0 || opt.entropy_bits > best.entropy_bits + 1e-12) {
        best = opt;
        best_input = k;
      }
    }
    const double volume = std::log2(static_cast<double>(basis.dimension()));
    t.add_row({static_cast<long long>(p), static_cast<long long>(basis.dimension()), volume,
               best.entropy_bits, best.phi.radians, fock::to_label(basis[best_input]),
               best.entropy_bits >= volume - 1e-6});
  }
  return t;
}

Table diabatic_table(const adiabatic::PulseSchedule& schedule, double from, double to, int count) {
  if (count < 1) throw std::invalid_argument("diabatic: count must be >= 1");
  if (!(from > 0.0) || !(to >= from)) throw std::invalid_argument("diabatic: need 0 < from <= to");
  adiabatic::validate_schedule(schedule);
  std::vector<double> values;
  for (int k = 0; k < count; ++k) {
    values.push_back(count == 1 ? from : from + (to - from) * k / (count - 1));
  }
  Table t{{"omega_T", "leakage", "lz_error", "u3_total"}, {}};
  for (const auto& point : adiabatic::diabatic_scan(schedule, values)) {
    t.add_row({point.omega_t, point.leakage, point.lz_error, 2.0 * point.lz_error});
  }
  return t;
}

}  // namespace holochip::cli
