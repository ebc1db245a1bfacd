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

// holochip: datasets for the holonomic photon entangler.
//
//   holochip basis    --photons P
//   holochip sweep    --input 1,1 [--photons 2] [--points 2048]
//   holochip loss     [--t-max 10] [--steps 1000]
//   holochip volume   [--max-photons 6]
//   holochip diabatic [--schedule FILE] [--from 1] [--to 10] [--count 10]
//
// Every subcommand accepts --output PATH (default: stdout) and --json.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "holochip/adiabatic.hpp"
#include "holochip_cli/commands.hpp"

namespace {

using namespace holochip;
using cli::ExitCode;

struct OutputOptions {
  std::string path;
  bool json = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("-o,--output", out.path, "Write the dataset to PATH instead of stdout");
  cmd->add_flag("--json", out.json, "Emit a JSON array of records instead of CSV");
}

int emit(const cli::Table& table, const OutputOptions& out) {
  const std::string text = out.json ? table.to_json() : table.to_csv();
  if (out.path.empty()) {
    std::cout << text;
    return std::cout ? cli::kOk : cli::kFailure;
  }
  try {
    cli::write_atomically(out.path, text);
  } catch (const std::exception& e) {
    std::cerr << "holochip: " << e.what() << '\n';
    return cli::kUnwritablePath;
  }
  return cli::kOk;
}

int run(const std::function<cli::Table()>& build, const OutputOptions& out) {
  try {
    return emit(build(), out);
  } catch (const cli::InvalidLabel& e) {
    std::cerr << "holochip: " << e.what() << '\n';
    return cli::kInvalidLabel;
  } catch (const IntegrationError& e) {
    std::cerr << "holochip: integrator aborted: " << e.what() << '\n';
    return cli::kIntegratorAbort;
  } catch (const ScheduleError& e) {
    std::cerr << "holochip: " << e.what() << '\n';
    return cli::kScheduleViolation;
  } catch (const std::exception& e) {
    std::cerr << "holochip: " << e.what() << '\n';
    return cli::kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of a four-waveguide non-Abelian holonomic photon entangler"};
  app.require_subcommand(1);

  OutputOptions out;
  std::function<int()> action;

  int basis_photons = 2;
  auto* basis = app.add_subcommand("basis", "Print the dark Fock basis of a photon number");
  basis->add_option("-p,--photons", basis_photons, "Photon number P")
      ->check(CLI::Range(0, 1000));
  add_output_flags(basis, out);
  basis->callback([&] {
    action = [&] { return run([&] { return cli::basis_table(basis_photons); }, out); };
  });

  std::string sweep_input;
  int sweep_photons = 2;
  int sweep_points = holonomy::kDefaultPhaseGrid;
  auto* sweep = app.add_subcommand("sweep", "Entanglement of the chip output versus phase");
  sweep->add_option("-i,--input", sweep_input, "Input basis state as \"n_E,n_W\"")->required();
  sweep->add_option("-p,--photons", sweep_photons, "Photon number P")->check(CLI::Range(1, 64));
  sweep->add_option("-n,--points", sweep_points, "Grid points on [0, pi)")
      ->check(CLI::Range(1, 10'000'000));
  add_output_flags(sweep, out);
  sweep->callback([&] {
    action = [&] {
      return run(
          [&] { return cli::sweep_table(cli::parse_input_label(sweep_input, sweep_photons), sweep_points); },
          out);
    };
  });

  double loss_t_max = 10.0;
  int loss_steps = 1000;
  auto* loss = app.add_subcommand("loss", "Negativity under post-chip single-photon loss");
  loss->add_option("-t,--t-max", loss_t_max, "Final time in units of 1/gamma")
      ->check(CLI::PositiveNumber);
  loss->add_option("-s,--steps", loss_steps, "RK4 steps (gamma*dt must be <= 0.01)")
      ->check(CLI::Range(1, 100'000'000));
  add_output_flags(loss, out);
  loss->callback([&] {
    action = [&] { return run([&] { return cli::loss_table(loss_t_max, loss_steps); }, out); };
  });

  int volume_photons = cli::kMaxVolumePhotons;
  auto* volume = app.add_subcommand("volume", "Maximal entanglement versus holonomic dimension");
  volume->add_option("-m,--max-photons", volume_photons, "Largest photon number P")
      ->check(CLI::Range(1, cli::kMaxVolumePhotons));
  add_output_flags(volume, out);
  volume->callback([&] {
    action = [&] { return run([&] { return cli::volume_table(volume_photons); }, out); };
  });

  std::string schedule_path;
  double scan_from = 1.0;
  double scan_to = 10.0;
  int scan_count = 10;
  auto* diabatic = app.add_subcommand("diabatic", "Diabatic leakage versus peak coupling x width");
  diabatic->add_option("--schedule", schedule_path,
                       "Pulse schedule JSON (default: " HOLOCHIP_DEFAULT_SCHEDULE ")");
  diabatic->add_option("--from", scan_from, "First omega_T")->check(CLI::PositiveNumber);
  diabatic->add_option("--to", scan_to, "Last omega_T")->check(CLI::PositiveNumber);
  diabatic->add_option("--count", scan_count, "Number of scan points")->check(CLI::Range(1, 10'000));
  add_output_flags(diabatic, out);
  diabatic->callback([&] {
    action = [&] {
      return run(
          [&] {
            const auto schedule = schedule_path.empty() ? adiabatic::default_schedule()
                                                        : adiabatic::load_schedule(schedule_path);
            return cli::diabatic_table(schedule, scan_from, scan_to, scan_count);
          },
          out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kFailure;
  }
  return action ? action() : cli::kFailure;
}
