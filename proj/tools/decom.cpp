// Copyright 2026 The decom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "decom/cli.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kRangeError = 3;
constexpr int kConvergenceError = 4;

const std::vector<std::string> kCodes = {"none", "bit3", "phase3", "shor5", "shor9"};
const std::vector<std::string> kChannels = {"bit_flip", "phase_flip", "depolarizing", "amplitude_damping",
                                            "phase_damping"};

std::string render(const std::string& csv, const std::string& format) {
  return format == "svg" ? decom::csv_to_svg(csv) : csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoherence measures of noisy qubit channels with and without error correction."};
  app.require_subcommand(1);

  std::string code = "bit3";
  std::string channel = "bit_flip";
  double p = 0.0;
  double pmin = 0.01;
  double pmax = 0.3;
  int steps = 30;
  int n_ops = 68;
  std::string out = "-";
  std::string format = "csv";
  std::string params_path;
  double tmin = 1e-15;
  double tmax = 1e-10;

  auto* channel_cmd = app.add_subcommand("channel", "Report chi, tau spectrum, D and CPTP status of one channel");
  channel_cmd->add_option("--channel", channel, "Noise family")->check(CLI::IsMember(kChannels));
  channel_cmd->add_option("--p", p, "Calibrated error probability")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of D0 and corrected D over a p grid");
  sweep_cmd->add_option("--code", code, "Error-correcting code")->check(CLI::IsMember(kCodes));
  sweep_cmd->add_option("--channel", channel, "Noise family")->check(CLI::IsMember(kChannels));
  sweep_cmd->add_option("--pmin", pmin, "First p");
  sweep_cmd->add_option("--pmax", pmax, "Last p");
  sweep_cmd->add_option("--steps", steps, "Number of rows")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out, "Output file, - for stdout");
  sweep_cmd->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  auto* fit_cmd = app.add_subcommand("fit", "Polynomial coefficients of D(p) and the break-even point");
  fit_cmd->add_option("--code", code, "Error-correcting code")->check(CLI::IsMember(kCodes));
  fit_cmd->add_option("--channel", channel, "Noise family")->check(CLI::IsMember(kChannels));

  auto* dqd_cmd = app.add_subcommand("dqd", "Si double-dot decoherence curve after N operations");
  dqd_cmd->add_option("--params", params_path, "JSON file with xi_eV, s_m_per_s, rho_g_per_cm3, L_nm, a_nm, k_per_m");
  dqd_cmd->add_option("--n-ops", n_ops, "Number of operations N")->check(CLI::PositiveNumber);
  dqd_cmd->add_option("--tmin", tmin, "First cycle time in s (0 gives a linear grid)");
  dqd_cmd->add_option("--tmax", tmax, "Last cycle time in s");
  dqd_cmd->add_option("--steps", steps, "Number of rows")->check(CLI::PositiveNumber);
  dqd_cmd->add_option("--out", out, "Output file, - for stdout");
  dqd_cmd->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    const decom::NoiseKind kind = decom::parse_noise_kind(channel);
    if (*channel_cmd) {
      const auto info = decom::cmd_channel_info(kind, p);
      std::cout << info.text;
      return info.cptp ? 0 : kRangeError;
    }
    if (*sweep_cmd) {
      if (pmin > pmax) throw decom::RangeError("sweep: --pmin exceeds --pmax");
      decom::write_output(out, render(decom::cmd_qec_sweep(code, kind, pmin, pmax, steps), format));
      return 0;
    }
    if (*fit_cmd) {
      std::cout << decom::cmd_qec_fit(code, kind);
      return 0;
    }
    if (*dqd_cmd) {
      const decom::DqdParams params = params_path.empty() ? decom::DqdParams{} : decom::DqdParams::load(params_path);
      const auto grid = decom::t_grid(tmin, tmax, steps);
      decom::write_output(out, render(decom::cmd_dqd_curve(params, n_ops, grid), format));
      return 0;
    }
  } catch (const decom::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConvergenceError;
  } catch (const decom::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const decom::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const decom::InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRangeError;
  } catch (const decom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return 0;
}
