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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "decom/cli.hpp"
#include "decom/linalg.hpp"

using namespace decom;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> row(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(DECOM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(FormatNumber, examples) {
  EXPECT_EQ(format_number(0.104), "1.04000000000e-01");
  EXPECT_EQ(format_number(0.0), "0.00000000000e+00");
  EXPECT_EQ(format_number(-0.0), "0.00000000000e+00");
  EXPECT_EQ(format_number(-2.5e-12), "-2.50000000000e-12");
}

TEST(ChannelInfo, reports) {
  const ChannelInfo ok = cmd_channel_info(NoiseKind::Depolarizing, 0.3);
  EXPECT_TRUE(ok.cptp);
  EXPECT_NE(ok.text.find("CPTP: ok"), std::string::npos);
  EXPECT_NE(ok.text.find("D diagonal: 0.3"), std::string::npos);

  const ChannelInfo bad = cmd_channel_info(NoiseKind::Depolarizing, 0.7);
  EXPECT_FALSE(bad.cptp);
  EXPECT_NE(bad.text.find("CPTP: VIOLATED"), std::string::npos);

  EXPECT_THROW(cmd_channel_info(NoiseKind::AmplitudeDamping, 1.0), RangeError);
  EXPECT_THROW(cmd_channel_info(NoiseKind::BitFlip, -0.1), RangeError);
}

TEST(QecSweep, csv_layout_and_values) {
  const std::string csv = cmd_qec_sweep("bit3", NoiseKind::BitFlip, 0.0, 0.3, 4, 1);
  const auto ls = lines(csv);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "p,D0,D_corrected");
  EXPECT_EQ(ls[1], "0.00000000000e+00,0.00000000000e+00,0.00000000000e+00");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto r = row(ls[i]);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_NEAR(r[1], r[0], 1e-11);
    EXPECT_NEAR(r[2], 3 * r[0] * r[0] - 2 * r[0] * r[0] * r[0], 1e-11);
  }
  EXPECT_THROW(cmd_qec_sweep("bit4", NoiseKind::BitFlip, 0.0, 0.3, 4), RangeError);
}

TEST(QecSweep, deterministic_across_threads) {
  const std::string a = cmd_qec_sweep("shor5", NoiseKind::AmplitudeDamping, 0.01, 0.3, 6, 1);
  const std::string b = cmd_qec_sweep("shor5", NoiseKind::AmplitudeDamping, 0.01, 0.3, 6, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, cmd_qec_sweep("shor5", NoiseKind::AmplitudeDamping, 0.01, 0.3, 6, 2));
}

TEST(QecFit, majority_vote_text) {
  EXPECT_EQ(cmd_qec_fit("bit3", NoiseKind::BitFlip), "α1=0, α2=3, α3=-2; break_even=0.5\nfit residual: 0\n");
  const std::string five = cmd_qec_fit("shor5", NoiseKind::Depolarizing);
  EXPECT_EQ(five.rfind("α1=0, α2=15, α3=-50, α4=60, α5=-24; break_even=", 0), 0u) << five;
}

TEST(TGrid, spacing) {
  const auto log = t_grid(1e-15, 1e-10, 6);
  ASSERT_EQ(log.size(), 6u);
  for (std::size_t i = 0; i < log.size(); ++i) EXPECT_NEAR(std::log10(log[i]), -15.0 + static_cast<double>(i), 1e-12);
  const auto lin = t_grid(0.0, 1e-12, 3);
  EXPECT_EQ(lin[0], 0.0);
  EXPECT_NEAR(lin[1], 5e-13, 1e-27);
  EXPECT_THROW(t_grid(1e-12, 1e-13, 3), RangeError);
  EXPECT_THROW(t_grid(-1.0, 1.0, 3), RangeError);
}

TEST(DqdCurve, csv_layout) {
  const std::string csv = cmd_dqd_curve(DqdParams{}, 68, {0.0, 1e-14, 1e-12}, 1);
  const auto ls = lines(csv);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "t_s,p1,p2,D0,D,clamped");
  const auto first = row(ls[1]);
  ASSERT_EQ(first.size(), 6u);
  for (double v : first) EXPECT_EQ(v, 0.0);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto r = row(ls[i]);
    EXPECT_NEAR(r[3], std::max(r[1], r[2]), 1e-15);
  }
  const auto clamped = row(lines(cmd_dqd_curve(DqdParams{}, 1000, {1e-10}, 1))[1]);
  EXPECT_EQ(clamped[5], 1.0);
}

TEST(Svg, polylines_per_series) {
  const std::string svg = csv_to_svg(cmd_qec_sweep("bit3", NoiseKind::BitFlip, 0.0, 0.3, 5, 1));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "<polyline"), 2u);
  EXPECT_NE(svg.find("D_corrected"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_THROW(csv_to_svg("p\n0.1\n"), Error);
}

TEST(WriteOutput, file_round_trip) {
  const std::string path = ::testing::TempDir() + "decom_out.csv";
  write_output(path, "a,b\n1,2\n");
  std::ifstream in(path);
  std::stringstream got;
  got << in.rdbuf();
  EXPECT_EQ(got.str(), "a,b\n1,2\n");
  std::remove(path.c_str());
  EXPECT_THROW(write_output("/nonexistent/dir/out.csv", "x"), Error);
}

TEST(Binary, exit_codes) {
  EXPECT_EQ(run_cli("channel --channel depolarizing --p 0.2").code, 0);
  EXPECT_EQ(run_cli("channel --channel bit_flip --p 1.2").code, 3);
  EXPECT_EQ(run_cli("channel --channel amplitude_damping --p 1").code, 3);
  EXPECT_EQ(run_cli("sweep --channel depolarizing --pmax 0.9 --steps 2").code, 3);
  EXPECT_EQ(run_cli("sweep --pmin 0.3 --pmax 0.1").code, 3);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("sweep --code bit7").code, 2);
  EXPECT_EQ(run_cli("dqd --params /nonexistent.json --steps 1").code, 2);
  EXPECT_EQ(run_cli("dqd --tmin 1e-7 --tmax 1e-7 --steps 1").code, 4);
}

TEST(Binary, outputs_match_library) {
  const CliRun sweep = run_cli("sweep --code bit3 --channel bit_flip --pmin 0 --pmax 0.3 --steps 4");
  EXPECT_EQ(sweep.code, 0);
  EXPECT_EQ(sweep.out, cmd_qec_sweep("bit3", NoiseKind::BitFlip, 0.0, 0.3, 4));
  const CliRun fit = run_cli("fit --code bit3 --channel bit_flip");
  EXPECT_EQ(fit.out, "α1=0, α2=3, α3=-2; break_even=0.5\nfit residual: 0\n");

  const std::string path = ::testing::TempDir() + "decom_curve.svg";
  const CliRun svg = run_cli("dqd --tmin 1e-15 --tmax 1e-13 --steps 3 --format svg --out " + path);
  EXPECT_EQ(svg.code, 0);
  EXPECT_TRUE(svg.out.empty());
  std::ifstream in(path);
  std::stringstream got;
  got << in.rdbuf();
  EXPECT_EQ(got.str(), csv_to_svg(cmd_dqd_curve(DqdParams{}, 68, t_grid(1e-15, 1e-13, 3))));
  std::remove(path.c_str());
}
