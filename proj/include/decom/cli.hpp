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

#pragma once

// Text and CSV producers behind the command-line tool. Every function here
// is deterministic: the same arguments give byte-identical output.

#include <string>
#include <vector>

#include "decom/dqd.hpp"
#include "decom/noise.hpp"

namespace decom {

/// Scientific notation with 12 significant digits, e.g. 1.04000000000e-01.
std::string format_number(double x);

struct ChannelInfo {
  std::string text;
  bool cptp = true;
};

/// chi, tau eigenvalues, D by every applicable method and the CPTP verdict
/// for one calibrated channel. Flip and depolarizing channels outside their
/// physical range are still reported (from their chi formula) and flagged.
ChannelInfo cmd_channel_info(NoiseKind kind, double p);

/// CSV with columns p,D0,D_corrected over `steps` equally spaced p values.
std::string cmd_qec_sweep(const std::string& code, NoiseKind kind, double pmin, double pmax, int steps,
                          int threads = 0);

/// Fitted coefficients of D(p) and the break-even point.
std::string cmd_qec_fit(const std::string& code, NoiseKind kind, int threads = 0);

/// Log-spaced when tmin > 0, linear from 0 otherwise.
std::vector<double> t_grid(double tmin, double tmax, int steps);

/// CSV with columns t_s,p1,p2,D0,D,clamped.
std::string cmd_dqd_curve(const DqdParams& params, int n_ops, const std::vector<double>& t, int threads = 0,
                          const QuadratureConfig& cfg = {});

/// Line plot of every CSV column against the first one.
std::string csv_to_svg(const std::string& csv);

/// Writes to `path`, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace decom
