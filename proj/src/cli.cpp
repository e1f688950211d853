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

#include "decom/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "decom/decoherence.hpp"
#include "decom/sweep.hpp"

namespace decom {

namespace {

std::string fixed(double x, int digits = 10) {
  if (std::abs(x) < 1e-15) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// chi from the closed forms, also outside the physical range of p.
ChiMatrix nominal_chi(NoiseKind kind, double p) {
  switch (kind) {
    case NoiseKind::BitFlip:
      return ChiMatrix::diagonal(1.0 - p, p, 0.0, 0.0);
    case NoiseKind::PhaseFlip:
      return ChiMatrix::diagonal(1.0 - p, 0.0, 0.0, p);
    case NoiseKind::Depolarizing:
      return ChiMatrix::diagonal(1.0 - 1.5 * p, p / 2.0, p / 2.0, p / 2.0);
    default:
      break;
  }
  return kraus_to_chi(from_calibrated_p(kind, p));
}

void print_matrix(std::ostream& out, const Matrix& m, bool imag) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = imag ? m(i, j).imag() : m(i, j).real();
      char buf[32];
      std::snprintf(buf, sizeof buf, " % .10f", std::abs(v) < 5e-16 ? 0.0 : v);
      out << buf;
    }
    out << "\n";
  }
}

std::vector<std::vector<double>> parse_csv(const std::string& csv, std::vector<std::string>& header) {
  std::istringstream in(csv);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(std::stod(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x == 0.0 ? 0.0 : x);
  return buf;
}

ChannelInfo cmd_channel_info(NoiseKind kind, double p) {
  if (!(p >= 0.0)) throw RangeError("channel: p must be >= 0");
  const bool physical = calibrated_in_range(kind, p);
  if (!physical && (kind == NoiseKind::AmplitudeDamping || kind == NoiseKind::PhaseDamping)) {
    throw RangeError("channel: p=" + fixed(p) + " has no " + std::string(to_string(kind)) + " channel");
  }
  const ChiMatrix chi = physical ? kraus_to_chi(from_calibrated_p(kind, p)) : nominal_chi(kind, p);
  const ChoiState tau = chi_to_choi(chi);
  const CptpReport cptp = verify_cptp(chi);

  std::ostringstream out;
  out << "channel: " << to_string(kind) << "\n";
  out << "p: " << fixed(p) << "\n";
  if (physical && (kind == NoiseKind::AmplitudeDamping || kind == NoiseKind::PhaseDamping)) {
    out << "native: " << fixed(native_from_calibrated(kind, p)) << "\n";
  }
  out << "chi (real):\n";
  print_matrix(out, chi.matrix(), false);
  out << "chi (imag):\n";
  print_matrix(out, chi.matrix(), true);
  out << "tau eigenvalues:";
  for (double e : tau.eigenvalues()) out << " " << fixed(e);
  out << "\n";

  if (chi.is_diagonal(1e-10)) out << "D diagonal: " << fixed(measure_diagonal(chi, 1e-10)) << "\n";
  if (chi.linear_magnitude() <= tol::kAlgebraic) out << "D quadratic: " << fixed(measure_quadratic(chi)) << "\n";
  out << "D general: " << fixed(measure_general(chi)) << "\n";
  if (physical) {
    out << "D definition: " << fixed(measure_by_definition(from_calibrated_p(kind, p)), 6) << " (grid)\n";
  }
  const bool ok = cptp.trace_preserving && cptp.completely_positive;
  if (ok) {
    out << "CPTP: ok\n";
  } else {
    out << "CPTP: VIOLATED (" << (cptp.trace_preserving ? "" : "not trace preserving; ")
        << "min tau eigenvalue " << fixed(cptp.min_eigenvalue) << ")\n";
  }
  return {out.str(), ok};
}

std::string cmd_qec_sweep(const std::string& code, NoiseKind kind, double pmin, double pmax, int steps,
                          int threads) {
  const SweepResult r = sweep(code_by_name(code), kind, linspace(pmin, pmax, steps), threads);
  std::string csv = "p,D0,D_corrected\n";
  for (const auto& s : r.samples) {
    csv += format_number(s.p) + "," + format_number(s.d0) + "," + format_number(s.d) + "\n";
  }
  return csv;
}

std::string cmd_qec_fit(const std::string& code_name, NoiseKind kind, int threads) {
  const QecCode code = code_by_name(code_name);
  const SweepResult r = sweep(code, kind, fit_points(code.n), threads);
  const PolyCoeffs& fit = *r.fitted;
  std::ostringstream out;
  for (int order = 1; order <= fit.degree(); ++order) {
    const double a = fit.coefficient(order);
    out << (order > 1 ? ", " : "") << "α" << order << "=" << fixed(std::abs(a) < 1e-9 ? 0.0 : a);
  }
  const BreakEven be = break_even(fit, calibrated_max(kind));
  out << "; break_even=";
  switch (be.kind) {
    case BreakEven::Kind::None:
      out << "none";
      break;
    case BreakEven::Kind::All:
      out << "all";
      break;
    case BreakEven::Kind::Point:
      out << fixed(be.p);
      break;
  }
  out << "\nfit residual: " << fixed(fit.residual, 3) << "\n";
  return out.str();
}

std::vector<double> t_grid(double tmin, double tmax, int steps) {
  if (!(tmin >= 0.0) || !(tmax >= tmin)) throw RangeError("dqd: need 0 <= tmin <= tmax");
  if (tmin == 0.0 || steps == 1) return linspace(tmin, tmax, steps);
  std::vector<double> out = linspace(std::log10(tmin), std::log10(tmax), steps);
  for (double& v : out) v = std::pow(10.0, v);
  out.front() = tmin;
  out.back() = tmax;
  return out;
}

std::string cmd_dqd_curve(const DqdParams& params, int n_ops, const std::vector<double>& t, int threads,
                          const QuadratureConfig& cfg) {
  std::vector<DqdProbs> probs(t.size());
  parallel_for(t.size(), threads > 0 ? threads : thread_count(),
               [&](std::size_t i) { probs[i] = dqd_error_probs(params, t[i], n_ops, cfg); });
  std::string csv = "t_s,p1,p2,D0,D,clamped\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const DqdMeasures m = dqd_measures(probs[i].p1, probs[i].p2);
    csv += format_number(t[i]) + "," + format_number(probs[i].p1) + "," + format_number(probs[i].p2) + "," +
           format_number(m.d0) + "," + format_number(m.d) + "," + (probs[i].clamped ? "1" : "0") + "\n";
  }
  return csv;
}

std::string csv_to_svg(const std::string& csv) {
  std::vector<std::string> header;
  const auto rows = parse_csv(csv, header);
  if (header.size() < 2) throw Error("svg: CSV needs at least two columns");
  constexpr double kW = 720.0;
  constexpr double kH = 440.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 160.0;
  constexpr double kTop = 20.0;
  constexpr double kBottom = 50.0;
  constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (!rows.empty()) {
    xmin = xmax = rows.front()[0];
    ymin = ymax = rows.front()[1];
    for (const auto& r : rows) {
      xmin = std::min(xmin, r[0]);
      xmax = std::max(xmax, r[0]);
      for (std::size_t c = 1; c < r.size(); ++c) {
        ymin = std::min(ymin, r[c]);
        ymax = std::max(ymax, r[c]);
      }
    }
  }
  const bool log_x = xmin > 0.0 && xmax / xmin > 100.0;
  auto xv = [&](double x) { return log_x ? std::log10(x) : x; };
  const double x0 = xv(xmin);
  double x1 = xv(xmax);
  if (x1 == x0) x1 = x0 + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) { return kLeft + (xv(x) - x0) / (x1 - x0) * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kH - kBottom - (y - ymin) / (ymax - ymin) * (kH - kTop - kBottom); };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kW - kLeft - kRight << "\" height=\""
      << kH - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 12 << "\" text-anchor=\"middle\">"
      << header[0] << (log_x ? " (log)" : "") << "</text>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"" << kH - kBottom + 16 << "\" text-anchor=\"start\">" << xmin
      << "</text>\n";
  svg << "<text x=\"" << kW - kRight << "\" y=\"" << kH - kBottom + 16 << "\" text-anchor=\"end\">" << xmax
      << "</text>\n";
  svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(ymin) << "\" text-anchor=\"end\">" << ymin << "</text>\n";
  svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(ymax) + 10 << "\" text-anchor=\"end\">" << ymax << "</text>\n";
  for (std::size_t c = 1; c < header.size(); ++c) {
    const char* color = kColors[(c - 1) % kColors.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : rows) svg << px(r[0]) << "," << py(r[c]) << " ";
    svg << "\"/>\n";
    const double ly = kTop + 20.0 * static_cast<double>(c);
    svg << "<line x1=\"" << kW - kRight + 12 << "\" y1=\"" << ly << "\" x2=\"" << kW - kRight + 36 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kW - kRight + 42 << "\" y=\"" << ly + 4 << "\">" << header[c] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace decom
