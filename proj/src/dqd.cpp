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

#include "decom/dqd.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "decom/linalg.hpp"
#include "decom/noise.hpp"
#include "decom/sweep.hpp"

namespace decom {

namespace {

constexpr double kElectronVolt = 1.602176634e-19;
constexpr int kOrder = 16;
using Rule = boost::math::quadrature::gauss<double, kOrder>;

// 16-point Gauss-Legendre on [lo, hi].
template <typename F>
double panel(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = half * x[i];
    sum += w[i] * (f(mid - dx) + f(mid + dx));
  }
  return sum * half;
}

std::string show(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

const nlohmann::json& default_json() {
  static const nlohmann::json j = nlohmann::json::parse(DqdParams{}.to_json_text());
  return j;
}

}  // namespace

void DqdParams::validate() const {
  for (double v : {xi, sound_speed, density, separation, radius, wavevector, hbar}) {
    if (!std::isfinite(v) || v <= 0.0) throw RangeError("dqd params: every constant must be finite and positive");
  }
}

DqdParams DqdParams::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("dqd params: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("dqd params: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!default_json().contains(key)) throw Error("dqd params: unknown key '" + key + "'");
    if (!value.is_number()) throw Error("dqd params: '" + key + "' must be a number");
  }
  auto get = [&](const char* key) { return j.value(key, default_json()[key].get<double>()); };
  DqdParams p;
  p.xi = get("xi_eV") * kElectronVolt;
  p.sound_speed = get("s_m_per_s");
  p.density = get("rho_g_per_cm3") * 1000.0;
  p.separation = get("L_nm") * 1e-9;
  p.radius = get("a_nm") * 1e-9;
  p.wavevector = get("k_per_m");
  p.validate();
  return p;
}

DqdParams DqdParams::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("dqd params: cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return from_json_text(text.str());
}

std::string DqdParams::to_json_text() const {
  nlohmann::ordered_json j;
  j["xi_eV"] = xi / kElectronVolt;
  j["s_m_per_s"] = sound_speed;
  j["rho_g_per_cm3"] = density / 1000.0;
  j["L_nm"] = separation / 1e-9;
  j["a_nm"] = radius / 1e-9;
  j["k_per_m"] = wavevector;
  return j.dump(2) + "\n";
}

void QuadratureConfig::validate() const {
  if (q_max_factor < 6.0) throw RangeError("quadrature: q_max_factor must be >= 6");
  if (outer_nodes < kOrder || inner_nodes < kOrder) throw RangeError("quadrature: node counts must be >= 16");
  if (!(rel_tol > 0.0)) throw RangeError("quadrature: rel_tol must be positive");
  if (max_panels < 1) throw RangeError("quadrature: max_panels must be positive");
}

QuadratureConfig QuadratureConfig::refined() const {
  QuadratureConfig c = *this;
  c.outer_nodes *= 2;
  c.inner_nodes *= 2;
  return c;
}

double relaxation_rate(const DqdParams& params) {
  params.validate();
  const double k = params.wavevector;
  const double pref = params.xi * params.xi * k * k * k /
                      (4.0 * std::numbers::pi * params.density * params.sound_speed * params.sound_speed * params.hbar);
  return pref * std::exp(-0.5 * params.radius * params.radius * k * k) * (1.0 - sinc(k * params.separation));
}

double theta_integral(double ql, int inner_nodes) {
  const int panels = std::max(1, inner_nodes / kOrder);
  const double width = std::numbers::pi / panels;
  auto f = [ql](double theta) {
    const double s = std::sin(ql * std::cos(theta));
    return std::sin(theta) * s * s;
  };
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += panel(f, i * width, (i + 1) * width);
  return sum;
}

double spectral_function(const DqdParams& params, double t, const QuadratureConfig& cfg) {
  params.validate();
  cfg.validate();
  if (!(t >= 0.0)) throw RangeError("spectral_function: t must be >= 0");
  if (t == 0.0) return 0.0;

  const double a = params.radius;
  const double st = params.sound_speed * t;
  const double q_max = cfg.q_max_factor / a;
  // q^2 dq / q collapses to q dq.
  auto integrand = [&](double q) {
    const double s = std::sin(0.5 * q * st);
    return q * std::exp(-0.5 * a * a * q * q) * s * s * theta_integral(q * params.separation, cfg.inner_nodes);
  };

  // Start with at least one panel per period of sin^2(q s t / 2).
  const double periods = q_max * st / (2.0 * std::numbers::pi);
  const int initial = std::max(cfg.outer_nodes / kOrder, static_cast<int>(std::ceil(periods)));
  if (initial > cfg.max_panels) {
    throw ConvergenceError("spectral_function: t=" + show(t) + " needs more than " +
                           std::to_string(cfg.max_panels) + " q panels");
  }

  struct Piece {
    double lo;
    double hi;
    double value;
  };
  std::vector<Piece> todo;
  double coarse = 0.0;
  const double width = q_max / initial;
  for (int i = initial - 1; i >= 0; --i) {
    const double lo = i * width;
    const double hi = (i + 1) * width;
    const double v = panel(integrand, lo, hi);
    coarse += std::abs(v);
    todo.push_back({lo, hi, v});
  }
  const double abs_floor = cfg.rel_tol * coarse;

  double total = 0.0;
  int panels_used = initial;
  while (!todo.empty()) {
    const Piece piece = todo.back();
    todo.pop_back();
    const double mid = 0.5 * (piece.lo + piece.hi);
    const double left = panel(integrand, piece.lo, mid);
    const double right = panel(integrand, mid, piece.hi);
    const double fine = left + right;
    const double share = (piece.hi - piece.lo) / q_max;
    if (std::abs(fine - piece.value) <= std::max(cfg.rel_tol * std::abs(fine), abs_floor * share)) {
      total += fine;
      continue;
    }
    if (++panels_used > cfg.max_panels) {
      throw ConvergenceError("spectral_function: q panel budget of " + std::to_string(cfg.max_panels) +
                             " exhausted at t=" + show(t));
    }
    todo.push_back({mid, piece.hi, right});
    todo.push_back({piece.lo, mid, left});
  }

  const double s = params.sound_speed;
  const double pref = params.xi * params.xi / (std::numbers::pi * std::numbers::pi * params.hbar * params.density * s * s * s);
  return std::max(0.0, pref * total);
}

DqdMeasures dqd_measures(double p1, double p2) {
  DqdMeasures m;
  m.d0 = std::max(p1, p2);
  const double amp = 5.0 * p1 * p1 * (3.0 - 3.0 * p1 + p1 * p1) / 8.0;
  const double phase = 10.0 * p2 * p2 * (1.0 - 2.0 * p2 + p2 * p2);
  m.d = std::max(amp, phase);
  return m;
}

DqdProbs dqd_error_probs(const DqdParams& params, double t, int n_ops, const QuadratureConfig& cfg) {
  if (!(t >= 0.0)) throw RangeError("dqd: t must be >= 0");
  if (n_ops < 1) throw RangeError("dqd: N must be >= 1");
  const double p1 = -std::expm1(-relaxation_rate(params) * t);
  const double p2 = -0.5 * std::expm1(-spectral_function(params, t, cfg));
  const ScaledProb s1 = scale_for_n_ops(p1, n_ops, NoiseKind::AmplitudeDamping);
  const ScaledProb s2 = scale_for_n_ops(p2, n_ops, NoiseKind::PhaseDamping);
  return {s1.p, s2.p, s1.clamped || s2.clamped};
}

DqdMeasures dqd_decoherence(const DqdParams& params, double t, int n_ops, const QuadratureConfig& cfg) {
  const DqdProbs p = dqd_error_probs(params, t, n_ops, cfg);
  return dqd_measures(p.p1, p.p2);
}

}  // namespace decom
