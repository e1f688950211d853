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

#include "decom/noise.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace decom {

namespace {

constexpr std::array<std::pair<NoiseKind, std::string_view>, 5> kNames = {{
    {NoiseKind::BitFlip, "bit_flip"},
    {NoiseKind::PhaseFlip, "phase_flip"},
    {NoiseKind::Depolarizing, "depolarizing"},
    {NoiseKind::AmplitudeDamping, "amplitude_damping"},
    {NoiseKind::PhaseDamping, "phase_damping"},
}};

void require(bool ok, const std::string& msg) {
  if (!ok) throw RangeError(msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw RangeError("noise spec: bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw RangeError("unknown channel kind '" + std::string(name) + "'");
}

KrausChannel bit_flip(double p) {
  require(p >= 0.0 && p <= 1.0, "bit_flip: p must lie in [0, 1]");
  return KrausChannel({std::sqrt(1.0 - p) * PauliBasis::element(Pauli::I),
                       std::sqrt(p) * PauliBasis::element(Pauli::X)});
}

KrausChannel phase_flip(double p) {
  require(p >= 0.0 && p <= 1.0, "phase_flip: p must lie in [0, 1]");
  return KrausChannel({std::sqrt(1.0 - p) * PauliBasis::element(Pauli::I),
                       std::sqrt(p) * PauliBasis::element(Pauli::Z)});
}

KrausChannel depolarizing(double p) {
  require(p >= 0.0 && p <= 2.0 / 3.0 + 1e-15, "depolarizing: p must lie in [0, 2/3]");
  const double keep = std::max(0.0, 1.0 - 1.5 * p);
  const double flip = std::sqrt(p / 2.0);
  return KrausChannel({std::sqrt(keep) * PauliBasis::element(Pauli::I), flip * PauliBasis::element(Pauli::X),
                       flip * PauliBasis::element(Pauli::Y), flip * PauliBasis::element(Pauli::Z)});
}

KrausChannel amplitude_damping(double gamma_t) {
  require(gamma_t >= 0.0, "amplitude_damping: Gamma*t must be >= 0");
  Matrix e0 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::exp(-gamma_t / 2.0);
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 1) = std::sqrt(-std::expm1(-gamma_t));
  return KrausChannel({e0, e1});
}

KrausChannel phase_damping(double b_sq) {
  require(b_sq >= 0.0, "phase_damping: B^2 must be >= 0");
  const double lost = std::sqrt(-std::expm1(-b_sq));
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 0) = lost;
  Matrix e2 = Matrix::Zero(2, 2);
  e2(1, 1) = lost;
  return KrausChannel({std::exp(-b_sq / 2.0) * PauliBasis::element(Pauli::I), e1, e2});
}

double calibrated_max(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::BitFlip:
    case NoiseKind::PhaseFlip:
    case NoiseKind::AmplitudeDamping:
      return 1.0;
    case NoiseKind::Depolarizing:
      return 2.0 / 3.0;
    case NoiseKind::PhaseDamping:
      return 0.5;
  }
  return 0.0;
}

bool calibrated_in_range(NoiseKind kind, double p) {
  if (!(p >= 0.0)) return false;
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
    case NoiseKind::PhaseDamping:
      return p < calibrated_max(kind);
    default:
      return p <= calibrated_max(kind) + 1e-15;
  }
}

double native_from_calibrated(NoiseKind kind, double p) {
  if (!calibrated_in_range(kind, p)) {
    throw RangeError("calibrated p=" + std::to_string(p) + " outside the invertible range of " +
                     std::string(to_string(kind)));
  }
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
      return -std::log1p(-p);
    case NoiseKind::PhaseDamping:
      return -std::log1p(-2.0 * p);
    default:
      return p;
  }
}

double calibrated_from_native(NoiseKind kind, double native) {
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
      require(native >= 0.0, "amplitude_damping: Gamma*t must be >= 0");
      return -std::expm1(-native);
    case NoiseKind::PhaseDamping:
      require(native >= 0.0, "phase_damping: B^2 must be >= 0");
      return -std::expm1(-native) / 2.0;
    default:
      return native;
  }
}

KrausChannel from_calibrated_p(NoiseKind kind, double p) {
  return NoiseSpec::from_calibrated(kind, p).channel();
}

NoiseSpec NoiseSpec::from_native(NoiseKind kind, double native) {
  return {kind, native, calibrated_from_native(kind, native)};
}

NoiseSpec NoiseSpec::from_calibrated(NoiseKind kind, double p) {
  return {kind, native_from_calibrated(kind, p), p};
}

KrausChannel NoiseSpec::channel() const {
  switch (kind) {
    case NoiseKind::BitFlip:
      return bit_flip(native_param);
    case NoiseKind::PhaseFlip:
      return phase_flip(native_param);
    case NoiseKind::Depolarizing:
      return depolarizing(native_param);
    case NoiseKind::AmplitudeDamping:
      return amplitude_damping(native_param);
    case NoiseKind::PhaseDamping:
      return phase_damping(native_param);
  }
  throw RangeError("NoiseSpec: unknown kind");
}

std::string NoiseSpec::to_text(bool native) const {
  std::ostringstream out;
  out.precision(17);
  out << "kind=" << to_string(kind) << ", " << (native ? "native=" : "p=")
      << (native ? native_param : calibrated_p);
  return out.str();
}

NoiseSpec NoiseSpec::from_text(std::string_view text) {
  std::optional<NoiseKind> kind;
  std::optional<double> p;
  std::optional<double> native;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw RangeError("noise spec: expected key=value, got '" + std::string(field) + "'");
    const std::string_view key = trim(field.substr(0, eq));
    const std::string_view value = trim(field.substr(eq + 1));
    if (key == "kind") {
      kind = parse_noise_kind(value);
    } else if (key == "p") {
      p = parse_real(value);
    } else if (key == "native") {
      native = parse_real(value);
    } else {
      throw RangeError("noise spec: unknown key '" + std::string(key) + "'");
    }
  }
  if (!kind) throw RangeError("noise spec: missing kind");
  if (p.has_value() == native.has_value()) throw RangeError("noise spec: give exactly one of p= or native=");
  return p ? from_calibrated(*kind, *p) : from_native(*kind, *native);
}

}  // namespace decom
