// Copyright 2026 The pulsekit Authors
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

#include "pulsekit/device.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "pulsekit/errors.hpp"
#include "pulsekit/schedule.hpp"
#include "pulsekit/serialization.hpp"
#include "pulsekit/simulator.hpp"

namespace pulsekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double config_number(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError("device field '" + key + "' missing or not a number");
  }
  return obj[key].get<double>();
}

int config_int(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ConfigError("device field '" + key + "' missing or not an integer");
  }
  return obj[key].get<int>();
}

}  // namespace

DeviceModel::DeviceModel(double dt, std::vector<QubitParams> qubits,
                         std::vector<Coupling> couplings)
    : dt_(dt), qubits_(std::move(qubits)), couplings_(std::move(couplings)) {
  if (dt_ <= 0.0) throw ConfigError("dt must be positive");
  if (qubits_.empty()) throw ConfigError("device needs at least one qubit");
  const int n = static_cast<int>(qubits_.size());
  for (const auto& q : qubits_) {
    if (q.drive_strength <= 0.0) {
      throw ConfigError("qubit drive_strength must be positive");
    }
  }
  for (const auto& c : couplings_) {
    if (c.control < 0 || c.control >= n || c.target < 0 || c.target >= n) {
      throw ConfigError("coupling qubit index out of range");
    }
    if (c.control == c.target) {
      throw ConfigError("coupling control and target must differ");
    }
    if (c.delta12 == 0.0) {
      throw ConfigError("coupling delta12 must be nonzero");
    }
    if (c.cr_drive_strength <= 0.0) {
      throw ConfigError("coupling cr_drive_strength must be positive");
    }
  }
}

const QubitParams& DeviceModel::qubit(int index) const {
  if (index < 0 || index >= n_qubits()) {
    throw ParameterError("qubit index out of range");
  }
  return qubits_[static_cast<std::size_t>(index)];
}

const Coupling& DeviceModel::coupling(int index) const {
  if (index < 0 || index >= static_cast<int>(couplings_.size())) {
    throw ParameterError("coupling index out of range");
  }
  return couplings_[static_cast<std::size_t>(index)];
}

void DeviceModel::set_calibration(int qubit, const PulseShape& pi_pulse) {
  if (qubit < 0 || qubit >= n_qubits()) {
    throw ParameterError("qubit index out of range");
  }
  validate(pi_pulse);
  calibrations_[qubit] = pi_pulse;
}

bool DeviceModel::has_calibration(int qubit) const {
  return calibrations_.count(qubit) > 0;
}

const PulseShape& DeviceModel::calibration(int qubit) const {
  auto it = calibrations_.find(qubit);
  if (it == calibrations_.end()) {
    std::ostringstream msg;
    msg << "qubit " << qubit << " has no calibrated pi pulse";
    throw CalibrationError(msg.str());
  }
  return it->second;
}

DeviceModel load_device(const std::string& text_or_path) {
  nlohmann::json j = parse_json_text_or_file(text_or_path);
  if (!j.is_object()) throw ConfigError("device description must be an object");

  double dt = DeviceModel::kDefaultDtSeconds;
  if (j.contains("dt_s")) {
    if (!j["dt_s"].is_number()) throw ConfigError("dt_s must be a number");
    dt = j["dt_s"].get<double>();
  }

  if (!j.contains("qubits") || !j["qubits"].is_array()) {
    throw ConfigError("device field 'qubits' missing or not an array");
  }
  std::vector<QubitParams> qubits;
  for (const auto& q : j["qubits"]) {
    QubitParams p;
    p.frequency = kTwoPi * config_number(q, "freq_hz");
    p.drive_strength = kTwoPi * config_number(q, "drive_strength_hz");
    qubits.push_back(p);
  }

  std::vector<Coupling> couplings;
  if (j.contains("couplings")) {
    if (!j["couplings"].is_array()) {
      throw ConfigError("device field 'couplings' must be an array");
    }
    for (const auto& c : j["couplings"]) {
      Coupling cp;
      cp.control = config_int(c, "control");
      cp.target = config_int(c, "target");
      cp.j = kTwoPi * config_number(c, "j_hz");
      cp.delta12 = kTwoPi * config_number(c, "delta12_hz");
      cp.cr_drive_strength = kTwoPi * config_number(c, "cr_drive_strength_hz");
      couplings.push_back(cp);
    }
  }

  return DeviceModel(dt, std::move(qubits), std::move(couplings));
}

namespace {

// P(|1>) on `qubit` after playing one pulse of the family at `amp`.
double excitation_at(const DeviceModel& device, int qubit,
                     const PulseFamily& family, double amp) {
  PulseShape shape = family.bind(amp, 0.0);
  Schedule s = insert(Schedule(), 0, Instruction::play(shape, ChannelId::drive(qubit)));
  SimOptions options;
  QuantumState out = evolve(s, device, QuantumState::ground(device.n_qubits()), options);
  return excited_probability(out, qubit);
}

// Vertex of the parabola through three (x, y) points. Falls back to x1
// when the points are collinear.
double parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                       double y2) {
  const double d01 = x1 - x0;
  const double d12 = x1 - x2;
  const double num = d01 * d01 * (y1 - y2) - d12 * d12 * (y1 - y0);
  const double den = d01 * (y1 - y2) - d12 * (y1 - y0);
  if (std::abs(den) < 1e-300) return x1;
  return x1 - 0.5 * num / den;
}

}  // namespace

PulseShape rabi_calibrate(DeviceModel& device, int qubit,
                          const PulseFamily& family,
                          const std::vector<double>& sweep) {
  if (family.kind != PulseFamily::Kind::kShape) {
    throw CalibrationError(
        "composite pulse families cannot be amplitude-calibrated directly");
  }
  if (sweep.size() < 3) {
    throw CalibrationError("amplitude sweep needs at least three points");
  }
  for (double a : sweep) {
    if (a < 0.0 || a > 1.0) {
      throw CalibrationError("sweep amplitudes must lie in [0, 1]");
    }
  }
  if (qubit < 0 || qubit >= device.n_qubits()) {
    throw ParameterError("qubit index out of range");
  }

  std::vector<double> amps = sweep;
  std::sort(amps.begin(), amps.end());
  std::vector<double> p1(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    p1[i] = excitation_at(device, qubit, family, amps[i]);
  }

  // First interior maximum of P(|1>). A sweep that never turns over (too
  // short, or aliased past several Rabi periods) has nothing to refine.
  std::size_t peak = 0;
  bool found = false;
  for (std::size_t i = 1; i + 1 < amps.size(); ++i) {
    if (p1[i] >= p1[i - 1] && p1[i] >= p1[i + 1] && p1[i] > 0.5) {
      peak = i;
      found = true;
      break;
    }
  }
  if (!found) {
    throw CalibrationError("sweep shows no resolved excitation maximum");
  }

  // Iterated three-point parabolic refinement with a shrinking window.
  double center = parabola_vertex(amps[peak - 1], p1[peak - 1], amps[peak],
                                  p1[peak], amps[peak + 1], p1[peak + 1]);
  double h = 0.5 * std::max(amps[peak] - amps[peak - 1],
                            amps[peak + 1] - amps[peak]);
  center = std::clamp(center, amps[peak - 1], amps[peak + 1]);
  for (int iter = 0; iter < 60 && h > 1e-12; ++iter) {
    double lo = std::max(0.0, center - h);
    double hi = std::min(1.0, center + h);
    double mid = 0.5 * (lo + hi);
    const double ylo = excitation_at(device, qubit, family, lo);
    const double ymid = excitation_at(device, qubit, family, mid);
    const double yhi = excitation_at(device, qubit, family, hi);
    double v = parabola_vertex(lo, ylo, mid, ymid, hi, yhi);
    center = std::clamp(v, lo, hi);
    h *= 0.5;
  }

  PulseShape pi_pulse = family.bind(center, 0.0);
  device.set_calibration(qubit, pi_pulse);
  return pi_pulse;
}

}  // namespace pulsekit
