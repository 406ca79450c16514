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

#ifndef PULSEKIT_DEVICE_HPP_
#define PULSEKIT_DEVICE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pulsekit/pulse_shapes.hpp"

namespace pulsekit {

// All frequencies and strengths are angular (rad/s); hbar = 1 throughout,
// so Hamiltonian coefficients are angular frequencies too. Device files
// carry plain Hz and are scaled by 2*pi on load.
struct QubitParams {
  double frequency = 0.0;       // qubit frequency, rad/s
  double drive_strength = 0.0;  // Rabi rate per unit envelope amplitude, rad/s
};

// Directed qubit pair driven through a Control channel. The drive on the
// control qubit at the target's frequency acts on the target conditioned
// on the control state; the conditioning strength is set by the exchange
// coupling j and the control-target detuning delta12.
struct Coupling {
  int control = 0;
  int target = 0;
  double j = 0.0;                  // exchange coupling, rad/s
  double delta12 = 0.0;            // control minus target frequency, rad/s
  double cr_drive_strength = 0.0;  // rad/s per unit envelope amplitude

  // Relative weight of the conditional term: j / (2 * delta12).
  double conditional_ratio() const { return j / (2.0 * delta12); }
};

// The simulated machine: sample period, per-qubit drive parameters,
// couplings, and a store of calibrated pi pulses keyed by qubit.
class DeviceModel {
 public:
  static constexpr double kDefaultDtSeconds = 2.0e-9 / 9.0;

  DeviceModel() = default;
  DeviceModel(double dt, std::vector<QubitParams> qubits,
              std::vector<Coupling> couplings);

  double dt() const { return dt_; }
  int n_qubits() const { return static_cast<int>(qubits_.size()); }
  const std::vector<QubitParams>& qubits() const { return qubits_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }

  const QubitParams& qubit(int index) const;
  const Coupling& coupling(int index) const;

  void set_calibration(int qubit, const PulseShape& pi_pulse);
  bool has_calibration(int qubit) const;
  // Throws CalibrationError when the qubit has no stored pi pulse.
  const PulseShape& calibration(int qubit) const;

 private:
  double dt_ = kDefaultDtSeconds;
  std::vector<QubitParams> qubits_;
  std::vector<Coupling> couplings_;
  std::map<int, PulseShape> calibrations_;
};

// Builds a DeviceModel from JSON given inline (text starting with '{') or
// as a file path. Schema:
//   {dt_s?, qubits: [{freq_hz, drive_strength_hz}],
//    couplings: [{control, target, j_hz, delta12_hz, cr_drive_strength_hz}]}
// dt_s defaults to 2/9 ns when omitted. Hz fields become rad/s on load.
// Throws ConfigError on schema or consistency violations.
DeviceModel load_device(const std::string& text_or_path);

// Finds the pulse amplitude that drives `qubit` from |0> to |1> (a pi
// rotation) by sweeping the family's amplitude, locating the first maximum
// of P(|1>), and refining it with iterated three-point parabolic
// interpolation. The calibrated pulse is stored on the device and
// returned. Noiseless and deterministic.
//
// Throws CalibrationError when the sweep is unusable: fewer than three
// points, amplitudes outside [0, 1], or no interior maximum to refine.
PulseShape rabi_calibrate(DeviceModel& device, int qubit,
                          const PulseFamily& family,
                          const std::vector<double>& sweep);

}  // namespace pulsekit

#endif  // PULSEKIT_DEVICE_HPP_
