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

#ifndef PULSEKIT_TRANSFORMS_HPP_
#define PULSEKIT_TRANSFORMS_HPP_

#include <vector>

#include "pulsekit/device.hpp"
#include "pulsekit/schedule.hpp"

namespace pulsekit {

// Time-mirrors a schedule into its inverse. With D = s.duration:
//
//   Play(shape) at t       -> Play(reversed_pulse(shape)) at D - t - dur
//   ShiftPhase(phi) at t   -> ShiftPhase(-phi) at D - t
//   Delay(len) at t        -> Delay(len) at D - t - len
//
// The result has duration D. Played after s, the reversed schedule
// undoes it: each sample's Hamiltonian is met again with opposite sign in
// mirrored order, so the noiseless propagator of append(s, reverse(s)) is
// the identity up to global phase. Applying it twice returns the original
// schedule with every pulse angle advanced by 2 pi.
Schedule reverse_schedule(const Schedule& s);

// Identity-preserving noise amplification: scale must be odd, and the
// result is s followed by (scale - 1) / 2 repetitions of
// (reverse_schedule(s), s). Same noiseless action as s, scale times the
// pulses, scale times the duration. Throws ParameterError on even or
// non-positive scales.
Schedule fold_schedule(const Schedule& s, int scale);

// X-axis rotation by theta on one qubit, decomposed as two half-amplitude
// copies of the qubit's calibrated pi pulse with virtual-Z phases around
// and between them:
//
//   ShiftPhase(-pi/2), X90, ShiftPhase(pi - theta), X90, ShiftPhase(-pi/2)
//
// The noiseless propagator equals Rx(theta) up to global phase, and the
// duration is exactly twice the calibrated pulse duration since phase
// shifts take no time. Requires a calibration for the qubit (throws
// CalibrationError otherwise).
Schedule build_rx(const DeviceModel& device, int qubit, double theta);

// Hardware-efficient ansatz layout: per layer, one Drag pulse on every
// listed qubit (simultaneously), then one GaussianSquare pulse on every
// device coupling whose endpoints are listed (simultaneously). Each pulse
// exposes (amp, angle); params are bound layer by layer, qubit pulses
// first, then coupling pulses, in listing order.
struct AnsatzSpec {
  std::vector<int> qubits;
  int layers = 1;
  int drag_duration = 160;
  double drag_sigma = 40.0;
  double drag_beta = 0.0;
  int cr_duration = 320;
  double cr_sigma = 40.0;
  double cr_width = 160.0;

  // Coupling indices used by the ansatz: couplings whose control and
  // target both appear in `qubits`, in device order.
  std::vector<int> coupling_indices(const DeviceModel& device) const;
  // layers * (2 * n_qubits + 2 * n_couplings).
  int param_count(const DeviceModel& device) const;
};

// Binds params into the ansatz layout. Amplitude slots are clamped into
// [0, 1] so optimizers may propose unconstrained values; angle slots are
// used as-is. Throws ParameterError when params.size() does not match
// spec.param_count(device).
Schedule build_hea_ansatz(const DeviceModel& device, const AnsatzSpec& spec,
                          const std::vector<double>& params);

}  // namespace pulsekit

#endif  // PULSEKIT_TRANSFORMS_HPP_
