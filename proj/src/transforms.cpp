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

#include "pulsekit/transforms.hpp"

#include <algorithm>
#include <numbers>

#include "pulsekit/errors.hpp"

namespace pulsekit {

Schedule reverse_schedule(const Schedule& s) {
  const std::int64_t total = s.duration();
  std::vector<ScheduleEntry> mirrored;
  mirrored.reserve(s.entries().size());
  for (const ScheduleEntry& entry : s.entries()) {
    ScheduleEntry out;
    switch (entry.inst.op) {
      case Instruction::Op::kPlay:
        out.t = total - entry.t - entry.inst.shape.duration;
        out.inst = Instruction::play(reversed_pulse(entry.inst.shape),
                                     entry.inst.channel);
        break;
      case Instruction::Op::kShiftPhase:
        out.t = total - entry.t;
        out.inst =
            Instruction::shift_phase(-entry.inst.phase, entry.inst.channel);
        break;
      case Instruction::Op::kDelay:
        out.t = total - entry.t - entry.inst.length;
        out.inst = Instruction::delay(entry.inst.length, entry.inst.channel);
        break;
    }
    mirrored.push_back(std::move(out));
  }
  return Schedule::from_entries(std::move(mirrored), total);
}

Schedule fold_schedule(const Schedule& s, int scale) {
  if (scale < 1 || scale % 2 == 0) {
    throw ParameterError("fold scale must be a positive odd integer");
  }
  if (scale == 1) return s;
  const Schedule reversed = reverse_schedule(s);
  Schedule folded = s;
  for (int k = 0; k < (scale - 1) / 2; ++k) {
    folded = append(append(folded, reversed), s);
  }
  return folded;
}

Schedule build_rx(const DeviceModel& device, int qubit, double theta) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  PulseShape x90 = device.calibration(qubit);
  x90.amp *= 0.5;
  const std::int64_t dur = x90.duration;
  const ChannelId ch = ChannelId::drive(qubit);

  std::vector<ScheduleEntry> entries;
  entries.push_back({0, Instruction::shift_phase(-kHalfPi, ch)});
  entries.push_back({0, Instruction::play(x90, ch)});
  entries.push_back({dur, Instruction::shift_phase(std::numbers::pi - theta, ch)});
  entries.push_back({dur, Instruction::play(x90, ch)});
  entries.push_back({2 * dur, Instruction::shift_phase(-kHalfPi, ch)});
  return Schedule::from_entries(std::move(entries), 2 * dur);
}

std::vector<int> AnsatzSpec::coupling_indices(const DeviceModel& device) const {
  auto listed = [&](int q) {
    return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
  };
  std::vector<int> indices;
  for (int i = 0; i < static_cast<int>(device.couplings().size()); ++i) {
    const Coupling& c = device.couplings()[static_cast<std::size_t>(i)];
    if (listed(c.control) && listed(c.target)) indices.push_back(i);
  }
  return indices;
}

int AnsatzSpec::param_count(const DeviceModel& device) const {
  const auto n_couplings = static_cast<int>(coupling_indices(device).size());
  return layers * 2 * (static_cast<int>(qubits.size()) + n_couplings);
}

Schedule build_hea_ansatz(const DeviceModel& device, const AnsatzSpec& spec,
                          const std::vector<double>& params) {
  if (spec.layers < 1) throw ParameterError("ansatz needs at least one layer");
  for (int q : spec.qubits) {
    if (q < 0 || q >= device.n_qubits()) {
      throw ParameterError("ansatz qubit index out of range");
    }
  }
  const std::vector<int> couplings = spec.coupling_indices(device);
  if (static_cast<int>(params.size()) != spec.param_count(device)) {
    throw ParameterError("parameter vector length does not match ansatz");
  }

  std::vector<ScheduleEntry> entries;
  std::size_t k = 0;
  std::int64_t t = 0;
  for (int layer = 0; layer < spec.layers; ++layer) {
    for (int q : spec.qubits) {
      const double amp = std::clamp(params[k], 0.0, 1.0);
      const double angle = params[k + 1];
      k += 2;
      PulseShape d = PulseShape::drag(spec.drag_duration, amp, angle,
                                      spec.drag_sigma, spec.drag_beta);
      entries.push_back({t, Instruction::play(d, ChannelId::drive(q))});
    }
    const std::int64_t cr_t = t + spec.drag_duration;
    for (int ci : couplings) {
      const double amp = std::clamp(params[k], 0.0, 1.0);
      const double angle = params[k + 1];
      k += 2;
      PulseShape g = PulseShape::gaussian_square(
          spec.cr_duration, amp, angle, spec.cr_sigma, spec.cr_width);
      entries.push_back({cr_t, Instruction::play(g, ChannelId::control(ci))});
    }
    t += spec.drag_duration + spec.cr_duration;
  }
  return Schedule::from_entries(std::move(entries), t);
}

}  // namespace pulsekit
