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

// Shared fixtures for the test binaries: canned devices, a random
// schedule generator exercising every instruction and shape kind, and
// small state diagnostics.

#ifndef PULSEKIT_TESTS_HELPERS_HPP_
#define PULSEKIT_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "pulsekit/device.hpp"
#include "pulsekit/rng.hpp"
#include "pulsekit/schedule.hpp"
#include "pulsekit/simulator.hpp"

namespace pulsekit::testing {

inline DeviceModel one_qubit_device() {
  return load_device(
      R"({"qubits": [{"freq_hz": 5.0e9, "drive_strength_hz": 1.0e8}]})");
}

inline DeviceModel two_qubit_device() {
  return load_device(std::string(PULSEKIT_DATA_DIR) +
                     "/devices/two_qubit.json");
}

inline PulseShape random_shape(Rng& rng, int min_duration = 8,
                               int max_duration = 64) {
  const int duration =
      min_duration +
      static_cast<int>(rng.next_u64() %
                       static_cast<std::uint64_t>(max_duration - min_duration + 1));
  const double amp = rng.uniform(0.05, 1.0);
  const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double sigma = duration / 4.0;
  switch (rng.next_u64() % 4) {
    case 0:
      return PulseShape::square(duration, amp, angle);
    case 1:
      return PulseShape::gaussian(duration, amp, angle, sigma);
    case 2:
      return PulseShape::drag(duration, amp, angle, sigma,
                              rng.uniform(-1.0, 1.0));
    default:
      return PulseShape::gaussian_square(duration, amp, angle, duration / 6.0,
                                         rng.uniform(0.0, duration - 2.0));
  }
}

// Random valid schedule over the device's channels: sequential pulses per
// channel (channels may run concurrently), phase shifts sprinkled before
// pulses and sometimes at the very end, occasional delays.
inline Schedule random_schedule(Rng& rng, const DeviceModel& device,
                                int n_pulses, int min_duration = 8,
                                int max_duration = 64) {
  std::vector<ChannelId> channels;
  for (int q = 0; q < device.n_qubits(); ++q) {
    channels.push_back(ChannelId::drive(q));
  }
  for (int c = 0; c < static_cast<int>(device.couplings().size()); ++c) {
    channels.push_back(ChannelId::control(c));
  }

  std::map<ChannelId, std::int64_t> cursor;
  std::vector<ScheduleEntry> entries;
  for (int p = 0; p < n_pulses; ++p) {
    const ChannelId ch = channels[rng.next_u64() % channels.size()];
    if (rng.uniform() < 0.4) {
      const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
      entries.push_back({cursor[ch], Instruction::shift_phase(phi, ch)});
    }
    if (rng.uniform() < 0.15) {
      const int len = 1 + static_cast<int>(rng.next_u64() % 16);
      entries.push_back({cursor[ch], Instruction::delay(len, ch)});
      cursor[ch] += len;
    }
    const PulseShape shape = random_shape(rng, min_duration, max_duration);
    entries.push_back({cursor[ch], Instruction::play(shape, ch)});
    cursor[ch] += shape.duration;
  }

  std::int64_t total = 0;
  for (const auto& [ch, t] : cursor) total = std::max(total, t);
  if (!entries.empty() && rng.uniform() < 0.3) {
    const ChannelId ch = channels[rng.next_u64() % channels.size()];
    const double phi = rng.uniform(-std::numbers::pi, std::numbers::pi);
    entries.push_back({total, Instruction::shift_phase(phi, ch)});
  }
  return Schedule::from_entries(std::move(entries), total);
}

// Entanglement of a two-qubit pure state: 2 |a00 a11 - a01 a10|.
inline double concurrence(const QuantumState& state) {
  const auto& a = state.amplitudes;
  return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

inline std::string zeros(int n) { return std::string(static_cast<std::size_t>(n), '0'); }

}  // namespace pulsekit::testing

#endif  // PULSEKIT_TESTS_HELPERS_HPP_
