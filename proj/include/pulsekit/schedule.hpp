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

#ifndef PULSEKIT_SCHEDULE_HPP_
#define PULSEKIT_SCHEDULE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pulsekit/pulse_shapes.hpp"

namespace pulsekit {

enum class ChannelKind { kDrive, kControl };

std::string channel_kind_name(ChannelKind kind);
ChannelKind channel_kind_from_name(const std::string& name);

// Addresses a pulse channel on a device: Drive channels index qubits,
// Control channels index couplings (ordered control/target pairs).
struct ChannelId {
  ChannelKind kind = ChannelKind::kDrive;
  int index = 0;

  friend auto operator<=>(const ChannelId&, const ChannelId&) = default;

  static ChannelId drive(int qubit) { return {ChannelKind::kDrive, qubit}; }
  static ChannelId control(int coupling) {
    return {ChannelKind::kControl, coupling};
  }
};

// One schedule instruction. Play emits a pulse envelope and occupies the
// pulse's duration; Delay occupies time silently; ShiftPhase rotates the
// channel's phase frame and takes zero time.
struct Instruction {
  enum class Op { kPlay, kShiftPhase, kDelay };

  Op op = Op::kDelay;
  ChannelId channel;
  PulseShape shape;    // kPlay
  double phase = 0.0;  // kShiftPhase, radians
  int length = 0;      // kDelay, samples

  static Instruction play(const PulseShape& shape, ChannelId channel);
  static Instruction shift_phase(double phase, ChannelId channel);
  static Instruction delay(int duration, ChannelId channel);

  // Time the instruction occupies, in samples.
  int duration() const;
};

struct ScheduleEntry {
  std::int64_t t = 0;  // start time in samples
  Instruction inst;
};

// Time-stamped instruction list. Entries are kept sorted by start time
// (ties keep insertion order), and no two Play instructions on the same
// channel may overlap. The duration field is at least the last stop time
// but may exceed it: a time-mirrored schedule keeps its original length,
// which turns a leading idle gap into a trailing one.
//
// Schedules are immutable; insert and append return new values.
class Schedule {
 public:
  Schedule() = default;

  // Validates entry times, the no-overlap rule and the duration bound.
  // Throws SchedulingError on violations.
  static Schedule from_entries(std::vector<ScheduleEntry> entries,
                               std::int64_t duration);

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::int64_t duration() const { return duration_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ScheduleEntry> entries_;
  std::int64_t duration_ = 0;
};

// New schedule with one more instruction at start time t. The duration
// grows to cover the new instruction if needed.
Schedule insert(const Schedule& s, std::int64_t t, const Instruction& inst);

// Sequential composition: every entry of b is shifted by a.duration, and
// the duration is the sum of the two durations.
Schedule append(const Schedule& a, const Schedule& b);

}  // namespace pulsekit

#endif  // PULSEKIT_SCHEDULE_HPP_
