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

#include "pulsekit/schedule.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pulsekit/errors.hpp"

namespace pulsekit {

std::string channel_kind_name(ChannelKind kind) {
  return kind == ChannelKind::kDrive ? "drive" : "control";
}

ChannelKind channel_kind_from_name(const std::string& name) {
  if (name == "drive") return ChannelKind::kDrive;
  if (name == "control") return ChannelKind::kControl;
  throw ParameterError("unknown channel kind: \"" + name + "\"");
}

Instruction Instruction::play(const PulseShape& shape, ChannelId channel) {
  validate(shape);
  Instruction i;
  i.op = Op::kPlay;
  i.channel = channel;
  i.shape = shape;
  return i;
}

Instruction Instruction::shift_phase(double phase, ChannelId channel) {
  Instruction i;
  i.op = Op::kShiftPhase;
  i.channel = channel;
  i.phase = phase;
  return i;
}

Instruction Instruction::delay(int duration, ChannelId channel) {
  if (duration < 0) throw ParameterError("delay duration must be >= 0");
  Instruction i;
  i.op = Op::kDelay;
  i.channel = channel;
  i.length = duration;
  return i;
}

int Instruction::duration() const {
  switch (op) {
    case Op::kPlay:
      return shape.duration;
    case Op::kShiftPhase:
      return 0;
    case Op::kDelay:
      return length;
  }
  return 0;
}

namespace {

void check_entries(const std::vector<ScheduleEntry>& entries,
                   std::int64_t duration) {
  std::int64_t max_stop = 0;
  // Play intervals per channel, for the overlap check.
  std::map<ChannelId, std::vector<std::pair<std::int64_t, std::int64_t>>> plays;
  for (const auto& e : entries) {
    if (e.t < 0) throw SchedulingError("instruction start time must be >= 0");
    std::int64_t stop = e.t + e.inst.duration();
    max_stop = std::max(max_stop, stop);
    if (e.inst.op == Instruction::Op::kPlay)
      plays[e.inst.channel].emplace_back(e.t, stop);
  }
  if (duration < max_stop)
    throw SchedulingError("schedule duration is shorter than its content");
  for (auto& [channel, intervals] : plays) {
    std::sort(intervals.begin(), intervals.end());
    for (size_t i = 1; i < intervals.size(); ++i) {
      if (intervals[i].first < intervals[i - 1].second)
        throw SchedulingError("overlapping Play instructions on " +
                              channel_kind_name(channel.kind) + " channel " +
                              std::to_string(channel.index));
    }
  }
}

void sort_entries(std::vector<ScheduleEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ScheduleEntry& a, const ScheduleEntry& b) {
                     return a.t < b.t;
                   });
}

}  // namespace

Schedule Schedule::from_entries(std::vector<ScheduleEntry> entries,
                                std::int64_t duration) {
  if (duration < 0) throw SchedulingError("schedule duration must be >= 0");
  sort_entries(entries);
  check_entries(entries, duration);
  Schedule s;
  s.entries_ = std::move(entries);
  s.duration_ = duration;
  return s;
}

Schedule insert(const Schedule& s, std::int64_t t, const Instruction& inst) {
  if (t < 0) throw SchedulingError("instruction start time must be >= 0");
  std::vector<ScheduleEntry> entries = s.entries();
  entries.push_back({t, inst});
  std::int64_t duration = std::max(s.duration(), t + inst.duration());
  return Schedule::from_entries(std::move(entries), duration);
}

Schedule append(const Schedule& a, const Schedule& b) {
  std::vector<ScheduleEntry> entries = a.entries();
  entries.reserve(entries.size() + b.entries().size());
  for (const auto& e : b.entries())
    entries.push_back({e.t + a.duration(), e.inst});
  return Schedule::from_entries(std::move(entries),
                                a.duration() + b.duration());
}

}  // namespace pulsekit
