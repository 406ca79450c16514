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

#include "pulsekit/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pulsekit/errors.hpp"

namespace pulsekit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw SerializationError(std::string("missing or non-numeric field \"") +
                             key + "\"");
  return j.at(key).get<double>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw SerializationError(std::string("missing or non-integer field \"") +
                             key + "\"");
  return j.at(key).get<int>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw SerializationError(std::string("missing or non-string field \"") +
                             key + "\"");
  return j.at(key).get<std::string>();
}

ordered_json channel_to_json(const ChannelId& c) {
  return ordered_json{{"kind", channel_kind_name(c.kind)}, {"index", c.index}};
}

ChannelId channel_from_json(const json& j) {
  if (!j.is_object()) throw SerializationError("channel must be an object");
  ChannelId c;
  try {
    c.kind = channel_kind_from_name(require_string(j, "kind"));
  } catch (const ParameterError& e) {
    throw SerializationError(e.what());
  }
  c.index = require_int(j, "index");
  if (c.index < 0) throw SerializationError("channel index must be >= 0");
  return c;
}

}  // namespace

ordered_json shape_to_json(const PulseShape& s) {
  ordered_json j{{"kind", shape_kind_name(s.kind)},
                 {"duration", s.duration},
                 {"amp", s.amp},
                 {"angle", s.angle}};
  switch (s.kind) {
    case ShapeKind::kSquare:
      break;
    case ShapeKind::kGaussian:
      j["sigma"] = s.sigma;
      break;
    case ShapeKind::kDrag:
      j["sigma"] = s.sigma;
      j["beta"] = s.beta;
      break;
    case ShapeKind::kGaussianSquare:
      j["sigma"] = s.sigma;
      j["width"] = s.width;
      break;
  }
  return j;
}

PulseShape shape_from_json(const json& j) {
  if (!j.is_object()) throw SerializationError("shape must be an object");
  ShapeKind kind;
  try {
    kind = shape_kind_from_name(require_string(j, "kind"));
  } catch (const ParameterError& e) {
    throw SerializationError(e.what());
  }
  int duration = require_int(j, "duration");
  double amp = require_number(j, "amp");
  double angle = require_number(j, "angle");
  switch (kind) {
    case ShapeKind::kSquare:
      return PulseShape::square(duration, amp, angle);
    case ShapeKind::kGaussian:
      return PulseShape::gaussian(duration, amp, angle,
                                  require_number(j, "sigma"));
    case ShapeKind::kDrag:
      return PulseShape::drag(duration, amp, angle, require_number(j, "sigma"),
                              require_number(j, "beta"));
    case ShapeKind::kGaussianSquare:
      return PulseShape::gaussian_square(duration, amp, angle,
                                         require_number(j, "sigma"),
                                         require_number(j, "width"));
  }
  throw SerializationError("unknown shape kind");
}

ordered_json schedule_to_json(const Schedule& s) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : s.entries()) {
    ordered_json entry{{"t", e.t}};
    switch (e.inst.op) {
      case Instruction::Op::kPlay:
        entry["op"] = "play";
        entry["channel"] = channel_to_json(e.inst.channel);
        entry["shape"] = shape_to_json(e.inst.shape);
        break;
      case Instruction::Op::kShiftPhase:
        entry["op"] = "shift_phase";
        entry["channel"] = channel_to_json(e.inst.channel);
        entry["phase"] = e.inst.phase;
        break;
      case Instruction::Op::kDelay:
        entry["op"] = "delay";
        entry["channel"] = channel_to_json(e.inst.channel);
        entry["len"] = e.inst.length;
        break;
    }
    entries.push_back(std::move(entry));
  }
  return ordered_json{{"duration", s.duration()},
                      {"entries", std::move(entries)}};
}

Schedule schedule_from_json(const json& j) {
  if (!j.is_object()) throw SerializationError("schedule must be an object");
  if (!j.contains("duration") || !j.at("duration").is_number_integer())
    throw SerializationError("missing or non-integer field \"duration\"");
  std::int64_t duration = j.at("duration").get<std::int64_t>();
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw SerializationError("missing or non-array field \"entries\"");

  std::vector<ScheduleEntry> entries;
  for (const auto& je : j.at("entries")) {
    if (!je.is_object())
      throw SerializationError("schedule entry must be an object");
    ScheduleEntry e;
    if (!je.contains("t") || !je.at("t").is_number_integer())
      throw SerializationError("missing or non-integer field \"t\"");
    e.t = je.at("t").get<std::int64_t>();
    std::string op = require_string(je, "op");
    ChannelId channel = channel_from_json(
        je.contains("channel") ? je.at("channel") : json());
    if (op == "play") {
      e.inst = Instruction::play(shape_from_json(
                                     je.contains("shape") ? je.at("shape")
                                                          : json()),
                                 channel);
    } else if (op == "shift_phase") {
      e.inst = Instruction::shift_phase(require_number(je, "phase"), channel);
    } else if (op == "delay") {
      e.inst = Instruction::delay(require_int(je, "len"), channel);
    } else {
      throw SerializationError("unknown op \"" + op + "\"");
    }
    entries.push_back(std::move(e));
  }
  try {
    return Schedule::from_entries(std::move(entries), duration);
  } catch (const SchedulingError& e) {
    throw SerializationError(std::string("invalid schedule: ") + e.what());
  }
}

std::string dump_schedule(const Schedule& s) {
  return schedule_to_json(s).dump(2) + "\n";
}

Schedule parse_schedule(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SerializationError(std::string("schedule JSON parse error: ") +
                             e.what());
  }
  return schedule_from_json(j);
}

nlohmann::json parse_json_text_or_file(const std::string& text_or_path) {
  std::string text = text_or_path;
  // A leading brace means inline JSON; anything else is a file path.
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{')
    text = read_text_file(text_or_path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SerializationError(std::string("JSON parse error: ") + e.what());
  }
}

std::string envelope_csv(const PulseShape& shape) {
  std::ostringstream out;
  out << "t,re,im\n";
  auto samples = envelope_samples(shape);
  for (size_t t = 0; t < samples.size(); ++t)
    out << t << ',' << format_double(samples[t].real()) << ','
        << format_double(samples[t].imag()) << '\n';
  return out.str();
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SerializationError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SerializationError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw SerializationError("failed writing file: " + path);
}

}  // namespace pulsekit
