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

#ifndef PULSEKIT_SERIALIZATION_HPP_
#define PULSEKIT_SERIALIZATION_HPP_

#include <string>

#include <json.hpp>

#include "pulsekit/pulse_shapes.hpp"
#include "pulsekit/schedule.hpp"

namespace pulsekit {

// JSON wire format for schedules:
//
//   {"duration": D,
//    "entries": [{"t": 0, "op": "play",
//                 "channel": {"kind": "drive", "index": 0},
//                 "shape": {"kind": "drag", "duration": 160, "amp": 0.1,
//                           "angle": 0.0, "sigma": 40.0, "beta": 0.0}},
//                {"t": 160, "op": "shift_phase", "channel": ..., "phase": 0.7},
//                {"t": 160, "op": "delay", "channel": ..., "len": 16}]}
//
// Shape objects carry only the fields their kind uses. Serialization is
// lossless: numbers are written with enough digits to round-trip exactly.

nlohmann::ordered_json shape_to_json(const PulseShape& shape);
PulseShape shape_from_json(const nlohmann::json& j);

nlohmann::ordered_json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j);

// Text front ends; parse errors surface as SerializationError.
std::string dump_schedule(const Schedule& s);
Schedule parse_schedule(const std::string& text);

// Parses text that is either a JSON document or a path to one.
nlohmann::json parse_json_text_or_file(const std::string& text_or_path);

// Envelope dump: header "t,re,im" then one row per sample.
std::string envelope_csv(const PulseShape& shape);

// Fixed decimal formatting used by every CSV and report so reruns are
// byte-identical (12 significant digits, no locale dependence).
std::string format_double(double value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pulsekit

#endif  // PULSEKIT_SERIALIZATION_HPP_
