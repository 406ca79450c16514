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

#include "pulsekit/noise.hpp"

#include <algorithm>

#include "pulsekit/errors.hpp"
#include "pulsekit/serialization.hpp"

namespace pulsekit {

std::string noise_resample_name(NoiseResample resample) {
  return resample == NoiseResample::kPerShot ? "per_shot" : "per_circuit";
}

NoiseResample noise_resample_from_name(const std::string& name) {
  if (name == "per_shot") return NoiseResample::kPerShot;
  if (name == "per_circuit") return NoiseResample::kPerCircuit;
  throw ParameterError("unknown resample mode: " + name);
}

void validate(const NoiseConfig& cfg) {
  if (cfg.amp_sigma_rel < 0.0) {
    throw ParameterError("amp_sigma_rel must be non-negative");
  }
  if (cfg.p_read < 0.0 || cfg.p_read > 0.5) {
    throw ParameterError("p_read must lie in [0, 0.5]");
  }
}

nlohmann::ordered_json noise_to_json(const NoiseConfig& cfg) {
  nlohmann::ordered_json j;
  j["amp_sigma_rel"] = cfg.amp_sigma_rel;
  j["p_read"] = cfg.p_read;
  j["resample"] = noise_resample_name(cfg.resample);
  j["seed"] = cfg.seed;
  return j;
}

NoiseConfig noise_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw SerializationError("noise config must be a JSON object");
  }
  NoiseConfig cfg;
  if (j.contains("amp_sigma_rel")) {
    if (!j["amp_sigma_rel"].is_number()) {
      throw SerializationError("amp_sigma_rel must be a number");
    }
    cfg.amp_sigma_rel = j["amp_sigma_rel"].get<double>();
  }
  if (j.contains("p_read")) {
    if (!j["p_read"].is_number()) {
      throw SerializationError("p_read must be a number");
    }
    cfg.p_read = j["p_read"].get<double>();
  }
  if (j.contains("resample")) {
    if (!j["resample"].is_string()) {
      throw SerializationError("resample must be a string");
    }
    cfg.resample = noise_resample_from_name(j["resample"].get<std::string>());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) {
      throw SerializationError("seed must be an integer");
    }
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  validate(cfg);
  return cfg;
}

NoiseConfig load_noise(const std::string& text_or_path) {
  if (text_or_path == "none") return NoiseConfig{};
  return noise_from_json(parse_json_text_or_file(text_or_path));
}

Schedule perturb_schedule(const Schedule& s, const NoiseConfig& cfg, Rng& rng) {
  validate(cfg);
  if (!cfg.amp_noise_enabled()) return s;
  std::vector<ScheduleEntry> entries = s.entries();
  for (ScheduleEntry& entry : entries) {
    if (entry.inst.op != Instruction::Op::kPlay) continue;
    const double eps = rng.normal(0.0, cfg.amp_sigma_rel);
    entry.inst.shape.amp = std::clamp(entry.inst.shape.amp + eps, 0.0, 1.0);
  }
  return Schedule::from_entries(std::move(entries), s.duration());
}

}  // namespace pulsekit
