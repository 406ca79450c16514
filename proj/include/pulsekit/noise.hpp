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

#ifndef PULSEKIT_NOISE_HPP_
#define PULSEKIT_NOISE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulsekit/device.hpp"
#include "pulsekit/pulse_shapes.hpp"
#include "pulsekit/rng.hpp"
#include "pulsekit/schedule.hpp"

namespace pulsekit {

enum class NoiseResample { kPerShot, kPerCircuit };

std::string noise_resample_name(NoiseResample resample);
NoiseResample noise_resample_from_name(const std::string& name);

// Control and readout imperfections. Amplitude jitter perturbs every Play
// amplitude with an independent Gaussian draw of standard deviation
// amp_sigma_rel (clamped back into [0, 1]); readout flips each measured
// bit with probability p_read. resample picks whether amplitude jitter is
// redrawn for every shot or once per circuit execution.
struct NoiseConfig {
  double amp_sigma_rel = 0.0;
  double p_read = 0.0;
  NoiseResample resample = NoiseResample::kPerShot;
  std::uint64_t seed = 0;

  bool amp_noise_enabled() const { return amp_sigma_rel > 0.0; }
  bool enabled() const { return amp_sigma_rel > 0.0 || p_read > 0.0; }
};

// Throws ParameterError when fields are outside their domains
// (amp_sigma_rel < 0 or p_read outside [0, 0.5]).
void validate(const NoiseConfig& cfg);

nlohmann::ordered_json noise_to_json(const NoiseConfig& cfg);
NoiseConfig noise_from_json(const nlohmann::json& j);

// Parses a NoiseConfig from inline JSON or a file path; the literal
// "none" yields the all-zero (noiseless) config.
NoiseConfig load_noise(const std::string& text_or_path);

// One jitter draw: every Play amplitude a becomes clamp(a + eps, 0, 1)
// with eps ~ N(0, amp_sigma_rel^2), drawn in entry order. ShiftPhase and
// Delay instructions, timing and duration are untouched.
Schedule perturb_schedule(const Schedule& s, const NoiseConfig& cfg, Rng& rng);

// Searches for the amp_sigma_rel whose fitted per-pulse infidelity (the
// benchmarking slope over rb_sizes) lands within 20% of target. Bisection
// over sigma after bracketing by doubling. Probes run with per-shot
// resampling so each trial averages `shots` draws, and the returned config
// keeps that resample mode. p_read stays 0 so the readout floor does not
// bias the slope fit. Throws ParameterError for a target outside (0, 0.1)
// and TuningError when the search cannot bracket.
NoiseConfig tune_noise(double target_per_pulse_infidelity,
                       const PulseFamily& family, DeviceModel& device,
                       const std::vector<int>& rb_sizes, int shots,
                       std::uint64_t seed);

}  // namespace pulsekit

#endif  // PULSEKIT_NOISE_HPP_
