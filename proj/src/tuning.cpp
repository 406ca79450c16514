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

#include <cmath>

#include "pulsekit/analysis.hpp"
#include "pulsekit/errors.hpp"
#include "pulsekit/noise.hpp"

namespace pulsekit {

NoiseConfig tune_noise(double target_per_pulse_infidelity,
                       const PulseFamily& family, DeviceModel& device,
                       const std::vector<int>& rb_sizes, int shots,
                       std::uint64_t seed) {
  const double target = target_per_pulse_infidelity;
  if (!(target > 0.0 && target < 0.1)) {
    throw ParameterError("tuning target must lie in (0, 0.1)");
  }

  // Every probe reuses the same seeds, so the fitted slope is a smooth
  // deterministic function of sigma and bisection converges cleanly.
  // Per-shot resampling averages `shots` draws per trial, which keeps the
  // probe's slope estimate close to the true per-pulse infidelity.
  const int reps = 5;
  SimOptions options;
  options.shots = shots;
  options.seed = seed;
  auto slope_at = [&](double sigma) {
    NoiseConfig cfg;
    cfg.amp_sigma_rel = sigma;
    cfg.resample = NoiseResample::kPerShot;
    cfg.seed = seed;
    return rb_run(device, family, rb_sizes, reps, cfg, options).slope;
  };

  // The slope vanishes at sigma = 0 and grows with sigma, so doubling an
  // upper probe until it clears the target brackets the answer.
  double lo = 0.0;
  double hi = 2e-3;
  double slope_hi = slope_at(hi);
  while (slope_hi < target) {
    hi *= 2.0;
    if (hi > 0.5) {
      throw TuningError(
          "amplitude noise cannot reach the target infidelity before the "
          "search cap");
    }
    slope_hi = slope_at(hi);
  }

  double best_sigma = hi;
  double best_err = std::abs(slope_hi - target);
  for (int iter = 0; iter < 40 && best_err > 0.05 * target; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double slope = slope_at(mid);
    const double err = std::abs(slope - target);
    if (err < best_err) {
      best_err = err;
      best_sigma = mid;
    }
    if (slope < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (best_err > 0.2 * target) {
    throw TuningError("bisection did not reach the target infidelity band");
  }

  NoiseConfig out;
  out.amp_sigma_rel = best_sigma;
  out.resample = NoiseResample::kPerShot;
  out.seed = seed;
  return out;
}

}  // namespace pulsekit
