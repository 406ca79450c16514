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

#ifndef PULSEKIT_ANALYSIS_HPP_
#define PULSEKIT_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pulsekit/device.hpp"
#include "pulsekit/noise.hpp"
#include "pulsekit/schedule.hpp"
#include "pulsekit/simulator.hpp"

namespace pulsekit {

// Probability of successful trials: the fraction of shots that returned
// the given initial bitstring. Throws ParameterError on empty counts.
double pst(const Counts& counts, const std::string& initial_bitstring);

// Runs append(s, reverse_schedule(s)) from the all-zeros state under the
// given noise and returns the probability of reading all zeros back.
//
// In statevector mode the return probability is computed exactly from the
// final amplitudes (readout flips enter analytically); with amplitude
// noise in per_shot mode the estimate averages options.shots independent
// jitter draws, per_circuit uses a single draw. In shots mode the
// probability is estimated by sampling counts. Seeded by noise.seed, so a
// fixed config reproduces the estimate exactly.
double estimate_fidelity(const Schedule& s, const DeviceModel& device,
                         const NoiseConfig& noise, const SimOptions& options);

struct RbPoint {
  int n_pulses = 0;
  double mean_infidelity = 0.0;
  double std_dev = 0.0;
  int repetitions = 0;
};

// Benchmarking decay data for one pulse family together with the fitted
// per-pulse infidelity (a one-parameter line through the origin over the
// sampled sizes).
struct RbCurve {
  std::vector<RbPoint> points;
  std::string family;
  double slope = 0.0;
  double residual = 0.0;  // rms of mean - slope * n over the grid
};

// Randomized benchmarking of parameterized pulses: for each size n,
// `repetitions` random sequences are built, each followed by its reversal,
// and the infidelity 1 - estimate_fidelity is recorded. Shape families
// draw amplitudes uniform in [0.1, 1.0] and angles uniform in [0, 2pi) at
// the family's fixed geometry; the rx family draws n two-pulse composite
// rotations with uniform angle and uniform virtual frame axis (the device
// must hold a calibration for the qubit).
// Sequences play on qubit 0's channels. Trial randomness derives from
// options.seed and noise.seed per (size, repetition), so runs reproduce.
//
// Throws ParameterError for empty/non-increasing sizes or repetitions < 3.
RbCurve rb_run(const DeviceModel& device, const PulseFamily& family,
               const std::vector<int>& sizes, int repetitions,
               const NoiseConfig& noise, const SimOptions& options);

enum class ZneModel { kLinear };

// Least-squares linear fit of value against scale, returning the value at
// scale 0. With exactly two points this is the exact interpolation, e.g.
// scales (1, 3) give (3 * v1 - v3) / 2. Throws FitError when fewer than
// two points are given or all scales coincide.
double zne_extrapolate(const std::vector<std::pair<double, double>>& points,
                       ZneModel model = ZneModel::kLinear);

// Target-qubit expectation values under a flat cross-resonance drive, one
// row per (duration, control preparation).
struct CrTomographyRow {
  int duration = 0;  // samples
  int prep = 0;      // control prepared in |0> or |1>
  double exp_x = 0.0;
  double exp_y = 0.0;
  double exp_z = 0.0;
};

// Effective conditional-drive coefficients in rad/s: the target sees
// H = sum_k (b_k + a_k * sz_control) * s_k / 2 style dynamics, recovered
// from the difference and mean of the per-preparation rotation vectors.
struct CrTomographyResult {
  double a_x = 0.0, a_y = 0.0, a_z = 0.0;
  double b_x = 0.0, b_y = 0.0, b_z = 0.0;
  // rms fit residual of the three expectation traces, per preparation
  std::array<double, 2> residual = {0.0, 0.0};
  std::vector<CrTomographyRow> rows;
};

// Sweeps a flat Square pulse on the coupling's control channel over the
// given durations, records the target's <X>, <Y>, <Z> for control |0> and
// |1>, fits each preparation's traces to a shared-frequency rotation, and
// converts the two rotation vectors into conditional (a_k) and
// unconditional (b_k) drive coefficients.
//
// Throws ParameterError for a bad coupling index, amplitude outside
// [0, 1], or fewer than 8 distinct durations; FitError when the traces do
// not oscillate over the sampled range.
CrTomographyResult cr_tomography(const DeviceModel& device, int coupling_index,
                                 double cr_amp,
                                 const std::vector<int>& durations,
                                 const SimOptions& options);

// CSV emitters. Columns: n_pulses,mean_infidelity,std,repetitions for
// curves; duration,prep,exp_x,exp_y,exp_z for tomography rows.
std::string rb_csv(const RbCurve& curve);
std::string tomography_csv(const CrTomographyResult& result);

}  // namespace pulsekit

#endif  // PULSEKIT_ANALYSIS_HPP_
