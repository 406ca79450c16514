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

#ifndef PULSEKIT_PULSE_SHAPES_HPP_
#define PULSEKIT_PULSE_SHAPES_HPP_

#include <complex>
#include <string>
#include <vector>

namespace pulsekit {

enum class ShapeKind { kDrag, kGaussian, kSquare, kGaussianSquare };

std::string shape_kind_name(ShapeKind kind);
ShapeKind shape_kind_from_name(const std::string& name);

// Parameterized complex pulse envelope.
//
// All four kinds share `duration` (integer number of device samples),
// `amp` (dimensionless, in [0, 1]) and `angle` (radians, the phase of the
// complex amplitude). The Gaussian family adds `sigma` (in samples); Drag
// adds `beta` (dimensionless derivative weight); GaussianSquare adds
// `width` (flat-top length in samples).
//
// Gaussian-family envelopes are "lifted": the tails are anchored so the
// first and last sample of the underlying Gaussian profile are exactly
// zero, and the profile is rescaled so its largest sample is exactly one.
// Concretely, with center c = (duration - 1) / 2,
//
//   g(t)  = exp(-(t - c)^2 / (2 sigma^2))
//   g~(t) = (g(t) - g(0)) / (g(t_peak) - g(0)),  t_peak = round(c)
//
// which starts and ends at zero and peaks at exactly 1.0 on the sample
// grid. Anchoring the ends at zero keeps concatenated and time-mirrored
// schedules free of step discontinuities.
struct PulseShape {
  ShapeKind kind = ShapeKind::kSquare;
  int duration = 0;
  double amp = 0.0;
  double angle = 0.0;
  double sigma = 0.0;  // Gaussian, Drag, GaussianSquare
  double beta = 0.0;   // Drag
  double width = 0.0;  // GaussianSquare

  static PulseShape drag(int duration, double amp, double angle, double sigma,
                         double beta);
  static PulseShape gaussian(int duration, double amp, double angle, double sigma);
  static PulseShape square(int duration, double amp, double angle);
  static PulseShape gaussian_square(int duration, double amp, double angle,
                                    double sigma, double width);
};

// Throws ParameterError if the shape's parameters are outside their
// domain. Beyond the per-field ranges this enforces the envelope bound
// |f(t)| <= amp * (1 + |beta| / sigma), which rejects Drag shapes whose
// derivative term would dwarf the Gaussian it corrects.
void validate(const PulseShape& shape);

// Complex envelope evaluated on the sample grid t = 0 .. duration-1.
// The result always has exactly `duration` entries.
std::vector<std::complex<double>> envelope_samples(const PulseShape& shape);

// The shape that plays this pulse's envelope backwards in time, negated:
// the angle advances by pi, and for Drag the derivative weight changes
// sign (the lifted Gaussian is even about the pulse center, its derivative
// odd, so flipping beta is exactly a time reversal of the envelope).
// Sample-level identity: envelope_samples(reversed_pulse(s))[t] ==
// -envelope_samples(s)[duration - 1 - t].
PulseShape reversed_pulse(const PulseShape& shape);

// Families of pulses used by calibration, benchmarking and noise tuning.
// A family fixes everything about a pulse except amplitude and angle;
// kRx denotes composite X-axis rotations built from two calibrated Drag
// pulses rather than a single envelope.
struct PulseFamily {
  enum class Kind { kShape, kRx };

  Kind kind = Kind::kShape;
  ShapeKind shape_kind = ShapeKind::kDrag;
  int duration = 160;
  double sigma = 40.0;
  double beta = 0.0;
  double width = 80.0;  // GaussianSquare flat top

  static PulseFamily shape(ShapeKind shape_kind, int duration = 160,
                           double sigma = 40.0, double beta = 0.0,
                           double width = 80.0);
  static PulseFamily rx();

  // Instantiates one pulse of a kShape family.
  PulseShape bind(double amp, double angle) const;

  std::string name() const;
};

}  // namespace pulsekit

#endif  // PULSEKIT_PULSE_SHAPES_HPP_
