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

#include "pulsekit/pulse_shapes.hpp"

#include <cmath>
#include <numbers>

#include "pulsekit/errors.hpp"

namespace pulsekit {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Raw (unlifted, unit-peak) profile of the Gaussian family at sample t.
// For Drag/Gaussian this is a Gaussian centered in the sample window; for
// GaussianSquare a flat top of length `width` centered in the window with
// Gaussian rise and fall.
double raw_profile(const PulseShape& s, double t) {
  double c = 0.5 * (s.duration - 1);
  switch (s.kind) {
    case ShapeKind::kGaussian:
    case ShapeKind::kDrag: {
      double u = (t - c) / s.sigma;
      return std::exp(-0.5 * u * u);
    }
    case ShapeKind::kGaussianSquare: {
      double lo = c - 0.5 * s.width;
      double hi = c + 0.5 * s.width;
      if (t < lo) {
        double u = (t - lo) / s.sigma;
        return std::exp(-0.5 * u * u);
      }
      if (t > hi) {
        double u = (t - hi) / s.sigma;
        return std::exp(-0.5 * u * u);
      }
      return 1.0;
    }
    case ShapeKind::kSquare:
      return 1.0;
  }
  return 0.0;
}

// Lift parameters: subtract `edge` and divide by `denom` so the profile's
// end samples are exactly zero and its largest sample is exactly one.
struct Lift {
  double edge;
  double denom;
};

Lift lift_for(const PulseShape& s) {
  double edge = raw_profile(s, 0.0);
  double peak;
  if (s.kind == ShapeKind::kGaussianSquare) {
    peak = 1.0;  // the flat top, or the largest rise sample if the top
                 // falls between samples
    if (s.width < 1.0) {
      peak = 0.0;
      for (int t = 0; t < s.duration; ++t)
        peak = std::max(peak, raw_profile(s, t));
    }
  } else {
    double c = 0.5 * (s.duration - 1);
    peak = raw_profile(s, std::round(c));
  }
  return {edge, peak - edge};
}

}  // namespace

std::string shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kDrag:
      return "drag";
    case ShapeKind::kGaussian:
      return "gaussian";
    case ShapeKind::kSquare:
      return "square";
    case ShapeKind::kGaussianSquare:
      return "gaussian_square";
  }
  return "?";
}

ShapeKind shape_kind_from_name(const std::string& name) {
  if (name == "drag") return ShapeKind::kDrag;
  if (name == "gaussian") return ShapeKind::kGaussian;
  if (name == "square") return ShapeKind::kSquare;
  if (name == "gaussian_square") return ShapeKind::kGaussianSquare;
  throw ParameterError("unknown pulse shape kind: \"" + name + "\"");
}

PulseShape PulseShape::drag(int duration, double amp, double angle, double sigma,
                            double beta) {
  PulseShape s;
  s.kind = ShapeKind::kDrag;
  s.duration = duration;
  s.amp = amp;
  s.angle = angle;
  s.sigma = sigma;
  s.beta = beta;
  validate(s);
  return s;
}

PulseShape PulseShape::gaussian(int duration, double amp, double angle,
                                double sigma) {
  PulseShape s;
  s.kind = ShapeKind::kGaussian;
  s.duration = duration;
  s.amp = amp;
  s.angle = angle;
  s.sigma = sigma;
  validate(s);
  return s;
}

PulseShape PulseShape::square(int duration, double amp, double angle) {
  PulseShape s;
  s.kind = ShapeKind::kSquare;
  s.duration = duration;
  s.amp = amp;
  s.angle = angle;
  validate(s);
  return s;
}

PulseShape PulseShape::gaussian_square(int duration, double amp, double angle,
                                       double sigma, double width) {
  PulseShape s;
  s.kind = ShapeKind::kGaussianSquare;
  s.duration = duration;
  s.amp = amp;
  s.angle = angle;
  s.sigma = sigma;
  s.width = width;
  validate(s);
  return s;
}

void validate(const PulseShape& s) {
  if (s.duration < 1)
    throw ParameterError("pulse duration must be at least 1 sample");
  if (!(s.amp >= 0.0 && s.amp <= 1.0))
    throw ParameterError("pulse amp must lie in [0, 1]");
  if (!finite(s.angle)) throw ParameterError("pulse angle must be finite");

  bool gaussian_family = s.kind == ShapeKind::kGaussian ||
                         s.kind == ShapeKind::kDrag ||
                         s.kind == ShapeKind::kGaussianSquare;
  if (gaussian_family) {
    if (!(s.sigma > 0.0) || !finite(s.sigma))
      throw ParameterError("pulse sigma must be positive");
    if (s.duration < 3)
      throw ParameterError(
          "Gaussian-family pulses need duration >= 3 so the lifted profile "
          "has an interior peak");
  }
  if (s.kind == ShapeKind::kDrag && !finite(s.beta))
    throw ParameterError("pulse beta must be finite");
  if (s.kind == ShapeKind::kGaussianSquare) {
    if (!(s.width >= 0.0 && s.width <= s.duration))
      throw ParameterError("pulse width must lie in [0, duration]");
  }

  if (s.kind == ShapeKind::kDrag && s.amp > 0.0) {
    // Envelope boundedness: |f(t)| <= amp * (1 + |beta| / sigma). A Drag
    // whose derivative term breaks this bound is outside the parameter
    // domain (it happens when sigma is so large relative to the duration
    // that the lift denominator nearly vanishes).
    double bound = s.amp * (1.0 + std::abs(s.beta) / s.sigma) * (1.0 + 1e-9);
    for (const auto& f : envelope_samples(s)) {
      if (std::abs(f) > bound)
        throw ParameterError(
            "Drag envelope exceeds amp * (1 + |beta| / sigma); reduce beta "
            "or sigma for this duration");
    }
  }
}

std::vector<std::complex<double>> envelope_samples(const PulseShape& s) {
  if (s.duration < 1)
    throw ParameterError("pulse duration must be at least 1 sample");
  std::vector<std::complex<double>> out(static_cast<size_t>(s.duration));
  std::complex<double> scale =
      s.amp * std::complex<double>(std::cos(s.angle), std::sin(s.angle));

  switch (s.kind) {
    case ShapeKind::kSquare: {
      for (auto& f : out) f = scale;
      return out;
    }
    case ShapeKind::kGaussian:
    case ShapeKind::kGaussianSquare: {
      Lift lift = lift_for(s);
      if (!(lift.denom > 0.0)) {
        // The profile has no room to fall off (GaussianSquare whose flat
        // top reaches the window ends); the lift is degenerate and the
        // envelope is simply flat.
        for (auto& f : out) f = scale;
        return out;
      }
      for (int t = 0; t < s.duration; ++t)
        out[static_cast<size_t>(t)] =
            scale * ((raw_profile(s, t) - lift.edge) / lift.denom);
      return out;
    }
    case ShapeKind::kDrag: {
      Lift lift = lift_for(s);
      if (!(lift.denom > 0.0))
        throw ParameterError("Drag lift is degenerate for these parameters");
      double c = 0.5 * (s.duration - 1);
      for (int t = 0; t < s.duration; ++t) {
        double g = raw_profile(s, t);
        double lifted = (g - lift.edge) / lift.denom;
        // Analytic derivative of the lifted profile.
        double dlifted = -((t - c) / (s.sigma * s.sigma)) * g / lift.denom;
        out[static_cast<size_t>(t)] =
            scale * std::complex<double>(lifted, s.beta * dlifted);
      }
      return out;
    }
  }
  throw ParameterError("unknown pulse shape kind");
}

PulseShape reversed_pulse(const PulseShape& shape) {
  PulseShape r = shape;
  r.angle = shape.angle + std::numbers::pi;
  if (shape.kind == ShapeKind::kDrag) r.beta = -shape.beta;
  return r;
}

PulseFamily PulseFamily::shape(ShapeKind shape_kind, int duration, double sigma,
                               double beta, double width) {
  PulseFamily f;
  f.kind = Kind::kShape;
  f.shape_kind = shape_kind;
  f.duration = duration;
  f.sigma = sigma;
  f.beta = beta;
  f.width = width;
  return f;
}

PulseFamily PulseFamily::rx() {
  PulseFamily f;
  f.kind = Kind::kRx;
  return f;
}

PulseShape PulseFamily::bind(double amp, double angle) const {
  if (kind != Kind::kShape)
    throw ParameterError("only shape families bind to a single pulse");
  switch (shape_kind) {
    case ShapeKind::kDrag:
      return PulseShape::drag(duration, amp, angle, sigma, beta);
    case ShapeKind::kGaussian:
      return PulseShape::gaussian(duration, amp, angle, sigma);
    case ShapeKind::kSquare:
      return PulseShape::square(duration, amp, angle);
    case ShapeKind::kGaussianSquare:
      return PulseShape::gaussian_square(duration, amp, angle, sigma, width);
  }
  throw ParameterError("unknown pulse shape kind");
}

std::string PulseFamily::name() const {
  return kind == Kind::kRx ? "rx" : shape_kind_name(shape_kind);
}

}  // namespace pulsekit
