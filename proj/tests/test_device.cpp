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
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "pulsekit/device.hpp"
#include "pulsekit/errors.hpp"
#include "pulsekit/schedule.hpp"
#include "pulsekit/simulator.hpp"

namespace pulsekit {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  return v;
}

TEST_CASE("device loads from file with defaulted sample period") {
  DeviceModel dev = testing::two_qubit_device();
  CHECK(dev.n_qubits() == 2);
  CHECK(dev.couplings().size() == 1);
  // No dt_s in the file, so the 2/9 ns default applies: 160 samples span
  // 35.56 ns.
  CHECK(dev.dt() == doctest::Approx(2.0e-9 / 9.0).epsilon(1e-12));
  CHECK(160.0 * dev.dt() == doctest::Approx(35.56e-9).epsilon(1e-3));
  // Hz fields are converted to angular frequencies.
  CHECK(dev.qubit(0).drive_strength ==
        doctest::Approx(2.0 * kPi * 1.0e8).epsilon(1e-12));
  CHECK(dev.qubit(1).frequency ==
        doctest::Approx(2.0 * kPi * 4.8e9).epsilon(1e-12));
  const Coupling& c = dev.coupling(0);
  CHECK(c.control == 0);
  CHECK(c.target == 1);
  CHECK(c.conditional_ratio() == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("device loads from inline JSON text") {
  DeviceModel dev = load_device(
      R"({"dt_s": 1.0e-9,
          "qubits": [{"freq_hz": 4.5e9, "drive_strength_hz": 5.0e7}]})");
  CHECK(dev.n_qubits() == 1);
  CHECK(dev.dt() == doctest::Approx(1.0e-9));
  CHECK(dev.couplings().empty());
}

TEST_CASE("device validation rejects inconsistent descriptions") {
  const std::string q2 =
      R"("qubits": [{"freq_hz": 5e9, "drive_strength_hz": 1e8},
                    {"freq_hz": 4.8e9, "drive_strength_hz": 1e8}])";
  CHECK_THROWS_AS(load_device("{" + q2 + R"(, "couplings": [
      {"control": 1, "target": 1, "j_hz": 1e7, "delta12_hz": 2e8,
       "cr_drive_strength_hz": 5e7}]})"),
                  ConfigError);
  CHECK_THROWS_AS(load_device("{" + q2 + R"(, "couplings": [
      {"control": 0, "target": 2, "j_hz": 1e7, "delta12_hz": 2e8,
       "cr_drive_strength_hz": 5e7}]})"),
                  ConfigError);
  CHECK_THROWS_AS(load_device("{" + q2 + R"(, "couplings": [
      {"control": 0, "target": 1, "j_hz": 1e7, "delta12_hz": 0.0,
       "cr_drive_strength_hz": 5e7}]})"),
                  ConfigError);
  CHECK_THROWS_AS(
      load_device(R"({"dt_s": 0.0, "qubits": [
          {"freq_hz": 5e9, "drive_strength_hz": 1e8}]})"),
      ConfigError);
  CHECK_THROWS_AS(
      load_device(R"({"qubits": [{"freq_hz": 5e9, "drive_strength_hz": 0}]})"),
      ConfigError);
  CHECK_THROWS_AS(load_device(R"({"qubits": []})"), ConfigError);
  CHECK_THROWS_AS(load_device(R"({"qubits": [{"freq_hz": 5e9}]})"),
                  ConfigError);
  CHECK_THROWS_AS(load_device("{not json"), SerializationError);
}

TEST_CASE("calibration store holds validated pulses per qubit") {
  DeviceModel dev = testing::two_qubit_device();
  CHECK_FALSE(dev.has_calibration(0));
  CHECK_THROWS_AS(dev.calibration(0), CalibrationError);
  const PulseShape pi_pulse = PulseShape::drag(160, 0.25, 0.0, 40.0, 0.0);
  dev.set_calibration(0, pi_pulse);
  CHECK(dev.has_calibration(0));
  CHECK(dev.calibration(0).amp == doctest::Approx(0.25));
  CHECK_FALSE(dev.has_calibration(1));
  CHECK_THROWS_AS(dev.set_calibration(7, pi_pulse), ParameterError);
}

TEST_CASE("square-family calibration matches the pulse-area rule") {
  DeviceModel dev = testing::one_qubit_device();
  const PulseFamily family = PulseFamily::shape(ShapeKind::kSquare, 160);
  const PulseShape pi_pulse =
      rabi_calibrate(dev, 0, family, linspace(0.02, 0.30, 15));
  // A flat pulse rotates by drive_strength * amp * duration * dt, so the
  // pi amplitude is known in closed form.
  const double expected =
      kPi / (dev.qubit(0).drive_strength * 160.0 * dev.dt());
  CHECK(std::abs(pi_pulse.amp - expected) / expected < 1e-6);
  CHECK(dev.has_calibration(0));
}

TEST_CASE("calibrated pi amplitude scales inversely with drive strength") {
  DeviceModel dev1 = testing::one_qubit_device();
  DeviceModel dev2 = load_device(
      R"({"qubits": [{"freq_hz": 5.0e9, "drive_strength_hz": 2.0e8}]})");
  const PulseFamily family = PulseFamily::shape(ShapeKind::kSquare, 160);
  const double a1 = rabi_calibrate(dev1, 0, family, linspace(0.02, 0.30, 15)).amp;
  const double a2 = rabi_calibrate(dev2, 0, family, linspace(0.01, 0.15, 15)).amp;
  CHECK(a2 == doctest::Approx(0.5 * a1).epsilon(1e-6));
}

TEST_CASE("drag-family calibration inverts the ground state") {
  DeviceModel dev = testing::two_qubit_device();
  const PulseFamily family = PulseFamily::shape(ShapeKind::kDrag, 160, 40.0);
  const PulseShape pi_pulse =
      rabi_calibrate(dev, 0, family, linspace(0.05, 0.95, 19));
  Schedule s = insert(Schedule(), 0,
                      Instruction::play(pi_pulse, ChannelId::drive(0)));
  const QuantumState out =
      evolve(s, dev, QuantumState::ground(2), SimOptions{});
  CHECK(excited_probability(out, 0) >= 0.999);
  CHECK(excited_probability(out, 1) < 1e-9);
}

TEST_CASE("calibration is deterministic") {
  DeviceModel a = testing::one_qubit_device();
  DeviceModel b = testing::one_qubit_device();
  const PulseFamily family = PulseFamily::shape(ShapeKind::kDrag, 160, 40.0);
  const auto sweep = linspace(0.05, 0.95, 19);
  CHECK(rabi_calibrate(a, 0, family, sweep).amp ==
        rabi_calibrate(b, 0, family, sweep).amp);
}

TEST_CASE("calibration rejects unusable sweeps") {
  DeviceModel dev = testing::one_qubit_device();
  const PulseFamily family = PulseFamily::shape(ShapeKind::kSquare, 160);
  CHECK_THROWS_AS(rabi_calibrate(dev, 0, family, {0.1}), CalibrationError);
  CHECK_THROWS_AS(rabi_calibrate(dev, 0, family, {0.1, 0.2}),
                  CalibrationError);
  // Far below the pi amplitude the response is monotone: nothing to refine.
  CHECK_THROWS_AS(
      rabi_calibrate(dev, 0, family, linspace(0.001, 0.02, 10)),
      CalibrationError);
  CHECK_THROWS_AS(rabi_calibrate(dev, 0, family, {0.1, 0.5, 1.5}),
                  CalibrationError);
  CHECK_THROWS_AS(
      rabi_calibrate(dev, 0, PulseFamily::rx(), linspace(0.02, 0.3, 15)),
      CalibrationError);
}

}  // namespace
}  // namespace pulsekit
