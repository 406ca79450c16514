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

#include "pulsekit/vqe.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "pulsekit/errors.hpp"

namespace pulsekit {
namespace {

using testing::one_qubit_device;
using testing::two_qubit_device;

std::string molecule_path(const std::string& name) {
  return std::string(PULSEKIT_DATA_DIR) + "/molecules/" + name;
}

void calibrate_all(DeviceModel& device) {
  std::vector<double> sweep;
  for (double a = 0.05; a <= 0.5; a += 0.025) sweep.push_back(a);
  for (int q = 0; q < device.n_qubits(); ++q) {
    rabi_calibrate(device, q, PulseFamily::shape(ShapeKind::kDrag), sweep);
  }
}

AnsatzSpec one_qubit_ansatz() {
  AnsatzSpec spec;
  spec.qubits = {0};
  return spec;
}

AnsatzSpec two_qubit_ansatz() {
  AnsatzSpec spec;
  spec.qubits = {0, 1};
  return spec;
}

TEST_CASE("hamiltonians load from inline json and files") {
  const PauliHamiltonian h = load_hamiltonian(
      R"({"n_qubits": 1, "terms": [{"pauli": "Z", "coeff": 1.0},
                                    {"pauli": "X", "coeff": -0.5}]})");
  CHECK(h.n_qubits == 1);
  REQUIRE(h.terms.size() == 2);
  CHECK(h.terms[0].pauli == "Z");
  CHECK(h.terms[1].coeff == -0.5);

  const PauliHamiltonian h2 = load_hamiltonian(molecule_path("h2_0p735.json"));
  CHECK(h2.n_qubits == 2);
  CHECK(h2.terms.size() == 5);

  const PauliHamiltonian hehp = load_hamiltonian(molecule_path("hehp_1p0.json"));
  CHECK(hehp.n_qubits == 2);
  CHECK(hehp.terms.size() == 9);
}

TEST_CASE("hamiltonian schema violations are rejected") {
  CHECK_THROWS_AS(load_hamiltonian("{nope"), SerializationError);
  CHECK_THROWS_AS(load_hamiltonian("/no/such/file.json"), SerializationError);
  const std::string array_file = "/tmp/pulsekit_test_array.json";
  {
    std::ofstream out(array_file);
    out << "[1, 2, 3]\n";
  }
  CHECK_THROWS_AS(load_hamiltonian(array_file), ConfigError);
  CHECK_THROWS_AS(load_hamiltonian(R"({"terms": []})"), ConfigError);
  CHECK_THROWS_AS(load_hamiltonian(R"({"n_qubits": 0, "terms": []})"),
                  ConfigError);
  CHECK_THROWS_AS(load_hamiltonian(R"({"n_qubits": 1})"), ConfigError);
  CHECK_THROWS_AS(
      load_hamiltonian(
          R"({"n_qubits": 1, "terms": [{"pauli": "A", "coeff": 1.0}]})"),
      ConfigError);
  CHECK_THROWS_AS(
      load_hamiltonian(
          R"({"n_qubits": 2, "terms": [{"pauli": "Z", "coeff": 1.0}]})"),
      ConfigError);
  CHECK_THROWS_AS(
      load_hamiltonian(
          R"({"n_qubits": 1, "terms": [{"pauli": "Z", "coeff": "big"}]})"),
      ConfigError);
  CHECK_THROWS_AS(
      load_hamiltonian(R"({"n_qubits": 1, "terms": [{"coeff": 1.0}]})"),
      ConfigError);
}

TEST_CASE("dense diagonalization matches known spectra") {
  PauliHamiltonian z1;
  z1.n_qubits = 1;
  z1.terms = {{"Z", 1.0}};
  CHECK(exact_ground_energy(z1) == doctest::Approx(-1.0).epsilon(1e-12));

  PauliHamiltonian shifted;
  shifted.n_qubits = 1;
  shifted.terms = {{"I", 0.5}};
  CHECK(exact_ground_energy(shifted) == doctest::Approx(0.5).epsilon(1e-12));

  PauliHamiltonian x1;
  x1.n_qubits = 1;
  x1.terms = {{"X", 2.0}};
  CHECK(exact_ground_energy(x1) == doctest::Approx(-2.0).epsilon(1e-12));

  // Transverse pair: eigenvalues of a Z + b X are +-sqrt(a^2 + b^2).
  PauliHamiltonian mix;
  mix.n_qubits = 1;
  mix.terms = {{"Z", 0.6}, {"X", 0.8}};
  CHECK(exact_ground_energy(mix) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("shipped molecules diagonalize to their reference energies") {
  const PauliHamiltonian h2 = load_hamiltonian(molecule_path("h2_0p735.json"));
  const double e_h2 = exact_ground_energy(h2);
  CHECK(e_h2 == doctest::Approx(-1.8572750301792649).epsilon(1e-10));
  CHECK(std::abs(e_h2 - (-1.8581)) < 2e-3);

  const PauliHamiltonian hehp = load_hamiltonian(molecule_path("hehp_1p0.json"));
  CHECK(exact_ground_energy(hehp) ==
        doctest::Approx(-3.918559544384121).epsilon(1e-10));
}

TEST_CASE("oversized systems are refused") {
  PauliHamiltonian big;
  big.n_qubits = 5;
  big.terms = {{"IIIII", 1.0}};
  CHECK_THROWS_AS(exact_ground_energy(big), CapabilityError);

  PauliHamiltonian bad;
  bad.n_qubits = 1;
  bad.terms = {{"Q", 1.0}};
  CHECK_THROWS_AS(exact_ground_energy(bad), ParameterError);
}

TEST_CASE("zero-amplitude ansatz measures the ground-state energy terms") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  const AnsatzSpec spec = one_qubit_ansatz();
  const std::vector<double> params(2, 0.0);
  const NoiseConfig off;
  const SimOptions options;

  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  CHECK(energy_expectation(hz, device, spec, params, off, options, false) ==
        doctest::Approx(1.0).epsilon(1e-9));

  PauliHamiltonian hx;
  hx.n_qubits = 1;
  hx.terms = {{"X", 0.7}};
  CHECK(energy_expectation(hx, device, spec, params, off, options, false) ==
        doctest::Approx(0.0).epsilon(1e-9));

  PauliHamiltonian hy;
  hy.n_qubits = 1;
  hy.terms = {{"Y", -0.4}};
  CHECK(energy_expectation(hy, device, spec, params, off, options, false) ==
        doctest::Approx(0.0).epsilon(1e-9));

  PauliHamiltonian hi;
  hi.n_qubits = 1;
  hi.terms = {{"I", -2.25}};
  CHECK(energy_expectation(hi, device, spec, params, off, options, false) ==
        -2.25);
}

TEST_CASE("a pi rotation in the ansatz flips the z expectation") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  const AnsatzSpec spec = one_qubit_ansatz();
  const std::vector<double> params = {device.calibration(0).amp, 0.0};
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  const double e = energy_expectation(hz, device, spec, params, NoiseConfig{},
                                      SimOptions{}, false);
  CHECK(e == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("readout error attenuates single-qubit terms analytically") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  const AnsatzSpec spec = one_qubit_ansatz();
  const std::vector<double> params(2, 0.0);
  NoiseConfig cfg;
  cfg.p_read = 0.1;
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  const double e = energy_expectation(hz, device, spec, params, cfg,
                                      SimOptions{}, false);
  CHECK(e == doctest::Approx(0.8).epsilon(1e-12));

  PauliHamiltonian hi;
  hi.n_qubits = 1;
  hi.terms = {{"I", 1.5}};
  CHECK(energy_expectation(hi, device, spec, params, cfg, SimOptions{},
                           false) == 1.5);
}

TEST_CASE("x terms need a calibrated rotation pulse") {
  DeviceModel device = one_qubit_device();
  PauliHamiltonian hx;
  hx.n_qubits = 1;
  hx.terms = {{"X", 1.0}};
  CHECK_THROWS_AS(energy_expectation(hx, device, one_qubit_ansatz(),
                                     {0.0, 0.0}, NoiseConfig{}, SimOptions{},
                                     false),
                  CalibrationError);
}

TEST_CASE("extrapolated and plain energies agree without noise") {
  DeviceModel device = two_qubit_device();
  calibrate_all(device);
  const PauliHamiltonian h2 = load_hamiltonian(molecule_path("h2_0p735.json"));
  const AnsatzSpec spec = two_qubit_ansatz();
  const std::vector<double> params = {0.2, 0.3, 0.15, -0.4, 0.35, 1.1};
  const NoiseConfig off;
  const SimOptions options;
  const double plain =
      energy_expectation(h2, device, spec, params, off, options, false);
  const double mitigated =
      energy_expectation(h2, device, spec, params, off, options, true);
  CHECK(mitigated == doctest::Approx(plain).epsilon(1e-6));
}

TEST_CASE("energy evaluation input checks") {
  DeviceModel device = two_qubit_device();
  calibrate_all(device);
  PauliHamiltonian h1;
  h1.n_qubits = 1;
  h1.terms = {{"Z", 1.0}};
  CHECK_THROWS_AS(energy_expectation(h1, device, two_qubit_ansatz(),
                                     std::vector<double>(6, 0.0),
                                     NoiseConfig{}, SimOptions{}, false),
                  ParameterError);

  PauliHamiltonian h2;
  h2.n_qubits = 2;
  h2.terms = {{"ZZ", 1.0}};
  CHECK_THROWS_AS(energy_expectation(h2, device, two_qubit_ansatz(),
                                     {0.0, 0.0}, NoiseConfig{}, SimOptions{},
                                     false),
                  ParameterError);

  PauliHamiltonian bad;
  bad.n_qubits = 2;
  bad.terms = {{"ZQ", 1.0}};
  CHECK_THROWS_AS(energy_expectation(bad, device, two_qubit_ansatz(),
                                     std::vector<double>(6, 0.0),
                                     NoiseConfig{}, SimOptions{}, false),
                  ParameterError);
}

TEST_CASE("noisy energies reproduce for a fixed noise seed") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  NoiseConfig cfg;
  cfg.amp_sigma_rel = 0.05;
  cfg.seed = 77;
  SimOptions options;
  options.shots = 32;
  const std::vector<double> params = {0.1, 0.0};
  const double a = energy_expectation(hz, device, one_qubit_ansatz(), params,
                                      cfg, options, false);
  const double b = energy_expectation(hz, device, one_qubit_ansatz(), params,
                                      cfg, options, false);
  CHECK(a == b);

  NoiseConfig other = cfg;
  other.seed = 78;
  const double c = energy_expectation(hz, device, one_qubit_ansatz(), params,
                                      other, options, false);
  CHECK(c != a);
}

TEST_CASE("sampled-count energies take measured parities") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  SimOptions options;
  options.mode = SimMode::kShots;
  options.shots = 128;
  options.seed = 5;
  const double e = energy_expectation(hz, device, one_qubit_ansatz(),
                                      {0.0, 0.0}, NoiseConfig{}, options,
                                      false);
  CHECK(e == doctest::Approx(1.0));
}

TEST_CASE("single-qubit search reaches the z ground state") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  VqeConfig config;
  config.ansatz = one_qubit_ansatz();
  config.optimizer.max_iters = 200;
  const VqeResult r = optimize(hz, device, config);
  CHECK(r.best_energy <= -0.99);
  CHECK(r.iterations <= 200);
  REQUIRE(!r.trace.empty());
  CHECK(r.trace.front().first == 0);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].second <= r.trace[i - 1].second);
  }
}

TEST_CASE("molecular search converges without noise") {
  DeviceModel device = two_qubit_device();
  calibrate_all(device);
  const PauliHamiltonian h2 = load_hamiltonian(molecule_path("h2_0p735.json"));
  const double exact = exact_ground_energy(h2);
  VqeConfig config;
  config.ansatz = two_qubit_ansatz();
  config.optimizer.max_iters = 500;
  config.optimizer.tolerance = 1e-10;
  const VqeResult r = optimize(h2, device, config);
  CHECK(std::abs(r.best_energy - exact) <= 5e-3);
  // Noiseless, so the reported energy is exactly the best trace value.
  CHECK(r.best_energy == doctest::Approx(r.trace.back().second).epsilon(1e-12));
}

TEST_CASE("seeded searches rerun identically") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};
  VqeConfig config;
  config.ansatz = one_qubit_ansatz();
  config.optimizer.max_iters = 60;
  config.noise.amp_sigma_rel = 0.03;
  config.noise.seed = 9;
  config.shots = 16;
  config.seed = 42;
  const VqeResult a = optimize(hz, device, config);
  const VqeResult b = optimize(hz, device, config);
  CHECK(a.best_energy == b.best_energy);
  REQUIRE(a.best_params.size() == b.best_params.size());
  for (std::size_t i = 0; i < a.best_params.size(); ++i) {
    CHECK(a.best_params[i] == b.best_params[i]);
  }
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].second == b.trace[i].second);
  }
}

TEST_CASE("search configuration checks") {
  DeviceModel device = one_qubit_device();
  calibrate_all(device);
  PauliHamiltonian hz;
  hz.n_qubits = 1;
  hz.terms = {{"Z", 1.0}};

  VqeConfig mismatch;
  mismatch.ansatz = two_qubit_ansatz();
  PauliHamiltonian h2;
  h2.n_qubits = 2;
  h2.terms = {{"ZZ", 1.0}};
  CHECK_THROWS_AS(optimize(h2, device, mismatch), ParameterError);

  VqeConfig no_shots;
  no_shots.ansatz = one_qubit_ansatz();
  no_shots.shots = 0;
  CHECK_THROWS_AS(optimize(hz, device, no_shots), ParameterError);
}

}  // namespace
}  // namespace pulsekit
