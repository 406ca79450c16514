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

#ifndef PULSEKIT_VQE_HPP_
#define PULSEKIT_VQE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pulsekit/device.hpp"
#include "pulsekit/noise.hpp"
#include "pulsekit/optimizer.hpp"
#include "pulsekit/rng.hpp"
#include "pulsekit/simulator.hpp"
#include "pulsekit/transforms.hpp"

namespace pulsekit {

struct PauliTerm {
  std::string pauli;  // one of I, X, Y, Z per qubit, leftmost = qubit 0
  double coeff = 0.0;
};

struct PauliHamiltonian {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

// Reads {n_qubits, terms: [{pauli, coeff}, ...]} from inline JSON or a
// file path. Malformed JSON raises SerializationError; schema violations
// (missing fields, wrong string lengths, letters outside IXYZ, non-finite
// coefficients) raise ConfigError.
PauliHamiltonian load_hamiltonian(const std::string& text_or_path);

// Minimum eigenvalue of the dense sum of weighted Pauli strings. Only
// small systems are supported (n <= 4); larger ones raise CapabilityError.
double exact_ground_energy(const PauliHamiltonian& h);

struct VqeConfig {
  AnsatzSpec ansatz;
  int shots = 1024;
  OptimizerOptions optimizer;
  bool zne = false;
  NoiseConfig noise;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::kStatevector;
};

struct VqeResult {
  std::vector<double> best_params;
  double best_energy = 0.0;
  std::vector<std::pair<int, double>> trace;
  int iterations = 0;
  bool converged = false;
};

// One energy evaluation: per Pauli term the ansatz schedule is built,
// measurement-basis rotations (virtual-Z plus calibrated X rotations) are
// appended for X/Y letters, the whole circuit is folded at scale 1 (and 3
// when zne is set), and the term expectation is estimated under the noise
// model. Statevector mode averages exact expectations over the jitter
// draws (options.shots draws in per_shot mode) with readout error folded
// in analytically; shots mode samples counts and takes the measured
// parity. Identity terms contribute their coefficient directly. With zne
// the scale-1 and scale-3 energies extrapolate linearly to scale 0.
//
// Noise randomness comes from noise_rng when given, else a stream seeded
// by noise.seed. Throws ParameterError on qubit-count mismatches and
// CalibrationError when a basis rotation lacks a calibrated pulse.
double energy_expectation(const PauliHamiltonian& h, const DeviceModel& device,
                          const AnsatzSpec& ansatz,
                          const std::vector<double>& params,
                          const NoiseConfig& noise, const SimOptions& options,
                          bool zne, Rng* noise_rng = nullptr);

// Minimizes energy_expectation over the ansatz parameters with the
// simplex optimizer, restarted from a small fixed grid of starting points
// (shared amplitude levels for qubit and coupling pulses, angles zero) so
// a single basin of attraction cannot trap the whole search; the
// iteration budget is split evenly across starts and the best run wins.
// The returned best_energy is a fresh evaluation at the best parameters
// using eight times the configured draw count, so the reported value is
// not biased by selecting the luckiest noisy evaluation. Deterministic
// for a fixed config and seed.
VqeResult optimize(const PauliHamiltonian& h, const DeviceModel& device,
                   const VqeConfig& config);

}  // namespace pulsekit

#endif  // PULSEKIT_VQE_HPP_
