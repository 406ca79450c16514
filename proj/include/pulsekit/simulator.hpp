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

#ifndef PULSEKIT_SIMULATOR_HPP_
#define PULSEKIT_SIMULATOR_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "pulsekit/device.hpp"
#include "pulsekit/noise.hpp"
#include "pulsekit/rng.hpp"
#include "pulsekit/schedule.hpp"

namespace pulsekit {

enum class SimMode { kStatevector, kShots };

struct SimOptions {
  int substeps_per_dt = 1;
  int shots = 1024;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::kStatevector;
};

// n-qubit statevector. Bit order: qubit 0 is the leftmost character of a
// bitstring and the most significant bit of an amplitude index, so |10>
// means qubit 0 in |1> and qubit 1 in |0>.
struct QuantumState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  static QuantumState ground(int n_qubits);
  static QuantumState basis(int n_qubits, const std::string& bitstring);

  double norm() const { return amplitudes.norm(); }
};

// Shot-sampled measurement outcomes, bitstring -> occurrences.
using Counts = std::map<std::string, int>;

std::string index_to_bitstring(std::uint64_t index, int n_qubits);
std::uint64_t bitstring_to_index(const std::string& bitstring);

// Evolves `initial` under the schedule in the qubits' rotating frames
// (rotating-wave approximation). Per sample of duration dt:
//
//   Drive channel q, envelope f(t):   H += (W/2) (Re[w] sx_q + Im[w] sy_q)
//     with w = drive_strength * f(t)
//   Control channel (c -> q), envelope f(t), with r = j / (2 delta12):
//     H += (1/2) (Re[w] (sx_q - r sz_c sx_q) + Im[w] (sy_q - r sz_c sy_q))
//     with w = cr_drive_strength * f(t)
//
// ShiftPhase(phi) on a channel applies the virtual-Z unitary
// exp(-i phi sz / 2) on the channel's acted qubit (the qubit itself for
// Drive, the coupling's target for Control) instantaneously at its
// timestamp, before anything that starts at the same time. Stepping is
// piecewise-constant per sample with exact matrix exponentials, split
// into substeps_per_dt equal factors.
//
// When `noise` carries amplitude jitter the schedule is perturbed once
// (one draw) before evolution, using `noise_rng` if given, else a stream
// seeded from the config. Averaging over draws is the caller's loop.
QuantumState evolve(const Schedule& s, const DeviceModel& device,
                    const QuantumState& initial, const SimOptions& options,
                    const NoiseConfig* noise = nullptr,
                    Rng* noise_rng = nullptr);

// Noiseless unitary of the whole schedule, evolved column by column.
// Guarded to n_qubits <= 3 (dense matrices only); throws CapabilityError
// beyond that.
Eigen::MatrixXcd propagator(const Schedule& s, const DeviceModel& device,
                            const SimOptions& options);

// Born-rule sampling of options.shots bitstrings. With a noise config,
// each measured bit flips independently with probability p_read. Uses
// `rng` when given, else a stream seeded from options.seed.
Counts measure(const QuantumState& state, const SimOptions& options,
               const NoiseConfig* noise = nullptr, Rng* rng = nullptr);

// <psi| P |psi> for a Pauli string like "XZ" (letter i acts on qubit i).
double exact_expectation(const QuantumState& state, const std::string& pauli);

// |<bitstring|psi>|^2.
double basis_probability(const QuantumState& state,
                         const std::string& bitstring);

// Probability that measuring `qubit` alone yields 1.
double excited_probability(const QuantumState& state, int qubit);

// min over phase of ||u - e^{i phase} v||_F, the Frobenius distance after
// aligning global phase.
double phase_invariant_distance(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v);

}  // namespace pulsekit

#endif  // PULSEKIT_SIMULATOR_HPP_
