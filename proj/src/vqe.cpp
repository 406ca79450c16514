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

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "pulsekit/analysis.hpp"
#include "pulsekit/errors.hpp"
#include "pulsekit/serialization.hpp"

namespace pulsekit {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

bool valid_pauli_letter(char c) {
  return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

template <typename ErrorT>
void check_pauli(const std::string& pauli, int n_qubits) {
  if (static_cast<int>(pauli.size()) != n_qubits) {
    std::ostringstream msg;
    msg << "pauli string '" << pauli << "' does not have " << n_qubits
        << " letters";
    throw ErrorT(msg.str());
  }
  for (char c : pauli) {
    if (!valid_pauli_letter(c)) {
      std::ostringstream msg;
      msg << "pauli string '" << pauli << "' has a letter outside IXYZ";
      throw ErrorT(msg.str());
    }
  }
}

Eigen::Matrix2cd pauli_matrix(char letter) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
      break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// Ansatz circuit plus the measurement-basis change for one Pauli term.
// z_string is the post-rotation observable: every non-I letter becomes Z.
struct TermCircuit {
  Schedule circuit;
  std::string z_string;
  int weight = 0;
};

TermCircuit make_term_circuit(const Schedule& base, const PauliTerm& term,
                              const DeviceModel& device) {
  std::vector<ScheduleEntry> entries = base.entries();
  const std::int64_t t0 = base.duration();
  std::int64_t rotation_len = 0;
  TermCircuit tc;
  tc.z_string.assign(term.pauli.size(), 'I');
  for (int q = 0; q < static_cast<int>(term.pauli.size()); ++q) {
    const char letter = term.pauli[q];
    if (letter == 'I') continue;
    tc.z_string[q] = 'Z';
    ++tc.weight;
    if (letter == 'Z') continue;
    // X needs an extra frame rotation in front of the common quarter turn;
    // Y is measured with the quarter turn alone.
    const ChannelId channel = ChannelId::drive(q);
    if (letter == 'X') {
      entries.push_back({t0, Instruction::shift_phase(kHalfPi, channel)});
    }
    const Schedule quarter = build_rx(device, q, kHalfPi);
    for (const auto& e : quarter.entries()) {
      entries.push_back({t0 + e.t, e.inst});
    }
    rotation_len = std::max(rotation_len, quarter.duration());
  }
  tc.circuit = Schedule::from_entries(std::move(entries), t0 + rotation_len);
  return tc;
}

double measured_parity(const Counts& counts, const std::string& z_string) {
  double acc = 0.0;
  long total = 0;
  for (const auto& [bits, n] : counts) {
    int ones = 0;
    for (std::size_t i = 0; i < z_string.size(); ++i) {
      if (z_string[i] == 'Z' && bits[i] == '1') ++ones;
    }
    acc += static_cast<double>(n) * ((ones % 2) ? -1.0 : 1.0);
    total += n;
  }
  return acc / static_cast<double>(total);
}

// Expectation of one folded term circuit under the noise model.
double estimate_term(const Schedule& folded, const TermCircuit& tc,
                     const DeviceModel& device, const NoiseConfig& noise,
                     const SimOptions& options, Rng* rng) {
  const QuantumState init = QuantumState::ground(device.n_qubits());
  const NoiseConfig* noise_ptr = noise.enabled() ? &noise : nullptr;
  const bool per_shot = noise.amp_noise_enabled() &&
                        noise.resample == NoiseResample::kPerShot;
  if (options.mode == SimMode::kStatevector) {
    const int draws = per_shot ? std::max(1, options.shots) : 1;
    double sum = 0.0;
    for (int d = 0; d < draws; ++d) {
      const QuantumState state =
          evolve(folded, device, init, options, noise_ptr, rng);
      sum += exact_expectation(state, tc.z_string);
    }
    const double attenuation = std::pow(1.0 - 2.0 * noise.p_read, tc.weight);
    return attenuation * sum / draws;
  }
  Counts counts;
  if (per_shot) {
    SimOptions single = options;
    single.shots = 1;
    for (int s = 0; s < std::max(1, options.shots); ++s) {
      const QuantumState state =
          evolve(folded, device, init, options, noise_ptr, rng);
      for (const auto& [bits, n] : measure(state, single, noise_ptr, rng)) {
        counts[bits] += n;
      }
    }
  } else {
    const QuantumState state =
        evolve(folded, device, init, options, noise_ptr, rng);
    counts = measure(state, options, noise_ptr, rng);
  }
  return measured_parity(counts, tc.z_string);
}

// Coarse deterministic grid of starting points: every qubit pulse shares
// one amplitude level, every coupling pulse another, all angles zero. The
// pulse energy landscape has local minima separated by large-rotation
// barriers (notably the zero-amplitude product state), so a single local
// descent can stall; a handful of spread-out starts covers the basins.
std::vector<std::vector<double>> ansatz_starts(const DeviceModel& device,
                                               const AnsatzSpec& ansatz) {
  const int nq = static_cast<int>(ansatz.qubits.size());
  const int nc = static_cast<int>(ansatz.coupling_indices(device).size());
  const int per_layer = 2 * (nq + nc);
  const int n_params = ansatz.layers * per_layer;
  const std::vector<double> qubit_levels = {0.0, 0.1};
  const std::vector<double> coupling_levels =
      nc > 0 ? std::vector<double>{0.0, 0.25, 0.5} : std::vector<double>{0.0};
  std::vector<std::vector<double>> starts;
  for (double aq : qubit_levels) {
    for (double ac : coupling_levels) {
      std::vector<double> p(static_cast<std::size_t>(n_params), 0.0);
      for (int layer = 0; layer < ansatz.layers; ++layer) {
        const int base = layer * per_layer;
        for (int q = 0; q < nq; ++q) p[static_cast<std::size_t>(base + 2 * q)] = aq;
        for (int c = 0; c < nc; ++c) {
          p[static_cast<std::size_t>(base + 2 * nq + 2 * c)] = ac;
        }
      }
      starts.push_back(std::move(p));
    }
  }
  return starts;
}

}  // namespace

PauliHamiltonian load_hamiltonian(const std::string& text_or_path) {
  nlohmann::json j = parse_json_text_or_file(text_or_path);
  if (!j.is_object()) {
    throw ConfigError("hamiltonian description must be an object");
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw ConfigError("hamiltonian field 'n_qubits' missing or not an integer");
  }
  PauliHamiltonian h;
  h.n_qubits = j["n_qubits"].get<int>();
  if (h.n_qubits < 1) throw ConfigError("n_qubits must be positive");
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw ConfigError("hamiltonian field 'terms' missing or not an array");
  }
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("pauli") || !t["pauli"].is_string() ||
        !t.contains("coeff") || !t["coeff"].is_number()) {
      throw ConfigError(
          "each term needs a 'pauli' string and a numeric 'coeff'");
    }
    PauliTerm term;
    term.pauli = t["pauli"].get<std::string>();
    term.coeff = t["coeff"].get<double>();
    check_pauli<ConfigError>(term.pauli, h.n_qubits);
    if (!std::isfinite(term.coeff)) {
      throw ConfigError("term coefficient must be finite");
    }
    h.terms.push_back(std::move(term));
  }
  return h;
}

double exact_ground_energy(const PauliHamiltonian& h) {
  if (h.n_qubits < 1) throw ParameterError("hamiltonian has no qubits");
  if (h.n_qubits > 4) {
    throw CapabilityError(
        "dense diagonalization is limited to 4 qubits");
  }
  const int dim = 1 << h.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms) {
    check_pauli<ParameterError>(term.pauli, h.n_qubits);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(1, 1);
    for (char letter : term.pauli) p = kron(p, pauli_matrix(letter));
    m += term.coeff * p;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw FitError("eigenvalue solve failed");
  }
  return solver.eigenvalues().minCoeff();
}

double energy_expectation(const PauliHamiltonian& h, const DeviceModel& device,
                          const AnsatzSpec& ansatz,
                          const std::vector<double>& params,
                          const NoiseConfig& noise, const SimOptions& options,
                          bool zne, Rng* noise_rng) {
  if (h.n_qubits != device.n_qubits()) {
    throw ParameterError("hamiltonian and device qubit counts differ");
  }
  for (const auto& term : h.terms) {
    check_pauli<ParameterError>(term.pauli, h.n_qubits);
  }
  const Schedule base = build_hea_ansatz(device, ansatz, params);

  Rng local(noise.seed);
  Rng* rng = noise_rng ? noise_rng : &local;

  std::vector<int> scales{1};
  if (zne) scales.push_back(3);
  std::vector<std::pair<double, double>> points;
  for (int scale : scales) {
    double energy = 0.0;
    for (const auto& term : h.terms) {
      if (term.pauli.find_first_not_of('I') == std::string::npos) {
        energy += term.coeff;
        continue;
      }
      const TermCircuit tc = make_term_circuit(base, term, device);
      const Schedule folded =
          scale == 1 ? tc.circuit : fold_schedule(tc.circuit, scale);
      energy += term.coeff *
                estimate_term(folded, tc, device, noise, options, rng);
    }
    if (!zne) return energy;
    points.emplace_back(static_cast<double>(scale), energy);
  }
  return zne_extrapolate(points);
}

VqeResult optimize(const PauliHamiltonian& h, const DeviceModel& device,
                   const VqeConfig& config) {
  if (h.n_qubits != device.n_qubits()) {
    throw ParameterError("hamiltonian and device qubit counts differ");
  }
  const int n_params = config.ansatz.param_count(device);
  if (n_params < 1) throw ParameterError("ansatz exposes no parameters");
  if (config.shots < 1) throw ParameterError("shots must be positive");

  SimOptions options;
  options.shots = config.shots;
  options.seed = config.seed;
  options.mode = config.mode;
  Rng noise_rng(Rng::mix(config.seed, 1));

  const auto objective = [&](const std::vector<double>& p) {
    return energy_expectation(h, device, config.ansatz, p, config.noise,
                              options, config.zne, &noise_rng);
  };

  const std::vector<std::vector<double>> starts =
      ansatz_starts(device, config.ansatz);
  OptimizerOptions per_start = config.optimizer;
  per_start.max_iters =
      std::max(1, config.optimizer.max_iters /
                      static_cast<int>(starts.size()));

  VqeResult result;
  double best_value = std::numeric_limits<double>::infinity();
  double running_best = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    const OptimizerResult opt = nelder_mead(objective, start, per_start);
    for (const auto& [it, v] : opt.trace) {
      if (it == 0 && !result.trace.empty()) continue;
      running_best = std::min(running_best, v);
      result.trace.emplace_back(result.iterations + it, running_best);
    }
    result.iterations += opt.iterations;
    if (opt.best_value < best_value) {
      best_value = opt.best_value;
      result.best_params = opt.best_params;
      result.converged = opt.converged;
    }
  }

  // Re-evaluate at the winner with a larger draw budget. Quoting the raw
  // minimum of a noisy trace would favor lucky draws over good parameters.
  SimOptions final_options = options;
  final_options.shots = options.shots * 8;
  result.best_energy =
      energy_expectation(h, device, config.ansatz, result.best_params,
                         config.noise, final_options, config.zne, &noise_rng);
  return result;
}

}  // namespace pulsekit
