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

#include "pulsekit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "pulsekit/errors.hpp"

namespace pulsekit {

namespace {

using complexd = std::complex<double>;
constexpr complexd kImag(0.0, 1.0);

// Envelope of a shape at amp = 1, angle = 0, with running sums so any
// sub-range integrates in O(1). The full envelope is this times
// amp * e^{i angle}, which is the only way amplitude and angle enter, so
// one cached profile serves every pulse sharing the remaining geometry.
// Benchmarking and tuning loops re-simulate the same few geometries under
// thousands of amplitude draws; without the cache the envelope evaluation
// dominates the run time.
struct CachedEnvelope {
  std::vector<complexd> samples;
  std::vector<complexd> prefix;  // prefix[k] = sum of samples[0..k)
};

const CachedEnvelope* unit_envelope(const PulseShape& shape) {
  using Key = std::tuple<int, int, double, double, double>;
  static std::map<Key, std::unique_ptr<CachedEnvelope>> cache;
  const Key key{static_cast<int>(shape.kind), shape.duration, shape.sigma,
                shape.beta, shape.width};
  auto it = cache.find(key);
  if (it == cache.end()) {
    PulseShape unit = shape;
    unit.amp = 1.0;
    unit.angle = 0.0;
    auto entry = std::make_unique<CachedEnvelope>();
    entry->samples = envelope_samples(unit);
    entry->prefix.resize(entry->samples.size() + 1);
    complexd run(0.0, 0.0);
    entry->prefix[0] = run;
    for (std::size_t i = 0; i < entry->samples.size(); ++i) {
      run += entry->samples[i];
      entry->prefix[i + 1] = run;
    }
    it = cache.emplace(key, std::move(entry)).first;
  }
  return it->second.get();
}

// One Play instruction resolved against the device: absolute time span,
// shared unit envelope plus its complex scale, Hamiltonian ingredients,
// and whether the envelope keeps a fixed complex phase (everything except
// Drag with beta != 0). Fixed-phase pulses on non-overlapping qubit sets
// commute sample to sample, so a whole span of them integrates into one
// matrix exponential.
struct ResolvedPulse {
  std::int64_t t0 = 0;
  std::int64_t t1 = 0;
  const CachedEnvelope* base = nullptr;
  complexd scale;
  bool fixed_phase = false;
  unsigned support = 0;
  bool is_control = false;
  int qubit = 0;    // acted qubit: the drive qubit, or the coupling target
  int control = 0;  // control qubit of the coupling (is_control only)
  double strength = 0.0;
  double ratio = 0.0;  // j / (2 delta12)
};

struct PhaseEvent {
  std::int64_t t = 0;
  int qubit = 0;
  double phase = 0.0;
};

struct CompiledSchedule {
  std::vector<ResolvedPulse> pulses;
  std::vector<PhaseEvent> phases;
  std::vector<std::int64_t> boundaries;
  std::int64_t duration = 0;
};

int acted_qubit(const DeviceModel& device, ChannelId channel) {
  if (channel.kind == ChannelKind::kDrive) {
    if (channel.index < 0 || channel.index >= device.n_qubits()) {
      throw SchedulingError("drive channel index out of range for device");
    }
    return channel.index;
  }
  if (channel.index < 0 ||
      channel.index >= static_cast<int>(device.couplings().size())) {
    throw SchedulingError("control channel index out of range for device");
  }
  return device.couplings()[static_cast<std::size_t>(channel.index)].target;
}

CompiledSchedule compile_schedule(const Schedule& s, const DeviceModel& device) {
  CompiledSchedule cs;
  cs.duration = s.duration();
  std::vector<std::int64_t> cuts;
  cuts.push_back(0);
  cuts.push_back(cs.duration);
  for (const auto& entry : s.entries()) {
    const Instruction& inst = entry.inst;
    switch (inst.op) {
      case Instruction::Op::kPlay: {
        validate(inst.shape);
        ResolvedPulse p;
        p.t0 = entry.t;
        p.t1 = entry.t + inst.shape.duration;
        p.base = unit_envelope(inst.shape);
        p.scale = inst.shape.amp * complexd(std::cos(inst.shape.angle),
                                            std::sin(inst.shape.angle));
        p.fixed_phase =
            inst.shape.kind != ShapeKind::kDrag || inst.shape.beta == 0.0;
        if (inst.channel.kind == ChannelKind::kDrive) {
          p.qubit = acted_qubit(device, inst.channel);
          p.is_control = false;
          p.support = 1u << p.qubit;
          p.strength = device.qubit(p.qubit).drive_strength;
        } else {
          p.qubit = acted_qubit(device, inst.channel);
          const Coupling& c = device.coupling(inst.channel.index);
          p.is_control = true;
          p.control = c.control;
          p.support = (1u << c.control) | (1u << c.target);
          p.strength = c.cr_drive_strength;
          p.ratio = c.conditional_ratio();
        }
        cuts.push_back(p.t0);
        cuts.push_back(p.t1);
        cs.pulses.push_back(std::move(p));
        break;
      }
      case Instruction::Op::kShiftPhase: {
        PhaseEvent ev;
        ev.t = entry.t;
        ev.qubit = acted_qubit(device, inst.channel);
        ev.phase = inst.phase;
        cs.phases.push_back(ev);
        cuts.push_back(ev.t);
        break;
      }
      case Instruction::Op::kDelay:
        acted_qubit(device, inst.channel);  // range check only
        break;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cs.boundaries = std::move(cuts);
  return cs;
}

// H += (1/2) (Re[w] sx + Im[w] sy) on `qubit`, i.e. w/2 into the
// |1><0| block of that qubit.
void add_drive_term(Eigen::MatrixXcd& h, int n_qubits, int qubit, complexd w) {
  const int dim = 1 << n_qubits;
  const int bit = 1 << (n_qubits - 1 - qubit);
  for (int i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const int j = i | bit;
    h(j, i) += 0.5 * w;
    h(i, j) += 0.5 * std::conj(w);
  }
}

// H += (1/2) (Re[w] (sx_t - r sz_c sx_t) + Im[w] (sy_t - r sz_c sy_t)):
// a drive on the target whose weight is 1 -+ r for control |0> / |1>.
void add_control_term(Eigen::MatrixXcd& h, int n_qubits, int control,
                      int target, complexd w, double ratio) {
  const int dim = 1 << n_qubits;
  const int tbit = 1 << (n_qubits - 1 - target);
  const int cbit = 1 << (n_qubits - 1 - control);
  for (int i = 0; i < dim; ++i) {
    if (i & tbit) continue;
    const int j = i | tbit;
    const double weight = 1.0 - ratio * ((i & cbit) ? -1.0 : 1.0);
    h(j, i) += 0.5 * weight * w;
    h(i, j) += 0.5 * weight * std::conj(w);
  }
}

// exp(-i h tau) for Hermitian h.
Eigen::MatrixXcd expm_herm(const Eigen::MatrixXcd& h, double tau) {
  const int dim = static_cast<int>(h.rows());
  if (dim == 2) {
    // Pauli decomposition keeps the 2x2 case a handful of scalars.
    const double a = h(1, 0).real();
    const double b = h(1, 0).imag();
    const double c = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const double d = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double r = std::sqrt(a * a + b * b + c * c);
    const complexd lead = std::exp(-kImag * d * tau);
    Eigen::MatrixXcd u(2, 2);
    if (r < 1e-300) {
      u.setIdentity();
      u *= lead;
      return u;
    }
    const double co = std::cos(r * tau);
    const complexd si = -kImag * std::sin(r * tau) / r;
    u(0, 0) = lead * (co + si * c);
    u(0, 1) = lead * si * complexd(a, -b);
    u(1, 0) = lead * si * complexd(a, b);
    u(1, 1) = lead * (co - si * c);
    return u;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) {
    phases(i) = std::exp(-kImag * es.eigenvalues()(i) * tau);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Virtual Z: diag(e^{-i phi/2}, e^{+i phi/2}) on one qubit.
void apply_rz(Eigen::MatrixXcd& state, int n_qubits, int qubit, double phase) {
  const int dim = 1 << n_qubits;
  const int bit = 1 << (n_qubits - 1 - qubit);
  const complexd f0 = std::exp(-kImag * 0.5 * phase);
  const complexd f1 = std::conj(f0);
  for (int i = 0; i < dim; ++i) {
    state.row(i) *= (i & bit) ? f1 : f0;
  }
}

void add_pulse_term(Eigen::MatrixXcd& h, int n_qubits, const ResolvedPulse& p,
                    complexd w) {
  if (p.is_control) {
    add_control_term(h, n_qubits, p.control, p.qubit, w, p.ratio);
  } else {
    add_drive_term(h, n_qubits, p.qubit, w);
  }
}

void evolve_span(Eigen::MatrixXcd& state, int n_qubits,
                 const std::vector<const ResolvedPulse*>& active,
                 std::int64_t t_begin, std::int64_t t_end, double dt,
                 int substeps) {
  const int dim = 1 << n_qubits;
  bool integrable = true;
  for (std::size_t i = 0; i < active.size() && integrable; ++i) {
    if (!active[i]->fixed_phase) integrable = false;
    for (std::size_t k = i + 1; k < active.size(); ++k) {
      if (active[i]->support & active[k]->support) {
        integrable = false;
        break;
      }
    }
  }

  if (integrable) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const ResolvedPulse* p : active) {
      const complexd area =
          p->scale * (p->base->prefix[static_cast<std::size_t>(t_end - p->t0)] -
                      p->base->prefix[static_cast<std::size_t>(t_begin - p->t0)]);
      add_pulse_term(h, n_qubits, *p, p->strength * area);
    }
    state = expm_herm(h, dt) * state;
    return;
  }

  for (std::int64_t t = t_begin; t < t_end; ++t) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const ResolvedPulse* p : active) {
      const complexd w =
          p->strength * p->scale *
          p->base->samples[static_cast<std::size_t>(t - p->t0)];
      add_pulse_term(h, n_qubits, *p, w);
    }
    const Eigen::MatrixXcd u = expm_herm(h, dt / substeps);
    for (int k = 0; k < substeps; ++k) state = u * state;
  }
}

// Advances `state` (a 2^n x k matrix of column states) through the whole
// schedule: phase events fire at their timestamps before the span that
// starts there, spans between consecutive boundaries evolve under the
// then-active pulses, and phase events sitting at the final time fire
// last.
void run_schedule(const CompiledSchedule& cs, const DeviceModel& device,
                  const SimOptions& options, Eigen::MatrixXcd& state) {
  const int n = device.n_qubits();
  std::size_t phase_i = 0;
  const auto& b = cs.boundaries;
  std::vector<const ResolvedPulse*> active;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const std::int64_t t_begin = b[i];
    const std::int64_t t_end = b[i + 1];
    while (phase_i < cs.phases.size() && cs.phases[phase_i].t == t_begin) {
      apply_rz(state, n, cs.phases[phase_i].qubit, cs.phases[phase_i].phase);
      ++phase_i;
    }
    active.clear();
    for (const ResolvedPulse& p : cs.pulses) {
      if (p.t0 <= t_begin && p.t1 >= t_end) active.push_back(&p);
    }
    if (!active.empty()) {
      evolve_span(state, n, active, t_begin, t_end, device.dt(),
                  options.substeps_per_dt);
    }
  }
  while (phase_i < cs.phases.size()) {
    apply_rz(state, n, cs.phases[phase_i].qubit, cs.phases[phase_i].phase);
    ++phase_i;
  }
}

}  // namespace

QuantumState QuantumState::ground(int n_qubits) {
  if (n_qubits < 1) throw ParameterError("state needs at least one qubit");
  QuantumState s;
  s.n_qubits = n_qubits;
  s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t{1} << n_qubits);
  s.amplitudes(0) = 1.0;
  return s;
}

QuantumState QuantumState::basis(int n_qubits, const std::string& bitstring) {
  if (static_cast<int>(bitstring.size()) != n_qubits) {
    throw ParameterError("bitstring length does not match qubit count");
  }
  QuantumState s;
  s.n_qubits = n_qubits;
  s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t{1} << n_qubits);
  s.amplitudes(static_cast<std::int64_t>(bitstring_to_index(bitstring))) = 1.0;
  return s;
}

std::string index_to_bitstring(std::uint64_t index, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (index & (std::uint64_t{1} << (n_qubits - 1 - q))) {
      out[static_cast<std::size_t>(q)] = '1';
    }
  }
  return out;
}

std::uint64_t bitstring_to_index(const std::string& bitstring) {
  std::uint64_t index = 0;
  for (char c : bitstring) {
    if (c != '0' && c != '1') {
      throw ParameterError("bitstring may contain only 0 and 1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

QuantumState evolve(const Schedule& s, const DeviceModel& device,
                    const QuantumState& initial, const SimOptions& options,
                    const NoiseConfig* noise, Rng* noise_rng) {
  if (initial.n_qubits != device.n_qubits()) {
    throw ParameterError("state qubit count does not match device");
  }
  if (device.n_qubits() > 10) {
    throw CapabilityError("dense simulation is limited to 10 qubits");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-6) {
    throw ParameterError("initial state is not normalized");
  }
  if (options.substeps_per_dt < 1) {
    throw ParameterError("substeps_per_dt must be at least 1");
  }

  const Schedule* run = &s;
  Schedule perturbed;
  if (noise != nullptr && noise->amp_noise_enabled()) {
    Rng local(noise->seed);
    Rng& rng = noise_rng != nullptr ? *noise_rng : local;
    perturbed = perturb_schedule(s, *noise, rng);
    run = &perturbed;
  }

  if (run->duration() == 0) return initial;

  CompiledSchedule cs = compile_schedule(*run, device);
  Eigen::MatrixXcd state = initial.amplitudes;
  run_schedule(cs, device, options, state);
  QuantumState out;
  out.n_qubits = initial.n_qubits;
  out.amplitudes = state.col(0);
  return out;
}

Eigen::MatrixXcd propagator(const Schedule& s, const DeviceModel& device,
                            const SimOptions& options) {
  if (device.n_qubits() > 3) {
    throw CapabilityError("propagators are limited to 3 qubits");
  }
  if (options.substeps_per_dt < 1) {
    throw ParameterError("substeps_per_dt must be at least 1");
  }
  const int dim = 1 << device.n_qubits();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  if (s.duration() == 0) return u;
  CompiledSchedule cs = compile_schedule(s, device);
  run_schedule(cs, device, options, u);
  return u;
}

Counts measure(const QuantumState& state, const SimOptions& options,
               const NoiseConfig* noise, Rng* rng) {
  if (options.shots < 1) throw ParameterError("shots must be at least 1");
  Rng local(options.seed);
  Rng& r = rng != nullptr ? *rng : local;

  const auto dim = state.amplitudes.size();
  std::vector<double> cumulative(static_cast<std::size_t>(dim));
  double total = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    total += std::norm(state.amplitudes(i));
    cumulative[static_cast<std::size_t>(i)] = total;
  }

  const bool flips = noise != nullptr && noise->p_read > 0.0;
  Counts counts;
  for (int shot = 0; shot < options.shots; ++shot) {
    const double x = r.uniform() * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), x);
    auto index = static_cast<std::uint64_t>(
        std::min<std::ptrdiff_t>(it - cumulative.begin(), dim - 1));
    std::string bits = index_to_bitstring(index, state.n_qubits);
    if (flips) {
      for (char& c : bits) {
        if (r.uniform() < noise->p_read) c = (c == '0') ? '1' : '0';
      }
    }
    ++counts[bits];
  }
  return counts;
}

double exact_expectation(const QuantumState& state, const std::string& pauli) {
  const int n = state.n_qubits;
  if (static_cast<int>(pauli.size()) != n) {
    throw ParameterError("Pauli string length does not match qubit count");
  }
  std::uint64_t flip_mask = 0;
  for (int q = 0; q < n; ++q) {
    const char c = pauli[static_cast<std::size_t>(q)];
    if (c == 'X' || c == 'Y') flip_mask |= std::uint64_t{1} << (n - 1 - q);
    else if (c != 'I' && c != 'Z') {
      throw ParameterError("Pauli letters must be I, X, Y or Z");
    }
  }
  const auto dim = state.amplitudes.size();
  complexd acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    complexd factor(1.0, 0.0);
    const auto u = static_cast<std::uint64_t>(i);
    for (int q = 0; q < n; ++q) {
      const char c = pauli[static_cast<std::size_t>(q)];
      const bool set = (u >> (n - 1 - q)) & 1u;
      if (c == 'Y') factor *= set ? -kImag : kImag;
      else if (c == 'Z' && set) factor = -factor;
    }
    const auto j = static_cast<Eigen::Index>(u ^ flip_mask);
    acc += std::conj(state.amplitudes(j)) * factor * state.amplitudes(i);
  }
  if (std::abs(acc.imag()) > 1e-8) {
    throw ParameterError("expectation has a non-real residue");
  }
  return acc.real();
}

double basis_probability(const QuantumState& state,
                         const std::string& bitstring) {
  if (static_cast<int>(bitstring.size()) != state.n_qubits) {
    throw ParameterError("bitstring length does not match qubit count");
  }
  const auto index = static_cast<Eigen::Index>(bitstring_to_index(bitstring));
  return std::norm(state.amplitudes(index));
}

double excited_probability(const QuantumState& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits) {
    throw ParameterError("qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << (state.n_qubits - 1 - qubit);
  double p = 0.0;
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    if (static_cast<std::uint64_t>(i) & bit) {
      p += std::norm(state.amplitudes(i));
    }
  }
  return p;
}

double phase_invariant_distance(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ParameterError("matrix shapes differ");
  }
  const complexd overlap = (v.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  const complexd phase = mag < 1e-300 ? complexd(1.0, 0.0) : overlap / mag;
  return (u - phase * v).norm();
}

}  // namespace pulsekit
