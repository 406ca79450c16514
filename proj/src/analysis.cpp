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

#include "pulsekit/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "pulsekit/errors.hpp"
#include "pulsekit/rng.hpp"
#include "pulsekit/serialization.hpp"
#include "pulsekit/transforms.hpp"

namespace pulsekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Probability that every bit of a measured sample reads 0 when each bit
// flips independently with probability p_read.
double zeros_read_probability(const QuantumState& state, double p_read) {
  const int n = state.n_qubits;
  if (p_read <= 0.0) {
    return std::norm(state.amplitudes(0));
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    const double w = std::norm(state.amplitudes(i));
    if (w == 0.0) continue;
    const int ones = std::popcount(static_cast<std::uint64_t>(i));
    total += w * std::pow(p_read, ones) * std::pow(1.0 - p_read, n - ones);
  }
  return total;
}

Schedule random_family_sequence(const DeviceModel& device,
                                const PulseFamily& family, int n, Rng& rng) {
  if (family.kind == PulseFamily::Kind::kRx) {
    // Each gate is the two-pulse composite conjugated by a virtual frame
    // rotation, so successive gates turn about varied equatorial axes the
    // way transpiled hardware sequences do. The frame shifts cost no
    // pulses; an unconjugated chain of X rotations would stay on a single
    // Bloch circle and hide part of the accumulated error from the
    // return-probability measurement.
    Schedule seq;
    const ChannelId d0 = ChannelId::drive(0);
    for (int i = 0; i < n; ++i) {
      const double theta = kTwoPi * rng.uniform();
      const double axis = kTwoPi * rng.uniform();
      seq = append(seq, Schedule::from_entries(
                            {{0, Instruction::shift_phase(axis, d0)}}, 0));
      seq = append(seq, build_rx(device, 0, theta));
      seq = append(seq, Schedule::from_entries(
                            {{0, Instruction::shift_phase(-axis, d0)}}, 0));
    }
    return seq;
  }
  std::vector<ScheduleEntry> entries;
  std::int64_t t = 0;
  const ChannelId d0 = ChannelId::drive(0);
  for (int i = 0; i < n; ++i) {
    const double amp = 0.1 + 0.9 * rng.uniform();
    const double angle = kTwoPi * rng.uniform();
    entries.push_back({t, Instruction::play(family.bind(amp, angle), d0)});
    t += family.duration;
  }
  return Schedule::from_entries(std::move(entries), t);
}

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / (static_cast<double>(xs.size()) - 1.0));
}

// Least-squares fit of y = A + B cos(w d) + C sin(w d) for all three
// expectation traces at one trial frequency; the normal matrix is shared
// across the axes.
struct SinusoidFit {
  double sse = 0.0;
  // per axis: A, B, C
  std::array<Eigen::Vector3d, 3> coef;
};

SinusoidFit fit_at_frequency(const std::vector<int>& durations,
                             const std::array<std::vector<double>, 3>& traces,
                             double omega) {
  const std::size_t n = durations.size();
  Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
  std::array<Eigen::Vector3d, 3> rhs = {Eigen::Vector3d::Zero(),
                                        Eigen::Vector3d::Zero(),
                                        Eigen::Vector3d::Zero()};
  std::vector<double> cs(n), sn(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double arg = omega * durations[j];
    cs[j] = std::cos(arg);
    sn[j] = std::sin(arg);
    Eigen::Vector3d row(1.0, cs[j], sn[j]);
    normal += row * row.transpose();
    for (int k = 0; k < 3; ++k) rhs[k] += traces[k][j] * row;
  }
  SinusoidFit fit;
  Eigen::LDLT<Eigen::Matrix3d> solver(normal);
  for (int k = 0; k < 3; ++k) {
    fit.coef[k] = solver.solve(rhs[k]);
    for (std::size_t j = 0; j < n; ++j) {
      const double model =
          fit.coef[k](0) + fit.coef[k](1) * cs[j] + fit.coef[k](2) * sn[j];
      const double r = traces[k][j] - model;
      fit.sse += r * r;
    }
  }
  return fit;
}

struct PrepFit {
  double omega = 0.0;  // per sample
  SinusoidFit best;
};

// Scans a frequency grid, then refines the winner with shrinking
// three-point parabolic steps on the total squared error.
PrepFit fit_prep(const std::vector<int>& durations,
                 const std::array<std::vector<double>, 3>& traces) {
  const int d_min = durations.front();
  const int d_max = durations.back();
  int min_gap = d_max - d_min;
  for (std::size_t j = 1; j < durations.size(); ++j) {
    min_gap = std::min(min_gap, durations[j] - durations[j - 1]);
  }
  const double lo = 0.5 * std::numbers::pi / (d_max - d_min);
  const double hi = std::numbers::pi / std::max(1, min_gap);
  const int grid = 4000;

  double best_omega = lo;
  double best_sse = std::numeric_limits<double>::infinity();
  int best_index = 0;
  for (int g = 0; g <= grid; ++g) {
    const double omega = lo + (hi - lo) * g / grid;
    const double sse = fit_at_frequency(durations, traces, omega).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best_omega = omega;
      best_index = g;
    }
  }
  if (best_index == 0 || best_index == grid) {
    throw FitError(
        "tomography traces do not resolve an oscillation over the sampled "
        "durations");
  }

  double h = (hi - lo) / grid;
  double center = best_omega;
  for (int iter = 0; iter < 60 && h > 1e-14; ++iter) {
    const double xs[3] = {center - h, center, center + h};
    double y[3];
    for (int i = 0; i < 3; ++i) {
      y[i] = fit_at_frequency(durations, traces, xs[i]).sse;
    }
    const double denom = y[0] - 2.0 * y[1] + y[2];
    if (std::abs(denom) > 1e-300) {
      double vertex = center + 0.5 * h * (y[0] - y[2]) / denom;
      vertex = std::clamp(vertex, center - h, center + h);
      center = vertex;
    }
    h *= 0.5;
  }

  PrepFit out;
  out.omega = center;
  out.best = fit_at_frequency(durations, traces, center);
  return out;
}

}  // namespace

double pst(const Counts& counts, const std::string& initial_bitstring) {
  if (counts.empty()) throw ParameterError("counts are empty");
  long long total = 0;
  for (const auto& [bits, c] : counts) total += c;
  if (total <= 0) throw ParameterError("counts hold no shots");
  const auto it = counts.find(initial_bitstring);
  const long long hit = it == counts.end() ? 0 : it->second;
  return static_cast<double>(hit) / static_cast<double>(total);
}

double estimate_fidelity(const Schedule& s, const DeviceModel& device,
                         const NoiseConfig& noise, const SimOptions& options) {
  validate(noise);
  const Schedule loop = append(s, reverse_schedule(s));
  const int n = device.n_qubits();
  const QuantumState initial = QuantumState::ground(n);
  const std::string zeros(static_cast<std::size_t>(n), '0');
  Rng rng(noise.seed);

  if (options.mode == SimMode::kStatevector) {
    const bool amp = noise.amp_noise_enabled();
    const int draws =
        amp && noise.resample == NoiseResample::kPerShot ? options.shots : 1;
    double total = 0.0;
    for (int i = 0; i < draws; ++i) {
      const QuantumState out = evolve(loop, device, initial, options,
                                      amp ? &noise : nullptr, &rng);
      total += zeros_read_probability(out, noise.p_read);
    }
    return total / draws;
  }

  Counts counts;
  if (noise.amp_noise_enabled() &&
      noise.resample == NoiseResample::kPerShot) {
    SimOptions one = options;
    one.shots = 1;
    for (int shot = 0; shot < options.shots; ++shot) {
      const QuantumState out =
          evolve(loop, device, initial, options, &noise, &rng);
      for (const auto& [bits, c] : measure(out, one, &noise, &rng)) {
        counts[bits] += c;
      }
    }
  } else {
    const QuantumState out =
        evolve(loop, device, initial, options,
               noise.amp_noise_enabled() ? &noise : nullptr, &rng);
    counts = measure(out, options, &noise, &rng);
  }
  return pst(counts, zeros);
}

RbCurve rb_run(const DeviceModel& device, const PulseFamily& family,
               const std::vector<int>& sizes, int repetitions,
               const NoiseConfig& noise, const SimOptions& options) {
  if (sizes.empty()) throw ParameterError("benchmark sizes are empty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw ParameterError("benchmark sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw ParameterError("benchmark sizes must be strictly increasing");
    }
  }
  if (repetitions < 3) {
    throw ParameterError("benchmarking needs at least 3 repetitions");
  }

  RbCurve curve;
  curve.family = family.name();
  double num = 0.0;
  double den = 0.0;
  for (int n : sizes) {
    std::vector<double> infids;
    infids.reserve(static_cast<std::size_t>(repetitions));
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto key =
          static_cast<std::uint64_t>(n) * 1000u + static_cast<std::uint64_t>(rep);
      Rng seq_rng(Rng::mix(options.seed, 2 * key));
      const Schedule seq = random_family_sequence(device, family, n, seq_rng);
      NoiseConfig trial = noise;
      trial.seed = Rng::mix(noise.seed, 2 * key + 1);
      infids.push_back(1.0 - estimate_fidelity(seq, device, trial, options));
    }
    double mean = 0.0;
    for (double x : infids) mean += x;
    mean /= static_cast<double>(infids.size());
    curve.points.push_back({n, mean, sample_std(infids, mean), repetitions});
    num += static_cast<double>(n) * mean;
    den += static_cast<double>(n) * static_cast<double>(n);
  }
  curve.slope = num / den;
  double acc = 0.0;
  for (const RbPoint& p : curve.points) {
    const double r = p.mean_infidelity - curve.slope * p.n_pulses;
    acc += r * r;
  }
  curve.residual = std::sqrt(acc / static_cast<double>(curve.points.size()));
  return curve;
}

double zne_extrapolate(const std::vector<std::pair<double, double>>& points,
                       ZneModel model) {
  (void)model;  // only the linear model exists
  if (points.size() < 2) {
    throw FitError("extrapolation needs at least two points");
  }
  if (points.size() == 2) {
    const auto [x1, y1] = points[0];
    const auto [x2, y2] = points[1];
    if (x1 == x2) throw FitError("extrapolation scales coincide");
    return (y1 * x2 - y2 * x1) / (x2 - x1);
  }
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / points.size();
  const double my = sy / points.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx < 1e-300) throw FitError("extrapolation scales coincide");
  const double slope = sxy / sxx;
  return my - slope * mx;
}

CrTomographyResult cr_tomography(const DeviceModel& device, int coupling_index,
                                 double cr_amp,
                                 const std::vector<int>& durations,
                                 const SimOptions& options) {
  if (coupling_index < 0 ||
      coupling_index >= static_cast<int>(device.couplings().size())) {
    throw ParameterError("coupling index out of range");
  }
  std::vector<int> ds(durations);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  if (ds.size() < 8) {
    throw ParameterError("tomography needs at least 8 distinct durations");
  }
  if (ds.front() < 1) throw ParameterError("durations must be positive");

  const Coupling& coupling = device.coupling(coupling_index);
  const int n = device.n_qubits();
  std::string pauli_x(static_cast<std::size_t>(n), 'I');
  std::string pauli_y = pauli_x;
  std::string pauli_z = pauli_x;
  pauli_x[static_cast<std::size_t>(coupling.target)] = 'X';
  pauli_y[static_cast<std::size_t>(coupling.target)] = 'Y';
  pauli_z[static_cast<std::size_t>(coupling.target)] = 'Z';

  CrTomographyResult result;
  std::array<Eigen::Vector3d, 2> drive_vec;
  for (int prep = 0; prep < 2; ++prep) {
    std::string bits(static_cast<std::size_t>(n), '0');
    if (prep == 1) bits[static_cast<std::size_t>(coupling.control)] = '1';
    const QuantumState initial = QuantumState::basis(n, bits);

    std::array<std::vector<double>, 3> traces;
    for (int d : ds) {
      const Schedule s = Schedule::from_entries(
          {{0, Instruction::play(PulseShape::square(d, cr_amp, 0.0),
                                 ChannelId::control(coupling_index))}},
          d);
      const QuantumState out = evolve(s, device, initial, options);
      CrTomographyRow row;
      row.duration = d;
      row.prep = prep;
      row.exp_x = exact_expectation(out, pauli_x);
      row.exp_y = exact_expectation(out, pauli_y);
      row.exp_z = exact_expectation(out, pauli_z);
      result.rows.push_back(row);
      traces[0].push_back(row.exp_x);
      traces[1].push_back(row.exp_y);
      traces[2].push_back(row.exp_z);
    }

    const PrepFit fit = fit_prep(ds, traces);
    double osc = 0.0;
    for (int k = 0; k < 3; ++k) {
      osc = std::max(osc, std::hypot(fit.best.coef[k](1), fit.best.coef[k](2)));
    }
    if (osc < 0.1) {
      throw FitError("tomography traces show no conditional rotation");
    }
    result.residual[static_cast<std::size_t>(prep)] =
        std::sqrt(fit.best.sse / (3.0 * static_cast<double>(ds.size())));

    // The Bloch vector starts at +z and precesses about the drive axis:
    // the sine coefficients give the axis transverse components, the DC
    // offsets its z component.
    const double nx = -fit.best.coef[1](2);
    const double ny = fit.best.coef[0](2);
    const double t2 = nx * nx + ny * ny;
    double nz = 0.0;
    if (t2 > 1e-12) {
      nz = (fit.best.coef[0](0) * nx + fit.best.coef[1](0) * ny) / t2;
    }
    Eigen::Vector3d axis(nx, ny, nz);
    const double norm = axis.norm();
    if (norm < 1e-12) {
      throw FitError("tomography rotation axis is degenerate");
    }
    axis /= norm;
    const double omega_rad_s = fit.omega / device.dt();
    drive_vec[static_cast<std::size_t>(prep)] = 0.5 * omega_rad_s * axis;
  }

  result.b_x = 0.5 * (drive_vec[0](0) + drive_vec[1](0));
  result.b_y = 0.5 * (drive_vec[0](1) + drive_vec[1](1));
  result.b_z = 0.5 * (drive_vec[0](2) + drive_vec[1](2));
  result.a_x = 0.5 * (drive_vec[0](0) - drive_vec[1](0));
  result.a_y = 0.5 * (drive_vec[0](1) - drive_vec[1](1));
  result.a_z = 0.5 * (drive_vec[0](2) - drive_vec[1](2));
  return result;
}

std::string rb_csv(const RbCurve& curve) {
  std::ostringstream out;
  out << "n_pulses,mean_infidelity,std,repetitions\n";
  for (const RbPoint& p : curve.points) {
    out << p.n_pulses << ',' << format_double(p.mean_infidelity) << ','
        << format_double(p.std_dev) << ',' << p.repetitions << '\n';
  }
  return out.str();
}

std::string tomography_csv(const CrTomographyResult& result) {
  std::ostringstream out;
  out << "duration,prep,exp_x,exp_y,exp_z\n";
  for (const CrTomographyRow& r : result.rows) {
    out << r.duration << ',' << r.prep << ',' << format_double(r.exp_x) << ','
        << format_double(r.exp_y) << ',' << format_double(r.exp_z) << '\n';
  }
  return out.str();
}

}  // namespace pulsekit
