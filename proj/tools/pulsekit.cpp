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

// Command-line front end. Every command reads its inputs from flags,
// writes its primary artifact to --out (stdout when omitted), and drops a
// <out>.manifest.json next to each file output so a run can be traced
// back to its exact configuration. All randomness flows from --seed.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pulsekit/analysis.hpp"
#include "pulsekit/device.hpp"
#include "pulsekit/errors.hpp"
#include "pulsekit/noise.hpp"
#include "pulsekit/pulse_shapes.hpp"
#include "pulsekit/serialization.hpp"
#include "pulsekit/simulator.hpp"
#include "pulsekit/transforms.hpp"
#include "pulsekit/vqe.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct CommonFlags {
  std::string device;
  std::string noise = "none";
  std::uint64_t seed = 0;
  int shots = 1024;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--device", flags->device,
                  "Device description (path or inline JSON); defaults to "
                  "$PULSE_DEVICE_PATH, then the shipped two-qubit device");
  cmd->add_option("--noise", flags->noise,
                  "Noise config (path, inline JSON, or \"none\")");
  cmd->add_option("--seed", flags->seed, "Seed for all randomness");
  cmd->add_option("--shots", flags->shots, "Shots / jitter draws")
      ->default_val(1024);
}

std::string resolved_device(const CommonFlags& flags) {
  if (!flags.device.empty()) return flags.device;
  if (const char* env = std::getenv("PULSE_DEVICE_PATH")) {
    if (*env != '\0') return env;
  }
  return std::string(PULSEKIT_DATA_DIR) + "/devices/two_qubit.json";
}

pulsekit::NoiseConfig resolved_noise(const CommonFlags& flags) {
  pulsekit::NoiseConfig cfg = pulsekit::load_noise(flags.noise);
  cfg.seed = flags.seed;
  return cfg;
}

// Emits `text` to the path or stdout, and a manifest beside file outputs.
void deliver(const std::string& out_path, const std::string& text,
             const std::string& command, const CommonFlags& flags,
             const std::string& device_text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  pulsekit::write_text_file(out_path, text);
  nlohmann::ordered_json manifest;
  manifest["command"] = command;
  manifest["tool_version"] = kToolVersion;
  manifest["device"] = device_text;
  manifest["noise"] = flags.noise;
  manifest["seed"] = flags.seed;
  manifest["shots"] = flags.shots;
  manifest["outputs"] = nlohmann::ordered_json::array({out_path});
  pulsekit::write_text_file(out_path + ".manifest.json",
                            manifest.dump(2) + "\n");
}

std::vector<double> default_rabi_sweep() {
  std::vector<double> sweep;
  for (double a = 0.05; a <= 0.5; a += 0.025) sweep.push_back(a);
  return sweep;
}

std::string molecule_text(const std::string& molecule) {
  if (molecule == "h2") {
    return std::string(PULSEKIT_DATA_DIR) + "/molecules/h2_0p735.json";
  }
  if (molecule == "hehp") {
    return std::string(PULSEKIT_DATA_DIR) + "/molecules/hehp_1p0.json";
  }
  return molecule;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulse-level quantum program toolkit"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Dump a pulse envelope as CSV");
  std::string sample_kind = "gaussian";
  int sample_duration = 160;
  double sample_amp = 1.0, sample_angle = 0.0, sample_sigma = 40.0;
  double sample_beta = 0.0, sample_width = 80.0;
  std::string sample_out;
  sample->add_option("--kind", sample_kind,
                     "drag | gaussian | square | gaussian_square");
  sample->add_option("--duration", sample_duration, "Samples");
  sample->add_option("--amp", sample_amp, "Amplitude in [0, 1]");
  sample->add_option("--angle", sample_angle, "Phase angle, radians");
  sample->add_option("--sigma", sample_sigma, "Gaussian width, samples");
  sample->add_option("--beta", sample_beta, "Derivative weight (drag)");
  sample->add_option("--width", sample_width,
                     "Flat-top length (gaussian_square)");
  sample->add_option("--out", sample_out, "Output CSV path");

  // reverse
  auto* reverse = app.add_subcommand("reverse", "Time-reverse a schedule");
  std::string reverse_in, reverse_out;
  reverse->add_option("--in", reverse_in, "Schedule JSON (path or inline)")
      ->required();
  reverse->add_option("--out", reverse_out, "Output JSON path");

  // estimate
  auto* estimate =
      app.add_subcommand("estimate", "Return probability of schedule + "
                                     "reversed schedule");
  CommonFlags estimate_flags;
  std::string estimate_schedule, estimate_out, estimate_dump;
  std::string estimate_mode = "statevector";
  add_common(estimate, &estimate_flags);
  estimate->add_option("--schedule", estimate_schedule,
                       "Schedule JSON (path or inline)")
      ->required();
  estimate->add_option("--mode", estimate_mode, "statevector | shots")
      ->check(CLI::IsMember({"statevector", "shots"}));
  estimate->add_option("--dump-state", estimate_dump,
                       "Also write the schedule's noiseless final state as "
                       "CSV (index, re, im)");
  estimate->add_option("--out", estimate_out, "Output JSON path");

  // rb
  auto* rb = app.add_subcommand("rb", "Randomized benchmarking of a pulse "
                                      "family");
  CommonFlags rb_flags;
  std::string rb_family = "drag";
  std::vector<int> rb_sizes;
  int rb_reps = 10;
  std::string rb_out;
  add_common(rb, &rb_flags);
  rb->add_option("--family", rb_family,
                 "drag | gaussian | square | gaussian_square | rx");
  rb->add_option("--sizes", rb_sizes, "Sequence lengths, e.g. 10,20,30")
      ->delimiter(',')
      ->required();
  rb->add_option("--reps", rb_reps, "Random sequences per length")
      ->default_val(10);
  rb->add_option("--out", rb_out, "Output CSV path");

  // crtomo
  auto* crtomo = app.add_subcommand(
      "crtomo", "Conditional-drive Hamiltonian tomography");
  CommonFlags crtomo_flags;
  int crtomo_coupling = 0;
  double crtomo_amp = 0.8;
  int crtomo_dmin = 10, crtomo_dmax = 400, crtomo_dstep = 10;
  std::string crtomo_out, crtomo_fit_out;
  add_common(crtomo, &crtomo_flags);
  crtomo->add_option("--coupling", crtomo_coupling, "Coupling index");
  crtomo->add_option("--amp", crtomo_amp, "Flat drive amplitude");
  crtomo->add_option("--dmin", crtomo_dmin, "Shortest duration, samples");
  crtomo->add_option("--dmax", crtomo_dmax, "Longest duration, samples");
  crtomo->add_option("--dstep", crtomo_dstep, "Duration step, samples");
  crtomo->add_option("--out", crtomo_out, "Output CSV path");
  crtomo->add_option("--fit-out", crtomo_fit_out,
                     "Fitted coefficients JSON path");

  // vqe
  auto* vqe = app.add_subcommand("vqe", "Variational ground-state search");
  CommonFlags vqe_flags;
  std::string vqe_molecule = "h2";
  int vqe_layers = 1, vqe_max_iters = 500;
  bool vqe_zne = false;
  std::string vqe_mode = "statevector";
  std::string vqe_out;
  add_common(vqe, &vqe_flags);
  vqe->add_option("--molecule", vqe_molecule,
                  "h2 | hehp | Hamiltonian JSON (path or inline)");
  vqe->add_option("--layers", vqe_layers, "Ansatz layers")->default_val(1);
  vqe->add_option("--max-iters", vqe_max_iters, "Optimizer iteration budget")
      ->default_val(500);
  vqe->add_flag("--zne", vqe_zne,
                "Extrapolate each energy from fold scales 1 and 3");
  vqe->add_option("--mode", vqe_mode, "statevector | shots")
      ->check(CLI::IsMember({"statevector", "shots"}));
  vqe->add_option("--out", vqe_out, "Output JSON path");

  // zne-demo
  auto* zne_demo = app.add_subcommand(
      "zne-demo", "Two-point linear extrapolation to zero noise");
  double zne_e1 = 0.0, zne_e3 = 0.0;
  zne_demo->add_option("--e1", zne_e1, "Energy at fold scale 1")->required();
  zne_demo->add_option("--e3", zne_e3, "Energy at fold scale 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) {
      pulsekit::PulseShape shape;
      shape.kind = pulsekit::shape_kind_from_name(sample_kind);
      shape.duration = sample_duration;
      shape.amp = sample_amp;
      shape.angle = sample_angle;
      shape.sigma = sample_sigma;
      shape.beta = sample_beta;
      shape.width = sample_width;
      pulsekit::validate(shape);
      deliver(sample_out, pulsekit::envelope_csv(shape), "sample",
              CommonFlags{}, "");
    } else if (reverse->parsed()) {
      const pulsekit::Schedule s = pulsekit::schedule_from_json(
          pulsekit::parse_json_text_or_file(reverse_in));
      const pulsekit::Schedule r = pulsekit::reverse_schedule(s);
      deliver(reverse_out, pulsekit::dump_schedule(r) + "\n", "reverse",
              CommonFlags{}, "");
    } else if (estimate->parsed()) {
      const std::string device_text = resolved_device(estimate_flags);
      const pulsekit::DeviceModel device = pulsekit::load_device(device_text);
      const pulsekit::Schedule s = pulsekit::schedule_from_json(
          pulsekit::parse_json_text_or_file(estimate_schedule));
      pulsekit::SimOptions options;
      options.shots = estimate_flags.shots;
      options.seed = estimate_flags.seed;
      options.mode = estimate_mode == "shots" ? pulsekit::SimMode::kShots
                                              : pulsekit::SimMode::kStatevector;
      const double fidelity = pulsekit::estimate_fidelity(
          s, device, resolved_noise(estimate_flags), options);
      if (!estimate_dump.empty()) {
        const pulsekit::QuantumState state = pulsekit::evolve(
            s, device, pulsekit::QuantumState::ground(device.n_qubits()),
            options);
        std::string csv = "index,re,im\n";
        for (int i = 0; i < state.amplitudes.size(); ++i) {
          csv += std::to_string(i) + ',' +
                 pulsekit::format_double(state.amplitudes(i).real()) + ',' +
                 pulsekit::format_double(state.amplitudes(i).imag()) + '\n';
        }
        pulsekit::write_text_file(estimate_dump, csv);
      }
      nlohmann::ordered_json out;
      out["fidelity"] = fidelity;
      deliver(estimate_out, out.dump(2) + "\n", "estimate", estimate_flags,
              device_text);
    } else if (rb->parsed()) {
      const std::string device_text = resolved_device(rb_flags);
      pulsekit::DeviceModel device = pulsekit::load_device(device_text);
      pulsekit::PulseFamily family;
      if (rb_family == "rx") {
        family = pulsekit::PulseFamily::rx();
        pulsekit::rabi_calibrate(device, 0,
                                 pulsekit::PulseFamily::shape(
                                     pulsekit::ShapeKind::kDrag),
                                 default_rabi_sweep());
      } else {
        family = pulsekit::PulseFamily::shape(
            pulsekit::shape_kind_from_name(rb_family));
      }
      pulsekit::SimOptions options;
      options.shots = rb_flags.shots;
      options.seed = rb_flags.seed;
      const pulsekit::RbCurve curve = pulsekit::rb_run(
          device, family, rb_sizes, rb_reps, resolved_noise(rb_flags),
          options);
      deliver(rb_out, pulsekit::rb_csv(curve), "rb", rb_flags, device_text);
      if (!rb_out.empty()) {
        std::cout << "family " << curve.family << " slope "
                  << pulsekit::format_double(curve.slope) << "\n";
      }
    } else if (crtomo->parsed()) {
      const std::string device_text = resolved_device(crtomo_flags);
      const pulsekit::DeviceModel device = pulsekit::load_device(device_text);
      if (crtomo_dstep < 1) {
        throw pulsekit::ParameterError("duration step must be positive");
      }
      std::vector<int> durations;
      for (int d = crtomo_dmin; d <= crtomo_dmax; d += crtomo_dstep) {
        durations.push_back(d);
      }
      pulsekit::SimOptions options;
      options.shots = crtomo_flags.shots;
      options.seed = crtomo_flags.seed;
      const pulsekit::CrTomographyResult result = pulsekit::cr_tomography(
          device, crtomo_coupling, crtomo_amp, durations, options);
      deliver(crtomo_out, pulsekit::tomography_csv(result), "crtomo",
              crtomo_flags, device_text);
      nlohmann::ordered_json fit;
      fit["a_x"] = result.a_x;
      fit["a_y"] = result.a_y;
      fit["a_z"] = result.a_z;
      fit["b_x"] = result.b_x;
      fit["b_y"] = result.b_y;
      fit["b_z"] = result.b_z;
      fit["residual"] =
          nlohmann::ordered_json::array({result.residual[0],
                                         result.residual[1]});
      if (!crtomo_fit_out.empty()) {
        pulsekit::write_text_file(crtomo_fit_out, fit.dump(2) + "\n");
      } else if (!crtomo_out.empty()) {
        std::cout << fit.dump(2) << "\n";
      }
    } else if (vqe->parsed()) {
      const std::string device_text = resolved_device(vqe_flags);
      pulsekit::DeviceModel device = pulsekit::load_device(device_text);
      for (int q = 0; q < device.n_qubits(); ++q) {
        pulsekit::rabi_calibrate(device, q,
                                 pulsekit::PulseFamily::shape(
                                     pulsekit::ShapeKind::kDrag),
                                 default_rabi_sweep());
      }
      const pulsekit::PauliHamiltonian h =
          pulsekit::load_hamiltonian(molecule_text(vqe_molecule));
      pulsekit::VqeConfig config;
      for (int q = 0; q < device.n_qubits(); ++q) {
        config.ansatz.qubits.push_back(q);
      }
      config.ansatz.layers = vqe_layers;
      config.shots = vqe_flags.shots;
      config.optimizer.max_iters = vqe_max_iters;
      config.zne = vqe_zne;
      config.noise = resolved_noise(vqe_flags);
      config.seed = vqe_flags.seed;
      config.mode = vqe_mode == "shots" ? pulsekit::SimMode::kShots
                                        : pulsekit::SimMode::kStatevector;
      const pulsekit::VqeResult result =
          pulsekit::optimize(h, device, config);
      const double exact = pulsekit::exact_ground_energy(h);
      nlohmann::ordered_json out;
      out["best_energy"] = result.best_energy;
      out["exact_energy"] = exact;
      out["deviation"] = std::abs(result.best_energy - exact);
      out["zne"] = vqe_zne;
      out["trace"] = nlohmann::ordered_json::array();
      for (const auto& [iter, value] : result.trace) {
        out["trace"].push_back(nlohmann::ordered_json::array({iter, value}));
      }
      deliver(vqe_out, out.dump(2) + "\n", "vqe", vqe_flags, device_text);
    } else if (zne_demo->parsed()) {
      const double value = pulsekit::zne_extrapolate(
          {{1.0, zne_e1}, {3.0, zne_e3}});
      std::cout << pulsekit::format_double(value) << "\n";
    }
  } catch (const pulsekit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
