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

#ifndef PULSEKIT_OPTIMIZER_HPP_
#define PULSEKIT_OPTIMIZER_HPP_

#include <functional>
#include <utility>
#include <vector>

namespace pulsekit {

struct OptimizerOptions {
  int max_iters = 200;
  double initial_step = 0.25;  // offset of the starting simplex vertices
  // Stop once both the value spread and the simplex extent (relative to
  // the best vertex) fall below this.
  double tolerance = 1e-8;
};

struct OptimizerResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  // (iteration, best value seen) after every iteration, starting with the
  // initial point at iteration 0.
  std::vector<std::pair<int, double>> trace;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free simplex minimization (Nelder-Mead with the standard
// reflection 1, expansion 2, contraction 0.5 and shrink 0.5 moves). Fully
// deterministic: ties are broken by vertex order, so identical inputs
// yield identical traces. Throws ParameterError for an empty start point
// or non-positive max_iters/initial_step.
OptimizerResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, const OptimizerOptions& options);

}  // namespace pulsekit

#endif  // PULSEKIT_OPTIMIZER_HPP_
