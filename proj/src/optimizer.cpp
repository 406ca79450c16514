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

#include "pulsekit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pulsekit/errors.hpp"

namespace pulsekit {

namespace {

std::vector<double> blend(const std::vector<double>& a,
                          const std::vector<double>& b, double wa, double wb) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = wa * a[i] + wb * b[i];
  return out;
}

}  // namespace

OptimizerResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, const OptimizerOptions& options) {
  if (start.empty()) throw ParameterError("optimizer start point is empty");
  if (options.max_iters < 1) {
    throw ParameterError("optimizer max_iters must be at least 1");
  }
  if (!(options.initial_step > 0.0)) {
    throw ParameterError("optimizer initial_step must be positive");
  }

  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex;
  simplex.reserve(n + 1);
  simplex.push_back(start);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = start;
    v[i] += options.initial_step;
    simplex.push_back(std::move(v));
  }
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = objective(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return values[a] < values[b];
    });
  };
  sort_simplex();

  OptimizerResult result;
  result.trace.emplace_back(0, values[order[0]]);

  int iter = 0;
  for (; iter < options.max_iters; ++iter) {
    const std::size_t best = order[0];
    const std::size_t second_worst = order[n - 1];
    const std::size_t worst = order[n];
    // A flat value spread alone can be a simplex straddling the optimum
    // symmetrically, so convergence also requires the simplex itself to
    // have collapsed.
    double diameter = 0.0;
    double span = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter,
                            std::abs(simplex[i][k] - simplex[best][k]));
        span = std::max(span, std::abs(simplex[best][k]));
      }
    }
    if (values[worst] - values[best] <=
            options.tolerance * (std::abs(values[best]) + options.tolerance) &&
        diameter <= options.tolerance * (1.0 + span)) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const std::vector<double> reflected =
        blend(centroid, simplex[worst], 2.0, -1.0);
    const double f_reflected = objective(reflected);

    if (f_reflected < values[best]) {
      const std::vector<double> expanded =
          blend(centroid, simplex[worst], 3.0, -2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < values[worst];
      const std::vector<double> contracted =
          outside ? blend(centroid, reflected, 0.5, 0.5)
                  : blend(centroid, simplex[worst], 0.5, 0.5);
      const double f_contracted = objective(contracted);
      const double f_bar = outside ? f_reflected : values[worst];
      if (f_contracted < f_bar) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == order[0]) continue;
          simplex[i] = blend(simplex[order[0]], simplex[i], 0.5, 0.5);
          values[i] = objective(simplex[i]);
        }
      }
    }

    sort_simplex();
    result.trace.emplace_back(iter + 1, values[order[0]]);
  }

  result.iterations = iter;
  result.best_params = simplex[order[0]];
  result.best_value = values[order[0]];
  return result;
}

}  // namespace pulsekit
