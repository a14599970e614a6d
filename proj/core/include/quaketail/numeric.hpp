// Copyright 2026 The quaketail Authors.
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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace quaketail::numeric {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  int max_depth = 48;
  // Hard cap on subintervals; hitting it returns the current estimate.
  std::size_t max_intervals = 200000;
};

// Adaptive Simpson quadrature of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// Root of a function with f(lo), f(hi) of opposite sign (or zero) by
// bisection, stopping when the bracket is narrower than x_tol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol, int max_iter = 200);

struct NelderMeadOptions {
  double initial_step = 0.5;
  // Converged when max vertex distance / (1 + |best|) falls below this.
  double rel_diameter_tol = 1e-9;
  int max_iterations = 10000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free minimisation with the standard reflection (1), expansion
// (2), contraction (1/2) and shrink (1/2) coefficients. Non-finite objective
// values are treated as +infinity.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace quaketail::numeric
