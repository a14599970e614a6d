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

#include "quaketail/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "quaketail/error.hpp"

namespace quaketail::numeric {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  const QuadratureOptions& opts;
  std::size_t intervals = 0;
};

double simpson_recurse(SimpsonState& st, double a, double fa, double b, double fb,
                       double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  ++st.intervals;
  if (depth <= 0 || st.intervals >= st.opts.max_intervals || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(st, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(st, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, opts);
  SimpsonState st{f, opts};
  // A coarse 16-panel pass sets the tolerance scale so that narrow features
  // are not missed by a single initial Simpson estimate.
  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  std::vector<double> xs(2 * kPanels + 1), fs(2 * kPanels + 1);
  for (int i = 0; i <= 2 * kPanels; ++i) {
    xs[i] = (i == 2 * kPanels) ? b : a + 0.5 * h * i;
    fs[i] = f(xs[i]);
  }
  double coarse = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    coarse += (xs[2 * p + 2] - xs[2 * p]) / 6.0 * (fs[2 * p] + 4.0 * fs[2 * p + 1] + fs[2 * p + 2]);
  }
  const double tol = std::max(opts.abs_tol, opts.rel_tol * std::fabs(coarse)) / kPanels;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double pa = xs[2 * p], pm = xs[2 * p + 1], pb = xs[2 * p + 2];
    const double whole = (pb - pa) / 6.0 * (fs[2 * p] + 4.0 * fs[2 * p + 1] + fs[2 * p + 2]);
    total += simpson_recurse(st, pa, fs[2 * p], pb, fs[2 * p + 2], pm, fs[2 * p + 1], whole, tol,
                             opts.max_depth);
  }
  return total;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
              int max_iter) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw DomainError("bisect: root is not bracketed");
  }
  for (int i = 0; i < max_iter && hi - lo > x_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t dim = x0.size();
  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += opts.initial_step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  NelderMeadResult result;
  auto point = [&](const std::vector<double>& centroid, const std::vector<double>& worst,
                   double coef) {
    std::vector<double> p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = centroid[j] + coef * (worst[j] - centroid[j]);
    return p;
  };

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const auto& best = simplex[order.front()];

    double diameter = 0.0;
    double best_norm = 0.0;
    for (std::size_t j = 0; j < dim; ++j) best_norm = std::max(best_norm, std::fabs(best[j]));
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        diameter = std::max(diameter, std::fabs(simplex[order[i]][j] - best[j]));
      }
    }
    if (diameter / (1.0 + best_norm) < opts.rel_diameter_tol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[order[i]][j];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    const std::size_t w = order.back();
    const std::size_t sw = order[dim - 1];
    const double f_best = values[order.front()];

    const auto reflected = point(centroid, simplex[w], -1.0);
    const double f_r = eval(reflected);
    if (f_r < f_best) {
      const auto expanded = point(centroid, simplex[w], -2.0);
      const double f_e = eval(expanded);
      if (f_e < f_r) {
        simplex[w] = expanded;
        values[w] = f_e;
      } else {
        simplex[w] = reflected;
        values[w] = f_r;
      }
      continue;
    }
    if (f_r < values[sw]) {
      simplex[w] = reflected;
      values[w] = f_r;
      continue;
    }
    const bool outside = f_r < values[w];
    const auto contracted = point(centroid, simplex[w], outside ? -0.5 : 0.5);
    const double f_c = eval(contracted);
    if (f_c < (outside ? f_r : values[w])) {
      simplex[w] = contracted;
      values[w] = f_c;
      continue;
    }
    const auto anchor = simplex[order.front()];
    for (std::size_t i = 1; i <= dim; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t j = 0; j < dim; ++j) v[j] = anchor[j] + 0.5 * (v[j] - anchor[j]);
      values[order[i]] = eval(v);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  result.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
  result.value = *best_it;
  result.iterations = iter;
  return result;
}

}  // namespace quaketail::numeric
