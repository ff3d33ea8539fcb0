// Copyright (c) 2026 The zonoid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zonoid/constants.hpp"

#include <cmath>
#include <numbers>

#include "zonoid/error.hpp"

namespace zonoid {

  double tau(int m) {
    require(m >= 1, Errc::invalid_argument, "tau: dimension must be positive");
    const double log_ratio = std::lgamma((m + 1) / 2.0) - std::lgamma(m / 2.0);
    return std::sqrt(2.0 * std::numbers::pi) * std::sqrt(2.0) * std::exp(log_ratio);
  }

  double log_multivariate_gamma(int k, double x) {
    require(k >= 1, Errc::invalid_argument, "multivariate_gamma: k must be positive");
    require(x > (k - 1) / 2.0, Errc::invalid_argument, "multivariate_gamma: requires x > (k - 1) / 2");
    double s = k * (k - 1) / 4.0 * std::log(std::numbers::pi);
    for (int j = 1; j <= k; ++j) s += std::lgamma(x + (1 - j) / 2.0);
    return s;
  }

  double multivariate_gamma(int k, double x) { return std::exp(log_multivariate_gamma(k, x)); }

  double expected_simple_wedge_norm(int k, int m) {
    require(k >= 1 && k <= m, Errc::invalid_argument, "expected_simple_wedge_norm: requires 1 <= k <= m");
    return std::exp(k / 2.0 * std::log(2.0) + log_multivariate_gamma(k, (m + 1) / 2.0) - log_multivariate_gamma(k, m / 2.0));
  }

  double complex_gaussian_abs_det(int n) {
    require(n >= 1, Errc::invalid_argument, "complex_gaussian_abs_det: n must be positive");
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += std::lgamma(j + 0.5) - std::lgamma(static_cast<double>(j));
    return std::exp(s);
  }

  double unit_ball_volume(int n) {
    require(n >= 0, Errc::invalid_argument, "unit_ball_volume: negative dimension");
    return std::exp(n / 2.0 * std::log(std::numbers::pi) - std::lgamma(n / 2.0 + 1.0));
  }

  double real_gaussian_abs_det(int n) {
    require(n >= 1, Errc::invalid_argument, "real_gaussian_abs_det: n must be positive");
    // n! vol_n((2 pi)^{-1/2} B^n)
    return std::exp(std::lgamma(n + 1.0) - n / 2.0 * std::log(2.0 * std::numbers::pi)) * unit_ball_volume(n);
  }

  double j_volume_ball(int n) {
    require(n >= 1, Errc::invalid_argument, "j_volume_ball: n must be positive");
    return std::pow(4.0 * std::numbers::pi, n / 2.0) / std::tgamma(n + 1.0) * complex_gaussian_abs_det(n);
  }

} // namespace zonoid
