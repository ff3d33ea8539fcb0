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

/// @file
/// Closed-form constants attached to Gaussian zonoids and balls.

#pragma once

namespace zonoid {

  /// tau_m = sqrt(2 pi) E||X|| for a standard Gaussian X in R^m; also l(B^m).
  double tau(int m);

  /// Multivariate gamma pi^{k(k-1)/4} prod_{j=1}^k Gamma(x + (1 - j)/2).
  double multivariate_gamma(int k, double x);
  double log_multivariate_gamma(int k, double x);

  /// E||xi_1 ^ ... ^ xi_k|| for independent standard Gaussians in R^m:
  /// 2^{k/2} Gamma_k((m+1)/2) / Gamma_k(m/2).
  double expected_simple_wedge_norm(int k, int m);

  /// E|det M| for an n x n matrix of i.i.d. standard complex Gaussians
  /// (real and imaginary parts of variance 1/2): prod_j Gamma(j + 1/2) / Gamma(j).
  double complex_gaussian_abs_det(int n);

  /// E|det M| for an n x n matrix of i.i.d. standard real Gaussians: n! vol_n((2 pi)^{-1/2} B^n).
  double real_gaussian_abs_det(int n);

  /// J-volume of the unit ball of C^n: (4 pi)^{n/2} / n! prod_j Gamma(j + 1/2) / Gamma(j).
  double j_volume_ball(int n);

  /// Volume of the unit ball of R^n.
  double unit_ball_volume(int n);

} // namespace zonoid
