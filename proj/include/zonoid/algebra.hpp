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
/// Products of zonotopes (tensor, wedge, multilinear images) and the volume
/// functionals they induce: mixed volumes, intrinsic volumes, projection
/// bodies and Alexandrov-Fenchel gap probes.
///
/// Degree-1 operations accept either a zonotope graded as degree 1 or an
/// ungraded one, which is then read as living in R^{ambient_dim}.

#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "zonoid/zonotope.hpp"

namespace zonoid {

  /// K (x) L: generators v_i (x) w_j flattened row-major, canonicalized.
  Zonotope tensor_product(const Zonotope &K, const Zonotope &L);

  /// (K+ - K-) (x) (L+ - L-), expanded bilinearly.
  VirtualZonotope virtual_tensor(const VirtualZonotope &A, const VirtualZonotope &B);

  /// K ^ L for graded real zonotopes with a common base dimension.
  Zonotope wedge_product(const Zonotope &K, const Zonotope &L);

  /// K_1 ^ ... ^ K_p evaluated left to right.
  Zonotope wedge_chain(std::span<const Zonotope> factors);

  /// K^{^d}: generators d! (v_{i_1} ^ ... ^ v_{i_d}) over d-subsets of generators.
  Zonotope wedge_power(const Zonotope &K, int d);

  /// Degree-1 view of K (grading attached when absent).
  Zonotope as_degree_one(const Zonotope &K);

  /// Unit segment 1/2 [-1, 1] in Lambda^0 R^m, the neutral element of the wedge.
  Zonotope wedge_unit(int m);

  using MultilinearMap = std::function<Vec(std::span<const Vec>)>;

  struct InducedMap {
    Zonotope zonotope;
    /// Largest relative defect seen by the linearity probe.
    double linearity_defect = 0.0;

    [[nodiscard]] bool linear(double tol = 1e-9) const { return linearity_defect <= tol; }
  };

  /// Image of K_1 x ... x K_p under the zonoid map induced by a multilinear map:
  /// generators M(v^1_{i_1}, ..., v^p_{i_p}) over all generator tuples.
  InducedMap induced_map(const MultilinearMap &map, int out_dim, std::span<const Zonotope> factors, std::uint64_t probe_seed = 0);

  /// MV(K_1, ..., K_m) = l(K_1 ^ ... ^ K_m) / m! for m degree-1 zonotopes in R^m.
  double mixed_volume(std::span<const Zonotope> bodies);

  /// vol_m(K) = l(K^{^m}) / m!.
  double volume(const Zonotope &K);

  /// V_d(K) = l(K^{^d}) / d!, 0 <= d <= m.
  double intrinsic_volume(const Zonotope &K, int d);

  /// Generator-wise Hodge star; degree k becomes m - k.
  Zonotope hodge_star_zonoid(const Zonotope &K);

  /// Projection body (2 / (m-1)!) * star(K^{^(m-1)}).
  Zonotope projection_body(const Zonotope &K);

  /// l(K1 ^ K2 ^ C)^2 - l(K1 ^ K1 ^ C) l(K2 ^ K2 ^ C) with C = K3 ^ ... ^ Km.
  double af_gap(const Zonotope &K1, const Zonotope &K2, std::span<const Zonotope> rest);

  /// Same expression with an arbitrary graded middle factor C of degree m - 2.
  /// Exposed as a probe only; no sign is asserted for non-decomposable C.
  double af_gap_with_middle(const Zonotope &K1, const Zonotope &K2, const Zonotope &C);

  /// prod_i V_{d_i}(K_i) - (m! / prod d_i!) MV(K_1[d_1], ..., K_p[d_p]); nonnegative.
  double reverse_af_gap(std::span<const Zonotope> bodies, std::span<const int> degrees);

} // namespace zonoid
