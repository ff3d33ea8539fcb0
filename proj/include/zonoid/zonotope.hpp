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
/// Zonotopes K = sum_i 1/2 [-v_i, v_i] stored by their generator lists,
/// Minkowski arithmetic, support functions, length and radius bounds, and
/// formal differences of zonotopes.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "zonoid/error.hpp"

namespace zonoid {

  using Vec = Eigen::VectorXd;
  using Mat = Eigen::MatrixXd;

  /// Marks a zonotope as living in the exterior power Lambda^degree of R^base_dim
  /// (or, with complex set, Lambda_C^degree C^base_dim in interleaved real coordinates).
  struct Grading {
    int base_dim = 1;
    int degree = 1;
    bool complex = false;

    /// Real dimension of the hosting space.
    [[nodiscard]] int hosted_dim() const;

    friend bool operator==(const Grading &, const Grading &) = default;
  };

  /// Closed interval [lo, hi].
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
    [[nodiscard]] double width() const { return hi - lo; }
  };

  /// Centered zonotope sum_i 1/2 [-v_i, v_i]. An empty generator list is {0}.
  class Zonotope {
   public:
    explicit Zonotope(int ambient_dim);
    Zonotope(int ambient_dim, std::vector<Vec> generators);
    Zonotope(Grading grading, std::vector<Vec> generators, bool grassmannian = false);

    /// 1/2 [-v, v].
    static Zonotope segment(const Vec &v);
    /// Unit cube in R^m with generators e_1..e_m, graded as degree 1.
    static Zonotope cube(int m);

    [[nodiscard]] int ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Vec> &generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const std::optional<Grading> &grading() const noexcept { return grading_; }
    /// Every generator is a simple multivector.
    [[nodiscard]] bool grassmannian() const noexcept { return grassmannian_; }

    /// True when the generator list is empty after canonicalization, i.e. K = {0}.
    [[nodiscard]] bool is_zero() const;

    /// Same generators with a grading attached (checked against ambient_dim).
    [[nodiscard]] Zonotope with_grading(const Grading &g) const;

   private:
    int dim_;
    std::vector<Vec> gens_;
    std::optional<Grading> grading_;
    bool grassmannian_ = false;
  };

  inline constexpr double collinear_tolerance = 1e-10;

  /// h_K(u) = 1/2 sum_i |<v_i, u>|.
  double support(const Zonotope &K, const Vec &u);

  Zonotope minkowski_sum(const Zonotope &K, const Zonotope &L);
  Zonotope scale(const Zonotope &K, double lambda);

  /// l(K) = sum_i ||v_i||.
  double length(const Zonotope &K);

  /// M(K) for a matrix with ambient_dim columns.
  Zonotope linear_image(const Mat &M, const Zonotope &K);

  /// Drops zero generators, merges collinear ones, makes the first significant
  /// coordinate of each generator positive and sorts lexicographically.
  Zonotope canonicalize(const Zonotope &K);

  /// Canonical-form comparison; generators match up to sign within tol (relative).
  bool approx_equal(const Zonotope &K, const Zonotope &L, double tol = 1e-9);

  inline constexpr std::size_t max_exact_radius_generators = 22;

  /// max_{x in K} ||x|| by enumeration over sign vectors.
  double radius_exact(const Zonotope &K);

  /// Certified enclosure of the radius: [max(vertex norms found, l / tau_D), l / 2].
  Interval radius_bounds(const Zonotope &K);

  /// Interval containing d_H(K, L), from a net of unit directions with covering radius delta.
  Interval hausdorff_estimate(const Zonotope &K, const Zonotope &L, double delta);

  /// Unit directions covering the sphere up to sign: every unit u is within delta
  /// of +-p for some net point p.
  std::vector<Vec> covering_net(int dim, double delta);

  /// Seeded low-discrepancy unit directions (Kronecker sequence pushed through
  /// the inverse normal CDF, then normalized). Deterministic in (dim, count, seed).
  std::vector<Vec> direction_net(int dim, std::size_t count, std::uint64_t seed = 0);

  /// Formal difference plus - minus.
  struct VirtualZonotope {
    Zonotope plus;
    Zonotope minus;

    VirtualZonotope(Zonotope p, Zonotope m);
    explicit VirtualZonotope(Zonotope p);

    [[nodiscard]] int ambient_dim() const { return plus.ambient_dim(); }
  };

  double virtual_support(const VirtualZonotope &W, const Vec &u);
  VirtualZonotope virtual_add(const VirtualZonotope &A, const VirtualZonotope &B);
  VirtualZonotope virtual_negate(const VirtualZonotope &A);
  double virtual_length(const VirtualZonotope &W);
  /// A == B iff A.plus + B.minus == B.plus + A.minus canonically.
  bool virtual_equal(const VirtualZonotope &A, const VirtualZonotope &B, double tol = 1e-9);

} // namespace zonoid
