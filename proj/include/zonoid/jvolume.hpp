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
/// Complex structures on R^{2n} = C^n (interleaved coordinates: Re z_1, Im z_1, ...),
/// the complex wedge of zonoids, mixed J-volumes, J-volumes of zonotopes and of
/// polytopes given by their n-faces, and the Kazarnovskii pseudovolume.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zonoid/zonotope.hpp"

namespace zonoid {

  /// Linear J on R^{2n} with J^2 = -1.
  class ComplexStructure {
   public:
    /// Multiplication by i in interleaved coordinates: (x, y) -> (-y, x) per pair.
    static ComplexStructure standard(int complex_dim);

    /// Validates J^2 = -1 to 1e-12.
    ComplexStructure(int complex_dim, Mat J);

    [[nodiscard]] int complex_dim() const noexcept { return n_; }
    [[nodiscard]] const Mat &matrix() const noexcept { return J_; }

    /// e^{theta J} = cos(theta) I + sin(theta) J.
    [[nodiscard]] Mat rotation(double theta) const;

   private:
    int n_;
    Mat J_;
  };

  /// Linear subspace with an orthonormal basis (columns).
  class Subspace {
   public:
    /// Orthonormalizes the columns; rank deficiency is an error.
    Subspace(int ambient_dim, const Mat &basis_columns);

    /// Span of arbitrary vectors; its dimension is the numerical rank.
    static Subspace span(int ambient_dim, std::span<const Vec> vectors);

    [[nodiscard]] int ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(basis_.cols()); }
    [[nodiscard]] const Mat &basis() const noexcept { return basis_; }
    [[nodiscard]] Mat projector() const { return basis_ * basis_.transpose(); }
    /// Orthonormal basis of the orthogonal complement.
    [[nodiscard]] Mat complement() const;

    /// ||v - P v|| <= tol ||v||.
    [[nodiscard]] bool contains(const Vec &v, double tol = 1e-9) const;
    /// Same dimension and mutual containment of bases.
    [[nodiscard]] bool same_as(const Subspace &o, double tol = 1e-9) const;

    /// Projector entries rounded to 8 decimals, row-major.
    [[nodiscard]] std::vector<std::int64_t> key() const;

   private:
    int dim_;
    Mat basis_;
  };

  inline constexpr double subspace_membership_tolerance = 1e-9;

  /// sigma^J(E) = |det[e_1 .. e_n, J e_1 .. J e_n]| for an n-plane E of R^{2n}.
  double sigma_J(const Subspace &E, const ComplexStructure &J);
  double sigma_J(const Subspace &E);

  /// Degree-1 complex grading attached to a zonotope in R^{2n}.
  Zonotope as_complex_degree_one(const Zonotope &K);

  /// K_1 ^_C ... ^_C K_p for complex-graded zonotopes (standard structure).
  Zonotope complex_wedge_zonoids(std::span<const Zonotope> factors);

  /// MV^J(K_1, ..., K_n) = l(K_1 ^_C ... ^_C K_n) / n!.
  double mixed_J_volume(std::span<const Zonotope> bodies);

  /// sum over n-planes E spanned by generators of vol_n(F_P(E)) sigma^J(E)^{1/2}.
  double j_volume_zonotope(const Zonotope &P, const ComplexStructure &J);
  double j_volume_zonotope(const Zonotope &P);

  /// Same traversal with weight sigma^J(E).
  double kazarnovskii_zonotope(const Zonotope &P, const ComplexStructure &J);
  double kazarnovskii_zonotope(const Zonotope &P);

  /// Half-turn polygon approximating the disc D_z: generators (pi/q) e^{theta_j J} z, theta_j = j pi / q.
  Zonotope disc_zonotope(const Vec &z, int q, const ComplexStructure &J);
  Zonotope disc_zonotope(const Vec &z, int q);

  /// Vertices and n-faces (as vertex index lists) of a polytope in R^{2n}.
  struct PolytopeFaceData {
    int ambient_dim = 0;
    std::vector<Vec> vertices;
    std::vector<std::vector<std::size_t>> n_faces;
  };

  /// A face of a zonotope: direction space spanned by generators, and the sign
  /// pattern of the remaining generators (0 for generators inside the span).
  /// Signs index the generators of canonicalize(P).
  struct ZonotopeFace {
    std::size_t span_index = 0;
    Subspace span;
    std::vector<int> signs;
  };

  /// All k-faces of P, grouped by direction space (span_index counts distinct spans).
  std::vector<ZonotopeFace> zonotope_faces(const Zonotope &P, int k);

  /// Face data of a zonotope in R^{2n}: all vertices and all n-faces.
  PolytopeFaceData zonotope_face_data(const Zonotope &P);

  /// Volume of the convex hull of points in R^d (d = point dimension; d = 0 gives 1).
  double convex_hull_volume(std::span<const Vec> points);

  /// Orthonormal basis of the direction space of a face (affine span of its vertices).
  Subspace face_direction_space(const PolytopeFaceData &P, std::size_t face);

  /// vol_k of a face in its own affine span.
  double face_volume(const PolytopeFaceData &P, std::size_t face);

  /// Normal angle by uniform sampling on the unit sphere of E_F^perp. When that
  /// sphere is S^0 the value is exact: hits / 2 over the two antipodes.
  Estimate normal_angle_mc(const PolytopeFaceData &P, std::size_t face, std::size_t samples, std::uint64_t seed);
  Estimate normal_angle_mc(const Zonotope &P, const ZonotopeFace &face, std::size_t samples, std::uint64_t seed);

  /// sum_F vol_n(F) Theta_P(F) sigma^J(E_F)^{1/2} with per-face seeds derived from seed.
  Estimate j_volume_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed, const ComplexStructure &J);
  Estimate j_volume_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed);

  /// sum_F vol_n(F) Theta_P(F) sigma^J(E_F).
  Estimate kazarnovskii_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed, const ComplexStructure &J);
  Estimate kazarnovskii_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed);

} // namespace zonoid
