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
/// Vitale zonoids of discrete and sampled random vectors, and expected absolute
/// determinants of block-independent random matrices (exact and Monte Carlo).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zonoid/rng.hpp"
#include "zonoid/zonotope.hpp"

namespace zonoid {

  /// Finitely supported law: atoms with probabilities summing to 1 within 1e-12.
  class DiscreteDistribution {
   public:
    DiscreteDistribution(std::vector<Vec> atoms, std::vector<double> probs);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Vec> &atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::vector<double> &probs() const noexcept { return probs_; }
    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }

    /// Atom index drawn by inversion of the cumulative distribution.
    [[nodiscard]] std::size_t draw_index(CounterStream &rng) const;

   private:
    int dim_;
    std::vector<Vec> atoms_;
    std::vector<double> probs_;
    std::vector<double> cumulative_;
  };

  inline constexpr double probability_tolerance = 1e-12;

  enum class SamplerKind {
    gaussian,         ///< i.i.d. N(0, 1) coordinates
    complex_gaussian, ///< i.i.d. N(0, 1/2) coordinates: standard complex Gaussian in interleaved layout
    uniform_sphere,   ///< uniform on the unit sphere
    discrete,         ///< draws from a DiscreteDistribution
    external,         ///< caller-supplied draw function
  };

  using ExternalDraw = std::function<Vec(CounterStream &)>;

  /// Random vector description plus a seed. Identical (sampler, seed) give identical streams.
  struct SeededSampler {
    SamplerKind kind = SamplerKind::gaussian;
    int dim = 1;
    std::uint64_t seed = 0;
    std::optional<DiscreteDistribution> distribution;
    ExternalDraw external;

    static SeededSampler gaussian(int dim, std::uint64_t seed = 0);
    static SeededSampler complex_gaussian(int real_dim, std::uint64_t seed = 0);
    static SeededSampler uniform_sphere(int dim, std::uint64_t seed = 0);
    static SeededSampler discrete(DiscreteDistribution dist, std::uint64_t seed = 0);
    static SeededSampler from_function(int dim, ExternalDraw draw, std::uint64_t seed = 0);

    [[nodiscard]] Vec draw(CounterStream &rng) const;
  };

  /// K(X) for discrete X: generators p_i x_i.
  Zonotope vitale_zonotope(const DiscreteDistribution &dist);

  /// (1/N) sum_k 1/2 [-X_k, X_k] over N draws of the sampler (chunked seeded streams).
  Zonotope empirical_zonotope(const SeededSampler &sampler, std::size_t N);

  /// One column block of a random matrix. A block draw is the concatenation of its
  /// columns (column-major); complex entries are interleaved (re, im).
  struct MatrixBlock {
    int width = 1;
    SeededSampler sampler;
  };

  enum class Field { real, complex };

  /// Square random matrix of the given size split into independent column blocks.
  struct MatrixBlockModel {
    int size = 1;
    Field field = Field::real;
    std::vector<MatrixBlock> blocks;

    /// Widths sum to size and every sampler produces size * width (times 2 if complex) numbers.
    void validate() const;
    [[nodiscard]] bool all_discrete() const;
  };

  /// Builds a model whose blocks all have width 1 (independent columns).
  MatrixBlockModel column_model(int size, Field field, std::vector<SeededSampler> columns);

  /// K(Z_j) for block j: the pushforward of the block law under the (complex) blade map.
  Zonotope block_zonotope(const MatrixBlockModel &model, std::size_t block);

  /// E|det M| = l(K(Z_1) ^ ... ^ K(Z_p)) for all-discrete real models.
  double expected_abs_det_exact(const MatrixBlockModel &model);

  /// Sample mean and standard error of |det M| (N >= 2, Bessel-corrected variance).
  Estimate expected_abs_det_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed);

  /// E|det_C M| = l(K(Z_1) ^_C ... ^_C K(Z_p)) for all-discrete complex models.
  double expected_abs_det_complex_exact(const MatrixBlockModel &model);
  Estimate expected_abs_det_complex_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed);

  /// E|det_C M|^2 via the real embedding: per column z, the 2-vector r(z) ^ r(J z) in
  /// Lambda^2 R^{2n}, then the real wedge-length path. All-discrete complex models.
  double expected_sq_abs_det_complex(const MatrixBlockModel &model);
  Estimate expected_sq_abs_det_complex_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed);

  enum class EvalMode { exact, mc };

  /// t -> (E|det[X^(t)_1 .. X^(t)_d, Y_1 .. Y_{m-d}]|)^{1/d} on a grid, where X^(t) = t eps 2 X1 + (1-t)(1-eps) 2 X2
  /// with eps a fair coin and the Y_i the independent companion columns.
  std::vector<Estimate> bm_concavity_probe(const SeededSampler &X1, const SeededSampler &X2, int d, std::span<const SeededSampler> companions,
                                           std::span<const double> t_grid, EvalMode mode, std::size_t N, std::uint64_t seed);

  /// Law of X^(t) for discrete X1, X2: atoms 2t x with probability p/2 and 2(1-t) y with probability q/2.
  DiscreteDistribution bernoulli_mixture(const DiscreteDistribution &X1, const DiscreteDistribution &X2, double t);

  /// Expected triangle areas E vol_2 Delta(X, Y) = l(K(X) ^ K(Y)) / 2 and the gap
  /// (E Delta(X,Y))^2 - E Delta(X,X') E Delta(Y,Y') (nonnegative).
  struct TriangleAf {
    double xy = 0.0;
    double xx = 0.0;
    double yy = 0.0;
    double gap = 0.0;
  };
  TriangleAf triangle_af_gap(const DiscreteDistribution &X, const DiscreteDistribution &Y);

} // namespace zonoid
