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
/// Brute-force oracles for the test suites. Nothing here goes through the
/// exterior-algebra code: determinants come from elimination, volumes from
/// tuple sums or vertex enumeration, expectations from joint enumeration.

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "zonoid/random.hpp"
#include "zonoid/zonotope.hpp"

namespace testkit {

  using zonoid::Mat;
  using zonoid::Vec;
  using zonoid::Zonotope;
  using cld = std::complex<long double>;
  __extension__ typedef __int128 i128;

  /// Joint support cap of the enumeration oracles.
  inline constexpr std::size_t max_joint_support = 10000;

  /// Determinant by Gaussian elimination with partial pivoting in long double.
  long double det(const Mat &A);

  /// Complex determinant, same method.
  cld det(std::vector<cld> a, int n);

  /// Integer determinant by Bareiss fraction-free elimination.
  i128 det_int(std::vector<i128> a, int n);

  /// (1/m!) sum over generator tuples (one per body) of |det|.
  double tuple_mixed_volume(std::span<const Zonotope> bodies);

  /// Same sum in exact integer arithmetic, as a reduced fraction.
  struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Fraction &, const Fraction &) = default;
  };
  Fraction tuple_mixed_volume_rational(std::span<const Zonotope> bodies);

  /// max over all 2^k sign vectors of <sum s_i v_i / 2, u>.
  double support_by_vertices(const Zonotope &K, const Vec &u);

  /// max over all 2^k vertices of ||x||.
  double radius_by_vertices(const Zonotope &K);

  /// All 2^k vertex candidates sum s_i v_i / 2.
  std::vector<Vec> vertex_candidates(const Zonotope &K);

  /// Area of the convex hull of planar points (monotone chain + shoelace).
  double planar_hull_area(std::vector<Vec> pts);

  /// sum_{i<j} |z_i ^_C z_j| for a zonotope in C^2 (interleaved coordinates).
  double j_volume_c2(const Zonotope &P);

  /// Complex n x n matrix from interleaved column data (columns of length 2n).
  std::vector<cld> complex_matrix(const Mat &interleaved_cols, int n);

  /// Joint enumeration over all block atoms. f receives the assembled matrix
  /// (real n x n, or n x n complex stored as 2n x n interleaved columns).
  template <class F> long double enumerate_model(const zonoid::MatrixBlockModel &model, F f);

  /// Random integer zonotope in R^dim with k generators and entries in [lo, hi].
  Zonotope random_integer_zonotope(std::mt19937_64 &rng, int dim, int k, int lo, int hi);

  /// Random zonotope with standard normal generator entries.
  Zonotope random_gaussian_zonotope(std::mt19937_64 &rng, int dim, int k);

  /// Random discrete law with given atom count and positive probabilities.
  zonoid::DiscreteDistribution random_distribution(std::mt19937_64 &rng, int dim, int atoms);

  /// max(|a - b|) <= tol * max(1, |b|).
  bool close(double a, double b, double tol);

  // ---- implementation of the template

  namespace detail {
    void enumerate_rec(const zonoid::MatrixBlockModel &model, std::size_t block, int col, long double prob, Mat &M,
                       const std::function<void(const Mat &, long double)> &visit);
    std::size_t joint_support(const zonoid::MatrixBlockModel &model);
  } // namespace detail

  template <class F> long double enumerate_model(const zonoid::MatrixBlockModel &model, F f) {
    if (detail::joint_support(model) > max_joint_support) throw std::runtime_error("testkit: joint support above cap");
    const int rows = model.field == zonoid::Field::complex ? 2 * model.size : model.size;
    Mat M = Mat::Zero(rows, model.size);
    long double sum = 0.0L;
    detail::enumerate_rec(model, 0, 0, 1.0L, M, [&](const Mat &A, long double p) { sum += p * static_cast<long double>(f(A)); });
    return sum;
  }

} // namespace testkit
