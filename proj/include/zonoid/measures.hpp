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
/// Discrete even measures on projective space and their dictionary with
/// zonotopes: the cosine transform of the measure attached to K is h_K.

#pragma once

#include <vector>

#include "zonoid/zonotope.hpp"

namespace zonoid {

  /// Weighted atoms on P^{m-1}, each a unit vector whose first significant
  /// coordinate is positive. Weights may be signed (virtual zonotopes).
  class DiscreteEvenMeasure {
   public:
    explicit DiscreteEvenMeasure(int ambient_dim);

    /// Normalizes atoms, flips them into sign-canonical form and merges repeats.
    /// Zero atoms are rejected.
    DiscreteEvenMeasure(int ambient_dim, const std::vector<Vec> &atoms, const std::vector<double> &weights);

    [[nodiscard]] int ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Vec> &atoms() const noexcept { return atoms_; }
    [[nodiscard]] const std::vector<double> &weights() const noexcept { return weights_; }
    [[nodiscard]] double total_mass() const;
    [[nodiscard]] bool nonnegative() const;

   private:
    int dim_;
    std::vector<Vec> atoms_;
    std::vector<double> weights_;
  };

  /// H(mu)(u) = sum_i w_i |<u, a_i>|.
  double cosine_transform_eval(const DiscreteEvenMeasure &mu, const Vec &u);

  /// Atom v / ||v|| with weight ||v|| / 2 per canonical generator; l(K) = 2 mu(P).
  DiscreteEvenMeasure zonotope_to_measure(const Zonotope &K);

  /// Generator 2 w a per atom; weights must be nonnegative.
  Zonotope measure_to_zonotope(const DiscreteEvenMeasure &mu);

  /// Signed measures split into positive and negative parts.
  VirtualZonotope measure_to_virtual(const DiscreteEvenMeasure &mu);

  DiscreteEvenMeasure measure_combination(double alpha, const DiscreteEvenMeasure &mu, double beta, const DiscreteEvenMeasure &nu);

} // namespace zonoid
