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

#include "zonoid/measures.hpp"

#include <algorithm>
#include <cmath>

namespace zonoid {

  namespace {

    constexpr double atom_merge_tolerance = 1e-12;

    Vec sign_canonical_unit(const Vec &v) {
      Vec u = v / v.norm();
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > 1e-12) {
          if (u[i] < 0) u = -u;
          break;
        }
      }
      return u;
    }

  } // namespace

  DiscreteEvenMeasure::DiscreteEvenMeasure(int ambient_dim) : dim_(ambient_dim) {
    require(dim_ >= 1, Errc::invalid_argument, "measure: ambient dimension must be positive");
  }

  DiscreteEvenMeasure::DiscreteEvenMeasure(int ambient_dim, const std::vector<Vec> &atoms, const std::vector<double> &weights) : dim_(ambient_dim) {
    require(dim_ >= 1, Errc::invalid_argument, "measure: ambient dimension must be positive");
    require_same_dim(atoms.size(), weights.size(), "measure: atom and weight counts");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      require_same_dim(static_cast<std::size_t>(atoms[i].size()), static_cast<std::size_t>(dim_), "measure: atom dimension");
      require(std::isfinite(weights[i]) && atoms[i].allFinite(), Errc::invalid_argument, "measure: non-finite entry");
      require(atoms[i].norm() > 0.0, Errc::invalid_argument, "measure: zero atom");
      const Vec a = sign_canonical_unit(atoms[i]);
      auto it = std::find_if(atoms_.begin(), atoms_.end(), [&](const Vec &b) { return (a - b).norm() <= atom_merge_tolerance; });
      if (it == atoms_.end()) {
        atoms_.push_back(a);
        weights_.push_back(weights[i]);
      } else {
        weights_[static_cast<std::size_t>(it - atoms_.begin())] += weights[i];
      }
    }
  }

  double DiscreteEvenMeasure::total_mass() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

  bool DiscreteEvenMeasure::nonnegative() const {
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w >= 0.0; });
  }

  double cosine_transform_eval(const DiscreteEvenMeasure &mu, const Vec &u) {
    require_same_dim(static_cast<std::size_t>(u.size()), static_cast<std::size_t>(mu.ambient_dim()), "cosine_transform_eval: direction dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < mu.atoms().size(); ++i) s += mu.weights()[i] * std::abs(mu.atoms()[i].dot(u));
    return s;
  }

  DiscreteEvenMeasure zonotope_to_measure(const Zonotope &K) {
    const Zonotope c = canonicalize(K);
    std::vector<Vec> atoms;
    std::vector<double> weights;
    for (const auto &g : c.generators()) {
      const double n = g.norm();
      atoms.push_back(g / n);
      weights.push_back(n / 2.0);
    }
    return DiscreteEvenMeasure(K.ambient_dim(), atoms, weights);
  }

  Zonotope measure_to_zonotope(const DiscreteEvenMeasure &mu) {
    require(mu.nonnegative(), Errc::invalid_argument, "measure_to_zonotope: negative weight (use measure_to_virtual)");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < mu.atoms().size(); ++i)
      if (mu.weights()[i] > 0.0) gens.push_back(2.0 * mu.weights()[i] * mu.atoms()[i]);
    return canonicalize(Zonotope(mu.ambient_dim(), std::move(gens)));
  }

  VirtualZonotope measure_to_virtual(const DiscreteEvenMeasure &mu) {
    std::vector<Vec> plus;
    std::vector<Vec> minus;
    for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
      const double w = mu.weights()[i];
      if (w > 0.0) plus.push_back(2.0 * w * mu.atoms()[i]);
      if (w < 0.0) minus.push_back(-2.0 * w * mu.atoms()[i]);
    }
    return {canonicalize(Zonotope(mu.ambient_dim(), std::move(plus))), canonicalize(Zonotope(mu.ambient_dim(), std::move(minus)))};
  }

  DiscreteEvenMeasure measure_combination(double alpha, const DiscreteEvenMeasure &mu, double beta, const DiscreteEvenMeasure &nu) {
    require_same_dim(static_cast<std::size_t>(mu.ambient_dim()), static_cast<std::size_t>(nu.ambient_dim()), "measure_combination: ambient dimension");
    std::vector<Vec> atoms = mu.atoms();
    std::vector<double> weights;
    for (double w : mu.weights()) weights.push_back(alpha * w);
    atoms.insert(atoms.end(), nu.atoms().begin(), nu.atoms().end());
    for (double w : nu.weights()) weights.push_back(beta * w);
    return DiscreteEvenMeasure(mu.ambient_dim(), atoms, weights);
  }

} // namespace zonoid
