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

#include <random>

#include "doctest.h"
#include "testkit/testkit.hpp"

#include "zonoid/measures.hpp"

using namespace zonoid;

namespace {
  Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
  }
} // namespace

TEST_CASE("measure normalization") {
  const DiscreteEvenMeasure mu(2, {vec({-2, 0}), vec({1, 0}), vec({0, 3})}, {0.5, 0.25, 1.0});
  REQUIRE(mu.atoms().size() == 2);
  CHECK(mu.total_mass() == doctest::Approx(1.75));
  for (const auto &a : mu.atoms()) CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu.nonnegative());
  CHECK_THROWS_AS(DiscreteEvenMeasure(2, {vec({0, 0})}, {1.0}), Error);
  CHECK_THROWS_AS(DiscreteEvenMeasure(2, {vec({1, 0})}, {1.0, 2.0}), Error);
}

TEST_CASE("cosine transform") {
  const DiscreteEvenMeasure e1(2, {vec({1, 0})}, {0.5});
  CHECK(cosine_transform_eval(e1, vec({1, 0})) == 0.5);
  CHECK(cosine_transform_eval(DiscreteEvenMeasure(2), vec({1, 0})) == 0.0);
  CHECK_THROWS_AS(cosine_transform_eval(e1, vec({1, 0, 0})), Error);
  const auto sq = zonotope_to_measure(Zonotope::cube(2));
  for (const auto &u : direction_net(2, 200, 1)) CHECK(cosine_transform_eval(sq, u) == doctest::Approx(support(Zonotope::cube(2), u)).epsilon(1e-12));
  CHECK(sq.total_mass() == doctest::Approx(1.0));
}

TEST_CASE("dictionary") {
  const auto seg = zonotope_to_measure(Zonotope::segment(vec({2, 0})));
  REQUIRE(seg.atoms().size() == 1);
  CHECK(seg.atoms()[0] == vec({1, 0}));
  CHECK(seg.weights()[0] == 1.0);
  const auto K = measure_to_zonotope(DiscreteEvenMeasure(2, {vec({1, 0})}, {0.5}));
  CHECK(approx_equal(K, Zonotope::segment(vec({1, 0})), 0.0));
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    const auto Z = testkit::random_gaussian_zonotope(rng, 2 + t % 3, 1 + t % 6);
    const auto mu = zonotope_to_measure(Z);
    CHECK(length(Z) == doctest::Approx(2 * mu.total_mass()).epsilon(1e-12));
    CHECK(approx_equal(measure_to_zonotope(mu), canonicalize(Z), 1e-12));
    for (const auto &u : direction_net(Z.ambient_dim(), 50, t)) CHECK(cosine_transform_eval(mu, u) == doctest::Approx(support(Z, u)).epsilon(1e-12));
  }
}

TEST_CASE("signed measures and linearity") {
  const DiscreteEvenMeasure mu(2, {vec({1, 0}), vec({0, 1})}, {1.0, -0.5});
  CHECK(!mu.nonnegative());
  CHECK_THROWS_AS(measure_to_zonotope(mu), Error);
  const auto W = measure_to_virtual(mu);
  CHECK(virtual_equal(W, VirtualZonotope(Zonotope::segment(vec({2, 0})), Zonotope::segment(vec({0, 1})))));
  const DiscreteEvenMeasure nu(2, {vec({1, 1}), vec({0, 1})}, {0.3, 0.2});
  const auto c = measure_combination(2.0, mu, -3.0, nu);
  for (const auto &u : direction_net(2, 40, 3))
    CHECK(cosine_transform_eval(c, u) == doctest::Approx(2.0 * cosine_transform_eval(mu, u) - 3.0 * cosine_transform_eval(nu, u)).epsilon(1e-12));
}

TEST_CASE("distinct measures are separated on a net") {
  const DiscreteEvenMeasure a(3, {vec({1, 0, 0}), vec({0, 1, 0})}, {1.0, 1.0});
  const DiscreteEvenMeasure b(3, {vec({1, 0, 0}), vec({0, 1, 0.01})}, {1.0, 1.0});
  double diff = 0;
  for (const auto &u : direction_net(3, 500, 2)) diff = std::max(diff, std::fabs(cosine_transform_eval(a, u) - cosine_transform_eval(b, u)));
  CHECK(diff > 1e-4);
}
