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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "testkit/testkit.hpp"

#include "zonoid/algebra.hpp"
#include "zonoid/exterior.hpp"
#include "zonoid/jvolume.hpp"

using namespace zonoid;

namespace {
  constexpr double pi = std::numbers::pi;

  Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
  }

  // Real zonotope in R^n placed in C^n = R^{2n} through the real parts.
  Zonotope realize(const Zonotope &K) {
    const int n = K.ambient_dim();
    std::vector<Vec> g;
    for (const auto &v : K.generators()) {
      Vec w = Vec::Zero(2 * n);
      for (int i = 0; i < n; ++i) w(2 * i) = v(i);
      g.push_back(w);
    }
    return Zonotope(2 * n, g);
  }

  Subspace plane(std::initializer_list<Vec> vs) { return Subspace::span(static_cast<int>(vs.begin()->size()), std::vector<Vec>(vs)); }
} // namespace

TEST_CASE("complex structures") {
  const auto J = ComplexStructure::standard(2);
  CHECK((J.matrix() * J.matrix() + Mat::Identity(4, 4)).norm() == 0.0);
  CHECK((J.matrix() * vec({1, 0, 0, 0}) - vec({0, 1, 0, 0})).norm() == 0.0);
  CHECK_THROWS_AS(ComplexStructure(1, Mat::Identity(2, 2)), Error);
  const Mat R = J.rotation(pi / 2);
  CHECK((R - J.matrix()).norm() < 1e-15);
}

TEST_CASE("subspaces") {
  const auto E = plane({vec({1, 0, 0, 0}), vec({1, 0, 1, 0}), vec({0, 0, 2, 0})});
  CHECK(E.dim() == 2);
  CHECK(E.contains(vec({3, 0, -1, 0})));
  CHECK(!E.contains(vec({0, 1, 0, 0})));
  CHECK(E.complement().cols() == 2);
  CHECK(E.same_as(plane({vec({0, 0, 1, 0}), vec({1, 0, 0, 0})})));
  Mat dep(4, 2);
  dep << 1, 2, 0, 0, 0, 0, 0, 0;
  CHECK_THROWS_AS(Subspace(4, dep), Error);
}

TEST_CASE("sigma^J") {
  // Lagrangian plane R^2 inside C^2
  CHECK(sigma_J(plane({vec({1, 0, 0, 0}), vec({0, 0, 1, 0})})) == doctest::Approx(1.0));
  // complex line C x 0
  CHECK(sigma_J(plane({vec({1, 0, 0, 0}), vec({0, 1, 0, 0})})) == doctest::Approx(0.0));
  std::mt19937_64 rng(31);
  std::normal_distribution<double> N;
  const auto J = ComplexStructure::standard(2);
  for (int t = 0; t < 20; ++t) {
    const Vec a = vec({N(rng), N(rng), N(rng), N(rng)});
    const Vec b = vec({N(rng), N(rng), N(rng), N(rng)});
    const auto E = plane({a, b});
    const double s = sigma_J(E);
    CHECK(s >= -1e-12);
    CHECK(s <= 1 + 1e-12);
    // sigma = |det_C(a, b)|^2 / |a ^ b|^2
    const std::complex<double> a1(a(0), a(1)), a2(a(2), a(3)), b1(b(0), b(1)), b2(b(2), b(3));
    const double area2 = a.squaredNorm() * b.squaredNorm() - a.dot(b) * a.dot(b);
    CHECK(s == doctest::Approx(std::norm(a1 * b2 - a2 * b1) / area2).epsilon(1e-10));
    // invariant under e^{theta J}
    const Mat R = J.rotation(0.7);
    CHECK(sigma_J(plane({R * a, R * b})) == doctest::Approx(s).epsilon(1e-10));
  }
}

TEST_CASE("mixed J-volume of real zonotopes is the mixed volume") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    const auto K1 = testkit::random_gaussian_zonotope(rng, 2, 1 + t % 3);
    const auto K2 = testkit::random_gaussian_zonotope(rng, 2, 2);
    const std::vector<Zonotope> real{K1, K2};
    const std::vector<Zonotope> cx{realize(K1), realize(K2)};
    CHECK(mixed_J_volume(cx) == doctest::Approx(mixed_volume(real)).epsilon(1e-10));
  }
  // two unit squares: 1
  const std::vector<Zonotope> squares{realize(Zonotope::cube(2)), realize(Zonotope::cube(2))};
  CHECK(mixed_J_volume(squares) == doctest::Approx(1.0));
}

TEST_CASE("J-volume of zonotopes") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 15; ++t) {
    const auto P = testkit::random_gaussian_zonotope(rng, 4, 2 + t % 5);
    const double jv = j_volume_zonotope(P);
    CHECK(jv == doctest::Approx(testkit::j_volume_c2(P)).epsilon(1e-10));
    const std::vector<Zonotope> pp{P, P};
    CHECK(jv == doctest::Approx(length(complex_wedge_zonoids(pp)) / 2).epsilon(1e-10));
    const Mat R = ComplexStructure::standard(2).rotation(1.3);
    CHECK(j_volume_zonotope(linear_image(R, P)) == doctest::Approx(jv).epsilon(1e-10));
  }
  CHECK(j_volume_zonotope(realize(Zonotope::cube(2))) == doctest::Approx(1.0));
  // repeated spans are grouped: two generators on one line and one Lagrangian partner
  const Zonotope Q(4, {vec({1, 0, 0, 0}), vec({2, 0, 0, 0}), vec({0, 0, 1, 0})});
  CHECK(j_volume_zonotope(Q) == doctest::Approx(3.0));
}

TEST_CASE("Kazarnovskii pseudovolume") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    const auto P = testkit::random_gaussian_zonotope(rng, 4, 2 + t % 4);
    double oracle = 0;
    const auto &g = P.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const std::complex<double> a1(g[i](0), g[i](1)), a2(g[i](2), g[i](3)), b1(g[j](0), g[j](1)), b2(g[j](2), g[j](3));
        const double area = std::sqrt(g[i].squaredNorm() * g[j].squaredNorm() - std::pow(g[i].dot(g[j]), 2));
        oracle += std::norm(a1 * b2 - a2 * b1) / area;
      }
    CHECK(kazarnovskii_zonotope(P) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(kazarnovskii_zonotope(P) <= j_volume_zonotope(P) + 1e-12);
  }
  CHECK(kazarnovskii_zonotope(realize(Zonotope::cube(2))) == doctest::Approx(1.0));
}

TEST_CASE("discs") {
  std::mt19937_64 rng(35);
  std::normal_distribution<double> N;
  for (int t = 0; t < 5; ++t) {
    const Vec z1 = vec({N(rng), N(rng), N(rng), N(rng)});
    const Vec z2 = vec({N(rng), N(rng), N(rng), N(rng)});
    for (int q = 2; q <= 128; ++q) CHECK(length(disc_zonotope(z1, q)) == doctest::Approx(pi * z1.norm()).epsilon(1e-12));
    const std::vector<Zonotope> discs{disc_zonotope(z1, 64), disc_zonotope(z2, 64)};
    const std::complex<double> a1(z1(0), z1(1)), a2(z1(2), z1(3)), b1(z2(0), z2(1)), b2(z2(2), z2(3));
    CHECK(mixed_J_volume(discs) == doctest::Approx(pi * pi / 2 * std::abs(a1 * b2 - a2 * b1)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(disc_zonotope(vec({1, 0, 0, 0}), 1), Error);
  // in C^1 the disc polygon has perimeter close to 2 pi |z|
  const auto D = disc_zonotope(vec({1, 0}), 256);
  CHECK(volume(Zonotope(2, D.generators())) == doctest::Approx(pi).epsilon(1e-3));
}

TEST_CASE("convex hull volumes") {
  CHECK(convex_hull_volume(std::vector<Vec>{vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({0.5, 0.5})}) == doctest::Approx(1.0));
  std::vector<Vec> cube;
  for (int s = 0; s < 8; ++s) cube.push_back(vec({double(s & 1), double(s >> 1 & 1), double(s >> 2 & 1)}));
  CHECK(convex_hull_volume(cube) == doctest::Approx(1.0));
  CHECK(convex_hull_volume(std::vector<Vec>{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}) == doctest::Approx(1.0 / 6));
  CHECK(convex_hull_volume(std::vector<Vec>{vec({2}), vec({-1}), vec({0.5})}) == doctest::Approx(3.0));
}

TEST_CASE("zonotope faces") {
  std::mt19937_64 rng(36);
  for (int k = 2; k <= 5; ++k) {
    const auto P = testkit::random_gaussian_zonotope(rng, 4, k);
    const auto F = zonotope_face_data(P);
    // general position in R^4: C(k,2) planes, 2(k-2) faces each
    CHECK(F.n_faces.size() == static_cast<std::size_t>(k == 2 ? 1 : k * (k - 1) / 2 * 2 * (k - 2)));
    const auto faces = zonotope_faces(P, 2);
    CHECK(faces.size() == F.n_faces.size());
    for (std::size_t f = 0; f < F.n_faces.size(); ++f) {
      CHECK(face_direction_space(F, f).dim() == 2);
      CHECK(face_volume(F, f) > 0);
    }
    // every vertex is a vertex candidate
    const auto cand = testkit::vertex_candidates(P);
    for (const auto &v : F.vertices) {
      double best = 1e9;
      for (const auto &c : cand) best = std::min(best, (v - c).norm());
      CHECK(best < 1e-12);
    }
  }
  // unit cube in R^4: 24 two-faces, 16 vertices
  const auto C = zonotope_face_data(Zonotope::cube(4));
  CHECK(C.vertices.size() == 16);
  CHECK(C.n_faces.size() == 24);
  CHECK(zonotope_faces(Zonotope::cube(3), 0).size() == 8);
  CHECK(zonotope_faces(Zonotope::cube(3), 1).size() == 12);
  CHECK(zonotope_faces(Zonotope::cube(3), 3).size() == 1);
}

TEST_CASE("normal angles") {
  // two-faces of the 4-cube have quarter-plane normal cones
  const auto C = Zonotope::cube(4);
  const auto F = zonotope_face_data(C);
  const auto e = normal_angle_mc(F, 0, 20000, 1);
  CHECK(std::fabs(e.value - 0.25) <= 4 * e.std_error);
  CHECK(e.samples == 20000);
  const auto again = normal_angle_mc(F, 0, 20000, 1);
  CHECK(again.value == e.value);
  CHECK(again.std_error == e.std_error);
  // facets of a 3-cube: S^0 complement, exactly 1/2
  const auto facets = zonotope_faces(Zonotope::cube(3), 2);
  const auto h = normal_angle_mc(Zonotope::cube(3), facets[0], 100, 0);
  CHECK(h.value == 0.5);
  CHECK(h.std_error == 0.0);
  // the angles of faces sharing a direction space sum to one
  std::mt19937_64 rng(37);
  const auto P = testkit::random_gaussian_zonotope(rng, 4, 4);
  const auto faces = zonotope_faces(P, 2);
  double sum = 0, var = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].span_index != 0) continue;
    const auto a = normal_angle_mc(P, faces[f], 20000, 100 + f);
    sum += a.value;
    var += a.std_error * a.std_error;
  }
  CHECK(std::fabs(sum - 1.0) <= 4 * std::sqrt(var) + 1e-12);
}

TEST_CASE("J-volume through normal angles") {
  std::mt19937_64 rng(38);
  const auto P = testkit::random_gaussian_zonotope(rng, 4, 4);
  const auto F = zonotope_face_data(P);
  const auto e = j_volume_polytope_mc(F, 20000, 5);
  CHECK(std::fabs(e.value - j_volume_zonotope(P)) <= 4 * e.std_error);
  const auto k = kazarnovskii_polytope_mc(F, 20000, 5);
  CHECK(std::fabs(k.value - kazarnovskii_zonotope(P)) <= 4 * k.std_error);
  const auto same = j_volume_polytope_mc(F, 20000, 5);
  CHECK(same.value == e.value);
}
