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
#include <numeric>
#include <random>

#include "doctest.h"
#include "testkit/testkit.hpp"

#include "zonoid/algebra.hpp"
#include "zonoid/exact.hpp"
#include "zonoid/exterior.hpp"

using namespace zonoid;

namespace {
  Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) v(i++) = x;
    return v;
  }
  Vec unit(int m, int i) {
    Vec v = Vec::Zero(m);
    v(i) = 1;
    return v;
  }
  double binom(int n, int k) { return static_cast<double>(binomial(n, k)); }
} // namespace

TEST_CASE("tensor of segments and length multiplicativity") {
  const auto A = Zonotope::segment(vec({1, 2}));
  const auto B = Zonotope::segment(vec({3, 0, 1}));
  const auto T = tensor_product(A, B);
  REQUIRE(T.ambient_dim() == 6);
  CHECK(approx_equal(T, Zonotope::segment(vec({3, 0, 1, 6, 0, 2}))));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const auto K = testkit::random_gaussian_zonotope(rng, 2 + trial % 3, 1 + trial % 4);
    const auto L = testkit::random_gaussian_zonotope(rng, 2 + trial % 2, 1 + trial % 5);
    const auto KL = tensor_product(K, L);
    CHECK(length(KL) == doctest::Approx(length(K) * length(L)).epsilon(1e-12));
    // ||K (x) L|| <= 2 sqrt(m) ||K|| ||L|| with ||.|| the radius
    const double m = KL.ambient_dim();
    CHECK(radius_bounds(KL).hi <= 2 * std::sqrt(m) * radius_exact(K) * radius_exact(L) + 1e-12);
  }
}

TEST_CASE("virtual tensor is bilinear") {
  const auto A = Zonotope::segment(vec({1, 0}));
  const auto B = Zonotope::segment(vec({0, 1}));
  const VirtualZonotope W(A, B);
  const auto WW = virtual_tensor(W, W);
  // (A - B)(x)(A - B) = A(x)A + B(x)B - A(x)B - B(x)A
  Vec u = vec({1, 1, 1, 1});
  const double expect = support(tensor_product(A, A), u) + support(tensor_product(B, B), u) - support(tensor_product(A, B), u) -
                        support(tensor_product(B, A), u);
  CHECK(virtual_support(WW, u) == doctest::Approx(expect));
}

TEST_CASE("wedge of cubes and degeneracy") {
  for (int m = 2; m <= 6; ++m) {
    const auto C = Zonotope::cube(m);
    for (int d = 0; d <= m; ++d) {
      const auto P = wedge_power(C, d);
      CHECK(length(P) == doctest::Approx(std::tgamma(d + 1.0) * binom(m, d)));
    }
    CHECK(wedge_power(C, m + 1).is_zero());
  }
  const auto seg = Zonotope::segment(vec({1, 2, 3}));
  CHECK(wedge_power(seg, 2).is_zero());
  CHECK(wedge_product(as_degree_one(seg), as_degree_one(seg)).is_zero());
}

TEST_CASE("length is submultiplicative under wedge") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = as_degree_one(testkit::random_gaussian_zonotope(rng, 4, 3));
    const auto L = as_degree_one(testkit::random_gaussian_zonotope(rng, 4, 2));
    CHECK(length(wedge_product(K, L)) <= length(K) * length(L) + 1e-12);
  }
}

TEST_CASE("wedge unit is neutral") {
  std::mt19937_64 rng(23);
  const auto K = as_degree_one(testkit::random_gaussian_zonotope(rng, 3, 4));
  const auto U = wedge_unit(3);
  CHECK(approx_equal(wedge_product(U, K), canonicalize(K)));
}

TEST_CASE("wedge rejects mismatched gradings") {
  CHECK_THROWS_AS(wedge_product(Zonotope::cube(2), Zonotope::cube(3)), Error);
}

TEST_CASE("mixed volume equals the tuple-determinant oracle") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<Zonotope> Ks;
    for (int i = 0; i < m; ++i) Ks.push_back(testkit::random_gaussian_zonotope(rng, m, 1 + (trial + i) % 4));
    CHECK(mixed_volume(Ks) == doctest::Approx(testkit::tuple_mixed_volume(Ks)).epsilon(1e-10));
  }
  // symmetric and multilinear under positive scaling
  std::vector<Zonotope> Ks{testkit::random_gaussian_zonotope(rng, 3, 3), testkit::random_gaussian_zonotope(rng, 3, 2),
                           testkit::random_gaussian_zonotope(rng, 3, 4)};
  const double base = mixed_volume(Ks);
  std::vector<Zonotope> perm{Ks[2], Ks[0], Ks[1]};
  CHECK(mixed_volume(perm) == doctest::Approx(base));
  perm[0] = scale(perm[0], 2.5);
  CHECK(mixed_volume(perm) == doctest::Approx(2.5 * base));
  CHECK_THROWS_AS(mixed_volume(std::vector<Zonotope>{Zonotope::cube(3)}), Error);
}

TEST_CASE("volume of zonotopes") {
  CHECK(volume(Zonotope::cube(3)) == doctest::Approx(1.0));
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const auto K = testkit::random_gaussian_zonotope(rng, 2, 2 + trial % 6);
    CHECK(volume(K) == doctest::Approx(testkit::planar_hull_area(testkit::vertex_candidates(K))).epsilon(1e-10));
  }
}

TEST_CASE("intrinsic volumes of cubes and boxes") {
  for (int m = 2; m <= 6; ++m)
    for (int d = 0; d <= m; ++d) CHECK(intrinsic_volume(Zonotope::cube(m), d) == doctest::Approx(binom(m, d)).epsilon(1e-12));
  // box with sides a, b: V_1 = a + b, V_2 = ab
  const Zonotope box(2, {vec({2, 0}), vec({0, 3})});
  CHECK(intrinsic_volume(box, 1) == doctest::Approx(5.0));
  CHECK(intrinsic_volume(box, 2) == doctest::Approx(6.0));
  CHECK(intrinsic_volume(box, 1) == doctest::Approx(length(box)));
  CHECK_THROWS_AS(intrinsic_volume(box, 3), Error);
}

TEST_CASE("induced maps") {
  std::mt19937_64 rng(26);
  const auto K = testkit::random_gaussian_zonotope(rng, 2, 3);
  const auto L = testkit::random_gaussian_zonotope(rng, 2, 2);
  const std::vector<Zonotope> factors{K, L};
  const MultilinearMap det = [](std::span<const Vec> a) {
    Vec r(1);
    r(0) = a[0](0) * a[1](1) - a[0](1) * a[1](0);
    return r;
  };
  const auto D = induced_map(det, 1, factors);
  CHECK(D.linear());
  CHECK(length(D.zonotope) == doctest::Approx(length(wedge_product(as_degree_one(K), as_degree_one(L)))));
  CHECK(length(D.zonotope) / 2 == doctest::Approx(mixed_volume(factors)));
  const MultilinearMap tensor = [](std::span<const Vec> a) {
    Vec r(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(2 * i + j) = a[0](i) * a[1](j);
    return r;
  };
  CHECK(approx_equal(induced_map(tensor, 4, factors).zonotope, tensor_product(K, L)));
  const MultilinearMap not_linear = [](std::span<const Vec> a) {
    Vec r(1);
    r(0) = a[0](0) * a[0](0) + a[1](1);
    return r;
  };
  CHECK(!induced_map(not_linear, 1, factors).linear());
}

TEST_CASE("hodge star and projection body") {
  const auto C3 = Zonotope::cube(3);
  const auto star = hodge_star_zonoid(wedge_power(C3, 2));
  CHECK(approx_equal(star, Zonotope(3, {2 * unit(3, 0), 2 * unit(3, 1), 2 * unit(3, 2)})));
  CHECK(approx_equal(projection_body(C3), Zonotope(3, {2 * unit(3, 0), 2 * unit(3, 1), 2 * unit(3, 2)})));
  // planar: Pi K is K rotated by a quarter turn and doubled
  const Zonotope K(2, {vec({1, 2}), vec({-1, 0.5})});
  CHECK(approx_equal(projection_body(K), Zonotope(2, {vec({-4, 2}), vec({-1, -2})})));
}

TEST_CASE("projection body support is the shadow volume") {
  std::mt19937_64 rng(27);
  std::normal_distribution<double> N;
  for (int trial = 0; trial < 10; ++trial) {
    const auto K = testkit::random_gaussian_zonotope(rng, 3, 2 + trial % 4);
    const auto PK = projection_body(K);
    for (int t = 0; t < 10; ++t) {
      Vec u = vec({N(rng), N(rng), N(rng)});
      u.normalize();
      Eigen::JacobiSVD<Mat> svd(Mat(u.transpose()), Eigen::ComputeFullV);
      const Mat B = svd.matrixV().rightCols(2);
      std::vector<Vec> shadow;
      for (const auto &x : testkit::vertex_candidates(K)) shadow.push_back(B.transpose() * x);
      CHECK(support(PK, u) == doctest::Approx(testkit::planar_hull_area(shadow)).epsilon(1e-10));
    }
  }
}

TEST_CASE("orthogonality criterion") {
  const int m = 4;
  const auto K = as_degree_one(Zonotope(m, {unit(m, 0), unit(m, 0) + 2 * unit(m, 1)}));
  const auto L = as_degree_one(Zonotope(m, {unit(m, 2), unit(m, 3) - unit(m, 2)}));
  CHECK(wedge_product(K, hodge_star_zonoid(L)).is_zero());
  const auto L2 = as_degree_one(Zonotope(m, {unit(m, 2) + 0.1 * unit(m, 1)}));
  CHECK(!wedge_product(K, hodge_star_zonoid(L2)).is_zero());
  // degree 2 against degree 1
  const auto K2 = wedge_power(K, 2);
  CHECK(wedge_product(K2, hodge_star_zonoid(wedge_power(L, 2))).is_zero());
}

TEST_CASE("Alexandrov-Fenchel and reverse inequality") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K1 = testkit::random_gaussian_zonotope(rng, 3, 3);
    const auto K2 = testkit::random_gaussian_zonotope(rng, 3, 2);
    const auto K3 = testkit::random_gaussian_zonotope(rng, 3, 3);
    const std::vector<Zonotope> rest{K3};
    const double gap = af_gap(K1, K2, rest);
    const double mv12 = testkit::tuple_mixed_volume(std::vector<Zonotope>{K1, K2, K3}) * 6;
    const double mv11 = testkit::tuple_mixed_volume(std::vector<Zonotope>{K1, K1, K3}) * 6;
    const double mv22 = testkit::tuple_mixed_volume(std::vector<Zonotope>{K2, K2, K3}) * 6;
    CHECK(gap == doctest::Approx(mv12 * mv12 - mv11 * mv22).epsilon(1e-9).scale(mv11 * mv22));
    CHECK(gap >= -1e-10 * mv11 * mv22);
  }
  // equality for homothetic bodies
  const auto K = testkit::random_gaussian_zonotope(rng, 3, 4);
  const auto C = testkit::random_gaussian_zonotope(rng, 3, 3);
  const std::vector<Zonotope> rest{C};
  CHECK(std::fabs(af_gap(K, scale(K, 2.0), rest)) <= 1e-9 * std::pow(length(K), 4) * std::pow(length(C), 2));
  // arbitrary middle factor reproduces the decomposable case
  CHECK(af_gap_with_middle(K, C, as_degree_one(C)) == doctest::Approx(af_gap(K, C, rest)));
}

TEST_CASE("reverse AF gap") {
  const int m = 4;
  const auto A = Zonotope(m, {unit(m, 0), unit(m, 1) + unit(m, 0)});
  const auto B = Zonotope(m, {unit(m, 2), unit(m, 3), unit(m, 2) - 2 * unit(m, 3)});
  const std::vector<Zonotope> orth{A, B};
  const std::vector<int> deg{2, 2};
  CHECK(std::fabs(reverse_af_gap(orth, deg)) <= 1e-12);
  std::mt19937_64 rng(29);
  const std::vector<Zonotope> generic{testkit::random_gaussian_zonotope(rng, m, 3), testkit::random_gaussian_zonotope(rng, m, 3)};
  CHECK(reverse_af_gap(generic, deg) > 0);
  const std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(reverse_af_gap(orth, bad), Error);
}

TEST_CASE("exact rational mixed volume") {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<Zonotope> Ks;
    std::vector<exact::IntegerZonotope> Is;
    for (int i = 0; i < m; ++i) {
      Ks.push_back(testkit::random_integer_zonotope(rng, m, 1 + (trial + i) % 5, -3, 3));
      Is.push_back(exact::from_zonotope(Ks.back()));
    }
    const auto q = exact::mixed_volume(Is);
    const auto oracle = testkit::tuple_mixed_volume_rational(Ks);
    CHECK(q.numerator() == oracle.num);
    CHECK(q.denominator() == oracle.den);
  }
  CHECK(exact::to_string(exact::volume(exact::from_zonotope(Zonotope::cube(3)))) == "1");
  CHECK(exact::to_string(exact::Rational(3, 6)) == "1/2");
  CHECK(!exact::is_integral(Zonotope::segment(vec({0.5, 1}))));
  CHECK_THROWS_AS(exact::from_zonotope(Zonotope::segment(vec({0.5, 1}))), Error);
}
