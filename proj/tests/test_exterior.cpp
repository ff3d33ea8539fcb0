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

#include <bit>
#include <random>

#include "doctest.h"
#include "testkit/testkit.hpp"

#include "zonoid/exterior.hpp"

using namespace zonoid;

namespace {

  Multivector random_multivector(std::mt19937_64 &rng, int m, int k) {
    std::normal_distribution<double> N;
    Multivector a(m, k);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = N(rng);
    return a;
  }

  std::vector<Vec> random_vectors(std::mt19937_64 &rng, int m, int k) {
    std::normal_distribution<double> N;
    std::vector<Vec> out;
    for (int i = 0; i < k; ++i) {
      Vec v(m);
      for (int j = 0; j < m; ++j) v(j) = N(rng);
      out.push_back(v);
    }
    return out;
  }

} // namespace

TEST_CASE("binomial and subset ranks") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(30, 15) == 155117520);
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto &masks = subset_masks(m, k);
      REQUIRE(masks.size() == binomial(m, k));
      for (std::size_t i = 0; i < masks.size(); ++i) {
        CHECK(std::popcount(masks[i]) == k);
        CHECK(subset_rank(m, masks[i]) == i);
        if (i > 0) CHECK(masks[i - 1] != masks[i]);
      }
    }
}

TEST_CASE("e1 ^ e2 in R^3") {
  const auto e1 = Multivector::basis(3, {0});
  const auto e2 = Multivector::basis(3, {1});
  const auto w = wedge(e1, e2);
  CHECK(w.degree() == 2);
  CHECK(w == Multivector::basis(3, {0, 1}));
  CHECK(wedge(e2, e1) == -Multivector::basis(3, {0, 1}));
  CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("graded anticommutativity and associativity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 5;
    const int k = trial % 3 + 1, l = (trial / 3) % 3 + 1;
    const auto a = random_multivector(rng, m, k);
    const auto b = random_multivector(rng, m, l);
    const auto c = random_multivector(rng, m, 1);
    const auto ab = wedge(a, b);
    const auto ba = wedge(b, a);
    const double sign = (k * l) % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i] == doctest::Approx(sign * ba[i]).epsilon(1e-12));
    const auto left = wedge(wedge(a, b), c);
    const auto right = wedge(a, wedge(b, c));
    for (std::size_t i = 0; i < left.size(); ++i) CHECK(left[i] == doctest::Approx(right[i]).epsilon(1e-12));
  }
}

TEST_CASE("blade coefficients are the minors") {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 6; ++m)
    for (int k = 1; k <= m; ++k) {
      const auto vs = random_vectors(rng, m, k);
      const auto b = blade_from_vectors<double>(m, vs);
      const auto &masks = subset_masks(m, k);
      for (std::size_t i = 0; i < masks.size(); ++i) {
        Mat minor(k, k);
        int r = 0;
        for (int row = 0; row < m; ++row) {
          if (!(masks[i] >> row & 1u)) continue;
          for (int c = 0; c < k; ++c) minor(r, c) = vs[c](row);
          ++r;
        }
        CHECK(b[i] == doctest::Approx(static_cast<double>(testkit::det(minor))).epsilon(1e-10));
      }
    }
}

TEST_CASE("norm of a blade is the Gram volume") {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 4; ++k) {
    const auto vs = random_vectors(rng, 6, k);
    Mat V(6, k);
    for (int i = 0; i < k; ++i) V.col(i) = vs[i];
    const double gram = std::sqrt(static_cast<double>(testkit::det(V.transpose() * V)));
    CHECK(norm(blade_from_vectors<double>(6, vs)) == doctest::Approx(gram).epsilon(1e-10));
  }
}

TEST_CASE("degree above dimension is zero") {
  std::mt19937_64 rng(7);
  const auto vs = random_vectors(rng, 3, 4);
  CHECK(blade_from_vectors<double>(3, vs).is_zero());
  const auto a = random_multivector(rng, 3, 2);
  CHECK(wedge(a, a).is_zero());
}

TEST_CASE("hodge star") {
  std::mt19937_64 rng(9);
  const int m = 5;
  for (int k = 0; k <= m; ++k) {
    const auto a = random_multivector(rng, m, k);
    const auto b = random_multivector(rng, m, k);
    // a ^ *b = <a, b> vol
    const auto top = wedge(a, hodge_star(b));
    REQUIRE(top.size() == 1);
    CHECK(top[0] == doctest::Approx(inner(a, b)).epsilon(1e-10));
    // ** = (-1)^{k(m-k)}
    const auto ss = hodge_star(hodge_star(a));
    const double sign = (k * (m - k)) % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(ss[i] == doctest::Approx(sign * a[i]));
    CHECK(norm(hodge_star(a)) == doctest::Approx(norm(a)));
  }
  CHECK(hodge_star(Multivector::basis(3, {0})) == Multivector::basis(3, {1, 2}));
}

TEST_CASE("complex wedge matches complex minors; realify is isometric") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> N;
  const int n = 3;
  std::vector<std::vector<std::complex<double>>> cols(2, std::vector<std::complex<double>>(n));
  for (auto &c : cols)
    for (auto &z : c) z = {N(rng), N(rng)};
  ComplexMultivector a(n, 1), b(n, 1);
  for (int i = 0; i < n; ++i) {
    a[i] = cols[0][i];
    b[i] = cols[1][i];
  }
  const auto w = wedge(a, b);
  const auto &masks = subset_masks(n, 2);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    int r[2], t = 0;
    for (int row = 0; row < n; ++row)
      if (masks[i] >> row & 1u) r[t++] = row;
    const auto minor = cols[0][r[0]] * cols[1][r[1]] - cols[0][r[1]] * cols[1][r[0]];
    CHECK(std::abs(w[i] - minor) < 1e-12);
  }
  const auto re = realify(w);
  CHECK(re.size() == 2 * w.size());
  double s = 0;
  for (double x : re) s += x * x;
  CHECK(std::sqrt(s) == doctest::Approx(norm(w)));
  const auto back = complexify(n, 2, re);
  CHECK(back == w);
}

TEST_CASE("exterior errors") {
  const auto e1 = Multivector::basis(3, {0});
  const auto f1 = Multivector::basis(4, {0});
  CHECK_THROWS_AS(wedge(e1, f1), Error);
  CHECK_THROWS_AS(Multivector::basis(3, {0, 0}), Error);
  CHECK_THROWS_AS(Multivector(3, 1, {1.0, 2.0}), Error);
}

TEST_CASE("integer wedge overflow is reported") {
  IntegerMultivector a(2, 1, {std::int64_t{1} << 62, 1});
  IntegerMultivector b(2, 1, {1, std::int64_t{1} << 62});
  try {
    (void)wedge(a, b);
    FAIL("expected overflow");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::too_large);
  }
}
