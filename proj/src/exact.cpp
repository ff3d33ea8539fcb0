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

#include "zonoid/exact.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "zonoid/exterior.hpp"

namespace zonoid::exact {

  namespace {

    std::int64_t factorial(int n) {
      std::int64_t r = 1;
      for (int i = 2; i <= n; ++i) r = detail::checked_mul<std::int64_t>(r, i);
      return r;
    }

    IntegerMultivector to_multivector(const Grading &g, const IntegerVector &v) { return IntegerMultivector(g.base_dim, g.degree, v); }

  } // namespace

  bool is_integral(const Zonotope &K) {
    for (const auto &g : K.generators())
      for (double x : g)
        if (x != std::nearbyint(x) || std::abs(x) > 1e15) return false;
    return true;
  }

  IntegerZonotope from_zonotope(const Zonotope &K) {
    require(is_integral(K), Errc::invalid_argument, "exact mode requires integer generator entries");
    Grading g = K.grading().value_or(Grading{K.ambient_dim(), 1, false});
    require(!g.complex, Errc::invalid_argument, "exact mode supports real zonotopes only");
    IntegerZonotope out{g, {}};
    for (const auto &v : K.generators()) {
      IntegerVector w(v.size());
      for (Eigen::Index i = 0; i < v.size(); ++i) w[i] = static_cast<std::int64_t>(v[i]);
      out.generators.push_back(std::move(w));
    }
    return out;
  }

  IntegerZonotope canonicalize(const IntegerZonotope &K) {
    // primitive direction (first nonzero entry positive) -> accumulated multiplicity
    std::map<IntegerVector, std::int64_t> groups;
    for (const auto &v : K.generators) {
      std::int64_t g = 0;
      for (auto x : v) g = std::gcd(g, x);
      if (g == 0) continue;
      IntegerVector dir(v.size());
      std::int64_t lead = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        dir[i] = v[i] / g;
        if (lead == 0) lead = dir[i];
      }
      if (lead < 0)
        for (auto &x : dir) x = -x;
      auto &mult = groups[dir];
      mult = detail::checked_add(mult, g);
    }
    IntegerZonotope out{K.grading, {}};
    for (const auto &[dir, mult] : groups) {
      IntegerVector w(dir.size());
      for (std::size_t i = 0; i < dir.size(); ++i) w[i] = detail::checked_mul(dir[i], mult);
      out.generators.push_back(std::move(w));
    }
    return out;
  }

  IntegerZonotope wedge_product(const IntegerZonotope &K, const IntegerZonotope &L) {
    require(!K.grading.complex && !L.grading.complex, Errc::invalid_argument, "exact wedge: real gradings required");
    require_same_dim(static_cast<std::size_t>(K.grading.base_dim), static_cast<std::size_t>(L.grading.base_dim), "exact wedge: base dimension");
    IntegerZonotope out{Grading{K.grading.base_dim, K.grading.degree + L.grading.degree, false}, {}};
    if (out.grading.degree > out.grading.base_dim) return out;
    for (const auto &v : K.generators) {
      const auto a = to_multivector(K.grading, v);
      for (const auto &w : L.generators) {
        auto p = wedge(a, to_multivector(L.grading, w));
        if (!p.is_zero()) out.generators.push_back(p.coeff_vector());
      }
    }
    return canonicalize(out);
  }

  IntegerZonotope wedge_power(const IntegerZonotope &K, int d) {
    require(d >= 0, Errc::invalid_argument, "exact wedge_power: negative exponent");
    require(K.grading.degree == 1 && !K.grading.complex, Errc::invalid_argument, "exact wedge_power: degree-1 input required");
    const int m = K.grading.base_dim;
    IntegerZonotope out{Grading{m, d, false}, {}};
    if (d == 0) {
      out.generators.push_back({1});
      return out;
    }
    const auto base = canonicalize(K);
    const std::size_t n = base.generators.size();
    if (d > m || static_cast<std::size_t>(d) > n) return out;
    const std::int64_t weight = factorial(d);
    std::vector<std::size_t> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      auto acc = IntegerMultivector::from_vector(base.generators[idx[0]]);
      for (int i = 1; i < d; ++i) acc = wedge(acc, IntegerMultivector::from_vector(base.generators[idx[i]]));
      if (!acc.is_zero()) out.generators.push_back((acc * weight).coeff_vector());
      int i = d - 1;
      while (i >= 0 && idx[i] == n - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return canonicalize(out);
  }

  std::int64_t top_degree_length(const IntegerZonotope &K) {
    require(K.grading.degree == K.grading.base_dim, Errc::invalid_argument, "exact length is only available in the top degree");
    std::int64_t s = 0;
    for (const auto &v : K.generators) s = detail::checked_add<std::int64_t>(s, v.empty() ? 0 : std::abs(v[0]));
    return s;
  }

  Rational mixed_volume(std::span<const IntegerZonotope> bodies) {
    require(!bodies.empty(), Errc::invalid_argument, "exact mixed_volume: no bodies");
    const int m = bodies.front().grading.base_dim;
    require_same_dim(bodies.size(), static_cast<std::size_t>(m), "exact mixed_volume: number of bodies must equal the dimension");
    IntegerZonotope acc{Grading{m, 0, false}, {{1}}};
    for (const auto &K : bodies) {
      require(K.grading.degree == 1 && K.grading.base_dim == m, Errc::invalid_argument, "exact mixed_volume: degree-1 bodies in a common dimension required");
      acc = wedge_product(acc, K);
    }
    return Rational(top_degree_length(acc), factorial(m));
  }

  Rational volume(const IntegerZonotope &K) {
    const int m = K.grading.base_dim;
    return Rational(top_degree_length(wedge_power(K, m)), factorial(m));
  }

  std::string to_string(const Rational &q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

} // namespace zonoid::exact
