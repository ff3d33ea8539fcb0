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

#include "zonoid/algebra.hpp"

#include <cmath>

#include "zonoid/exterior.hpp"
#include "zonoid/rng.hpp"

namespace zonoid {

  namespace {

    // Products whose norm is below this fraction of the factor norms are zero.
    constexpr double product_zero_tolerance = 1e-12;

    Multivector to_multivector(const Grading &g, const Vec &v) {
      return Multivector(g.base_dim, g.degree, std::vector<double>(v.data(), v.data() + v.size()));
    }

    Vec to_vec(const Multivector &a) {
      return Eigen::Map<const Vec>(a.coeffs().data(), static_cast<Eigen::Index>(a.size()));
    }

    const Grading &real_grading(const Zonotope &K, const char *op) {
      require(K.grading().has_value(), Errc::invalid_argument, (std::string(op) + ": grading required").c_str());
      require(!K.grading()->complex, Errc::invalid_argument, (std::string(op) + ": real grading required").c_str());
      return *K.grading();
    }

    double factorial(int n) { return std::tgamma(n + 1.0); }

    int common_base_dim(std::span<const Zonotope> bodies) {
      require(!bodies.empty(), Errc::invalid_argument, "expected at least one body");
      const int m = as_degree_one(bodies.front()).grading()->base_dim;
      for (const auto &K : bodies) require_same_dim(static_cast<std::size_t>(as_degree_one(K).grading()->base_dim), static_cast<std::size_t>(m), "base dimension");
      return m;
    }

  } // namespace

  Zonotope as_degree_one(const Zonotope &K) {
    if (!K.grading()) {
      require(K.ambient_dim() <= max_exterior_dim, Errc::too_large, "ambient dimension too large for exterior products");
      return K.with_grading(Grading{K.ambient_dim(), 1, false});
    }
    require(K.grading()->degree == 1 && !K.grading()->complex, Errc::invalid_argument, "expected a real degree-1 zonotope");
    return K;
  }

  Zonotope wedge_unit(int m) { return Zonotope(Grading{m, 0, false}, {Vec::Ones(1)}); }

  Zonotope tensor_product(const Zonotope &K, const Zonotope &L) {
    const int a = K.ambient_dim();
    const int b = L.ambient_dim();
    std::vector<Vec> gens;
    gens.reserve(K.size() * L.size());
    for (const auto &v : K.generators()) {
      for (const auto &w : L.generators()) {
        Vec t(a * b);
        for (int i = 0; i < a; ++i) t.segment(i * b, b) = v[i] * w;
        gens.push_back(std::move(t));
      }
    }
    return canonicalize(Zonotope(a * b, std::move(gens)));
  }

  VirtualZonotope virtual_tensor(const VirtualZonotope &A, const VirtualZonotope &B) {
    return {minkowski_sum(tensor_product(A.plus, B.plus), tensor_product(A.minus, B.minus)),
            minkowski_sum(tensor_product(A.plus, B.minus), tensor_product(A.minus, B.plus))};
  }

  Zonotope wedge_product(const Zonotope &K, const Zonotope &L) {
    const Grading &gk = real_grading(K, "wedge_product");
    const Grading &gl = real_grading(L, "wedge_product");
    require_same_dim(static_cast<std::size_t>(gk.base_dim), static_cast<std::size_t>(gl.base_dim), "wedge_product: base dimension");
    const Grading out{gk.base_dim, gk.degree + gl.degree, false};
    std::vector<Vec> gens;
    if (gk.degree + gl.degree <= gk.base_dim) {
      std::vector<Multivector> right;
      right.reserve(L.size());
      for (const auto &w : L.generators()) right.push_back(to_multivector(gl, w));
      for (const auto &v : K.generators()) {
        const Multivector left = to_multivector(gk, v);
        const double nv = v.norm();
        for (std::size_t j = 0; j < right.size(); ++j) {
          Multivector p = wedge(left, right[j]);
          const double np = norm(p);
          if (np == 0.0 || np <= product_zero_tolerance * nv * L.generators()[j].norm()) continue;
          gens.push_back(to_vec(p));
        }
      }
    }
    return canonicalize(Zonotope(out, std::move(gens), K.grassmannian() && L.grassmannian()));
  }

  Zonotope wedge_chain(std::span<const Zonotope> factors) {
    require(!factors.empty(), Errc::invalid_argument, "wedge_chain: no factors");
    Zonotope acc = factors.front().grading() ? factors.front() : as_degree_one(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) acc = wedge_product(acc, factors[i].grading() ? factors[i] : as_degree_one(factors[i]));
    return acc;
  }

  Zonotope wedge_power(const Zonotope &K, int d) {
    require(d >= 0, Errc::invalid_argument, "wedge_power: negative exponent");
    const Zonotope base = canonicalize(as_degree_one(K));
    const int m = base.grading()->base_dim;
    if (d == 0) return wedge_unit(m);
    const Grading out{m, d, false};
    const std::size_t n = base.size();
    std::vector<Vec> gens;
    if (d <= m && static_cast<std::size_t>(d) <= n) {
      const double weight = factorial(d);
      std::vector<Multivector> vs;
      for (const auto &g : base.generators()) vs.push_back(Multivector::from_vector(g));
      // d-subsets idx[0] < ... < idx[d-1] in lexicographic order
      std::vector<std::size_t> idx(d);
      for (int i = 0; i < d; ++i) idx[i] = i;
      while (true) {
        Multivector acc = vs[idx[0]];
        double scale_acc = base.generators()[idx[0]].norm();
        for (int i = 1; i < d; ++i) {
          acc = wedge(acc, vs[idx[i]]);
          scale_acc *= base.generators()[idx[i]].norm();
        }
        const double na = norm(acc);
        if (na > product_zero_tolerance * scale_acc) gens.push_back(weight * to_vec(acc));
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return canonicalize(Zonotope(out, std::move(gens), true));
  }

  InducedMap induced_map(const MultilinearMap &map, int out_dim, std::span<const Zonotope> factors, std::uint64_t probe_seed) {
    require(out_dim >= 1, Errc::invalid_argument, "induced_map: output dimension must be positive");
    require(!factors.empty(), Errc::invalid_argument, "induced_map: no factors");
    double tuples = 1.0;
    for (const auto &K : factors) tuples *= static_cast<double>(K.size());
    require(tuples <= 5e6, Errc::too_large, "induced_map: too many generator tuples");

    const std::size_t p = factors.size();
    std::vector<Vec> gens;
    std::vector<Vec> args(p);
    std::vector<std::size_t> idx(p, 0);
    const bool any_empty = tuples == 0.0;
    while (!any_empty) {
      for (std::size_t j = 0; j < p; ++j) args[j] = factors[j].generators()[idx[j]];
      Vec out = map(args);
      require_same_dim(static_cast<std::size_t>(out.size()), static_cast<std::size_t>(out_dim), "induced_map: map output dimension");
      gens.push_back(std::move(out));
      std::size_t j = 0;
      while (j < p && ++idx[j] == factors[j].size()) idx[j++] = 0;
      if (j == p) break;
    }

    // Linearity probe in each argument on random vectors.
    CounterStream rng(derive_seed(probe_seed, 0x11));
    double defect = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      for (std::size_t j = 0; j < p; ++j) {
        std::vector<Vec> base(p);
        for (std::size_t i = 0; i < p; ++i) {
          base[i] = Vec(factors[i].ambient_dim());
          for (auto &x : base[i]) x = rng.normal();
        }
        Vec x = base[j];
        Vec y(x.size());
        for (auto &t : y) t = rng.normal();
        const double a = rng.normal();
        const double b = rng.normal();
        auto eval = [&](const Vec &arg) {
          std::vector<Vec> call = base;
          call[j] = arg;
          return map(call);
        };
        const Vec lhs = eval(a * x + b * y);
        const Vec fx = eval(x);
        const Vec fy = eval(y);
        const Vec rhs = a * fx + b * fy;
        const double s = std::abs(a) * fx.norm() + std::abs(b) * fy.norm() + lhs.norm();
        if (s > 0.0) defect = std::max(defect, (lhs - rhs).norm() / s);
      }
    }
    return {canonicalize(Zonotope(out_dim, std::move(gens))), defect};
  }

  double mixed_volume(std::span<const Zonotope> bodies) {
    const int m = common_base_dim(bodies);
    require_same_dim(bodies.size(), static_cast<std::size_t>(m), "mixed_volume: number of bodies must equal the dimension");
    std::vector<Zonotope> ones;
    for (const auto &K : bodies) ones.push_back(as_degree_one(K));
    return length(wedge_chain(ones)) / factorial(m);
  }

  double volume(const Zonotope &K) {
    const int m = as_degree_one(K).grading()->base_dim;
    return length(wedge_power(K, m)) / factorial(m);
  }

  double intrinsic_volume(const Zonotope &K, int d) {
    const int m = as_degree_one(K).grading()->base_dim;
    require(d >= 0 && d <= m, Errc::invalid_argument, "intrinsic_volume: degree out of range");
    return length(wedge_power(K, d)) / factorial(d);
  }

  Zonotope hodge_star_zonoid(const Zonotope &K) {
    const Grading &g = real_grading(K, "hodge_star_zonoid");
    require(g.degree <= g.base_dim, Errc::invalid_argument, "hodge_star_zonoid: degree exceeds base dimension");
    std::vector<Vec> gens;
    gens.reserve(K.size());
    for (const auto &v : K.generators()) gens.push_back(to_vec(hodge_star(to_multivector(g, v))));
    return canonicalize(Zonotope(Grading{g.base_dim, g.base_dim - g.degree, false}, std::move(gens), K.grassmannian()));
  }

  Zonotope projection_body(const Zonotope &K) {
    const Zonotope one = as_degree_one(K);
    const int m = one.grading()->base_dim;
    require(m >= 2, Errc::invalid_argument, "projection_body: dimension must be at least 2");
    return scale(hodge_star_zonoid(wedge_power(one, m - 1)), 2.0 / factorial(m - 1));
  }

  double af_gap_with_middle(const Zonotope &K1, const Zonotope &K2, const Zonotope &C) {
    const Zonotope a = as_degree_one(K1);
    const Zonotope b = as_degree_one(K2);
    const Grading &gc = real_grading(C, "af_gap");
    const int m = a.grading()->base_dim;
    require_same_dim(static_cast<std::size_t>(b.grading()->base_dim), static_cast<std::size_t>(m), "af_gap: base dimension");
    require(gc.base_dim == m && gc.degree == m - 2, Errc::invalid_argument, "af_gap: middle factor must have degree m - 2");
    auto ell = [&](const Zonotope &x, const Zonotope &y) { return length(wedge_product(wedge_product(x, y), C)); };
    const double mixed = ell(a, b);
    return mixed * mixed - ell(a, a) * ell(b, b);
  }

  double af_gap(const Zonotope &K1, const Zonotope &K2, std::span<const Zonotope> rest) {
    const int m = as_degree_one(K1).grading()->base_dim;
    require(m >= 2, Errc::invalid_argument, "af_gap: dimension must be at least 2");
    require_same_dim(rest.size(), static_cast<std::size_t>(m - 2), "af_gap: number of companion bodies");
    Zonotope C = wedge_unit(m);
    for (const auto &K : rest) C = wedge_product(C, as_degree_one(K));
    return af_gap_with_middle(K1, K2, C);
  }

  double reverse_af_gap(std::span<const Zonotope> bodies, std::span<const int> degrees) {
    require_same_dim(bodies.size(), degrees.size(), "reverse_af_gap: degree count");
    const int m = common_base_dim(bodies);
    int total = 0;
    for (int d : degrees) {
      require(d >= 0, Errc::invalid_argument, "reverse_af_gap: negative degree");
      total += d;
    }
    require(total == m, Errc::invalid_argument, "reverse_af_gap: degrees must sum to the dimension");
    double rhs = 1.0;
    double denom = 1.0;
    Zonotope chain = wedge_unit(m);
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      const Zonotope power = wedge_power(bodies[i], degrees[i]);
      rhs *= length(power) / factorial(degrees[i]);
      denom *= factorial(degrees[i]);
      chain = wedge_product(chain, power);
    }
    return rhs - length(chain) / denom;
  }

} // namespace zonoid
