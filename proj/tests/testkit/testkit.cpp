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

#include "testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace testkit {

  long double det(const Mat &A) {
    const int n = static_cast<int>(A.rows());
    std::vector<long double> a(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i * n + j] = A(i, j);
    long double d = 1.0L;
    for (int c = 0; c < n; ++c) {
      int p = c;
      for (int r = c + 1; r < n; ++r)
        if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) p = r;
      if (a[p * n + c] == 0.0L) return 0.0L;
      if (p != c) {
        for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
        d = -d;
      }
      d *= a[c * n + c];
      for (int r = c + 1; r < n; ++r) {
        const long double f = a[r * n + c] / a[c * n + c];
        for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
      }
    }
    return d;
  }

  cld det(std::vector<cld> a, int n) {
    cld d = 1.0L;
    for (int c = 0; c < n; ++c) {
      int p = c;
      for (int r = c + 1; r < n; ++r)
        if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
      if (a[p * n + c] == cld(0)) return cld(0);
      if (p != c) {
        for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
        d = -d;
      }
      d *= a[c * n + c];
      for (int r = c + 1; r < n; ++r) {
        const cld f = a[r * n + c] / a[c * n + c];
        for (int j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
      }
    }
    return d;
  }

  i128 det_int(std::vector<i128> a, int n) {
    if (n == 0) return 1;
    int sign = 1;
    i128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (a[k * n + k] == 0) {
        int p = k + 1;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return 0;
        for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
  }

  namespace {
    template <class Visit> void for_each_tuple(std::span<const Zonotope> bodies, Visit visit) {
      const std::size_t m = bodies.size();
      std::vector<std::size_t> idx(m, 0);
      for (const auto &K : bodies)
        if (K.size() == 0) return;
      while (true) {
        visit(idx);
        std::size_t pos = 0;
        while (pos < m && ++idx[pos] == bodies[pos].size()) idx[pos++] = 0;
        if (pos == m) return;
      }
    }

    std::int64_t factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }
  } // namespace

  double tuple_mixed_volume(std::span<const Zonotope> bodies) {
    const int m = static_cast<int>(bodies.size());
    long double sum = 0.0L;
    Mat A(m, m);
    for_each_tuple(bodies, [&](const std::vector<std::size_t> &idx) {
      for (int j = 0; j < m; ++j) A.col(j) = bodies[j].generators()[idx[j]];
      sum += std::fabs(det(A));
    });
    return static_cast<double>(sum / factorial(m));
  }

  Fraction tuple_mixed_volume_rational(std::span<const Zonotope> bodies) {
    const int m = static_cast<int>(bodies.size());
    i128 sum = 0;
    std::vector<i128> a(static_cast<std::size_t>(m * m));
    for_each_tuple(bodies, [&](const std::vector<std::size_t> &idx) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i * m + j] = static_cast<i128>(std::llround(bodies[j].generators()[idx[j]](i)));
      const i128 d = det_int(a, m);
      sum += d < 0 ? -d : d;
    });
    const std::int64_t den = factorial(m);
    const auto num = static_cast<std::int64_t>(sum);
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
  }

  std::vector<Vec> vertex_candidates(const Zonotope &K) {
    const std::size_t k = K.size();
    if (k > 24) throw std::runtime_error("testkit: too many generators for vertex enumeration");
    std::vector<Vec> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
      Vec x = Vec::Zero(K.ambient_dim());
      for (std::size_t i = 0; i < k; ++i) x += ((s >> i & 1u) ? 0.5 : -0.5) * K.generators()[i];
      out.push_back(x);
    }
    return out;
  }

  double support_by_vertices(const Zonotope &K, const Vec &u) {
    double best = -INFINITY;
    for (const auto &x : vertex_candidates(K)) best = std::max(best, x.dot(u));
    return best;
  }

  double radius_by_vertices(const Zonotope &K) {
    double best = 0.0;
    for (const auto &x : vertex_candidates(K)) best = std::max(best, x.norm());
    return best;
  }

  double planar_hull_area(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec &a, const Vec &b) { return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1)); });
    auto cross = [](const Vec &o, const Vec &a, const Vec &b) { return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0)); };
    std::vector<Vec> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t start = hull.size();
      for (const auto &p : pts) {
        while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    double a = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vec &p = hull[i];
      const Vec &q = hull[(i + 1) % hull.size()];
      a += p(0) * q(1) - p(1) * q(0);
    }
    return std::fabs(a) / 2;
  }

  double j_volume_c2(const Zonotope &P) {
    long double sum = 0.0L;
    const auto &g = P.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const cld z1(g[i](0), g[i](1)), z2(g[i](2), g[i](3));
        const cld w1(g[j](0), g[j](1)), w2(g[j](2), g[j](3));
        sum += std::abs(z1 * w2 - z2 * w1);
      }
    return static_cast<double>(sum);
  }

  std::vector<cld> complex_matrix(const Mat &cols, int n) {
    std::vector<cld> a(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i * n + j] = cld(cols(2 * i, j), cols(2 * i + 1, j));
    return a;
  }

  namespace detail {
    std::size_t joint_support(const zonoid::MatrixBlockModel &model) {
      std::size_t n = 1;
      for (const auto &b : model.blocks) {
        if (!b.sampler.distribution) throw std::runtime_error("testkit: enumeration needs discrete blocks");
        n *= b.sampler.distribution->size();
        if (n > max_joint_support) return n;
      }
      return n;
    }

    void enumerate_rec(const zonoid::MatrixBlockModel &model, std::size_t block, int col, long double prob, Mat &M,
                       const std::function<void(const Mat &, long double)> &visit) {
      if (block == model.blocks.size()) {
        visit(M, prob);
        return;
      }
      const auto &b = model.blocks[block];
      const auto &dist = *b.sampler.distribution;
      const int rows = static_cast<int>(M.rows());
      for (std::size_t a = 0; a < dist.size(); ++a) {
        const Vec &x = dist.atoms()[a];
        for (int c = 0; c < b.width; ++c) M.col(col + c) = x.segment(c * rows, rows);
        enumerate_rec(model, block + 1, col + b.width, prob * dist.probs()[a], M, visit);
      }
    }
  } // namespace detail

  Zonotope random_integer_zonotope(std::mt19937_64 &rng, int dim, int k, int lo, int hi) {
    std::uniform_int_distribution<int> U(lo, hi);
    std::vector<Vec> g;
    for (int i = 0; i < k; ++i) {
      Vec v(dim);
      for (int j = 0; j < dim; ++j) v(j) = U(rng);
      g.push_back(v);
    }
    return Zonotope(dim, g);
  }

  Zonotope random_gaussian_zonotope(std::mt19937_64 &rng, int dim, int k) {
    std::normal_distribution<double> N;
    std::vector<Vec> g;
    for (int i = 0; i < k; ++i) {
      Vec v(dim);
      for (int j = 0; j < dim; ++j) v(j) = N(rng);
      g.push_back(v);
    }
    return Zonotope(dim, g);
  }

  zonoid::DiscreteDistribution random_distribution(std::mt19937_64 &rng, int dim, int atoms) {
    std::normal_distribution<double> N;
    std::uniform_real_distribution<double> W(0.2, 1.0);
    std::vector<Vec> xs;
    std::vector<double> w;
    double total = 0;
    for (int i = 0; i < atoms; ++i) {
      Vec v(dim);
      for (int j = 0; j < dim; ++j) v(j) = N(rng);
      xs.push_back(v);
      w.push_back(W(rng));
      total += w.back();
    }
    for (auto &p : w) p /= total;
    return zonoid::DiscreteDistribution(xs, w);
  }

  bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(b)); }

} // namespace testkit
