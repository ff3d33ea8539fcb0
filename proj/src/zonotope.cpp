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

#include "zonoid/zonotope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/erf.hpp>

#include "zonoid/constants.hpp"
#include "zonoid/exterior.hpp"
#include "zonoid/rng.hpp"

namespace zonoid {

  int Grading::hosted_dim() const {
    const auto c = static_cast<int>(binomial(base_dim, degree));
    return complex ? 2 * c : c;
  }

  namespace {

    void check_generators(int dim, const std::vector<Vec> &gens) {
      for (const auto &g : gens) {
        require_same_dim(static_cast<std::size_t>(g.size()), static_cast<std::size_t>(dim), "zonotope generator dimension");
        require(g.allFinite(), Errc::invalid_argument, "zonotope: non-finite generator entry");
      }
    }

    // Index of the first coordinate carrying a significant part of the norm.
    Eigen::Index leading_index(const Vec &v) {
      const double cut = 1e-12 * v.norm();
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > cut) return i;
      return 0;
    }

    Vec sign_normalized(const Vec &v) {
      return v[leading_index(v)] < 0 ? Vec(-v) : v;
    }

    bool lex_less(const Vec &a, const Vec &b) {
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
      }
      return false;
    }

    // Sign-invariant sort key for collinearity grouping.
    Vec key_direction(int dim) {
      Vec r(dim);
      for (int i = 0; i < dim; ++i) r[i] = 1.0 + std::fmod(0.7548776662466927 * (i + 1), 1.0) + 0.5 * std::sqrt(static_cast<double>(i + 2));
      return r.normalized();
    }

    std::optional<Grading> merged_grading(const Zonotope &K, const Zonotope &L) {
      const auto &a = K.grading();
      const auto &b = L.grading();
      if (a && b) {
        require(*a == *b, Errc::dimension_mismatch, "grading mismatch");
        return a;
      }
      return a ? a : b;
    }

    Zonotope rebuild(int dim, std::optional<Grading> g, std::vector<Vec> gens, bool grassmannian) {
      if (g) return Zonotope(*g, std::move(gens), grassmannian);
      return Zonotope(dim, std::move(gens));
    }

  } // namespace

  Zonotope::Zonotope(int ambient_dim) : dim_(ambient_dim) {
    require(dim_ >= 1, Errc::invalid_argument, "zonotope: ambient dimension must be positive");
  }

  Zonotope::Zonotope(int ambient_dim, std::vector<Vec> generators) : dim_(ambient_dim), gens_(std::move(generators)) {
    require(dim_ >= 1, Errc::invalid_argument, "zonotope: ambient dimension must be positive");
    check_generators(dim_, gens_);
  }

  Zonotope::Zonotope(Grading grading, std::vector<Vec> generators, bool grassmannian)
      : dim_(grading.hosted_dim()), gens_(std::move(generators)), grading_(grading) {
    require(grading.base_dim >= 1 && grading.base_dim <= max_exterior_dim, Errc::invalid_argument, "grading: base dimension out of range");
    require(grading.degree >= 0, Errc::invalid_argument, "grading: negative degree");
    check_generators(dim_, gens_);
    // vectors of degree 0, 1, m - 1 and m are always simple
    const int k = grading.degree;
    const int m = grading.base_dim;
    grassmannian_ = grassmannian || k <= 1 || (!grading.complex && k >= m - 1) || (grading.complex && k == m);
  }

  Zonotope Zonotope::segment(const Vec &v) { return Zonotope(static_cast<int>(v.size()), {v}); }

  Zonotope Zonotope::cube(int m) {
    std::vector<Vec> gens;
    for (int i = 0; i < m; ++i) gens.push_back(Vec::Unit(m, i));
    return Zonotope(Grading{m, 1, false}, std::move(gens));
  }

  bool Zonotope::is_zero() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Vec &g) { return g.squaredNorm() == 0.0; });
  }

  Zonotope Zonotope::with_grading(const Grading &g) const { return Zonotope(g, gens_, grassmannian_ && grading_ == g); }

  double support(const Zonotope &K, const Vec &u) {
    require_same_dim(static_cast<std::size_t>(u.size()), static_cast<std::size_t>(K.ambient_dim()), "support: direction dimension");
    double s = 0.0;
    for (const auto &g : K.generators()) s += std::abs(g.dot(u));
    return 0.5 * s;
  }

  Zonotope minkowski_sum(const Zonotope &K, const Zonotope &L) {
    require_same_dim(static_cast<std::size_t>(K.ambient_dim()), static_cast<std::size_t>(L.ambient_dim()), "minkowski_sum: ambient dimension");
    auto g = merged_grading(K, L);
    std::vector<Vec> gens = K.generators();
    gens.insert(gens.end(), L.generators().begin(), L.generators().end());
    return canonicalize(rebuild(K.ambient_dim(), g, std::move(gens), K.grassmannian() && L.grassmannian()));
  }

  Zonotope scale(const Zonotope &K, double lambda) {
    require(lambda >= 0.0 && std::isfinite(lambda), Errc::invalid_argument, "scale: factor must be finite and nonnegative");
    std::vector<Vec> gens;
    if (lambda > 0.0)
      for (const auto &g : K.generators()) gens.push_back(lambda * g);
    return rebuild(K.ambient_dim(), K.grading(), std::move(gens), K.grassmannian());
  }

  double length(const Zonotope &K) {
    double s = 0.0;
    for (const auto &g : K.generators()) s += g.norm();
    return s;
  }

  Zonotope linear_image(const Mat &M, const Zonotope &K) {
    require_same_dim(static_cast<std::size_t>(M.cols()), static_cast<std::size_t>(K.ambient_dim()), "linear_image: matrix columns");
    require(M.rows() >= 1, Errc::invalid_argument, "linear_image: empty target space");
    std::vector<Vec> gens;
    gens.reserve(K.size());
    for (const auto &g : K.generators()) gens.push_back(M * g);
    const auto &gr = K.grading();
    if (gr && gr->degree == 1 && !gr->complex && M.rows() <= max_exterior_dim)
      return canonicalize(Zonotope(Grading{static_cast<int>(M.rows()), 1, false}, std::move(gens)));
    return canonicalize(Zonotope(static_cast<int>(M.rows()), std::move(gens)));
  }

  Zonotope canonicalize(const Zonotope &K) {
    const int dim = K.ambient_dim();
    const Vec r = key_direction(dim);

    struct Item {
      double key;
      std::size_t index;
      Vec unit;
    };
    std::vector<Item> items;
    items.reserve(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
      const Vec &g = K.generators()[i];
      const double n = g.norm();
      if (n == 0.0) continue;
      Vec u = g / n;
      items.push_back({std::abs(u.dot(r)), i, std::move(u)});
    }
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) { return a.key < b.key || (a.key == b.key && a.index < b.index); });

    // Collinear generators have keys within ~2 * tolerance of each other, so a
    // backwards window scan over the sorted keys finds every merge partner.
    struct Group {
      double key;
      Vec unit;
      Vec sum;
    };
    std::vector<Group> groups;
    const double window = 4.0 * collinear_tolerance;
    for (auto &it : items) {
      const Vec &g = K.generators()[it.index];
      bool merged = false;
      for (auto gi = groups.rbegin(); gi != groups.rend() && it.key - gi->key <= window; ++gi) {
        const double c = it.unit.dot(gi->unit);
        if ((it.unit - c * gi->unit).norm() <= collinear_tolerance) {
          gi->sum += c >= 0.0 ? g : Vec(-g);
          merged = true;
          break;
        }
      }
      if (!merged) groups.push_back({it.key, it.unit, g});
    }

    std::vector<Vec> gens;
    gens.reserve(groups.size());
    for (auto &grp : groups)
      if (grp.sum.squaredNorm() > 0.0) gens.push_back(sign_normalized(grp.sum));
    std::sort(gens.begin(), gens.end(), lex_less);
    return rebuild(dim, K.grading(), std::move(gens), K.grassmannian());
  }

  bool approx_equal(const Zonotope &K, const Zonotope &L, double tol) {
    if (K.ambient_dim() != L.ambient_dim()) return false;
    const Zonotope a = canonicalize(K);
    const Zonotope b = canonicalize(L);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto &g : a.generators()) {
      bool found = false;
      const double scale_g = std::max(1.0, g.norm());
      for (std::size_t j = 0; j < b.size() && !found; ++j) {
        if (used[j]) continue;
        const Vec &h = b.generators()[j];
        if ((g - h).norm() <= tol * scale_g || (g + h).norm() <= tol * scale_g) {
          used[j] = true;
          found = true;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  double radius_exact(const Zonotope &K) {
    const Zonotope c = canonicalize(K);
    const std::size_t n = c.size();
    require(n <= max_exact_radius_generators, Errc::too_large, "radius_exact: too many generators for sign enumeration");
    if (n == 0) return 0.0;
    // Gray-code walk over sign vectors with the first sign fixed (K = -K).
    Vec x = Vec::Zero(c.ambient_dim());
    for (const auto &g : c.generators()) x += 0.5 * g;
    double best = x.squaredNorm();
    std::vector<int> sign(n, 1);
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
      const int bit = std::countr_zero(i) + 1;
      sign[bit] = -sign[bit];
      x += sign[bit] * c.generators()[bit];
      best = std::max(best, x.squaredNorm());
    }
    return std::sqrt(best);
  }

  Interval radius_bounds(const Zonotope &K) {
    const double ell = length(K);
    if (ell == 0.0) return {0.0, 0.0};
    const int dim = K.ambient_dim();
    double lo = ell / tau(dim);

    std::vector<Vec> starts;
    for (const auto &g : K.generators())
      if (g.squaredNorm() > 0.0) starts.push_back(g.normalized());
    for (auto &u : direction_net(dim, 64, 0)) starts.push_back(std::move(u));

    // Each probe x is a vertex of K, so ||x|| is a certified lower bound.
    for (auto u : starts) {
      for (int iter = 0; iter < 32; ++iter) {
        Vec x = Vec::Zero(dim);
        for (const auto &g : K.generators()) x += (g.dot(u) >= 0.0 ? 0.5 : -0.5) * g;
        const double nx = x.norm();
        lo = std::max(lo, nx);
        if (nx == 0.0) break;
        Vec next = x / nx;
        if ((next - u).norm() < 1e-15) break;
        u = std::move(next);
      }
    }
    return {std::min(lo, ell / 2.0), ell / 2.0};
  }

  namespace {

    double radius_upper(const Zonotope &K) {
      if (canonicalize(K).size() <= 16) return radius_exact(K);
      return length(K) / 2.0;
    }

  } // namespace

  std::vector<Vec> covering_net(int dim, double delta) {
    require(dim >= 1, Errc::invalid_argument, "covering_net: dimension must be positive");
    require(delta > 0.0, Errc::invalid_argument, "covering_net: delta must be positive");
    if (dim == 1) return {Vec::Ones(1)};
    // Grid on the faces x_i = +1 of the cube; radial projection onto the sphere
    // is 1-Lipschitz outside the unit ball, so spacing h gives covering radius
    // (h / 2) sqrt(dim - 1).
    const double h_max = 2.0 * delta / std::sqrt(static_cast<double>(dim - 1));
    auto per_axis = static_cast<std::uint64_t>(std::ceil(2.0 / h_max)) + 1;
    if (per_axis % 2 == 0) ++per_axis;
    double total = static_cast<double>(dim);
    for (int i = 1; i < dim; ++i) total *= static_cast<double>(per_axis);
    require(total <= 2e7, Errc::too_large, "covering_net: too many net points for this delta");
    const double h = 2.0 / static_cast<double>(per_axis - 1);

    std::vector<Vec> net;
    net.reserve(static_cast<std::size_t>(total));
    std::vector<std::uint64_t> idx(dim - 1, 0);
    for (int face = 0; face < dim; ++face) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        Vec p(dim);
        int k = 0;
        for (int i = 0; i < dim; ++i) p[i] = i == face ? 1.0 : -1.0 + h * static_cast<double>(idx[k++]);
        net.push_back(p.normalized());
        int j = 0;
        while (j < dim - 1 && ++idx[j] == per_axis) idx[j++] = 0;
        if (j == dim - 1) break;
      }
    }
    return net;
  }

  std::vector<Vec> direction_net(int dim, std::size_t count, std::uint64_t seed) {
    require(dim >= 1, Errc::invalid_argument, "direction_net: dimension must be positive");
    // generalized golden ratio: root of x^{d+1} = x + 1
    double phi = 2.0;
    for (int i = 0; i < 64; ++i) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    Vec alpha(dim);
    Vec offset(dim);
    CounterStream stream(derive_seed(seed, 0x5eed));
    for (int i = 0; i < dim; ++i) {
      alpha[i] = std::fmod(std::pow(1.0 / phi, i + 1), 1.0);
      offset[i] = stream.uniform();
    }
    std::vector<Vec> net;
    net.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      Vec u(dim);
      for (int i = 0; i < dim; ++i) {
        double p = std::fmod(offset[i] + static_cast<double>(j + 1) * alpha[i], 1.0);
        p = std::clamp(p, 1e-12, 1.0 - 1e-12);
        u[i] = std::sqrt(2.0) * boost::math::erf_inv(2.0 * p - 1.0);
      }
      const double n = u.norm();
      net.push_back(n > 0.0 ? Vec(u / n) : Vec(Vec::Unit(dim, 0)));
    }
    return net;
  }

  Interval hausdorff_estimate(const Zonotope &K, const Zonotope &L, double delta) {
    require_same_dim(static_cast<std::size_t>(K.ambient_dim()), static_cast<std::size_t>(L.ambient_dim()), "hausdorff_estimate: ambient dimension");
    double lo = 0.0;
    for (const auto &u : covering_net(K.ambient_dim(), delta)) lo = std::max(lo, std::abs(support(K, u) - support(L, u)));
    return {lo, lo + (radius_upper(K) + radius_upper(L)) * delta};
  }

  VirtualZonotope::VirtualZonotope(Zonotope p, Zonotope m) : plus(std::move(p)), minus(std::move(m)) {
    require_same_dim(static_cast<std::size_t>(plus.ambient_dim()), static_cast<std::size_t>(minus.ambient_dim()), "virtual zonotope: ambient dimension");
  }

  VirtualZonotope::VirtualZonotope(Zonotope p) : plus(p), minus(Zonotope(p.ambient_dim())) {}

  double virtual_support(const VirtualZonotope &W, const Vec &u) { return support(W.plus, u) - support(W.minus, u); }

  VirtualZonotope virtual_add(const VirtualZonotope &A, const VirtualZonotope &B) {
    return {minkowski_sum(A.plus, B.plus), minkowski_sum(A.minus, B.minus)};
  }

  VirtualZonotope virtual_negate(const VirtualZonotope &A) { return {A.minus, A.plus}; }

  double virtual_length(const VirtualZonotope &W) { return length(W.plus) - length(W.minus); }

  bool virtual_equal(const VirtualZonotope &A, const VirtualZonotope &B, double tol) {
    if (A.ambient_dim() != B.ambient_dim()) return false;
    return approx_equal(minkowski_sum(A.plus, B.minus), minkowski_sum(B.plus, A.minus), tol);
  }

} // namespace zonoid
