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

#include "zonoid/random.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "zonoid/algebra.hpp"
#include "zonoid/exterior.hpp"
#include "zonoid/jvolume.hpp"

namespace zonoid {

  namespace {

    constexpr std::size_t mc_chunk = 4096;

    /// Running mean and sum of squared deviations (Welford), combinable in a fixed order.
    struct Moments {
      double n = 0.0;
      double mean = 0.0;
      double m2 = 0.0;

      void add(double x) {
        n += 1.0;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
      }

      void merge(const Moments &o) {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double delta = o.mean - mean;
        mean += delta * o.n / total;
        m2 += o.m2 + delta * delta * n * o.n / total;
        n = total;
      }
    };

    /// Draws N matrices chunk by chunk and averages value(M).
    template <class Matrix, class Fill, class Value>
    Estimate chunked_mc(std::size_t N, std::uint64_t seed, Fill &&fill, Value &&value) {
      require(N >= 2, Errc::invalid_argument, "Monte Carlo estimate needs at least two samples");
      Moments total;
      Matrix M;
      for (std::size_t start = 0, chunk = 0; start < N; start += mc_chunk, ++chunk) {
        CounterStream rng(derive_seed(seed, chunk));
        Moments local;
        const std::size_t end = std::min(N, start + mc_chunk);
        for (std::size_t s = start; s < end; ++s) {
          fill(rng, M);
          local.add(value(M));
        }
        total.merge(local);
      }
      const double var = total.m2 / (total.n - 1.0);
      return {total.mean, std::sqrt(var / total.n), N};
    }

    void fill_real(const MatrixBlockModel &model, CounterStream &rng, Mat &M) {
      const int m = model.size;
      M.resize(m, m);
      int col = 0;
      for (const auto &b : model.blocks) {
        const Vec v = b.sampler.draw(rng);
        for (int c = 0; c < b.width; ++c, ++col) M.col(col) = v.segment(c * m, m);
      }
    }

    void fill_complex(const MatrixBlockModel &model, CounterStream &rng, Eigen::MatrixXcd &M) {
      const int n = model.size;
      M.resize(n, n);
      int col = 0;
      for (const auto &b : model.blocks) {
        const Vec v = b.sampler.draw(rng);
        for (int c = 0; c < b.width; ++c, ++col)
          for (int i = 0; i < n; ++i) M(i, col) = {v[2 * (c * n + i)], v[2 * (c * n + i) + 1]};
      }
    }

    void require_field(const MatrixBlockModel &model, Field f, const char *op) {
      model.validate();
      require(model.field == f, Errc::invalid_argument, op);
    }

    const DiscreteDistribution &block_distribution(const MatrixBlock &b) {
      require(b.sampler.kind == SamplerKind::discrete && b.sampler.distribution.has_value(), Errc::precondition,
              "exact evaluation needs discrete blocks");
      return *b.sampler.distribution;
    }

    ComplexMultivector complex_column(int n, const Vec &v, int c) {
      return complexify(n, 1, std::span<const double>(v.data() + 2 * c * n, static_cast<std::size_t>(2 * n)));
    }

    Vec to_vec(std::span<const double> x) { return Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size())); }

    /// Pushforward of a discrete block under the blade map, in Lambda^{2w} R^{2n}, of the realified columns r(z), J r(z).
    Zonotope squared_block_zonotope(const MatrixBlockModel &model, std::size_t j) {
      const auto &b = model.blocks[j];
      const auto &dist = block_distribution(b);
      const int n = model.size;
      const ComplexStructure J = ComplexStructure::standard(n);
      std::vector<Vec> gens;
      for (std::size_t a = 0; a < dist.size(); ++a) {
        std::vector<Vec> cols;
        for (int c = 0; c < b.width; ++c) {
          const Vec r = dist.atoms()[a].segment(2 * c * n, 2 * n);
          cols.push_back(r);
          cols.push_back(J.matrix() * r);
        }
        const Multivector blade = blade_from_vectors<double>(2 * n, cols);
        gens.push_back(dist.probs()[a] * to_vec(blade.coeffs()));
      }
      return canonicalize(Zonotope(Grading{2 * n, 2 * b.width, false}, std::move(gens), true));
    }

  } // namespace

  // ------------------------------------------------------------- distributions

  DiscreteDistribution::DiscreteDistribution(std::vector<Vec> atoms, std::vector<double> probs) : atoms_(std::move(atoms)), probs_(std::move(probs)) {
    require(!atoms_.empty(), Errc::invalid_argument, "distribution: no atoms");
    require_same_dim(atoms_.size(), probs_.size(), "distribution: atom and probability counts");
    dim_ = static_cast<int>(atoms_.front().size());
    require(dim_ >= 1, Errc::invalid_argument, "distribution: atoms must be nonempty vectors");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      require_same_dim(static_cast<std::size_t>(atoms_[i].size()), static_cast<std::size_t>(dim_), "distribution: atom dimension");
      require(atoms_[i].allFinite(), Errc::invalid_argument, "distribution: non-finite atom");
      require(std::isfinite(probs_[i]) && probs_[i] >= 0.0, Errc::invalid_argument, "distribution: probabilities must be nonnegative");
      total += probs_[i];
      cumulative_.push_back(total);
    }
    require(std::abs(total - 1.0) <= probability_tolerance, Errc::invalid_argument, "distribution: probabilities must sum to 1");
  }

  std::size_t DiscreteDistribution::draw_index(CounterStream &rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min(static_cast<std::size_t>(it - cumulative_.begin()), atoms_.size() - 1);
  }

  SeededSampler SeededSampler::gaussian(int dim, std::uint64_t seed) { return {SamplerKind::gaussian, dim, seed, std::nullopt, {}}; }

  SeededSampler SeededSampler::complex_gaussian(int real_dim, std::uint64_t seed) {
    require(real_dim % 2 == 0, Errc::invalid_argument, "complex Gaussian: odd real dimension");
    return {SamplerKind::complex_gaussian, real_dim, seed, std::nullopt, {}};
  }

  SeededSampler SeededSampler::uniform_sphere(int dim, std::uint64_t seed) { return {SamplerKind::uniform_sphere, dim, seed, std::nullopt, {}}; }

  SeededSampler SeededSampler::discrete(DiscreteDistribution dist, std::uint64_t seed) {
    const int d = dist.dim();
    return {SamplerKind::discrete, d, seed, std::move(dist), {}};
  }

  SeededSampler SeededSampler::from_function(int dim, ExternalDraw draw, std::uint64_t seed) {
    require(static_cast<bool>(draw), Errc::invalid_argument, "external sampler: empty draw function");
    return {SamplerKind::external, dim, seed, std::nullopt, std::move(draw)};
  }

  Vec SeededSampler::draw(CounterStream &rng) const {
    Vec v(dim);
    switch (kind) {
      case SamplerKind::gaussian:
        for (int i = 0; i < dim; ++i) v[i] = rng.normal();
        return v;
      case SamplerKind::complex_gaussian:
        for (int i = 0; i < dim; ++i) v[i] = rng.normal() * std::sqrt(0.5);
        return v;
      case SamplerKind::uniform_sphere:
        for (int i = 0; i < dim; ++i) v[i] = rng.normal();
        return v / v.norm();
      case SamplerKind::discrete:
        require(distribution.has_value(), Errc::invalid_argument, "discrete sampler without distribution");
        return distribution->atoms()[distribution->draw_index(rng)];
      case SamplerKind::external: {
        Vec x = external(rng);
        require_same_dim(static_cast<std::size_t>(x.size()), static_cast<std::size_t>(dim), "external sampler: draw dimension");
        return x;
      }
    }
    throw Error(Errc::invalid_argument, "unknown sampler kind");
  }

  Zonotope vitale_zonotope(const DiscreteDistribution &dist) {
    std::vector<Vec> gens;
    gens.reserve(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) gens.push_back(dist.probs()[i] * dist.atoms()[i]);
    return canonicalize(Zonotope(dist.dim(), std::move(gens)));
  }

  Zonotope empirical_zonotope(const SeededSampler &sampler, std::size_t N) {
    require(N >= 1, Errc::invalid_argument, "empirical_zonotope: N must be positive");
    std::vector<Vec> gens;
    gens.reserve(N);
    const double w = 1.0 / static_cast<double>(N);
    for (std::size_t start = 0, chunk = 0; start < N; start += mc_chunk, ++chunk) {
      CounterStream rng(derive_seed(sampler.seed, chunk));
      const std::size_t end = std::min(N, start + mc_chunk);
      for (std::size_t s = start; s < end; ++s) gens.push_back(w * sampler.draw(rng));
    }
    return Zonotope(sampler.dim, std::move(gens));
  }

  // ------------------------------------------------------------- block models

  void MatrixBlockModel::validate() const {
    require(size >= 1, Errc::invalid_argument, "block model: size must be positive");
    require(!blocks.empty(), Errc::invalid_argument, "block model: no blocks");
    int total = 0;
    const int per_entry = field == Field::complex ? 2 : 1;
    for (const auto &b : blocks) {
      require(b.width >= 1, Errc::invalid_argument, "block model: block width must be positive");
      total += b.width;
      require_same_dim(static_cast<std::size_t>(b.sampler.dim), static_cast<std::size_t>(per_entry * size * b.width), "block model: sampler dimension");
    }
    require_same_dim(static_cast<std::size_t>(total), static_cast<std::size_t>(size), "block model: widths must sum to the matrix size");
  }

  bool MatrixBlockModel::all_discrete() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const MatrixBlock &b) { return b.sampler.kind == SamplerKind::discrete; });
  }

  MatrixBlockModel column_model(int size, Field field, std::vector<SeededSampler> columns) {
    MatrixBlockModel model{size, field, {}};
    for (auto &c : columns) model.blocks.push_back({1, std::move(c)});
    model.validate();
    return model;
  }

  Zonotope block_zonotope(const MatrixBlockModel &model, std::size_t block) {
    model.validate();
    require(block < model.blocks.size(), Errc::invalid_argument, "block_zonotope: block index out of range");
    const auto &b = model.blocks[block];
    const auto &dist = block_distribution(b);
    const int n = model.size;
    std::vector<Vec> gens;
    gens.reserve(dist.size());
    if (model.field == Field::real) {
      for (std::size_t a = 0; a < dist.size(); ++a) {
        std::vector<Vec> cols;
        for (int c = 0; c < b.width; ++c) cols.push_back(dist.atoms()[a].segment(c * n, n));
        gens.push_back(dist.probs()[a] * to_vec(blade_from_vectors<double>(n, cols).coeffs()));
      }
      return canonicalize(Zonotope(Grading{n, b.width, false}, std::move(gens), true));
    }
    for (std::size_t a = 0; a < dist.size(); ++a) {
      ComplexMultivector blade(n, 0, {std::complex<double>(1.0, 0.0)});
      for (int c = 0; c < b.width; ++c) blade = wedge(blade, complex_column(n, dist.atoms()[a], c));
      const std::vector<double> r = realify(blade);
      gens.push_back(dist.probs()[a] * to_vec(r));
    }
    return canonicalize(Zonotope(Grading{n, b.width, true}, std::move(gens), true));
  }

  double expected_abs_det_exact(const MatrixBlockModel &model) {
    require_field(model, Field::real, "expected_abs_det_exact: real model required");
    std::vector<Zonotope> factors;
    for (std::size_t j = 0; j < model.blocks.size(); ++j) factors.push_back(block_zonotope(model, j));
    return length(wedge_chain(factors));
  }

  Estimate expected_abs_det_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed) {
    require_field(model, Field::real, "expected_abs_det_mc: real model required");
    return chunked_mc<Mat>(
        N, seed, [&](CounterStream &rng, Mat &M) { fill_real(model, rng, M); }, [](const Mat &M) { return std::abs(M.partialPivLu().determinant()); });
  }

  double expected_abs_det_complex_exact(const MatrixBlockModel &model) {
    require_field(model, Field::complex, "expected_abs_det_complex_exact: complex model required");
    std::vector<Zonotope> factors;
    for (std::size_t j = 0; j < model.blocks.size(); ++j) factors.push_back(block_zonotope(model, j));
    return length(complex_wedge_zonoids(factors));
  }

  Estimate expected_abs_det_complex_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed) {
    require_field(model, Field::complex, "expected_abs_det_complex_mc: complex model required");
    return chunked_mc<Eigen::MatrixXcd>(
        N, seed, [&](CounterStream &rng, Eigen::MatrixXcd &M) { fill_complex(model, rng, M); },
        [](const Eigen::MatrixXcd &M) { return std::abs(M.partialPivLu().determinant()); });
  }

  double expected_sq_abs_det_complex(const MatrixBlockModel &model) {
    require_field(model, Field::complex, "expected_sq_abs_det_complex: complex model required");
    std::vector<Zonotope> factors;
    for (std::size_t j = 0; j < model.blocks.size(); ++j) factors.push_back(squared_block_zonotope(model, j));
    return length(wedge_chain(factors));
  }

  Estimate expected_sq_abs_det_complex_mc(const MatrixBlockModel &model, std::size_t N, std::uint64_t seed) {
    require_field(model, Field::complex, "expected_sq_abs_det_complex_mc: complex model required");
    return chunked_mc<Eigen::MatrixXcd>(
        N, seed, [&](CounterStream &rng, Eigen::MatrixXcd &M) { fill_complex(model, rng, M); },
        [](const Eigen::MatrixXcd &M) { return std::norm(M.partialPivLu().determinant()); });
  }

  // ------------------------------------------------------ Brunn-Minkowski probes

  DiscreteDistribution bernoulli_mixture(const DiscreteDistribution &X1, const DiscreteDistribution &X2, double t) {
    require_same_dim(static_cast<std::size_t>(X1.dim()), static_cast<std::size_t>(X2.dim()), "bernoulli_mixture: dimension");
    require(t >= 0.0 && t <= 1.0, Errc::invalid_argument, "bernoulli_mixture: t must lie in [0, 1]");
    std::vector<Vec> atoms;
    std::vector<double> probs;
    for (std::size_t i = 0; i < X1.size(); ++i) {
      atoms.push_back(2.0 * t * X1.atoms()[i]);
      probs.push_back(X1.probs()[i] / 2.0);
    }
    for (std::size_t i = 0; i < X2.size(); ++i) {
      atoms.push_back(2.0 * (1.0 - t) * X2.atoms()[i]);
      probs.push_back(X2.probs()[i] / 2.0);
    }
    return DiscreteDistribution(std::move(atoms), std::move(probs));
  }

  std::vector<Estimate> bm_concavity_probe(const SeededSampler &X1, const SeededSampler &X2, int d, std::span<const SeededSampler> companions,
                                           std::span<const double> t_grid, EvalMode mode, std::size_t N, std::uint64_t seed) {
    const int m = X1.dim;
    require_same_dim(static_cast<std::size_t>(X2.dim), static_cast<std::size_t>(m), "bm_concavity_probe: dimension");
    require(d >= 1 && d <= m, Errc::invalid_argument, "bm_concavity_probe: need 1 <= d <= m");
    require_same_dim(companions.size() + static_cast<std::size_t>(d), static_cast<std::size_t>(m), "bm_concavity_probe: d + companions");
    for (const auto &c : companions) require_same_dim(static_cast<std::size_t>(c.dim), static_cast<std::size_t>(m), "bm_concavity_probe: companion dimension");

    std::vector<Estimate> out;
    for (std::size_t g = 0; g < t_grid.size(); ++g) {
      const double t = t_grid[g];
      require(t >= 0.0 && t <= 1.0, Errc::invalid_argument, "bm_concavity_probe: t must lie in [0, 1]");
      if (mode == EvalMode::exact) {
        require(X1.distribution && X2.distribution, Errc::precondition, "bm_concavity_probe: exact mode needs discrete inputs");
        std::vector<Zonotope> factors{wedge_power(vitale_zonotope(bernoulli_mixture(*X1.distribution, *X2.distribution, t)), d)};
        for (const auto &c : companions) {
          require(c.distribution.has_value(), Errc::precondition, "bm_concavity_probe: exact mode needs discrete companions");
          factors.push_back(as_degree_one(vitale_zonotope(*c.distribution)));
        }
        out.push_back({std::pow(length(wedge_chain(factors)), 1.0 / d), 0.0, 0});
        continue;
      }
      const SeededSampler mix = SeededSampler::from_function(m, [&X1, &X2, t](CounterStream &rng) -> Vec {
        if (rng.uniform() < 0.5) return 2.0 * t * X1.draw(rng);
        return 2.0 * (1.0 - t) * X2.draw(rng);
      });
      std::vector<SeededSampler> cols(static_cast<std::size_t>(d), mix);
      cols.insert(cols.end(), companions.begin(), companions.end());
      const Estimate e = expected_abs_det_mc(column_model(m, Field::real, std::move(cols)), N, derive_seed(seed, g));
      const double v = std::pow(e.value, 1.0 / d);
      const double se = e.value > 0.0 ? v / (d * e.value) * e.std_error : 0.0;
      out.push_back({v, se, e.samples});
    }
    return out;
  }

  TriangleAf triangle_af_gap(const DiscreteDistribution &X, const DiscreteDistribution &Y) {
    require_same_dim(static_cast<std::size_t>(X.dim()), static_cast<std::size_t>(Y.dim()), "triangle_af_gap: dimension");
    require(X.dim() >= 2, Errc::invalid_argument, "triangle_af_gap: dimension must be at least 2");
    const Zonotope KX = as_degree_one(vitale_zonotope(X));
    const Zonotope KY = as_degree_one(vitale_zonotope(Y));
    TriangleAf r;
    r.xy = length(wedge_product(KX, KY)) / 2.0;
    r.xx = length(wedge_product(KX, KX)) / 2.0;
    r.yy = length(wedge_product(KY, KY)) / 2.0;
    r.gap = r.xy * r.xy - r.xx * r.yy;
    return r;
  }

} // namespace zonoid
