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

#include "zonoid/jvolume.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "zonoid/algebra.hpp"
#include "zonoid/exterior.hpp"
#include "zonoid/rng.hpp"

namespace zonoid {

  namespace {

    constexpr double product_zero_tolerance = 1e-12;
    constexpr double rank_tolerance = 1e-10;
    // Unit normals whose restriction to a subspace is shorter than this vanish there.
    constexpr double restriction_tolerance = 1e-10;
    constexpr double sign_tolerance = 1e-12;
    constexpr std::size_t mc_chunk = 4096;
    constexpr std::size_t max_subsets = 5'000'000;

    double factorial(int n) { return std::tgamma(n + 1.0); }

    int complex_dim_of(const Zonotope &K) {
      require(K.ambient_dim() % 2 == 0, Errc::invalid_argument, "complex zonotope: odd ambient dimension");
      return K.ambient_dim() / 2;
    }

    /// Calls f(idx) for each k-subset of {0..n-1} in lexicographic order.
    template <class F> void for_each_subset(std::size_t n, std::size_t k, F &&f) {
      if (k > n) return;
      require(binomial(static_cast<int>(n), static_cast<int>(k)) <= max_subsets, Errc::too_large, "too many generator subsets");
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        f(std::as_const(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }

    int sign_of(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

    /// Orthonormal basis of the complement of a (length d) inside R^d.
    Mat complement_in(const Vec &a) {
      Eigen::HouseholderQR<Mat> qr(Mat(a.normalized()));
      const Mat Q = qr.householderQ() * Mat::Identity(a.size(), a.size());
      return Q.rightCols(a.size() - 1);
    }

    /// One interior point (unit vector of the subspace spanned by the columns of B)
    /// per cell of the central arrangement of the hyperplanes w^perp, w in normals (unit).
    std::vector<Vec> cell_points(const std::vector<Vec> &normals, const Mat &B) {
      const int d = static_cast<int>(B.cols());
      std::vector<Vec> restricted;
      std::vector<std::size_t> effective;
      for (std::size_t j = 0; j < normals.size(); ++j) {
        const Vec a = B.transpose() * normals[j];
        restricted.push_back(a);
        if (a.norm() > restriction_tolerance) effective.push_back(j);
      }
      if (d == 0) return {Vec::Zero(B.rows())};
      if (effective.empty()) return {B.col(0)};
      if (d == 1) return {B.col(0), Vec(-B.col(0))};

      std::vector<Vec> points;
      std::map<std::vector<int>, std::size_t> seen;
      std::vector<Vec> used_dirs;
      for (std::size_t j : effective) {
        const Vec a = restricted[j].normalized();
        if (std::any_of(used_dirs.begin(), used_dirs.end(), [&](const Vec &b) { return std::abs(a.dot(b)) > 1.0 - 1e-12; })) continue;
        used_dirs.push_back(a);
        const Vec w_hat = B * a;
        const Mat Bj = B * complement_in(restricted[j]);
        for (const Vec &p : cell_points(normals, Bj)) {
          double margin = 1.0;
          for (const auto &w : normals) {
            const double s = std::abs(w.dot(p));
            if (s > sign_tolerance) margin = std::min(margin, s);
          }
          const double eps = margin / 2.0;
          for (double side : {1.0, -1.0}) {
            const Vec u = (p + side * eps * w_hat).normalized();
            std::vector<int> key;
            key.reserve(normals.size());
            for (const auto &w : normals) key.push_back(sign_of(w.dot(u), sign_tolerance));
            if (seen.emplace(std::move(key), points.size()).second) points.push_back(u);
          }
        }
      }
      return points;
    }

    std::vector<Vec> unit_normals(const std::vector<Vec> &gens) {
      std::vector<Vec> out;
      out.reserve(gens.size());
      for (const auto &g : gens) out.push_back(g.normalized());
      return out;
    }

    /// Groups the independent k-subsets of generators by their span.
    std::vector<Subspace> generator_spans(const Zonotope &P, int k) {
      std::vector<Subspace> spans;
      const int D = P.ambient_dim();
      if (k == 0) {
        spans.emplace_back(D, Mat(D, 0));
        return spans;
      }
      for_each_subset(P.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t> &idx) {
        std::vector<Vec> vs;
        for (std::size_t i : idx) vs.push_back(P.generators()[i]);
        // skip subsets already covered by a known span
        for (const auto &S : spans) {
          if (std::all_of(vs.begin(), vs.end(), [&](const Vec &v) { return S.contains(v, subspace_membership_tolerance); })) return;
        }
        Subspace E = Subspace::span(D, vs);
        if (E.dim() == k) spans.push_back(std::move(E));
      });
      return spans;
    }

    /// vol_k of the zonotope generated by the members of P inside E, measured in E.
    double vectorial_face_volume(const Zonotope &P, const Subspace &E) {
      std::vector<Vec> local;
      for (const auto &g : P.generators())
        if (E.contains(g, subspace_membership_tolerance)) local.push_back(E.basis().transpose() * g);
      if (E.dim() == 0) return 1.0;
      return volume(Zonotope(E.dim(), std::move(local)));
    }

    template <class Weight> double vectorial_face_sum(const Zonotope &P_in, Weight &&weight) {
      const int n = complex_dim_of(P_in);
      const Zonotope P = canonicalize(P_in);
      double total = 0.0;
      for (const auto &E : generator_spans(P, n)) total += vectorial_face_volume(P, E) * weight(E);
      return total;
    }

    /// Uniform unit vectors of the subspace with orthonormal basis C, by chunked seeded streams.
    template <class Hit> Estimate sphere_fraction(const Mat &C, std::size_t samples, std::uint64_t seed, Hit &&hit) {
      require(samples >= 1, Errc::invalid_argument, "normal_angle_mc: need at least one sample");
      const auto r = C.cols();
      require(r >= 1, Errc::precondition, "normal_angle_mc: face spans the whole space");
      if (r == 1) {
        // S^0 = {+c, -c}; vol_0(S^0) = 2
        const Vec c = C.col(0);
        const int hits = static_cast<int>(hit(c)) + static_cast<int>(hit(Vec(-c)));
        return {hits / 2.0, 0.0, 2};
      }
      std::size_t hits = 0;
      Vec g(r);
      for (std::size_t start = 0, chunk = 0; start < samples; start += mc_chunk, ++chunk) {
        CounterStream rng(derive_seed(seed, chunk));
        const std::size_t end = std::min(samples, start + mc_chunk);
        for (std::size_t s = start; s < end; ++s) {
          for (Eigen::Index i = 0; i < r; ++i) g[i] = rng.normal();
          if (hit(Vec(C * g))) ++hits;
        }
      }
      const double N = static_cast<double>(samples);
      const double p = static_cast<double>(hits) / N;
      const double se = samples > 1 ? std::sqrt(p * (1.0 - p) / (N - 1.0)) : 0.0;
      return {p, se, samples};
    }

    /// Orthonormal chart (columns) of the affine span of points, relative to points[0].
    Mat affine_chart(std::span<const Vec> points) {
      const int D = static_cast<int>(points.front().size());
      Mat diffs(D, static_cast<Eigen::Index>(points.size()) - 1);
      for (std::size_t i = 1; i < points.size(); ++i) diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
      if (diffs.cols() == 0) return Mat(D, 0);
      Eigen::JacobiSVD<Mat> svd(diffs, Eigen::ComputeThinU);
      const auto &sv = svd.singularValues();
      const double scale = sv.size() > 0 ? sv[0] : 0.0;
      Eigen::Index rank = 0;
      while (rank < sv.size() && sv[rank] > rank_tolerance * std::max(scale, 1.0)) ++rank;
      return svd.matrixU().leftCols(rank);
    }

    double polygon_area(std::vector<Eigen::Vector2d> pts) {
      // Andrew's monotone chain, then the shoelace formula
      std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
      if (pts.size() < 3) return 0.0;
      auto cross = [](const Eigen::Vector2d &o, const Eigen::Vector2d &a, const Eigen::Vector2d &b) {
        return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
      };
      std::vector<Eigen::Vector2d> hull(2 * pts.size());
      std::size_t k = 0;
      for (const auto &p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
      }
      for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
      }
      hull.resize(k - 1);
      double a = 0.0;
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto &p = hull[i];
        const auto &q = hull[(i + 1) % hull.size()];
        a += p.x() * q.y() - p.y() * q.x();
      }
      return std::abs(a) / 2.0;
    }

    /// Volume of conv(points) in R^d, all points full-dimensional or lower (then 0).
    double hull_volume(const std::vector<Vec> &pts, int d) {
      if (d == 0) return pts.empty() ? 0.0 : 1.0;
      if (pts.size() < static_cast<std::size_t>(d) + 1) return 0.0;
      if (d == 1) {
        double lo = pts[0][0];
        double hi = lo;
        for (const auto &p : pts) {
          lo = std::min(lo, p[0]);
          hi = std::max(hi, p[0]);
        }
        return hi - lo;
      }
      if (d == 2) {
        std::vector<Eigen::Vector2d> q;
        for (const auto &p : pts) q.emplace_back(p[0], p[1]);
        return polygon_area(std::move(q));
      }
      // pyramids over the facets, apex at the centroid
      Vec c = Vec::Zero(d);
      double scale = 0.0;
      for (const auto &p : pts) {
        c += p;
        scale = std::max(scale, p.norm());
      }
      c /= static_cast<double>(pts.size());
      const double tol = 1e-9 * std::max(scale, 1.0);
      std::vector<Vec> normals;
      double total = 0.0;
      for_each_subset(pts.size(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t> &idx) {
        Mat A(d - 1, d);
        for (int i = 1; i < d; ++i) A.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
        Eigen::FullPivLU<Mat> lu(A);
        lu.setThreshold(rank_tolerance);
        if (lu.rank() != d - 1) return;
        Vec a = lu.kernel().col(0).normalized();
        double b = a.dot(pts[idx[0]]);
        if (a.dot(c) > b) {
          a = -a;
          b = -b;
        }
        for (const auto &p : pts)
          if (a.dot(p) > b + tol) return;
        for (const auto &n : normals)
          if ((n - a).norm() < 1e-9) return;
        normals.push_back(a);
        const Mat chart = complement_in(a);
        std::vector<Vec> facet;
        for (const auto &p : pts)
          if (std::abs(a.dot(p) - b) <= tol) facet.push_back(chart.transpose() * p);
        total += (b - a.dot(c)) * hull_volume(facet, d - 1) / d;
      });
      return total;
    }

    template <class Weight> Estimate face_sum_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed, Weight &&weight) {
      require(P.ambient_dim % 2 == 0, Errc::invalid_argument, "face data: odd ambient dimension");
      Estimate out;
      double var = 0.0;
      for (std::size_t f = 0; f < P.n_faces.size(); ++f) {
        const Subspace E = face_direction_space(P, f);
        require(2 * E.dim() == P.ambient_dim, Errc::precondition, "face data: face is not n-dimensional");
        const double c = face_volume(P, f) * weight(E);
        const Estimate theta = normal_angle_mc(P, f, samples, derive_seed(seed, f));
        out.value += c * theta.value;
        var += (c * theta.std_error) * (c * theta.std_error);
        out.samples += theta.samples;
      }
      out.std_error = std::sqrt(var);
      return out;
    }

  } // namespace

  // ---------------------------------------------------------------- structures

  ComplexStructure ComplexStructure::standard(int complex_dim) {
    require(complex_dim >= 1, Errc::invalid_argument, "complex structure: dimension must be positive");
    Mat J = Mat::Zero(2 * complex_dim, 2 * complex_dim);
    for (int i = 0; i < complex_dim; ++i) {
      J(2 * i, 2 * i + 1) = -1.0;
      J(2 * i + 1, 2 * i) = 1.0;
    }
    return ComplexStructure(complex_dim, std::move(J));
  }

  ComplexStructure::ComplexStructure(int complex_dim, Mat J) : n_(complex_dim), J_(std::move(J)) {
    require(n_ >= 1, Errc::invalid_argument, "complex structure: dimension must be positive");
    require(J_.rows() == 2 * n_ && J_.cols() == 2 * n_, Errc::dimension_mismatch, "complex structure: J must be 2n x 2n");
    const Mat sq = J_ * J_ + Mat::Identity(2 * n_, 2 * n_);
    require(sq.cwiseAbs().maxCoeff() <= 1e-12, Errc::precondition, "complex structure: J^2 != -1");
  }

  Mat ComplexStructure::rotation(double theta) const {
    return std::cos(theta) * Mat::Identity(2 * n_, 2 * n_) + std::sin(theta) * J_;
  }

  Subspace::Subspace(int ambient_dim, const Mat &basis_columns) : dim_(ambient_dim) {
    require(basis_columns.rows() == ambient_dim, Errc::dimension_mismatch, "subspace: basis row count");
    const auto k = basis_columns.cols();
    if (k == 0) {
      basis_ = Mat(ambient_dim, 0);
      return;
    }
    Eigen::ColPivHouseholderQR<Mat> qr(basis_columns);
    qr.setThreshold(rank_tolerance);
    require(qr.rank() == k, Errc::rank_deficient, "subspace: basis is rank deficient");
    basis_ = (qr.householderQ() * Mat::Identity(ambient_dim, k));
  }

  Subspace Subspace::span(int ambient_dim, std::span<const Vec> vectors) {
    Mat A(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      require_same_dim(static_cast<std::size_t>(vectors[i].size()), static_cast<std::size_t>(ambient_dim), "subspace: vector dimension");
      A.col(static_cast<Eigen::Index>(i)) = vectors[i];
    }
    if (vectors.empty()) return Subspace(ambient_dim, A);
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > rank_tolerance * std::max(sv[0], 1e-300)) ++rank;
    return Subspace(ambient_dim, Mat(svd.matrixU().leftCols(rank)));
  }

  Mat Subspace::complement() const {
    const auto k = basis_.cols();
    if (k == 0) return Mat::Identity(dim_, dim_);
    Eigen::HouseholderQR<Mat> qr(basis_);
    const Mat Q = qr.householderQ() * Mat::Identity(dim_, dim_);
    return Q.rightCols(dim_ - k);
  }

  bool Subspace::contains(const Vec &v, double tol) const {
    require_same_dim(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(dim_), "subspace: vector dimension");
    const Vec r = v - basis_ * (basis_.transpose() * v);
    return r.norm() <= tol * v.norm();
  }

  bool Subspace::same_as(const Subspace &o, double tol) const {
    if (o.dim_ != dim_ || o.dim() != dim()) return false;
    for (Eigen::Index i = 0; i < basis_.cols(); ++i)
      if (!o.contains(basis_.col(i), tol)) return false;
    return true;
  }

  std::vector<std::int64_t> Subspace::key() const {
    const Mat P = projector();
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(P.size()));
    for (Eigen::Index i = 0; i < P.rows(); ++i)
      for (Eigen::Index j = 0; j < P.cols(); ++j) out.push_back(std::llround(P(i, j) * 1e8));
    return out;
  }

  double sigma_J(const Subspace &E, const ComplexStructure &J) {
    const int n = J.complex_dim();
    require_same_dim(static_cast<std::size_t>(E.ambient_dim()), static_cast<std::size_t>(2 * n), "sigma_J: ambient dimension");
    require_same_dim(static_cast<std::size_t>(E.dim()), static_cast<std::size_t>(n), "sigma_J: subspace dimension");
    Mat M(2 * n, 2 * n);
    M.leftCols(n) = E.basis();
    M.rightCols(n) = J.matrix() * E.basis();
    return std::abs(M.determinant());
  }

  double sigma_J(const Subspace &E) {
    require(E.ambient_dim() % 2 == 0, Errc::invalid_argument, "sigma_J: odd ambient dimension");
    return sigma_J(E, ComplexStructure::standard(E.ambient_dim() / 2));
  }

  // ------------------------------------------------------------- complex wedge

  Zonotope as_complex_degree_one(const Zonotope &K) {
    if (!K.grading()) {
      const int n = complex_dim_of(K);
      require(n <= max_exterior_dim, Errc::too_large, "complex dimension too large for exterior products");
      return K.with_grading(Grading{n, 1, true});
    }
    require(K.grading()->complex && K.grading()->degree == 1, Errc::invalid_argument, "expected a complex degree-1 zonotope");
    return K;
  }

  Zonotope complex_wedge_zonoids(std::span<const Zonotope> factors) {
    require(!factors.empty(), Errc::invalid_argument, "complex_wedge_zonoids: no factors");
    auto graded = [](const Zonotope &K) { return K.grading() ? K : as_complex_degree_one(K); };
    Zonotope acc = graded(factors.front());
    require(acc.grading()->complex, Errc::invalid_argument, "complex_wedge_zonoids: complex grading required");
    for (std::size_t f = 1; f < factors.size(); ++f) {
      const Zonotope next = graded(factors[f]);
      const Grading ga = *acc.grading();
      const Grading gb = *next.grading();
      require(gb.complex, Errc::invalid_argument, "complex_wedge_zonoids: complex grading required");
      require_same_dim(static_cast<std::size_t>(ga.base_dim), static_cast<std::size_t>(gb.base_dim), "complex_wedge_zonoids: complex dimension");
      const Grading out{ga.base_dim, ga.degree + gb.degree, true};
      std::vector<Vec> gens;
      if (out.degree <= out.base_dim) {
        std::vector<ComplexMultivector> right;
        for (const auto &w : next.generators()) right.push_back(complexify(gb.base_dim, gb.degree, std::span<const double>(w.data(), static_cast<std::size_t>(w.size()))));
        for (const auto &v : acc.generators()) {
          const ComplexMultivector left = complexify(ga.base_dim, ga.degree, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
          for (std::size_t j = 0; j < right.size(); ++j) {
            const ComplexMultivector p = wedge(left, right[j]);
            const double np = norm(p);
            if (np == 0.0 || np <= product_zero_tolerance * v.norm() * next.generators()[j].norm()) continue;
            const std::vector<double> r = realify(p);
            gens.push_back(Eigen::Map<const Vec>(r.data(), static_cast<Eigen::Index>(r.size())));
          }
        }
      }
      acc = canonicalize(Zonotope(out, std::move(gens)));
    }
    return acc;
  }

  double mixed_J_volume(std::span<const Zonotope> bodies) {
    require(!bodies.empty(), Errc::invalid_argument, "mixed_J_volume: no bodies");
    const int n = as_complex_degree_one(bodies.front()).grading()->base_dim;
    require_same_dim(bodies.size(), static_cast<std::size_t>(n), "mixed_J_volume: body count");
    std::vector<Zonotope> graded;
    for (const auto &K : bodies) {
      graded.push_back(as_complex_degree_one(K));
      require_same_dim(static_cast<std::size_t>(graded.back().grading()->base_dim), static_cast<std::size_t>(n), "mixed_J_volume: complex dimension");
    }
    return length(complex_wedge_zonoids(graded)) / factorial(n);
  }

  double j_volume_zonotope(const Zonotope &P, const ComplexStructure &J) {
    require_same_dim(static_cast<std::size_t>(P.ambient_dim()), static_cast<std::size_t>(2 * J.complex_dim()), "j_volume_zonotope: ambient dimension");
    return vectorial_face_sum(P, [&](const Subspace &E) { return std::sqrt(sigma_J(E, J)); });
  }

  double j_volume_zonotope(const Zonotope &P) { return j_volume_zonotope(P, ComplexStructure::standard(complex_dim_of(P))); }

  double kazarnovskii_zonotope(const Zonotope &P, const ComplexStructure &J) {
    require_same_dim(static_cast<std::size_t>(P.ambient_dim()), static_cast<std::size_t>(2 * J.complex_dim()), "kazarnovskii_zonotope: ambient dimension");
    return vectorial_face_sum(P, [&](const Subspace &E) { return sigma_J(E, J); });
  }

  double kazarnovskii_zonotope(const Zonotope &P) { return kazarnovskii_zonotope(P, ComplexStructure::standard(complex_dim_of(P))); }

  Zonotope disc_zonotope(const Vec &z, int q, const ComplexStructure &J) {
    require(q >= 2, Errc::invalid_argument, "disc_zonotope: q must be at least 2");
    require_same_dim(static_cast<std::size_t>(z.size()), static_cast<std::size_t>(2 * J.complex_dim()), "disc_zonotope: vector dimension");
    const Grading g{J.complex_dim(), 1, true};
    if (z.norm() == 0.0) return Zonotope(g, {});
    const Vec Jz = J.matrix() * z;
    std::vector<Vec> gens;
    for (int j = 0; j < q; ++j) {
      const double theta = j * std::numbers::pi / q;
      gens.push_back((std::numbers::pi / q) * (std::cos(theta) * z + std::sin(theta) * Jz));
    }
    return Zonotope(g, std::move(gens));
  }

  Zonotope disc_zonotope(const Vec &z, int q) {
    require(z.size() % 2 == 0, Errc::invalid_argument, "disc_zonotope: odd dimension");
    return disc_zonotope(z, q, ComplexStructure::standard(static_cast<int>(z.size()) / 2));
  }

  // -------------------------------------------------------------------- faces

  std::vector<ZonotopeFace> zonotope_faces(const Zonotope &P_in, int k) {
    const Zonotope P = canonicalize(P_in);
    const int D = P.ambient_dim();
    require(k >= 0 && k <= D, Errc::invalid_argument, "zonotope_faces: face dimension out of range");
    const std::vector<Vec> normals = unit_normals(P.generators());
    std::vector<ZonotopeFace> faces;
    const auto spans = generator_spans(P, k);
    for (std::size_t s = 0; s < spans.size(); ++s) {
      const Subspace &E = spans[s];
      std::vector<Vec> outside;
      std::vector<std::size_t> outside_idx;
      for (std::size_t i = 0; i < P.size(); ++i) {
        if (E.contains(P.generators()[i], subspace_membership_tolerance)) continue;
        outside.push_back(normals[i]);
        outside_idx.push_back(i);
      }
      const Mat C = E.complement();
      for (const Vec &u : cell_points(outside, C)) {
        std::vector<int> signs(P.size(), 0);
        for (std::size_t j = 0; j < outside.size(); ++j) signs[outside_idx[j]] = sign_of(outside[j].dot(u), sign_tolerance);
        faces.push_back({s, E, std::move(signs)});
      }
    }
    return faces;
  }

  PolytopeFaceData zonotope_face_data(const Zonotope &P_in) {
    const Zonotope P = canonicalize(P_in);
    const int n = complex_dim_of(P);
    PolytopeFaceData out;
    out.ambient_dim = P.ambient_dim();
    std::map<std::vector<int>, std::size_t> vertex_index;
    auto vertex_of = [&](const std::vector<int> &signs) {
      auto it = vertex_index.find(signs);
      if (it != vertex_index.end()) return it->second;
      Vec x = Vec::Zero(P.ambient_dim());
      for (std::size_t i = 0; i < P.size(); ++i) x += 0.5 * signs[i] * P.generators()[i];
      out.vertices.push_back(x);
      vertex_index.emplace(signs, out.vertices.size() - 1);
      return out.vertices.size() - 1;
    };
    for (const auto &v : zonotope_faces(P, 0)) vertex_of(v.signs);
    if (static_cast<std::size_t>(n) > P.size()) return out;
    const std::vector<Vec> normals = unit_normals(P.generators());
    for (const auto &face : zonotope_faces(P, n)) {
      std::vector<Vec> inside;
      std::vector<std::size_t> inside_idx;
      for (std::size_t i = 0; i < P.size(); ++i) {
        if (face.signs[i] != 0) continue;
        inside.push_back(normals[i]);
        inside_idx.push_back(i);
      }
      std::vector<std::size_t> verts;
      for (const Vec &u : cell_points(inside, face.span.basis())) {
        std::vector<int> signs = face.signs;
        for (std::size_t j = 0; j < inside.size(); ++j) signs[inside_idx[j]] = sign_of(inside[j].dot(u), sign_tolerance);
        verts.push_back(vertex_of(signs));
      }
      std::sort(verts.begin(), verts.end());
      out.n_faces.push_back(std::move(verts));
    }
    return out;
  }

  double convex_hull_volume(std::span<const Vec> points) {
    if (points.empty()) return 0.0;
    const int d = static_cast<int>(points.front().size());
    for (const auto &p : points) require_same_dim(static_cast<std::size_t>(p.size()), static_cast<std::size_t>(d), "convex_hull_volume: point dimension");
    if (affine_chart(points).cols() < d) return d == 0 ? 1.0 : 0.0;
    return hull_volume(std::vector<Vec>(points.begin(), points.end()), d);
  }

  namespace {

    std::vector<Vec> face_points(const PolytopeFaceData &P, std::size_t face) {
      require(face < P.n_faces.size(), Errc::invalid_argument, "face index out of range");
      std::vector<Vec> pts;
      for (std::size_t i : P.n_faces[face]) {
        require(i < P.vertices.size(), Errc::schema, "face data: vertex index out of range");
        pts.push_back(P.vertices[i]);
      }
      require(!pts.empty(), Errc::schema, "face data: empty face");
      return pts;
    }

  } // namespace

  Subspace face_direction_space(const PolytopeFaceData &P, std::size_t face) {
    const auto pts = face_points(P, face);
    return Subspace(P.ambient_dim, affine_chart(pts));
  }

  double face_volume(const PolytopeFaceData &P, std::size_t face) {
    const auto pts = face_points(P, face);
    const Mat chart = affine_chart(pts);
    std::vector<Vec> local;
    for (const auto &p : pts) local.push_back(chart.transpose() * (p - pts[0]));
    return hull_volume(local, static_cast<int>(chart.cols()));
  }

  Estimate normal_angle_mc(const PolytopeFaceData &P, std::size_t face, std::size_t samples, std::uint64_t seed) {
    const auto pts = face_points(P, face);
    const Subspace E = face_direction_space(P, face);
    double scale = 0.0;
    for (const auto &v : P.vertices) scale = std::max(scale, v.norm());
    const double tol = 1e-9 * std::max(scale, 1.0);
    Mat diffs(P.ambient_dim, static_cast<Eigen::Index>(P.vertices.size()));
    for (std::size_t i = 0; i < P.vertices.size(); ++i) diffs.col(static_cast<Eigen::Index>(i)) = P.vertices[i] - pts[0];
    const Mat rows = diffs.transpose();
    return sphere_fraction(E.complement(), samples, seed, [&](const Vec &u) { return (rows * u).maxCoeff() <= tol; });
  }

  Estimate normal_angle_mc(const Zonotope &P_in, const ZonotopeFace &face, std::size_t samples, std::uint64_t seed) {
    const Zonotope P = canonicalize(P_in);
    require_same_dim(face.signs.size(), P.size(), "normal_angle_mc: sign vector length");
    require_same_dim(static_cast<std::size_t>(face.span.ambient_dim()), static_cast<std::size_t>(P.ambient_dim()), "normal_angle_mc: span dimension");
    std::vector<Vec> outside;
    std::vector<int> want;
    for (std::size_t i = 0; i < P.size(); ++i) {
      const bool in_span = face.span.contains(P.generators()[i], subspace_membership_tolerance);
      require(in_span == (face.signs[i] == 0), Errc::invalid_argument, "normal_angle_mc: sign vector inconsistent with span");
      if (in_span) continue;
      outside.push_back(P.generators()[i]);
      want.push_back(face.signs[i]);
    }
    Mat W(static_cast<Eigen::Index>(outside.size()), P.ambient_dim());
    for (std::size_t i = 0; i < outside.size(); ++i) W.row(static_cast<Eigen::Index>(i)) = outside[i].transpose();
    return sphere_fraction(face.span.complement(), samples, seed, [&](const Vec &u) {
      const Vec s = W * u;
      for (Eigen::Index i = 0; i < s.size(); ++i)
        if ((s[i] > 0 ? 1 : -1) != want[static_cast<std::size_t>(i)]) return false;
      return true;
    });
  }

  Estimate j_volume_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed, const ComplexStructure &J) {
    require_same_dim(static_cast<std::size_t>(P.ambient_dim), static_cast<std::size_t>(2 * J.complex_dim()), "j_volume_polytope_mc: ambient dimension");
    return face_sum_mc(P, samples, seed, [&](const Subspace &E) { return std::sqrt(sigma_J(E, J)); });
  }

  Estimate j_volume_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed) {
    require(P.ambient_dim >= 2 && P.ambient_dim % 2 == 0, Errc::invalid_argument, "face data: ambient dimension must be even");
    return j_volume_polytope_mc(P, samples, seed, ComplexStructure::standard(P.ambient_dim / 2));
  }

  Estimate kazarnovskii_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed, const ComplexStructure &J) {
    require_same_dim(static_cast<std::size_t>(P.ambient_dim), static_cast<std::size_t>(2 * J.complex_dim()), "kazarnovskii_polytope_mc: ambient dimension");
    return face_sum_mc(P, samples, seed, [&](const Subspace &E) { return sigma_J(E, J); });
  }

  Estimate kazarnovskii_polytope_mc(const PolytopeFaceData &P, std::size_t samples, std::uint64_t seed) {
    require(P.ambient_dim >= 2 && P.ambient_dim % 2 == 0, Errc::invalid_argument, "face data: ambient dimension must be even");
    return kazarnovskii_polytope_mc(P, samples, seed, ComplexStructure::standard(P.ambient_dim / 2));
  }

} // namespace zonoid
