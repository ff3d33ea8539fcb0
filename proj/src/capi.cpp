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

#include "zonoid/zonoid.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "zonoid/algebra.hpp"
#include "zonoid/constants.hpp"
#include "zonoid/exact.hpp"
#include "zonoid/io.hpp"

using namespace zonoid;

struct zn_zonotope {
  Zonotope value;
};
struct zn_virtual {
  VirtualZonotope value;
};
struct zn_measure {
  DiscreteEvenMeasure value;
};
struct zn_distribution {
  DiscreteDistribution value;
};
struct zn_sampler {
  SeededSampler value;
};
struct zn_model {
  MatrixBlockModel value;
};
struct zn_faces {
  PolytopeFaceData value;
};
struct zn_multivector {
  std::variant<Multivector, ComplexMultivector> value;
};

namespace {

  thread_local std::string last_error;

  struct NullPointer {};

  zn_status to_status(Errc c) {
    switch (c) {
      case Errc::dimension_mismatch: return ZN_ERR_DIMENSION;
      case Errc::invalid_argument: return ZN_ERR_INVALID_ARGUMENT;
      case Errc::precondition: return ZN_ERR_PRECONDITION;
      case Errc::too_large: return ZN_ERR_TOO_LARGE;
      case Errc::rank_deficient: return ZN_ERR_RANK_DEFICIENT;
      case Errc::schema: return ZN_ERR_SCHEMA;
    }
    return ZN_ERR_INTERNAL;
  }

  template <class F> zn_status guard(F &&f) {
    try {
      f();
      return ZN_OK;
    } catch (const Error &e) {
      last_error = e.what();
      return to_status(e.code());
    } catch (const NullPointer &) {
      last_error = "null pointer argument";
      return ZN_ERR_NULL_POINTER;
    } catch (const nlohmann::json::exception &e) {
      last_error = std::string("malformed JSON: ") + e.what();
      return ZN_ERR_SCHEMA;
    } catch (const std::bad_alloc &) {
      last_error = "out of memory";
      return ZN_ERR_TOO_LARGE;
    } catch (const std::exception &e) {
      last_error = e.what();
      return ZN_ERR_INTERNAL;
    } catch (...) {
      last_error = "unknown error";
      return ZN_ERR_INTERNAL;
    }
  }

  template <class... P> void need(const P *...ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullPointer{};
  }

  char *dup_string(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
  }

  Vec vec(const double *x, std::size_t n) {
    if (n > 0) need(x);
    return n == 0 ? Vec(0) : Vec(Eigen::Map<const Vec>(x, static_cast<Eigen::Index>(n)));
  }

  std::vector<Zonotope> bodies_of(const zn_zonotope *const *b, std::size_t n) {
    if (n > 0) need(b);
    std::vector<Zonotope> out;
    for (std::size_t i = 0; i < n; ++i) {
      need(b[i]);
      out.push_back(b[i]->value);
    }
    return out;
  }

  template <class H, class T> void emit(H **out, T &&value) { *out = new H{std::forward<T>(value)}; }

  io::json parse(const char *json) {
    need(json);
    return io::json::parse(json);
  }

  const Multivector &real_mv(const zn_multivector *a) {
    need(a);
    if (auto *p = std::get_if<Multivector>(&a->value)) return *p;
    throw Error(Errc::invalid_argument, "expected a real multivector");
  }

  const ComplexMultivector &complex_mv(const zn_multivector *a) {
    need(a);
    if (auto *p = std::get_if<ComplexMultivector>(&a->value)) return *p;
    throw Error(Errc::invalid_argument, "expected a complex multivector");
  }

  Estimate checked_samples(std::size_t N) {
    require(N >= 1, Errc::invalid_argument, "sample count must be positive");
    return {};
  }

  void copy_estimate(const Estimate &e, zn_estimate *out) { *out = {e.value, e.std_error, static_cast<uint64_t>(e.samples)}; }

} // namespace

extern "C" {

// ---------------------------------------------------------------------- general

const char *zn_version(void) { return "0.1.0"; }

const char *zn_last_error(void) { return last_error.c_str(); }

const char *zn_status_name(zn_status status) {
  switch (status) {
    case ZN_OK: return "ok";
    case ZN_ERR_DIMENSION: return "dimension_mismatch";
    case ZN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ZN_ERR_PRECONDITION: return "precondition";
    case ZN_ERR_TOO_LARGE: return "too_large";
    case ZN_ERR_RANK_DEFICIENT: return "rank_deficient";
    case ZN_ERR_SCHEMA: return "schema";
    case ZN_ERR_NULL_POINTER: return "null_pointer";
    case ZN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void zn_string_free(char *s) { std::free(s); }

zn_status zn_json_normalize(const char *json, char **out) {
  return guard([&] {
    need(out);
    *out = dup_string(io::write_json(parse(json)));
  });
}

// -------------------------------------------------------------------- zonotopes

zn_status zn_zonotope_from_json(const char *json, zn_zonotope **out) {
  return guard([&] {
    need(out);
    emit(out, io::zonotope_from_json(parse(json)));
  });
}

zn_status zn_zonotope_to_json(const zn_zonotope *K, char **out) {
  return guard([&] {
    need(K, out);
    *out = dup_string(io::write_json(io::to_json(K->value)));
  });
}

zn_status zn_zonotope_new(size_t dim, const double *generators, size_t count, zn_zonotope **out) {
  return guard([&] {
    need(out);
    if (count > 0) need(generators);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(vec(generators + i * dim, dim));
    emit(out, Zonotope(static_cast<int>(dim), std::move(gens)));
  });
}

void zn_zonotope_free(zn_zonotope *K) { delete K; }

zn_status zn_zonotope_dim(const zn_zonotope *K, size_t *out) {
  return guard([&] {
    need(K, out);
    *out = static_cast<std::size_t>(K->value.ambient_dim());
  });
}

zn_status zn_zonotope_size(const zn_zonotope *K, size_t *out) {
  return guard([&] {
    need(K, out);
    *out = K->value.size();
  });
}

zn_status zn_zonotope_generator(const zn_zonotope *K, size_t index, double *out, size_t capacity) {
  return guard([&] {
    need(K, out);
    require(index < K->value.size(), Errc::invalid_argument, "generator index out of range");
    const Vec &g = K->value.generators()[index];
    require(capacity >= static_cast<std::size_t>(g.size()), Errc::invalid_argument, "output buffer too small");
    std::copy(g.data(), g.data() + g.size(), out);
  });
}

zn_status zn_support(const zn_zonotope *K, const double *u, size_t n, double *out) {
  return guard([&] {
    need(K, out);
    *out = support(K->value, vec(u, n));
  });
}

zn_status zn_minkowski_sum(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out) {
  return guard([&] {
    need(K, L, out);
    emit(out, minkowski_sum(K->value, L->value));
  });
}

zn_status zn_scale(const zn_zonotope *K, double lambda, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    emit(out, scale(K->value, lambda));
  });
}

zn_status zn_length(const zn_zonotope *K, double *out) {
  return guard([&] {
    need(K, out);
    *out = length(K->value);
  });
}

zn_status zn_linear_image(const double *M, size_t rows, size_t cols, const zn_zonotope *K, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    if (rows * cols > 0) need(M);
    Mat A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = M[i * cols + j];
    emit(out, linear_image(A, K->value));
  });
}

zn_status zn_canonicalize(const zn_zonotope *K, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    emit(out, canonicalize(K->value));
  });
}

zn_status zn_approx_equal(const zn_zonotope *K, const zn_zonotope *L, double tol, int *out) {
  return guard([&] {
    need(K, L, out);
    *out = approx_equal(K->value, L->value, tol) ? 1 : 0;
  });
}

zn_status zn_radius_exact(const zn_zonotope *K, double *out) {
  return guard([&] {
    need(K, out);
    *out = radius_exact(K->value);
  });
}

zn_status zn_radius_bounds(const zn_zonotope *K, zn_interval *out) {
  return guard([&] {
    need(K, out);
    const Interval i = radius_bounds(K->value);
    *out = {i.lo, i.hi};
  });
}

zn_status zn_hausdorff_estimate(const zn_zonotope *K, const zn_zonotope *L, double delta, zn_interval *out) {
  return guard([&] {
    need(K, L, out);
    const Interval i = hausdorff_estimate(K->value, L->value, delta);
    *out = {i.lo, i.hi};
  });
}

zn_status zn_direction_net(size_t dim, size_t count, uint64_t seed, double *out) {
  return guard([&] {
    if (count > 0) need(out);
    const auto net = direction_net(static_cast<int>(dim), count, seed);
    for (std::size_t i = 0; i < net.size(); ++i) std::copy(net[i].data(), net[i].data() + dim, out + i * dim);
  });
}

// ------------------------------------------------------------ virtual zonotopes

zn_status zn_virtual_from_json(const char *json, zn_virtual **out) {
  return guard([&] {
    need(out);
    emit(out, io::virtual_from_json(parse(json)));
  });
}

zn_status zn_virtual_to_json(const zn_virtual *W, char **out) {
  return guard([&] {
    need(W, out);
    *out = dup_string(io::write_json(io::to_json(W->value)));
  });
}

zn_status zn_virtual_new(const zn_zonotope *plus, const zn_zonotope *minus, zn_virtual **out) {
  return guard([&] {
    need(plus, minus, out);
    emit(out, VirtualZonotope(plus->value, minus->value));
  });
}

void zn_virtual_free(zn_virtual *W) { delete W; }

zn_status zn_virtual_support(const zn_virtual *W, const double *u, size_t n, double *out) {
  return guard([&] {
    need(W, out);
    *out = virtual_support(W->value, vec(u, n));
  });
}

zn_status zn_virtual_add(const zn_virtual *A, const zn_virtual *B, zn_virtual **out) {
  return guard([&] {
    need(A, B, out);
    emit(out, virtual_add(A->value, B->value));
  });
}

zn_status zn_virtual_negate(const zn_virtual *A, zn_virtual **out) {
  return guard([&] {
    need(A, out);
    emit(out, virtual_negate(A->value));
  });
}

zn_status zn_virtual_length(const zn_virtual *W, double *out) {
  return guard([&] {
    need(W, out);
    *out = virtual_length(W->value);
  });
}

zn_status zn_virtual_equal(const zn_virtual *A, const zn_virtual *B, double tol, int *out) {
  return guard([&] {
    need(A, B, out);
    *out = virtual_equal(A->value, B->value, tol) ? 1 : 0;
  });
}

zn_status zn_virtual_tensor(const zn_virtual *A, const zn_virtual *B, zn_virtual **out) {
  return guard([&] {
    need(A, B, out);
    emit(out, virtual_tensor(A->value, B->value));
  });
}

// ---------------------------------------------------------------------- algebra

zn_status zn_tensor_product(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out) {
  return guard([&] {
    need(K, L, out);
    emit(out, tensor_product(K->value, L->value));
  });
}

zn_status zn_wedge_product(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out) {
  return guard([&] {
    need(K, L, out);
    auto graded = [](const Zonotope &Z) { return Z.grading() ? Z : as_degree_one(Z); };
    emit(out, wedge_product(graded(K->value), graded(L->value)));
  });
}

zn_status zn_wedge_power(const zn_zonotope *K, int d, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    emit(out, wedge_power(K->value, d));
  });
}

zn_status zn_induced_map(zn_multilinear_fn map, void *user, size_t out_dim, const zn_zonotope *const *factors, size_t p, uint64_t probe_seed,
                         zn_zonotope **out, double *linearity_defect) {
  return guard([&] {
    need(out);
    if (!map) throw NullPointer{};
    const auto bodies = bodies_of(factors, p);
    MultilinearMap f = [map, user, out_dim](std::span<const Vec> args) {
      std::vector<const double *> ptrs;
      std::vector<std::size_t> dims;
      for (const auto &a : args) {
        ptrs.push_back(a.data());
        dims.push_back(static_cast<std::size_t>(a.size()));
      }
      Vec r = Vec::Zero(static_cast<Eigen::Index>(out_dim));
      map(ptrs.data(), dims.data(), args.size(), r.data(), out_dim, user);
      return r;
    };
    InducedMap result = induced_map(f, static_cast<int>(out_dim), bodies, probe_seed);
    if (linearity_defect) *linearity_defect = result.linearity_defect;
    emit(out, std::move(result.zonotope));
  });
}

zn_status zn_mixed_volume(const zn_zonotope *const *bodies, size_t m, double *out) {
  return guard([&] {
    need(out);
    *out = mixed_volume(bodies_of(bodies, m));
  });
}

zn_status zn_mixed_volume_exact(const zn_zonotope *const *bodies, size_t m, int64_t *numerator, int64_t *denominator) {
  return guard([&] {
    need(numerator, denominator);
    std::vector<exact::IntegerZonotope> ints;
    for (const auto &K : bodies_of(bodies, m)) ints.push_back(exact::from_zonotope(K));
    const exact::Rational q = exact::mixed_volume(ints);
    *numerator = q.numerator();
    *denominator = q.denominator();
  });
}

zn_status zn_volume(const zn_zonotope *K, double *out) {
  return guard([&] {
    need(K, out);
    *out = volume(K->value);
  });
}

zn_status zn_volume_exact(const zn_zonotope *K, int64_t *numerator, int64_t *denominator) {
  return guard([&] {
    need(K, numerator, denominator);
    const exact::Rational q = exact::volume(exact::from_zonotope(K->value));
    *numerator = q.numerator();
    *denominator = q.denominator();
  });
}

zn_status zn_intrinsic_volume(const zn_zonotope *K, int d, double *out) {
  return guard([&] {
    need(K, out);
    *out = intrinsic_volume(K->value, d);
  });
}

zn_status zn_hodge_star_zonoid(const zn_zonotope *K, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    emit(out, hodge_star_zonoid(K->value.grading() ? K->value : as_degree_one(K->value)));
  });
}

zn_status zn_projection_body(const zn_zonotope *K, zn_zonotope **out) {
  return guard([&] {
    need(K, out);
    emit(out, projection_body(K->value));
  });
}

zn_status zn_af_gap(const zn_zonotope *K1, const zn_zonotope *K2, const zn_zonotope *const *rest, size_t r, double *out) {
  return guard([&] {
    need(K1, K2, out);
    *out = af_gap(K1->value, K2->value, bodies_of(rest, r));
  });
}

zn_status zn_af_gap_with_middle(const zn_zonotope *K1, const zn_zonotope *K2, const zn_zonotope *C, double *out) {
  return guard([&] {
    need(K1, K2, C, out);
    *out = af_gap_with_middle(K1->value, K2->value, C->value);
  });
}

zn_status zn_reverse_af_gap(const zn_zonotope *const *bodies, const int *degrees, size_t p, double *out) {
  return guard([&] {
    need(out);
    if (p > 0) need(degrees);
    *out = reverse_af_gap(bodies_of(bodies, p), std::span<const int>(degrees, p));
  });
}

// ------------------------------------------------------------- exterior algebra

zn_status zn_multivector_from_json(const char *json, zn_multivector **out) {
  return guard([&] {
    need(out);
    const io::json j = parse(json);
    if (j.is_object() && j.contains("complex_dim")) {
      *out = new zn_multivector{io::complex_multivector_from_json(j)};
    } else {
      *out = new zn_multivector{io::multivector_from_json(j)};
    }
  });
}

zn_status zn_multivector_to_json(const zn_multivector *a, char **out) {
  return guard([&] {
    need(a, out);
    *out = dup_string(std::visit([](const auto &x) { return io::write_json(io::to_json(x)); }, a->value));
  });
}

void zn_multivector_free(zn_multivector *a) { delete a; }

zn_status zn_mv_wedge(const zn_multivector *a, const zn_multivector *b, zn_multivector **out) {
  return guard([&] {
    need(out);
    *out = new zn_multivector{wedge(real_mv(a), real_mv(b))};
  });
}

zn_status zn_mv_blade(size_t m, const double *vectors, size_t k, zn_multivector **out) {
  return guard([&] {
    need(out);
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(vec(vectors + i * m, m));
    *out = new zn_multivector{blade_from_vectors<double>(static_cast<int>(m), vs)};
  });
}

zn_status zn_mv_hodge(const zn_multivector *a, zn_multivector **out) {
  return guard([&] {
    need(out);
    *out = new zn_multivector{hodge_star(real_mv(a))};
  });
}

zn_status zn_mv_norm(const zn_multivector *a, double *out) {
  return guard([&] {
    need(a, out);
    *out = std::visit([](const auto &x) { return norm(x); }, a->value);
  });
}

zn_status zn_mv_complex_wedge(const zn_multivector *a, const zn_multivector *b, zn_multivector **out) {
  return guard([&] {
    need(out);
    *out = new zn_multivector{wedge(complex_mv(a), complex_mv(b))};
  });
}

zn_status zn_mv_realify(const zn_multivector *a, double *out, size_t capacity, size_t *length) {
  return guard([&] {
    need(length);
    const std::vector<double> r = realify(complex_mv(a));
    *length = r.size();
    if (capacity >= r.size() && !r.empty()) {
      need(out);
      std::copy(r.begin(), r.end(), out);
    }
  });
}

// --------------------------------------------------------------------- jvolume

zn_status zn_sigma_j(size_t n, const double *basis, const double *J, double *out) {
  return guard([&] {
    need(basis, out);
    const auto D = static_cast<Eigen::Index>(2 * n);
    Mat B(D, static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (Eigen::Index r = 0; r < D; ++r) B(r, static_cast<Eigen::Index>(i)) = basis[i * 2 * n + static_cast<std::size_t>(r)];
    const Subspace E(static_cast<int>(D), B);
    if (J) {
      Mat Jm(D, D);
      for (Eigen::Index r = 0; r < D; ++r)
        for (Eigen::Index c = 0; c < D; ++c) Jm(r, c) = J[r * D + c];
      *out = sigma_J(E, ComplexStructure(static_cast<int>(n), Jm));
    } else {
      *out = sigma_J(E);
    }
  });
}

zn_status zn_complex_wedge_zonoids(const zn_zonotope *const *factors, size_t p, zn_zonotope **out) {
  return guard([&] {
    need(out);
    emit(out, complex_wedge_zonoids(bodies_of(factors, p)));
  });
}

zn_status zn_mixed_j_volume(const zn_zonotope *const *bodies, size_t n, double *out) {
  return guard([&] {
    need(out);
    *out = mixed_J_volume(bodies_of(bodies, n));
  });
}

zn_status zn_j_volume_zonotope(const zn_zonotope *P, double *out) {
  return guard([&] {
    need(P, out);
    *out = j_volume_zonotope(P->value);
  });
}

zn_status zn_kazarnovskii_zonotope(const zn_zonotope *P, double *out) {
  return guard([&] {
    need(P, out);
    *out = kazarnovskii_zonotope(P->value);
  });
}

zn_status zn_disc_zonotope(const double *z, size_t length, int q, zn_zonotope **out) {
  return guard([&] {
    need(out);
    emit(out, disc_zonotope(vec(z, length), q));
  });
}

zn_status zn_faces_from_json(const char *json, zn_faces **out) {
  return guard([&] {
    need(out);
    emit(out, io::face_data_from_json(parse(json)));
  });
}

zn_status zn_faces_to_json(const zn_faces *F, char **out) {
  return guard([&] {
    need(F, out);
    *out = dup_string(io::write_json(io::to_json(F->value)));
  });
}

zn_status zn_faces_from_zonotope(const zn_zonotope *P, zn_faces **out) {
  return guard([&] {
    need(P, out);
    emit(out, zonotope_face_data(P->value));
  });
}

void zn_faces_free(zn_faces *F) { delete F; }

zn_status zn_faces_count(const zn_faces *F, size_t *out) {
  return guard([&] {
    need(F, out);
    *out = F->value.n_faces.size();
  });
}

zn_status zn_zonotope_faces(const zn_zonotope *P, int k, char **out) {
  return guard([&] {
    need(P, out);
    io::json list = io::json::array();
    for (const auto &f : zonotope_faces(P->value, k)) list.push_back({{"span_index", f.span_index}, {"signs", f.signs}});
    *out = dup_string(io::write_json(list));
  });
}

zn_status zn_normal_angle_face(const zn_faces *F, size_t face, size_t samples, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(F, out);
    checked_samples(samples);
    copy_estimate(normal_angle_mc(F->value, face, samples, seed), out);
  });
}

zn_status zn_normal_angle_zonotope(const zn_zonotope *P, const int *signs, size_t n, size_t samples, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(P, out);
    if (n > 0) need(signs);
    checked_samples(samples);
    const Zonotope C = canonicalize(P->value);
    require_same_dim(n, C.size(), "normal angle: sign vector length");
    std::vector<Vec> inside;
    std::vector<int> s(signs, signs + n);
    for (std::size_t i = 0; i < n; ++i) {
      require(s[i] >= -1 && s[i] <= 1, Errc::invalid_argument, "normal angle: signs must be -1, 0 or 1");
      if (s[i] == 0) inside.push_back(C.generators()[i]);
    }
    const ZonotopeFace face{0, Subspace::span(C.ambient_dim(), inside), std::move(s)};
    copy_estimate(normal_angle_mc(C, face, samples, seed), out);
  });
}

zn_status zn_j_volume_polytope_mc(const zn_faces *F, size_t samples, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(F, out);
    checked_samples(samples);
    copy_estimate(j_volume_polytope_mc(F->value, samples, seed), out);
  });
}

zn_status zn_kazarnovskii_polytope_mc(const zn_faces *F, size_t samples, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(F, out);
    checked_samples(samples);
    copy_estimate(kazarnovskii_polytope_mc(F->value, samples, seed), out);
  });
}

// ---------------------------------------------------------------------- random

zn_status zn_distribution_from_json(const char *json, zn_distribution **out) {
  return guard([&] {
    need(out);
    emit(out, io::distribution_from_json(parse(json)));
  });
}

zn_status zn_distribution_to_json(const zn_distribution *X, char **out) {
  return guard([&] {
    need(X, out);
    *out = dup_string(io::write_json(io::to_json(X->value)));
  });
}

void zn_distribution_free(zn_distribution *X) { delete X; }

zn_status zn_sampler_from_json(const char *json, zn_sampler **out) {
  return guard([&] {
    need(out);
    emit(out, io::sampler_from_json(parse(json)));
  });
}

void zn_sampler_free(zn_sampler *S) { delete S; }

zn_status zn_model_from_json(const char *json, zn_model **out) {
  return guard([&] {
    need(out);
    emit(out, io::block_model_from_json(parse(json)));
  });
}

void zn_model_free(zn_model *M) { delete M; }

zn_status zn_vitale_zonotope(const zn_distribution *X, zn_zonotope **out) {
  return guard([&] {
    need(X, out);
    emit(out, vitale_zonotope(X->value));
  });
}

zn_status zn_empirical_zonotope(const zn_sampler *S, size_t N, uint64_t seed, zn_zonotope **out) {
  return guard([&] {
    need(S, out);
    SeededSampler s = S->value;
    s.seed = seed;
    emit(out, empirical_zonotope(s, N));
  });
}

zn_status zn_expected_abs_det_exact(const zn_model *M, double *out) {
  return guard([&] {
    need(M, out);
    *out = expected_abs_det_exact(M->value);
  });
}

zn_status zn_expected_abs_det_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(M, out);
    copy_estimate(expected_abs_det_mc(M->value, N, seed), out);
  });
}

zn_status zn_expected_abs_det_complex_exact(const zn_model *M, double *out) {
  return guard([&] {
    need(M, out);
    *out = expected_abs_det_complex_exact(M->value);
  });
}

zn_status zn_expected_abs_det_complex_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(M, out);
    copy_estimate(expected_abs_det_complex_mc(M->value, N, seed), out);
  });
}

zn_status zn_expected_sq_abs_det_complex(const zn_model *M, double *out) {
  return guard([&] {
    need(M, out);
    *out = expected_sq_abs_det_complex(M->value);
  });
}

zn_status zn_expected_sq_abs_det_complex_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(M, out);
    copy_estimate(expected_sq_abs_det_complex_mc(M->value, N, seed), out);
  });
}

zn_status zn_bm_concavity_probe(const zn_sampler *X1, const zn_sampler *X2, int d, const zn_sampler *const *companions, size_t nc, const double *t,
                                size_t nt, int exact, size_t N, uint64_t seed, zn_estimate *out) {
  return guard([&] {
    need(X1, X2);
    if (nc > 0) need(companions);
    if (nt > 0) need(t, out);
    std::vector<SeededSampler> comp;
    for (std::size_t i = 0; i < nc; ++i) {
      need(companions[i]);
      comp.push_back(companions[i]->value);
    }
    const auto curve = bm_concavity_probe(X1->value, X2->value, d, comp, std::span<const double>(t, nt), exact ? EvalMode::exact : EvalMode::mc, N, seed);
    for (std::size_t i = 0; i < curve.size(); ++i) copy_estimate(curve[i], out + i);
  });
}

zn_status zn_triangle_af_gap(const zn_distribution *X, const zn_distribution *Y, zn_triangle_af *out) {
  return guard([&] {
    need(X, Y, out);
    const TriangleAf r = triangle_af_gap(X->value, Y->value);
    *out = {r.xy, r.xx, r.yy, r.gap};
  });
}

// -------------------------------------------------------------------- measures

zn_status zn_measure_from_json(const char *json, zn_measure **out) {
  return guard([&] {
    need(out);
    emit(out, io::measure_from_json(parse(json)));
  });
}

zn_status zn_measure_to_json(const zn_measure *mu, char **out) {
  return guard([&] {
    need(mu, out);
    *out = dup_string(io::write_json(io::to_json(mu->value)));
  });
}

void zn_measure_free(zn_measure *mu) { delete mu; }

zn_status zn_measure_mass(const zn_measure *mu, double *out) {
  return guard([&] {
    need(mu, out);
    *out = mu->value.total_mass();
  });
}

zn_status zn_cosine_transform_eval(const zn_measure *mu, const double *u, size_t n, double *out) {
  return guard([&] {
    need(mu, out);
    *out = cosine_transform_eval(mu->value, vec(u, n));
  });
}

zn_status zn_zonotope_to_measure(const zn_zonotope *K, zn_measure **out) {
  return guard([&] {
    need(K, out);
    emit(out, zonotope_to_measure(K->value));
  });
}

zn_status zn_measure_to_zonotope(const zn_measure *mu, zn_zonotope **out) {
  return guard([&] {
    need(mu, out);
    emit(out, measure_to_zonotope(mu->value));
  });
}

zn_status zn_measure_to_virtual(const zn_measure *mu, zn_virtual **out) {
  return guard([&] {
    need(mu, out);
    emit(out, measure_to_virtual(mu->value));
  });
}

zn_status zn_measure_combination(double alpha, const zn_measure *mu, double beta, const zn_measure *nu, zn_measure **out) {
  return guard([&] {
    need(mu, nu, out);
    emit(out, measure_combination(alpha, mu->value, beta, nu->value));
  });
}

// ------------------------------------------------------------------- constants

zn_status zn_tau(int m, double *out) {
  return guard([&] {
    need(out);
    *out = tau(m);
  });
}

zn_status zn_multivariate_gamma(int k, double x, double *out) {
  return guard([&] {
    need(out);
    *out = multivariate_gamma(k, x);
  });
}

zn_status zn_expected_simple_wedge_norm(int k, int m, double *out) {
  return guard([&] {
    need(out);
    *out = expected_simple_wedge_norm(k, m);
  });
}

zn_status zn_real_gaussian_abs_det(int n, double *out) {
  return guard([&] {
    need(out);
    *out = real_gaussian_abs_det(n);
  });
}

zn_status zn_complex_gaussian_abs_det(int n, double *out) {
  return guard([&] {
    need(out);
    *out = complex_gaussian_abs_det(n);
  });
}

zn_status zn_j_volume_ball(int n, double *out) {
  return guard([&] {
    need(out);
    *out = j_volume_ball(n);
  });
}

} // extern "C"
