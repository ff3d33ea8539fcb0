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

/*
 * C interface to the zonoid library.
 *
 * Every object is an opaque handle created by a *_from_json or constructor call and
 * released with the matching *_free. Every function returns a zn_status; on failure
 * zn_last_error() describes the problem (thread-local, valid until the next call on
 * the same thread) and output arguments are left untouched. Strings returned through
 * char** outputs are owned by the caller and released with zn_string_free.
 *
 * Matrices passed as flat arrays are row-major. Complex vectors use interleaved
 * (re, im) coordinates.
 */

#ifndef ZONOID_ZONOID_H
#define ZONOID_ZONOID_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZN_API __declspec(dllexport)
#else
#define ZN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zn_status {
  ZN_OK = 0,
  ZN_ERR_DIMENSION = 1,
  ZN_ERR_INVALID_ARGUMENT = 2,
  ZN_ERR_PRECONDITION = 3,
  ZN_ERR_TOO_LARGE = 4,
  ZN_ERR_RANK_DEFICIENT = 5,
  ZN_ERR_SCHEMA = 6,
  ZN_ERR_NULL_POINTER = 7,
  ZN_ERR_INTERNAL = 8
} zn_status;

typedef struct zn_zonotope zn_zonotope;
typedef struct zn_virtual zn_virtual;
typedef struct zn_measure zn_measure;
typedef struct zn_distribution zn_distribution;
typedef struct zn_sampler zn_sampler;
typedef struct zn_model zn_model;
typedef struct zn_faces zn_faces;
typedef struct zn_multivector zn_multivector;

typedef struct zn_interval {
  double lo;
  double hi;
} zn_interval;

typedef struct zn_estimate {
  double value;
  double std_error;
  uint64_t samples;
} zn_estimate;

typedef struct zn_triangle_af {
  double xy;
  double xx;
  double yy;
  double gap;
} zn_triangle_af;

/* Writes out[0..out_dim) = M(args[0], ..., args[nargs-1]); dims[i] is the length of args[i]. */
typedef void (*zn_multilinear_fn)(const double *const *args, const size_t *dims, size_t nargs, double *out, size_t out_dim, void *user);

/* ---- general -------------------------------------------------------------------------- */
ZN_API const char *zn_version(void);
ZN_API const char *zn_last_error(void);
ZN_API const char *zn_status_name(zn_status status);
ZN_API void zn_string_free(char *s);
/* Re-serializes a JSON document with 17 significant digits per double. */
ZN_API zn_status zn_json_normalize(const char *json, char **out);

/* ---- zonotopes ------------------------------------------------------------------------ */
ZN_API zn_status zn_zonotope_from_json(const char *json, zn_zonotope **out);
ZN_API zn_status zn_zonotope_to_json(const zn_zonotope *K, char **out);
/* count generators of length dim, row-major. */
ZN_API zn_status zn_zonotope_new(size_t dim, const double *generators, size_t count, zn_zonotope **out);
ZN_API void zn_zonotope_free(zn_zonotope *K);
ZN_API zn_status zn_zonotope_dim(const zn_zonotope *K, size_t *out);
ZN_API zn_status zn_zonotope_size(const zn_zonotope *K, size_t *out);
ZN_API zn_status zn_zonotope_generator(const zn_zonotope *K, size_t index, double *out, size_t capacity);

ZN_API zn_status zn_support(const zn_zonotope *K, const double *u, size_t n, double *out);
ZN_API zn_status zn_minkowski_sum(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out);
ZN_API zn_status zn_scale(const zn_zonotope *K, double lambda, zn_zonotope **out);
ZN_API zn_status zn_length(const zn_zonotope *K, double *out);
ZN_API zn_status zn_linear_image(const double *M, size_t rows, size_t cols, const zn_zonotope *K, zn_zonotope **out);
ZN_API zn_status zn_canonicalize(const zn_zonotope *K, zn_zonotope **out);
ZN_API zn_status zn_approx_equal(const zn_zonotope *K, const zn_zonotope *L, double tol, int *out);
ZN_API zn_status zn_radius_exact(const zn_zonotope *K, double *out);
ZN_API zn_status zn_radius_bounds(const zn_zonotope *K, zn_interval *out);
ZN_API zn_status zn_hausdorff_estimate(const zn_zonotope *K, const zn_zonotope *L, double delta, zn_interval *out);
/* count unit directions of length dim, row-major. */
ZN_API zn_status zn_direction_net(size_t dim, size_t count, uint64_t seed, double *out);

/* ---- virtual zonotopes ---------------------------------------------------------------- */
ZN_API zn_status zn_virtual_from_json(const char *json, zn_virtual **out);
ZN_API zn_status zn_virtual_to_json(const zn_virtual *W, char **out);
ZN_API zn_status zn_virtual_new(const zn_zonotope *plus, const zn_zonotope *minus, zn_virtual **out);
ZN_API void zn_virtual_free(zn_virtual *W);
ZN_API zn_status zn_virtual_support(const zn_virtual *W, const double *u, size_t n, double *out);
ZN_API zn_status zn_virtual_add(const zn_virtual *A, const zn_virtual *B, zn_virtual **out);
ZN_API zn_status zn_virtual_negate(const zn_virtual *A, zn_virtual **out);
ZN_API zn_status zn_virtual_length(const zn_virtual *W, double *out);
ZN_API zn_status zn_virtual_equal(const zn_virtual *A, const zn_virtual *B, double tol, int *out);
ZN_API zn_status zn_virtual_tensor(const zn_virtual *A, const zn_virtual *B, zn_virtual **out);

/* ---- algebra -------------------------------------------------------------------------- */
ZN_API zn_status zn_tensor_product(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out);
ZN_API zn_status zn_wedge_product(const zn_zonotope *K, const zn_zonotope *L, zn_zonotope **out);
ZN_API zn_status zn_wedge_power(const zn_zonotope *K, int d, zn_zonotope **out);
ZN_API zn_status zn_induced_map(zn_multilinear_fn map, void *user, size_t out_dim, const zn_zonotope *const *factors, size_t p, uint64_t probe_seed,
                                zn_zonotope **out, double *linearity_defect);
ZN_API zn_status zn_mixed_volume(const zn_zonotope *const *bodies, size_t m, double *out);
/* Exact rational value for integer generators. */
ZN_API zn_status zn_mixed_volume_exact(const zn_zonotope *const *bodies, size_t m, int64_t *numerator, int64_t *denominator);
ZN_API zn_status zn_volume(const zn_zonotope *K, double *out);
ZN_API zn_status zn_volume_exact(const zn_zonotope *K, int64_t *numerator, int64_t *denominator);
ZN_API zn_status zn_intrinsic_volume(const zn_zonotope *K, int d, double *out);
ZN_API zn_status zn_hodge_star_zonoid(const zn_zonotope *K, zn_zonotope **out);
ZN_API zn_status zn_projection_body(const zn_zonotope *K, zn_zonotope **out);
ZN_API zn_status zn_af_gap(const zn_zonotope *K1, const zn_zonotope *K2, const zn_zonotope *const *rest, size_t r, double *out);
ZN_API zn_status zn_af_gap_with_middle(const zn_zonotope *K1, const zn_zonotope *K2, const zn_zonotope *C, double *out);
ZN_API zn_status zn_reverse_af_gap(const zn_zonotope *const *bodies, const int *degrees, size_t p, double *out);

/* ---- exterior algebra ----------------------------------------------------------------- */
ZN_API zn_status zn_multivector_from_json(const char *json, zn_multivector **out);
ZN_API zn_status zn_multivector_to_json(const zn_multivector *a, char **out);
ZN_API void zn_multivector_free(zn_multivector *a);
ZN_API zn_status zn_mv_wedge(const zn_multivector *a, const zn_multivector *b, zn_multivector **out);
/* k vectors of length m, row-major. */
ZN_API zn_status zn_mv_blade(size_t m, const double *vectors, size_t k, zn_multivector **out);
ZN_API zn_status zn_mv_hodge(const zn_multivector *a, zn_multivector **out);
ZN_API zn_status zn_mv_norm(const zn_multivector *a, double *out);
ZN_API zn_status zn_mv_complex_wedge(const zn_multivector *a, const zn_multivector *b, zn_multivector **out);
/* Interleaved coordinates; *length receives 2 C(n, k) even when capacity is too small. */
ZN_API zn_status zn_mv_realify(const zn_multivector *a, double *out, size_t capacity, size_t *length);

/* ---- complex structures and J-volumes ------------------------------------------------- */
/* n basis vectors of length 2n (row-major); J is 2n x 2n row-major or NULL for the standard structure. */
ZN_API zn_status zn_sigma_j(size_t n, const double *basis, const double *J, double *out);
ZN_API zn_status zn_complex_wedge_zonoids(const zn_zonotope *const *factors, size_t p, zn_zonotope **out);
ZN_API zn_status zn_mixed_j_volume(const zn_zonotope *const *bodies, size_t n, double *out);
ZN_API zn_status zn_j_volume_zonotope(const zn_zonotope *P, double *out);
ZN_API zn_status zn_kazarnovskii_zonotope(const zn_zonotope *P, double *out);
ZN_API zn_status zn_disc_zonotope(const double *z, size_t length, int q, zn_zonotope **out);

ZN_API zn_status zn_faces_from_json(const char *json, zn_faces **out);
ZN_API zn_status zn_faces_to_json(const zn_faces *F, char **out);
ZN_API zn_status zn_faces_from_zonotope(const zn_zonotope *P, zn_faces **out);
ZN_API void zn_faces_free(zn_faces *F);
ZN_API zn_status zn_faces_count(const zn_faces *F, size_t *out);
/* JSON list of {"span_index", "signs"} for the k-faces of a zonotope (signs index canonical generators). */
ZN_API zn_status zn_zonotope_faces(const zn_zonotope *P, int k, char **out);
ZN_API zn_status zn_normal_angle_face(const zn_faces *F, size_t face, size_t samples, uint64_t seed, zn_estimate *out);
/* The face direction space is spanned by the generators with sign 0. */
ZN_API zn_status zn_normal_angle_zonotope(const zn_zonotope *P, const int *signs, size_t n, size_t samples, uint64_t seed, zn_estimate *out);
ZN_API zn_status zn_j_volume_polytope_mc(const zn_faces *F, size_t samples, uint64_t seed, zn_estimate *out);
ZN_API zn_status zn_kazarnovskii_polytope_mc(const zn_faces *F, size_t samples, uint64_t seed, zn_estimate *out);

/* ---- random vectors and determinants -------------------------------------------------- */
ZN_API zn_status zn_distribution_from_json(const char *json, zn_distribution **out);
ZN_API zn_status zn_distribution_to_json(const zn_distribution *X, char **out);
ZN_API void zn_distribution_free(zn_distribution *X);
ZN_API zn_status zn_sampler_from_json(const char *json, zn_sampler **out);
ZN_API void zn_sampler_free(zn_sampler *S);
ZN_API zn_status zn_model_from_json(const char *json, zn_model **out);
ZN_API void zn_model_free(zn_model *M);

ZN_API zn_status zn_vitale_zonotope(const zn_distribution *X, zn_zonotope **out);
ZN_API zn_status zn_empirical_zonotope(const zn_sampler *S, size_t N, uint64_t seed, zn_zonotope **out);
ZN_API zn_status zn_expected_abs_det_exact(const zn_model *M, double *out);
ZN_API zn_status zn_expected_abs_det_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out);
ZN_API zn_status zn_expected_abs_det_complex_exact(const zn_model *M, double *out);
ZN_API zn_status zn_expected_abs_det_complex_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out);
ZN_API zn_status zn_expected_sq_abs_det_complex(const zn_model *M, double *out);
ZN_API zn_status zn_expected_sq_abs_det_complex_mc(const zn_model *M, size_t N, uint64_t seed, zn_estimate *out);
/* out receives nt estimates; exact != 0 selects the exact path (discrete inputs only). */
ZN_API zn_status zn_bm_concavity_probe(const zn_sampler *X1, const zn_sampler *X2, int d, const zn_sampler *const *companions, size_t nc, const double *t,
                                       size_t nt, int exact, size_t N, uint64_t seed, zn_estimate *out);
ZN_API zn_status zn_triangle_af_gap(const zn_distribution *X, const zn_distribution *Y, zn_triangle_af *out);

/* ---- measures ------------------------------------------------------------------------- */
ZN_API zn_status zn_measure_from_json(const char *json, zn_measure **out);
ZN_API zn_status zn_measure_to_json(const zn_measure *mu, char **out);
ZN_API void zn_measure_free(zn_measure *mu);
ZN_API zn_status zn_measure_mass(const zn_measure *mu, double *out);
ZN_API zn_status zn_cosine_transform_eval(const zn_measure *mu, const double *u, size_t n, double *out);
ZN_API zn_status zn_zonotope_to_measure(const zn_zonotope *K, zn_measure **out);
ZN_API zn_status zn_measure_to_zonotope(const zn_measure *mu, zn_zonotope **out);
ZN_API zn_status zn_measure_to_virtual(const zn_measure *mu, zn_virtual **out);
ZN_API zn_status zn_measure_combination(double alpha, const zn_measure *mu, double beta, const zn_measure *nu, zn_measure **out);

/* ---- constants ------------------------------------------------------------------------ */
ZN_API zn_status zn_tau(int m, double *out);
ZN_API zn_status zn_multivariate_gamma(int k, double x, double *out);
ZN_API zn_status zn_expected_simple_wedge_norm(int k, int m, double *out);
ZN_API zn_status zn_real_gaussian_abs_det(int n, double *out);
ZN_API zn_status zn_complex_gaussian_abs_det(int n, double *out);
ZN_API zn_status zn_j_volume_ball(int n, double *out);

#ifdef __cplusplus
}
#endif

#endif /* ZONOID_ZONOID_H */
