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

/// @file
/// JSON schemas shared by the C API and the command-line tool, and a writer that
/// prints every double with 17 significant digits.
///
///   zonotope      {"ambient_dim": D, "grading": {"base_dim": m, "degree": k[, "complex": true]} | null, "generators": [[...], ...]}
///   virtual       {"plus": zonotope, "minus": zonotope}
///   measure       {"ambient_dim": m, "atoms": [[...], ...], "weights": [...]}
///   distribution  {"atoms": [[...], ...], "probs": [...]}
///   sampler       distribution | {"sampler": "gaussian" | "complex_gaussian" | "uniform_sphere", "dim": d}
///   block model   {"size": m, "field": "real" | "complex", "blocks": [{"width": w, "distribution": distribution} | {"width": w, "sampler": name}, ...]}
///   face data     {"ambient_dim": 2n, "vertices": [[...], ...], "n_faces": [[i, j, ...], ...]}
///   multivector   {"ambient_dim": m, "degree": k, "coeffs": [...]}
///   complex mv    {"complex_dim": n, "degree": k, "coeffs": [[re, im], ...]}

#pragma once

#include <string>

#include "json.hpp"

#include "zonoid/exterior.hpp"
#include "zonoid/jvolume.hpp"
#include "zonoid/measures.hpp"
#include "zonoid/random.hpp"
#include "zonoid/zonotope.hpp"

namespace zonoid::io {

  using json = nlohmann::json;

  /// Serializes with doubles as %.17g (a trailing ".0" keeps integral doubles floating).
  std::string write_json(const json &j);

  json to_json(const Zonotope &K);
  Zonotope zonotope_from_json(const json &j);

  json to_json(const VirtualZonotope &W);
  VirtualZonotope virtual_from_json(const json &j);

  json to_json(const DiscreteEvenMeasure &mu);
  DiscreteEvenMeasure measure_from_json(const json &j);

  json to_json(const DiscreteDistribution &d);
  DiscreteDistribution distribution_from_json(const json &j);

  /// Named sampler or distribution. Complex-field blocks use the complex Gaussian for "gaussian".
  SeededSampler sampler_from_json(const json &j);

  MatrixBlockModel block_model_from_json(const json &j);

  json to_json(const PolytopeFaceData &P);
  PolytopeFaceData face_data_from_json(const json &j);

  json to_json(const Multivector &a);
  Multivector multivector_from_json(const json &j);
  json to_json(const ComplexMultivector &a);
  ComplexMultivector complex_multivector_from_json(const json &j);

  json to_json(const Estimate &e);
  json to_json(const Interval &i);

  /// Numeric array helpers with schema checks.
  Vec vector_from_json(const json &j, const char *what);
  std::vector<Vec> vectors_from_json(const json &j, const char *what);
  json to_json(const Vec &v);

} // namespace zonoid::io
