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

#include <cmath>
#include <random>

#include "doctest.h"
#include "testkit/testkit.hpp"

#include "zonoid/io.hpp"

using namespace zonoid;
using zonoid::io::json;

namespace {
  Errc schema_code(const std::function<void()> &f) {
    try {
      f();
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::invalid_argument;
  }
} // namespace

TEST_CASE("writer prints 17 significant digits") {
  CHECK(io::write_json(json{{"value", 1.0}}) == "{\"value\": 1.0}");
  CHECK(io::write_json(json{{"value", 0.1}}) == "{\"value\": 0.10000000000000001}");
  CHECK(io::write_json(json::array({1, 2.5})) == "[1, 2.5]");
  std::mt19937_64 rng(60);
  std::uniform_real_distribution<double> U(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = U(rng) * std::pow(10.0, i % 40 - 20);
    CHECK(json::parse(io::write_json(json{{"x", x}}))["x"].get<double>() == x);
  }
  CHECK(io::write_json(json{{"x", std::nan("")}}) == "{\"x\": null}");
}

TEST_CASE("zonotope round trip is exact") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const auto K = testkit::random_gaussian_zonotope(rng, 3, 4);
    const auto text = io::write_json(io::to_json(K));
    const auto back = io::zonotope_from_json(json::parse(text));
    CHECK(back.generators() == K.generators());
    CHECK(io::write_json(io::to_json(back)) == text);
  }
  const auto G = io::zonotope_from_json(json::parse(R"({"ambient_dim": 3, "grading": {"base_dim": 3, "degree": 2}, "generators": [[1, 0, 0]]})"));
  REQUIRE(G.grading());
  CHECK(G.grading()->degree == 2);
}

TEST_CASE("schema errors") {
  CHECK(schema_code([] { io::zonotope_from_json(json::parse(R"({"ambient_dim": 2})")); }) == Errc::schema);
  CHECK(schema_code([] { io::zonotope_from_json(json::parse(R"({"ambient_dim": 2, "generators": [[1, "a"]]})")); }) == Errc::schema);
  CHECK(schema_code([] { io::zonotope_from_json(json::parse(R"([1, 2])")); }) == Errc::schema);
  CHECK(schema_code([] { io::distribution_from_json(json::parse(R"({"atoms": [[1]]})")); }) == Errc::schema);
  CHECK(schema_code([] { io::sampler_from_json(json::parse(R"({"sampler": "cauchy", "dim": 2})")); }) == Errc::schema);
  CHECK(schema_code([] { io::block_model_from_json(json::parse(R"({"size": 2, "field": "quaternion", "blocks": []})")); }) == Errc::schema);
}

TEST_CASE("other schemas round trip") {
  const auto mu = io::measure_from_json(json::parse(R"({"ambient_dim": 2, "atoms": [[1, 0]], "weights": [0.5]})"));
  CHECK(io::measure_from_json(io::to_json(mu)).weights() == mu.weights());
  const auto d = io::distribution_from_json(json::parse(R"({"atoms": [[1, 0], [0, 1]], "probs": [0.5, 0.5]})"));
  CHECK(io::distribution_from_json(io::to_json(d)).atoms() == d.atoms());
  const auto W = io::virtual_from_json(io::to_json(VirtualZonotope(Zonotope::cube(2), Zonotope::cube(2))));
  CHECK(virtual_length(W) == 0.0);
  const auto model = io::block_model_from_json(json::parse(
      R"({"size": 2, "field": "real", "blocks": [{"width": 1, "sampler": "gaussian"}, {"width": 1, "distribution": {"atoms": [[1, 0]], "probs": [1]}}]})"));
  CHECK(model.blocks.size() == 2);
  CHECK(model.blocks[0].sampler.kind == SamplerKind::gaussian);
  CHECK(model.blocks[0].sampler.dim == 2);
  CHECK(model.blocks[1].sampler.kind == SamplerKind::discrete);
  const auto cx = io::block_model_from_json(json::parse(R"({"size": 2, "field": "complex", "blocks": [{"width": 2, "sampler": "gaussian"}]})"));
  CHECK(cx.blocks[0].sampler.kind == SamplerKind::complex_gaussian);
  CHECK(cx.blocks[0].sampler.dim == 8);
  const auto a = io::multivector_from_json(json::parse(R"({"ambient_dim": 3, "degree": 1, "coeffs": [1, 2, 3]})"));
  CHECK(io::multivector_from_json(io::to_json(a)) == a);
  const auto c = io::complex_multivector_from_json(json::parse(R"({"complex_dim": 2, "degree": 1, "coeffs": [[1, 2], [3, 4]]})"));
  CHECK(io::complex_multivector_from_json(io::to_json(c)) == c);
  PolytopeFaceData F;
  F.ambient_dim = 2;
  F.vertices = {Vec::Zero(2), Vec::Ones(2)};
  F.n_faces = {{0, 1}};
  const auto G = io::face_data_from_json(io::to_json(F));
  CHECK(G.n_faces == F.n_faces);
  CHECK(G.vertices == F.vertices);
}
