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

#include "zonoid/io.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

namespace zonoid::io {

  namespace {

    [[noreturn]] void schema_error(const std::string &what) { throw Error(Errc::schema, what); }

    const json &field(const json &j, const char *key, const char *what) {
      if (!j.is_object()) schema_error(std::string(what) + ": expected an object");
      auto it = j.find(key);
      if (it == j.end()) schema_error(std::string(what) + ": missing field \"" + key + "\"");
      return *it;
    }

    int int_field(const json &j, const char *key, const char *what) {
      const json &v = field(j, key, what);
      if (!v.is_number_integer()) schema_error(std::string(what) + ": field \"" + key + "\" must be an integer");
      return v.get<int>();
    }

    double number(const json &v, const char *what) {
      if (!v.is_number()) schema_error(std::string(what) + ": expected a number");
      return v.get<double>();
    }

    void write_double(std::string &out, double x) {
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      if (std::string_view(buf).find_first_of(".eE") == std::string_view::npos) out += ".0";
    }

    void write(std::string &out, const json &j) {
      switch (j.type()) {
        case json::value_t::object: {
          out += '{';
          bool first = true;
          for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ", ";
            first = false;
            out += json(it.key()).dump();
            out += ": ";
            write(out, it.value());
          }
          out += '}';
          return;
        }
        case json::value_t::array: {
          out += '[';
          for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ", ";
            write(out, j[i]);
          }
          out += ']';
          return;
        }
        case json::value_t::number_float:
          write_double(out, j.get<double>());
          return;
        default:
          out += j.dump();
      }
    }

  } // namespace

  std::string write_json(const json &j) {
    std::string out;
    write(out, j);
    return out;
  }

  Vec vector_from_json(const json &j, const char *what) {
    if (!j.is_array()) schema_error(std::string(what) + ": expected an array of numbers");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], what);
    return v;
  }

  std::vector<Vec> vectors_from_json(const json &j, const char *what) {
    if (!j.is_array()) schema_error(std::string(what) + ": expected an array of vectors");
    std::vector<Vec> out;
    for (const auto &row : j) out.push_back(vector_from_json(row, what));
    return out;
  }

  json to_json(const Vec &v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
  }

  json to_json(const Zonotope &K) {
    json j;
    j["ambient_dim"] = K.ambient_dim();
    if (K.grading()) {
      json g{{"base_dim", K.grading()->base_dim}, {"degree", K.grading()->degree}};
      if (K.grading()->complex) g["complex"] = true;
      j["grading"] = g;
    } else {
      j["grading"] = nullptr;
    }
    json gens = json::array();
    for (const auto &v : K.generators()) gens.push_back(to_json(v));
    j["generators"] = gens;
    return j;
  }

  Zonotope zonotope_from_json(const json &j) {
    const int dim = int_field(j, "ambient_dim", "zonotope");
    auto gens = vectors_from_json(field(j, "generators", "zonotope"), "zonotope generators");
    for (const auto &g : gens)
      if (g.size() != dim) schema_error("zonotope: generator length differs from ambient_dim");
    auto it = j.find("grading");
    if (it == j.end() || it->is_null()) {
      if (dim < 1) schema_error("zonotope: ambient_dim must be positive");
      return Zonotope(dim, std::move(gens));
    }
    Grading g;
    g.base_dim = int_field(*it, "base_dim", "grading");
    g.degree = int_field(*it, "degree", "grading");
    if (auto c = it->find("complex"); c != it->end()) {
      if (!c->is_boolean()) schema_error("grading: \"complex\" must be a boolean");
      g.complex = c->get<bool>();
    }
    if (g.base_dim < 1 || g.degree < 0 || g.base_dim > max_exterior_dim) schema_error("grading: invalid base_dim or degree");
    if (g.hosted_dim() != dim) schema_error("zonotope: ambient_dim does not match grading");
    return Zonotope(g, std::move(gens));
  }

  json to_json(const VirtualZonotope &W) { return {{"plus", to_json(W.plus)}, {"minus", to_json(W.minus)}}; }

  VirtualZonotope virtual_from_json(const json &j) {
    return VirtualZonotope(zonotope_from_json(field(j, "plus", "virtual zonotope")), zonotope_from_json(field(j, "minus", "virtual zonotope")));
  }

  json to_json(const DiscreteEvenMeasure &mu) {
    json atoms = json::array();
    for (const auto &a : mu.atoms()) atoms.push_back(to_json(a));
    return {{"ambient_dim", mu.ambient_dim()}, {"atoms", atoms}, {"weights", mu.weights()}};
  }

  DiscreteEvenMeasure measure_from_json(const json &j) {
    auto atoms = vectors_from_json(field(j, "atoms", "measure"), "measure atoms");
    const Vec w = vector_from_json(field(j, "weights", "measure"), "measure weights");
    int dim = 0;
    if (j.contains("ambient_dim")) {
      dim = int_field(j, "ambient_dim", "measure");
    } else if (!atoms.empty()) {
      dim = static_cast<int>(atoms.front().size());
    } else {
      schema_error("measure: ambient_dim required when there are no atoms");
    }
    if (static_cast<std::size_t>(w.size()) != atoms.size()) schema_error("measure: atoms and weights differ in length");
    for (const auto &a : atoms)
      if (a.size() != dim) schema_error("measure: atom length differs from ambient_dim");
    return DiscreteEvenMeasure(dim, atoms, std::vector<double>(w.data(), w.data() + w.size()));
  }

  json to_json(const DiscreteDistribution &d) {
    json atoms = json::array();
    for (const auto &a : d.atoms()) atoms.push_back(to_json(a));
    return {{"atoms", atoms}, {"probs", d.probs()}};
  }

  DiscreteDistribution distribution_from_json(const json &j) {
    auto atoms = vectors_from_json(field(j, "atoms", "distribution"), "distribution atoms");
    const Vec p = vector_from_json(field(j, "probs", "distribution"), "distribution probs");
    if (atoms.empty()) schema_error("distribution: no atoms");
    if (static_cast<std::size_t>(p.size()) != atoms.size()) schema_error("distribution: atoms and probs differ in length");
    for (const auto &a : atoms)
      if (a.size() != atoms.front().size()) schema_error("distribution: atoms differ in length");
    return DiscreteDistribution(std::move(atoms), std::vector<double>(p.data(), p.data() + p.size()));
  }

  namespace {

    SeededSampler named_sampler(const std::string &name, int dim, int column_dim, bool complex) {
      if (name == "gaussian") return complex ? SeededSampler::complex_gaussian(dim) : SeededSampler::gaussian(dim);
      if (name == "complex_gaussian") return SeededSampler::complex_gaussian(dim);
      if (name == "uniform_sphere") {
        if (column_dim == dim) return SeededSampler::uniform_sphere(dim);
        // each column independently uniform on its sphere
        return SeededSampler::from_function(dim, [dim, column_dim](CounterStream &rng) {
          Vec v(dim);
          for (int i = 0; i < dim; ++i) v[i] = rng.normal();
          for (int c = 0; c < dim / column_dim; ++c) v.segment(c * column_dim, column_dim).normalize();
          return v;
        });
      }
      schema_error("unknown sampler \"" + name + "\"");
    }

  } // namespace

  SeededSampler sampler_from_json(const json &j) {
    if (j.contains("atoms")) return SeededSampler::discrete(distribution_from_json(j));
    const json &name = field(j, "sampler", "sampler");
    if (!name.is_string()) schema_error("sampler: \"sampler\" must be a string");
    const int dim = int_field(j, "dim", "sampler");
    if (dim < 1) schema_error("sampler: dim must be positive");
    std::uint64_t seed = 0;
    if (j.contains("seed")) seed = field(j, "seed", "sampler").get<std::uint64_t>();
    SeededSampler s = named_sampler(name.get<std::string>(), dim, dim, false);
    s.seed = seed;
    return s;
  }

  MatrixBlockModel block_model_from_json(const json &j) {
    MatrixBlockModel model;
    model.size = int_field(j, "size", "block model");
    if (model.size < 1) schema_error("block model: size must be positive");
    const json &f = field(j, "field", "block model");
    if (!f.is_string() || (f != "real" && f != "complex")) schema_error("block model: field must be \"real\" or \"complex\"");
    model.field = f == "complex" ? Field::complex : Field::real;
    const bool complex = model.field == Field::complex;
    const int column_dim = complex ? 2 * model.size : model.size;
    const json &blocks = field(j, "blocks", "block model");
    if (!blocks.is_array() || blocks.empty()) schema_error("block model: blocks must be a nonempty array");
    for (const auto &b : blocks) {
      const int w = int_field(b, "width", "block");
      if (w < 1) schema_error("block: width must be positive");
      if (b.contains("distribution")) {
        DiscreteDistribution d = distribution_from_json(b["distribution"]);
        if (d.dim() != column_dim * w) schema_error("block: distribution atoms must have size * width entries (doubled for complex)");
        model.blocks.push_back({w, SeededSampler::discrete(std::move(d))});
      } else {
        const json &name = field(b, "sampler", "block");
        if (!name.is_string()) schema_error("block: \"sampler\" must be a string");
        model.blocks.push_back({w, named_sampler(name.get<std::string>(), column_dim * w, column_dim, complex)});
      }
    }
    int total = 0;
    for (const auto &b : model.blocks) total += b.width;
    if (total != model.size) schema_error("block model: widths must sum to size");
    return model;
  }

  json to_json(const PolytopeFaceData &P) {
    json verts = json::array();
    for (const auto &v : P.vertices) verts.push_back(to_json(v));
    return {{"ambient_dim", P.ambient_dim}, {"vertices", verts}, {"n_faces", P.n_faces}};
  }

  PolytopeFaceData face_data_from_json(const json &j) {
    PolytopeFaceData P;
    P.ambient_dim = int_field(j, "ambient_dim", "face data");
    if (P.ambient_dim < 2 || P.ambient_dim % 2 != 0) schema_error("face data: ambient_dim must be even and positive");
    P.vertices = vectors_from_json(field(j, "vertices", "face data"), "face data vertices");
    for (const auto &v : P.vertices)
      if (v.size() != P.ambient_dim) schema_error("face data: vertex length differs from ambient_dim");
    const json &faces = field(j, "n_faces", "face data");
    if (!faces.is_array()) schema_error("face data: n_faces must be an array");
    for (const auto &f : faces) {
      if (!f.is_array() || f.empty()) schema_error("face data: each face must be a nonempty index array");
      std::vector<std::size_t> idx;
      for (const auto &i : f) {
        if (!i.is_number_unsigned() || i.get<std::size_t>() >= P.vertices.size()) schema_error("face data: vertex index out of range");
        idx.push_back(i.get<std::size_t>());
      }
      P.n_faces.push_back(std::move(idx));
    }
    return P;
  }

  json to_json(const Multivector &a) { return {{"ambient_dim", a.ambient_dim()}, {"degree", a.degree()}, {"coeffs", a.coeff_vector()}}; }

  Multivector multivector_from_json(const json &j) {
    const int m = int_field(j, "ambient_dim", "multivector");
    const int k = int_field(j, "degree", "multivector");
    if (m < 1 || m > max_exterior_dim || k < 0) schema_error("multivector: invalid ambient_dim or degree");
    const Vec c = vector_from_json(field(j, "coeffs", "multivector"), "multivector coeffs");
    if (static_cast<std::uint64_t>(c.size()) != binomial(m, k)) schema_error("multivector: coefficient count must be C(ambient_dim, degree)");
    return Multivector(m, k, std::vector<double>(c.data(), c.data() + c.size()));
  }

  json to_json(const ComplexMultivector &a) {
    json c = json::array();
    for (const auto &z : a.coeffs()) c.push_back({z.real(), z.imag()});
    return {{"complex_dim", a.ambient_dim()}, {"degree", a.degree()}, {"coeffs", c}};
  }

  ComplexMultivector complex_multivector_from_json(const json &j) {
    const int n = int_field(j, "complex_dim", "complex multivector");
    const int k = int_field(j, "degree", "complex multivector");
    if (n < 1 || n > max_exterior_dim || k < 0) schema_error("complex multivector: invalid complex_dim or degree");
    const json &c = field(j, "coeffs", "complex multivector");
    if (!c.is_array() || c.size() != binomial(n, k)) schema_error("complex multivector: coefficient count must be C(complex_dim, degree)");
    std::vector<std::complex<double>> z;
    for (const auto &e : c) {
      if (!e.is_array() || e.size() != 2) schema_error("complex multivector: coefficients are [re, im] pairs");
      z.emplace_back(number(e[0], "complex multivector"), number(e[1], "complex multivector"));
    }
    return ComplexMultivector(n, k, std::move(z));
  }

  json to_json(const Estimate &e) { return {{"value", e.value}, {"stderr", e.std_error}, {"samples", e.samples}}; }

  json to_json(const Interval &i) { return json::array({i.lo, i.hi}); }

} // namespace zonoid::io
