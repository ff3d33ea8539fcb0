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

// Command-line front end over the C interface. Every command reads JSON files
// (or "-" for standard input) and prints one JSON document on standard output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zonoid/zonoid.h"

namespace {

  using json = nlohmann::json;

  constexpr int exit_usage = 1;
  constexpr int exit_schema = 2;
  constexpr int exit_precondition = 3;

  struct CliError {
    int exit_code;
    std::string code;
    std::string message;
  };

  [[noreturn]] void usage_error(const std::string &msg) { throw CliError{exit_usage, "usage", msg}; }

  void check(zn_status s) {
    if (s == ZN_OK) return;
    throw CliError{s == ZN_ERR_SCHEMA ? exit_schema : exit_precondition, zn_status_name(s), zn_last_error()};
  }

  template <class T, void (*Free)(T *)> struct Deleter {
    void operator()(T *p) const { Free(p); }
  };
  using Zono = std::unique_ptr<zn_zonotope, Deleter<zn_zonotope, zn_zonotope_free>>;
  using Virt = std::unique_ptr<zn_virtual, Deleter<zn_virtual, zn_virtual_free>>;
  using Meas = std::unique_ptr<zn_measure, Deleter<zn_measure, zn_measure_free>>;
  using Dist = std::unique_ptr<zn_distribution, Deleter<zn_distribution, zn_distribution_free>>;
  using Samp = std::unique_ptr<zn_sampler, Deleter<zn_sampler, zn_sampler_free>>;
  using Model = std::unique_ptr<zn_model, Deleter<zn_model, zn_model_free>>;
  using Faces = std::unique_ptr<zn_faces, Deleter<zn_faces, zn_faces_free>>;
  using Mvec = std::unique_ptr<zn_multivector, Deleter<zn_multivector, zn_multivector_free>>;

  std::string read_input(const std::string &path) {
    std::ostringstream ss;
    if (path == "-") {
      ss << std::cin.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) throw CliError{exit_usage, "io", "cannot open " + path};
      ss << in.rdbuf();
    }
    return ss.str();
  }

  json parse_json(const std::string &text, const std::string &what) {
    try {
      return json::parse(text);
    } catch (const json::exception &e) {
      throw CliError{exit_schema, "schema", what + ": malformed JSON: " + e.what()};
    }
  }

  /// Accepts the raw object or a {"value": object} wrapper produced by another command.
  std::string unwrap(const std::string &path) {
    json j = parse_json(read_input(path), path);
    if (j.is_object() && j.size() == 1 && j.contains("value") && j["value"].is_object()) j = j["value"];
    return j.dump();
  }

  std::string take(char *s) {
    std::string out(s);
    zn_string_free(s);
    return out;
  }

  Zono load_zonotope(const std::string &path) {
    zn_zonotope *K = nullptr;
    check(zn_zonotope_from_json(unwrap(path).c_str(), &K));
    return Zono(K);
  }

  std::vector<Zono> load_zonotopes(const std::vector<std::string> &paths) {
    std::vector<Zono> out;
    for (const auto &p : paths) out.push_back(load_zonotope(p));
    return out;
  }

  std::vector<const zn_zonotope *> raw(const std::vector<Zono> &v) {
    std::vector<const zn_zonotope *> out;
    for (const auto &p : v) out.push_back(p.get());
    return out;
  }

  Virt load_virtual(const std::string &path) {
    zn_virtual *W = nullptr;
    check(zn_virtual_from_json(unwrap(path).c_str(), &W));
    return Virt(W);
  }

  Meas load_measure(const std::string &path) {
    zn_measure *mu = nullptr;
    check(zn_measure_from_json(unwrap(path).c_str(), &mu));
    return Meas(mu);
  }

  Dist load_distribution(const std::string &text) {
    zn_distribution *X = nullptr;
    check(zn_distribution_from_json(text.c_str(), &X));
    return Dist(X);
  }

  Samp load_sampler(const std::string &text) {
    zn_sampler *S = nullptr;
    check(zn_sampler_from_json(text.c_str(), &S));
    return Samp(S);
  }

  Model load_model(const std::string &path) {
    zn_model *M = nullptr;
    check(zn_model_from_json(unwrap(path).c_str(), &M));
    return Model(M);
  }

  Faces load_faces(const std::string &path) {
    zn_faces *F = nullptr;
    check(zn_faces_from_json(unwrap(path).c_str(), &F));
    return Faces(F);
  }

  Mvec load_multivector(const std::string &path) {
    zn_multivector *a = nullptr;
    check(zn_multivector_from_json(unwrap(path).c_str(), &a));
    return Mvec(a);
  }

  json zonotope_json(const zn_zonotope *K) {
    char *s = nullptr;
    check(zn_zonotope_to_json(K, &s));
    return json::parse(take(s));
  }

  json zonotope_json(zn_zonotope *K) {
    Zono owner(K);
    return zonotope_json(static_cast<const zn_zonotope *>(owner.get()));
  }

  json virtual_json(zn_virtual *W) {
    Virt owner(W);
    char *s = nullptr;
    check(zn_virtual_to_json(W, &s));
    return json::parse(take(s));
  }

  json multivector_json(zn_multivector *a) {
    Mvec owner(a);
    char *s = nullptr;
    check(zn_multivector_to_json(a, &s));
    return json::parse(take(s));
  }

  /// "[1, 2]" or "1,2".
  std::vector<double> parse_vector(const std::string &text, const std::string &what) {
    if (text.empty()) usage_error(what + " is required");
    std::vector<double> out;
    if (text.front() == '[') {
      const json j = parse_json(text, what);
      if (!j.is_array()) usage_error(what + " must be an array of numbers");
      for (const auto &x : j) {
        if (!x.is_number()) usage_error(what + " must be an array of numbers");
        out.push_back(x.get<double>());
      }
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception &) {
        usage_error(what + ": cannot parse \"" + item + "\"");
      }
    }
    return out;
  }

  /// "[[...], [...]]": rows flattened row-major.
  std::vector<double> parse_matrix(const std::string &text, const std::string &what, std::size_t &rows, std::size_t &cols) {
    const json j = parse_json(text, what);
    if (!j.is_array() || j.empty()) usage_error(what + " must be a nonempty array of rows");
    rows = j.size();
    cols = j[0].is_array() ? j[0].size() : 0;
    std::vector<double> out;
    for (const auto &row : j) {
      if (!row.is_array() || row.size() != cols) usage_error(what + ": rows must be arrays of equal length");
      for (const auto &x : row) {
        if (!x.is_number()) usage_error(what + ": entries must be numbers");
        out.push_back(x.get<double>());
      }
    }
    return out;
  }

  json estimate_json(const zn_estimate &e) { return {{"value", e.value}, {"stderr", e.std_error}, {"samples", e.samples}}; }
  json interval_json(const zn_interval &i) { return json::array({i.lo, i.hi}); }

  void print(const json &j) {
    char *s = nullptr;
    check(zn_json_normalize(j.dump().c_str(), &s));
    std::cout << take(s) << '\n';
  }

  // Parsed options shared by all subcommands.
  struct Options {
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    double tol = 1e-9;
    double net = 0.05;
    bool exact_rational = false;

    std::vector<std::string> files;
    std::string mode;
    std::string op;
    std::string map;
    std::string u;
    std::string z;
    std::string matrix;
    std::string basis;
    std::string J;
    std::string faces;
    std::string signs;
    std::string degrees;
    std::string middle;
    std::string compare;
    std::string to;
    std::string from;
    double lambda = 1.0;
    int d = -1;
    int k = -1;
    int m = -1;
    int q = 64;
    double x = -1.0;
    long long face = -1;
    bool reverse = false;
    bool triangle = false;
  };

  struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> ops;
    std::function<void(CLI::App &, Options &)> configure;
    std::function<void(Options &)> run;
  };

  void need_files(const Options &o, std::size_t lo, std::size_t hi, const char *cmd) {
    if (o.files.size() < lo || o.files.size() > hi) {
      std::string msg = std::string(cmd) + ": expected ";
      msg += lo == hi ? std::to_string(lo) : std::to_string(lo) + (hi == SIZE_MAX ? " or more" : " to " + std::to_string(hi));
      usage_error(msg + " input file(s)");
    }
  }

  void files_opt(CLI::App &c, Options &o, const char *what) { c.add_option("files", o.files, what); }

  std::string mode_or(const Options &o, const std::string &fallback) { return o.mode.empty() ? fallback : o.mode; }

  void require_mode(const std::string &mode, std::initializer_list<const char *> allowed) {
    for (const char *a : allowed)
      if (mode == a) return;
    usage_error("unsupported --mode " + mode);
  }

  json exact_value(std::int64_t num, std::int64_t den) {
    return {{"value", static_cast<double>(num) / static_cast<double>(den)}, {"exact", den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den)}};
  }

  std::vector<Command> command_table() {
    std::vector<Command> t;

    // ---- zonotope calculus
    t.push_back({"support", "h_K(u) = 1/2 sum |<v_i, u>|", {"support"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--u", o.u, "direction, e.g. \"1,0\"")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "support");
                   auto K = load_zonotope(o.files[0]);
                   const auto u = parse_vector(o.u, "--u");
                   double v = 0;
                   check(zn_support(K.get(), u.data(), u.size(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"sum", "Minkowski sum of zonotopes", {"minkowski_sum"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotopes"); },
                 [](Options &o) {
                   need_files(o, 1, SIZE_MAX, "sum");
                   auto Ks = load_zonotopes(o.files);
                   zn_zonotope *acc = nullptr;
                   check(zn_canonicalize(Ks[0].get(), &acc));
                   Zono a(acc);
                   for (std::size_t i = 1; i < Ks.size(); ++i) {
                     zn_zonotope *next = nullptr;
                     check(zn_minkowski_sum(a.get(), Ks[i].get(), &next));
                     a.reset(next);
                   }
                   print(zonotope_json(static_cast<const zn_zonotope *>(a.get())));
                 }});
    t.push_back({"scale", "lambda K for lambda >= 0", {"scale"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--lambda", o.lambda, "nonnegative factor")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "scale");
                   auto K = load_zonotope(o.files[0]);
                   zn_zonotope *out = nullptr;
                   check(zn_scale(K.get(), o.lambda, &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"length", "l(K) = sum ||v_i||", {"length"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotope"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "length");
                   auto K = load_zonotope(o.files[0]);
                   double v = 0;
                   check(zn_length(K.get(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"radius", "max ||x|| over K: --mode exact (default) or bounds", {"radius"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--mode", o.mode, "exact | bounds");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "radius");
                   auto K = load_zonotope(o.files[0]);
                   const std::string mode = mode_or(o, "exact");
                   require_mode(mode, {"exact", "bounds"});
                   if (mode == "exact") {
                     double v = 0;
                     check(zn_radius_exact(K.get(), &v));
                     print({{"value", v}});
                   } else {
                     zn_interval i{};
                     check(zn_radius_bounds(K.get(), &i));
                     print({{"value", (i.lo + i.hi) / 2}, {"interval", interval_json(i)}});
                   }
                 }});
    t.push_back({"hausdorff", "certified interval for d_H(K, L) from a --net delta direction net", {"hausdorff_estimate"},
                 [](CLI::App &c, Options &o) { files_opt(c, o, "two zonotopes"); },
                 [](Options &o) {
                   need_files(o, 2, 2, "hausdorff");
                   auto K = load_zonotope(o.files[0]);
                   auto L = load_zonotope(o.files[1]);
                   zn_interval i{};
                   check(zn_hausdorff_estimate(K.get(), L.get(), o.net, &i));
                   print({{"value", (i.lo + i.hi) / 2}, {"interval", interval_json(i)}});
                 }});
    t.push_back({"canon", "canonical form; with --compare L reports approximate equality within --tol", {"canonicalize", "approx_equal"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--compare", o.compare, "second zonotope");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "canon");
                   auto K = load_zonotope(o.files[0]);
                   if (!o.compare.empty()) {
                     auto L = load_zonotope(o.compare);
                     int eq = 0;
                     check(zn_approx_equal(K.get(), L.get(), o.tol, &eq));
                     print({{"value", eq != 0}});
                     return;
                   }
                   zn_zonotope *out = nullptr;
                   check(zn_canonicalize(K.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"image", "linear image M(K) for --matrix [[...], ...]", {"linear_image"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--matrix", o.matrix, "rows as JSON")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "image");
                   auto K = load_zonotope(o.files[0]);
                   std::size_t r = 0, c = 0;
                   const auto M = parse_matrix(o.matrix, "--matrix", r, c);
                   zn_zonotope *out = nullptr;
                   check(zn_linear_image(M.data(), r, c, K.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"virtual", "virtual zonotopes: --op support|add|negate|length|equal|tensor",
                 {"virtual_support", "virtual_add", "virtual_negate", "virtual_length", "virtual_equal", "virtual_tensor"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "virtual zonotopes {\"plus\", \"minus\"}");
                   c.add_option("--op", o.op, "operation")->required();
                   c.add_option("--u", o.u, "direction for --op support");
                 },
                 [](Options &o) {
                   const std::string &op = o.op;
                   if (op == "support" || op == "length" || op == "negate") {
                     need_files(o, 1, 1, "virtual");
                     auto W = load_virtual(o.files[0]);
                     double v = 0;
                     if (op == "support") {
                       const auto u = parse_vector(o.u, "--u");
                       check(zn_virtual_support(W.get(), u.data(), u.size(), &v));
                     } else if (op == "length") {
                       check(zn_virtual_length(W.get(), &v));
                     } else {
                       zn_virtual *out = nullptr;
                       check(zn_virtual_negate(W.get(), &out));
                       print(virtual_json(out));
                       return;
                     }
                     print({{"value", v}});
                     return;
                   }
                   if (op != "add" && op != "equal" && op != "tensor") usage_error("virtual: unknown --op " + op);
                   need_files(o, 2, 2, "virtual");
                   auto A = load_virtual(o.files[0]);
                   auto B = load_virtual(o.files[1]);
                   if (op == "equal") {
                     int eq = 0;
                     check(zn_virtual_equal(A.get(), B.get(), o.tol, &eq));
                     print({{"value", eq != 0}});
                     return;
                   }
                   zn_virtual *out = nullptr;
                   check(op == "add" ? zn_virtual_add(A.get(), B.get(), &out) : zn_virtual_tensor(A.get(), B.get(), &out));
                   print(virtual_json(out));
                 }});

    // ---- algebra
    t.push_back({"tensor", "K (x) L", {"tensor_product"}, [](CLI::App &c, Options &o) { files_opt(c, o, "two zonotopes"); },
                 [](Options &o) {
                   need_files(o, 2, 2, "tensor");
                   auto K = load_zonotope(o.files[0]);
                   auto L = load_zonotope(o.files[1]);
                   zn_zonotope *out = nullptr;
                   check(zn_tensor_product(K.get(), L.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"wedge", "K_1 ^ ... ^ K_p for graded zonotopes", {"wedge_product"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotopes"); },
                 [](Options &o) {
                   need_files(o, 2, SIZE_MAX, "wedge");
                   auto Ks = load_zonotopes(o.files);
                   zn_zonotope *acc = nullptr;
                   check(zn_wedge_product(Ks[0].get(), Ks[1].get(), &acc));
                   Zono a(acc);
                   for (std::size_t i = 2; i < Ks.size(); ++i) {
                     zn_zonotope *next = nullptr;
                     check(zn_wedge_product(a.get(), Ks[i].get(), &next));
                     a.reset(next);
                   }
                   print(zonotope_json(static_cast<const zn_zonotope *>(a.get())));
                 }});
    t.push_back({"power", "K^{^d}", {"wedge_power"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--d", o.d, "exponent")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "power");
                   auto K = load_zonotope(o.files[0]);
                   zn_zonotope *out = nullptr;
                   check(zn_wedge_power(K.get(), o.d, &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"induced", "zonoid map induced by --map det|tensor|wedge|first", {"induced_map"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotopes");
                   c.add_option("--map", o.map, "multilinear map")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, SIZE_MAX, "induced");
                   auto Ks = load_zonotopes(o.files);
                   std::vector<std::size_t> dims;
                   for (const auto &K : Ks) {
                     std::size_t d = 0;
                     check(zn_zonotope_dim(K.get(), &d));
                     dims.push_back(d);
                   }
                   std::size_t out_dim = 0;
                   zn_multilinear_fn fn = nullptr;
                   const std::size_t p = Ks.size();
                   if (o.map == "first") {
                     out_dim = dims[0];
                     fn = [](const double *const *a, const std::size_t *dm, std::size_t, double *out, std::size_t, void *) {
                       std::copy(a[0], a[0] + dm[0], out);
                     };
                   } else if (o.map == "tensor") {
                     out_dim = 1;
                     for (auto d : dims) out_dim *= d;
                     fn = [](const double *const *a, const std::size_t *dm, std::size_t n, double *out, std::size_t out_dim, void *) {
                       // row-major flattening of a_0 (x) ... (x) a_{n-1}
                       for (std::size_t idx = 0; idx < out_dim; ++idx) {
                         double v = 1.0;
                         std::size_t rest = idx;
                         for (std::size_t f = n; f-- > 0;) {
                           v *= a[f][rest % dm[f]];
                           rest /= dm[f];
                         }
                         out[idx] = v;
                       }
                     };
                   } else if (o.map == "det" || o.map == "wedge") {
                     const std::size_t m = dims[0];
                     for (auto d : dims)
                       if (d != m) usage_error("induced: all factors need the same dimension");
                     if (o.map == "det" && p != m) usage_error("induced --map det needs as many factors as the dimension");
                     if (p > m) usage_error("induced --map wedge needs at most as many factors as the dimension");
                     if (o.map == "det") {
                       out_dim = 1;
                       fn = [](const double *const *a, const std::size_t *dm, std::size_t n, double *out, std::size_t, void *) {
                         zn_multivector *b = nullptr;
                         std::vector<double> rows;
                         for (std::size_t i = 0; i < n; ++i) rows.insert(rows.end(), a[i], a[i] + dm[i]);
                         if (zn_mv_blade(dm[0], rows.data(), n, &b) != ZN_OK) return;
                         Mvec owner(b);
                         char *s = nullptr;
                         if (zn_multivector_to_json(b, &s) != ZN_OK) return;
                         out[0] = json::parse(take(s))["coeffs"][0].get<double>();
                       };
                     } else {
                       std::size_t c = 1;
                       for (std::size_t i = 0; i < p; ++i) c = c * (m - i) / (i + 1);
                       out_dim = c;
                       fn = [](const double *const *a, const std::size_t *dm, std::size_t n, double *out, std::size_t out_dim, void *) {
                         zn_multivector *b = nullptr;
                         std::vector<double> rows;
                         for (std::size_t i = 0; i < n; ++i) rows.insert(rows.end(), a[i], a[i] + dm[i]);
                         if (zn_mv_blade(dm[0], rows.data(), n, &b) != ZN_OK) return;
                         Mvec owner(b);
                         char *s = nullptr;
                         if (zn_multivector_to_json(b, &s) != ZN_OK) return;
                         const json coeffs = json::parse(take(s))["coeffs"];
                         for (std::size_t i = 0; i < out_dim; ++i) out[i] = coeffs[i].get<double>();
                       };
                     }
                   } else {
                     usage_error("induced: unknown --map " + o.map);
                   }
                   const auto ptrs = raw(Ks);
                   zn_zonotope *out = nullptr;
                   double defect = 0;
                   check(zn_induced_map(fn, nullptr, out_dim, ptrs.data(), p, o.seed, &out, &defect));
                   json j = zonotope_json(out);
                   print({{"value", j}, {"linearity_defect", defect}});
                 }});
    t.push_back({"mv", "mixed volume MV(K_1, ..., K_m); --exact-rational for integer generators", {"mixed_volume"},
                 [](CLI::App &c, Options &o) { files_opt(c, o, "m zonotopes in R^m"); },
                 [](Options &o) {
                   need_files(o, 1, SIZE_MAX, "mv");
                   auto Ks = load_zonotopes(o.files);
                   const auto ptrs = raw(Ks);
                   if (o.exact_rational) {
                     std::int64_t n = 0, d = 1;
                     check(zn_mixed_volume_exact(ptrs.data(), ptrs.size(), &n, &d));
                     print(exact_value(n, d));
                     return;
                   }
                   double v = 0;
                   check(zn_mixed_volume(ptrs.data(), ptrs.size(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"vol", "volume of a degree-1 zonotope; --exact-rational for integer generators", {"volume"},
                 [](CLI::App &c, Options &o) { files_opt(c, o, "zonotope"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "vol");
                   auto K = load_zonotope(o.files[0]);
                   if (o.exact_rational) {
                     std::int64_t n = 0, d = 1;
                     check(zn_volume_exact(K.get(), &n, &d));
                     print(exact_value(n, d));
                     return;
                   }
                   double v = 0;
                   check(zn_volume(K.get(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"intrinsic", "intrinsic volume V_d(K)", {"intrinsic_volume"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--d", o.d, "degree")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "intrinsic");
                   auto K = load_zonotope(o.files[0]);
                   double v = 0;
                   check(zn_intrinsic_volume(K.get(), o.d, &v));
                   print({{"value", v}});
                 }});
    t.push_back({"hodge", "generator-wise Hodge star", {"hodge_star_zonoid"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotope"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "hodge");
                   auto K = load_zonotope(o.files[0]);
                   zn_zonotope *out = nullptr;
                   check(zn_hodge_star_zonoid(K.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"projbody", "projection body", {"projection_body"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotope"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "projbody");
                   auto K = load_zonotope(o.files[0]);
                   zn_zonotope *out = nullptr;
                   check(zn_projection_body(K.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"af", "Alexandrov-Fenchel gap K1 K2 [K3..Km]; --middle C for a graded middle factor; --reverse --degrees d1,..,dp",
                 {"af_gap", "af_gap_with_middle", "reverse_af_gap"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotopes");
                   c.add_option("--middle", o.middle, "graded middle factor");
                   c.add_flag("--reverse", o.reverse, "reverse inequality gap");
                   c.add_option("--degrees", o.degrees, "degrees for --reverse");
                 },
                 [](Options &o) {
                   auto Ks = load_zonotopes(o.files);
                   const auto ptrs = raw(Ks);
                   double v = 0;
                   if (o.reverse) {
                     need_files(o, 1, SIZE_MAX, "af --reverse");
                     std::vector<int> deg;
                     for (double x : parse_vector(o.degrees, "--degrees")) deg.push_back(static_cast<int>(x));
                     if (deg.size() != ptrs.size()) usage_error("af --reverse: one degree per body");
                     check(zn_reverse_af_gap(ptrs.data(), deg.data(), ptrs.size(), &v));
                   } else if (!o.middle.empty()) {
                     need_files(o, 2, 2, "af --middle");
                     auto C = load_zonotope(o.middle);
                     check(zn_af_gap_with_middle(ptrs[0], ptrs[1], C.get(), &v));
                   } else {
                     need_files(o, 2, SIZE_MAX, "af");
                     check(zn_af_gap(ptrs[0], ptrs[1], ptrs.data() + 2, ptrs.size() - 2, &v));
                   }
                   print({{"value", v}});
                 }});

    // ---- exterior algebra
    t.push_back({"exterior", "multivectors: --op wedge|blade|hodge|norm|cwedge|realify (blade takes --matrix rows)",
                 {"wedge", "blade_from_vectors", "hodge_star", "norm", "complex_wedge", "realify"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "multivectors");
                   c.add_option("--op", o.op, "operation")->required();
                   c.add_option("--matrix", o.matrix, "vectors for --op blade");
                 },
                 [](Options &o) {
                   const std::string &op = o.op;
                   if (op == "blade") {
                     std::size_t r = 0, c = 0;
                     const auto v = parse_matrix(o.matrix, "--matrix", r, c);
                     zn_multivector *out = nullptr;
                     check(zn_mv_blade(c, v.data(), r, &out));
                     print(multivector_json(out));
                     return;
                   }
                   if (op == "wedge" || op == "cwedge") {
                     need_files(o, 2, 2, "exterior");
                     auto a = load_multivector(o.files[0]);
                     auto b = load_multivector(o.files[1]);
                     zn_multivector *out = nullptr;
                     check(op == "wedge" ? zn_mv_wedge(a.get(), b.get(), &out) : zn_mv_complex_wedge(a.get(), b.get(), &out));
                     print(multivector_json(out));
                     return;
                   }
                   need_files(o, 1, 1, "exterior");
                   auto a = load_multivector(o.files[0]);
                   if (op == "hodge") {
                     zn_multivector *out = nullptr;
                     check(zn_mv_hodge(a.get(), &out));
                     print(multivector_json(out));
                   } else if (op == "norm") {
                     double v = 0;
                     check(zn_mv_norm(a.get(), &v));
                     print({{"value", v}});
                   } else if (op == "realify") {
                     std::size_t len = 0;
                     check(zn_mv_realify(a.get(), nullptr, 0, &len));
                     std::vector<double> buf(len);
                     check(zn_mv_realify(a.get(), buf.data(), buf.size(), &len));
                     print({{"value", buf}});
                   } else {
                     usage_error("exterior: unknown --op " + op);
                   }
                 }});

    // ---- complex structures
    t.push_back({"sigma-j", "sigma^J(E) for --basis [[e_1], ..., [e_n]] (optional --J rows)", {"sigma_J"},
                 [](CLI::App &c, Options &o) {
                   c.add_option("--basis", o.basis, "n vectors of length 2n")->required();
                   c.add_option("--J", o.J, "complex structure rows");
                 },
                 [](Options &o) {
                   std::size_t r = 0, c = 0;
                   const auto B = parse_matrix(o.basis, "--basis", r, c);
                   if (c != 2 * r) usage_error("sigma-j: need n basis vectors of length 2n");
                   std::vector<double> J;
                   if (!o.J.empty()) {
                     std::size_t jr = 0, jc = 0;
                     J = parse_matrix(o.J, "--J", jr, jc);
                     if (jr != c || jc != c) usage_error("sigma-j: --J must be 2n x 2n");
                   }
                   double v = 0;
                   check(zn_sigma_j(r, B.data(), J.empty() ? nullptr : J.data(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"cwedge", "complex wedge K_1 ^_C ... ^_C K_p", {"complex_wedge_zonoids"}, [](CLI::App &c, Options &o) { files_opt(c, o, "zonotopes in C^n"); },
                 [](Options &o) {
                   need_files(o, 1, SIZE_MAX, "cwedge");
                   auto Ks = load_zonotopes(o.files);
                   const auto ptrs = raw(Ks);
                   zn_zonotope *out = nullptr;
                   check(zn_complex_wedge_zonoids(ptrs.data(), ptrs.size(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"mvj", "mixed J-volume MV^J(K_1, ..., K_n)", {"mixed_J_volume"}, [](CLI::App &c, Options &o) { files_opt(c, o, "n zonotopes in C^n"); },
                 [](Options &o) {
                   need_files(o, 1, SIZE_MAX, "mvj");
                   auto Ks = load_zonotopes(o.files);
                   const auto ptrs = raw(Ks);
                   double v = 0;
                   check(zn_mixed_j_volume(ptrs.data(), ptrs.size(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"jvol", "J-volume of a zonotope (exact) or of --faces face data (Monte Carlo)", {"j_volume_zonotope", "j_volume_polytope_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--faces", o.faces, "face data file");
                 },
                 [](Options &o) {
                   if (!o.faces.empty()) {
                     need_files(o, 0, 0, "jvol --faces");
                     auto F = load_faces(o.faces);
                     zn_estimate e{};
                     check(zn_j_volume_polytope_mc(F.get(), o.samples, o.seed, &e));
                     print(estimate_json(e));
                     return;
                   }
                   need_files(o, 1, 1, "jvol");
                   auto P = load_zonotope(o.files[0]);
                   double v = 0;
                   check(zn_j_volume_zonotope(P.get(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"kaza", "Kazarnovskii pseudovolume of a zonotope (exact) or of --faces face data (Monte Carlo)",
                 {"kazarnovskii_zonotope", "kazarnovskii_polytope_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--faces", o.faces, "face data file");
                 },
                 [](Options &o) {
                   if (!o.faces.empty()) {
                     need_files(o, 0, 0, "kaza --faces");
                     auto F = load_faces(o.faces);
                     zn_estimate e{};
                     check(zn_kazarnovskii_polytope_mc(F.get(), o.samples, o.seed, &e));
                     print(estimate_json(e));
                     return;
                   }
                   need_files(o, 1, 1, "kaza");
                   auto P = load_zonotope(o.files[0]);
                   double v = 0;
                   check(zn_kazarnovskii_zonotope(P.get(), &v));
                   print({{"value", v}});
                 }});
    t.push_back({"disc", "half-turn polygon approximation of the disc D_z (--z interleaved, --q)", {"disc_zonotope"},
                 [](CLI::App &c, Options &o) {
                   c.add_option("--z", o.z, "complex vector as interleaved reals")->required();
                   c.add_option("--q", o.q, "number of generators");
                 },
                 [](Options &o) {
                   const auto z = parse_vector(o.z, "--z");
                   zn_zonotope *out = nullptr;
                   check(zn_disc_zonotope(z.data(), z.size(), o.q, &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"faces", "face data of a zonotope in C^n; with --k, the k-faces as sign vectors", {"zonotope_face_data", "zonotope_faces"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope");
                   c.add_option("--k", o.k, "face dimension");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "faces");
                   auto P = load_zonotope(o.files[0]);
                   if (o.k >= 0) {
                     char *s = nullptr;
                     check(zn_zonotope_faces(P.get(), o.k, &s));
                     print(json::parse(take(s)));
                     return;
                   }
                   zn_faces *F = nullptr;
                   check(zn_faces_from_zonotope(P.get(), &F));
                   Faces owner(F);
                   char *s = nullptr;
                   check(zn_faces_to_json(F, &s));
                   print(json::parse(take(s)));
                 }});
    t.push_back({"normal-angle", "normal angle of --face i of --faces data, or of a zonotope face given by --signs", {"normal_angle_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "zonotope (with --signs)");
                   c.add_option("--faces", o.faces, "face data file");
                   c.add_option("--face", o.face, "face index");
                   c.add_option("--signs", o.signs, "sign vector over canonical generators");
                 },
                 [](Options &o) {
                   zn_estimate e{};
                   if (!o.faces.empty()) {
                     if (o.face < 0) usage_error("normal-angle: --face is required with --faces");
                     auto F = load_faces(o.faces);
                     check(zn_normal_angle_face(F.get(), static_cast<std::size_t>(o.face), o.samples, o.seed, &e));
                   } else {
                     need_files(o, 1, 1, "normal-angle");
                     auto P = load_zonotope(o.files[0]);
                     std::vector<int> s;
                     for (double x : parse_vector(o.signs, "--signs")) s.push_back(static_cast<int>(x));
                     check(zn_normal_angle_zonotope(P.get(), s.data(), s.size(), o.samples, o.seed, &e));
                   }
                   print(estimate_json(e));
                 }});

    // ---- random vectors and determinants
    t.push_back({"vitale", "Vitale zonotope of a discrete distribution", {"vitale_zonotope"}, [](CLI::App &c, Options &o) { files_opt(c, o, "distribution"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "vitale");
                   auto X = load_distribution(unwrap(o.files[0]));
                   zn_zonotope *out = nullptr;
                   check(zn_vitale_zonotope(X.get(), &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"empirical", "empirical zonotope of --samples draws from a sampler", {"empirical_zonotope"},
                 [](CLI::App &c, Options &o) { files_opt(c, o, "sampler"); },
                 [](Options &o) {
                   need_files(o, 1, 1, "empirical");
                   auto S = load_sampler(unwrap(o.files[0]));
                   zn_zonotope *out = nullptr;
                   check(zn_empirical_zonotope(S.get(), o.samples, o.seed, &out));
                   print(zonotope_json(out));
                 }});
    t.push_back({"edet", "E|det M| for a real block model: --mode exact|mc", {"expected_abs_det_exact", "expected_abs_det_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "block model");
                   c.add_option("--mode", o.mode, "exact | mc");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "edet");
                   auto M = load_model(o.files[0]);
                   const std::string mode = mode_or(o, "exact");
                   require_mode(mode, {"exact", "mc"});
                   if (mode == "exact") {
                     double v = 0;
                     check(zn_expected_abs_det_exact(M.get(), &v));
                     print({{"value", v}});
                   } else {
                     zn_estimate e{};
                     check(zn_expected_abs_det_mc(M.get(), o.samples, o.seed, &e));
                     print(estimate_json(e));
                   }
                 }});
    t.push_back({"edet-complex", "E|det M| for a complex block model: --mode exact|mc",
                 {"expected_abs_det_complex_exact", "expected_abs_det_complex_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "block model");
                   c.add_option("--mode", o.mode, "exact | mc");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "edet-complex");
                   auto M = load_model(o.files[0]);
                   const std::string mode = mode_or(o, "exact");
                   require_mode(mode, {"exact", "mc"});
                   if (mode == "exact") {
                     double v = 0;
                     check(zn_expected_abs_det_complex_exact(M.get(), &v));
                     print({{"value", v}});
                   } else {
                     zn_estimate e{};
                     check(zn_expected_abs_det_complex_mc(M.get(), o.samples, o.seed, &e));
                     print(estimate_json(e));
                   }
                 }});
    t.push_back({"edet-sq-complex", "E|det M|^2 for a complex block model: --mode exact|mc",
                 {"expected_sq_abs_det_complex", "expected_sq_abs_det_complex_mc"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "block model");
                   c.add_option("--mode", o.mode, "exact | mc");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "edet-sq-complex");
                   auto M = load_model(o.files[0]);
                   const std::string mode = mode_or(o, "exact");
                   require_mode(mode, {"exact", "mc"});
                   if (mode == "exact") {
                     double v = 0;
                     check(zn_expected_sq_abs_det_complex(M.get(), &v));
                     print({{"value", v}});
                   } else {
                     zn_estimate e{};
                     check(zn_expected_sq_abs_det_complex_mc(M.get(), o.samples, o.seed, &e));
                     print(estimate_json(e));
                   }
                 }});
    t.push_back({"bm-probe",
                 "Brunn-Minkowski curve from {\"x1\", \"x2\", \"d\", \"companions\", \"t\"} (--mode exact|mc); --triangle for the "
                 "expected-triangle-area inequality of x1 and x2",
                 {"bm_concavity_probe", "triangle_af_gap"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "probe configuration");
                   c.add_option("--mode", o.mode, "exact | mc");
                   c.add_flag("--triangle", o.triangle, "triangle-area gap");
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "bm-probe");
                   const json cfg = parse_json(read_input(o.files[0]), o.files[0]);
                   if (!cfg.is_object() || !cfg.contains("x1") || !cfg.contains("x2")) throw CliError{exit_schema, "schema", "bm-probe: \"x1\" and \"x2\" are required"};
                   if (o.triangle) {
                     auto X = load_distribution(cfg["x1"].dump());
                     auto Y = load_distribution(cfg["x2"].dump());
                     zn_triangle_af r{};
                     check(zn_triangle_af_gap(X.get(), Y.get(), &r));
                     print({{"value", r.gap}, {"xy", r.xy}, {"xx", r.xx}, {"yy", r.yy}});
                     return;
                   }
                   if (!cfg.contains("d") || !cfg["d"].is_number_integer() || !cfg.contains("t") || !cfg["t"].is_array())
                     throw CliError{exit_schema, "schema", "bm-probe: integer \"d\" and array \"t\" are required"};
                   auto X1 = load_sampler(cfg["x1"].dump());
                   auto X2 = load_sampler(cfg["x2"].dump());
                   std::vector<Samp> comp;
                   if (cfg.contains("companions")) {
                     if (!cfg["companions"].is_array()) throw CliError{exit_schema, "schema", "bm-probe: \"companions\" must be an array"};
                     for (const auto &c : cfg["companions"]) comp.push_back(load_sampler(c.dump()));
                   }
                   std::vector<const zn_sampler *> cp;
                   for (const auto &c : comp) cp.push_back(c.get());
                   std::vector<double> ts;
                   for (const auto &x : cfg["t"]) {
                     if (!x.is_number()) throw CliError{exit_schema, "schema", "bm-probe: \"t\" must hold numbers"};
                     ts.push_back(x.get<double>());
                   }
                   const std::string mode = mode_or(o, "exact");
                   require_mode(mode, {"exact", "mc"});
                   std::vector<zn_estimate> out(ts.size());
                   check(zn_bm_concavity_probe(X1.get(), X2.get(), cfg["d"].get<int>(), cp.data(), cp.size(), ts.data(), ts.size(), mode == "exact", o.samples,
                                               o.seed, out.data()));
                   json curve = json::array();
                   for (std::size_t i = 0; i < ts.size(); ++i) {
                     json pt{{"t", ts[i]}, {"value", out[i].value}};
                     if (mode == "mc") pt["stderr"] = out[i].std_error;
                     curve.push_back(pt);
                   }
                   print({{"value", curve}});
                 }});

    // ---- measures
    t.push_back({"measure", "zonotope <-> measure dictionary: --to K (zonotope to measure) or --from mu (measure to zonotope or virtual zonotope)",
                 {"zonotope_to_measure", "measure_to_zonotope", "measure_to_virtual"},
                 [](CLI::App &c, Options &o) {
                   c.add_option("--to", o.to, "zonotope file");
                   c.add_option("--from", o.from, "measure file");
                 },
                 [](Options &o) {
                   if (o.to.empty() == o.from.empty()) usage_error("measure: give exactly one of --to and --from");
                   if (!o.to.empty()) {
                     auto K = load_zonotope(o.to);
                     zn_measure *mu = nullptr;
                     check(zn_zonotope_to_measure(K.get(), &mu));
                     Meas owner(mu);
                     char *s = nullptr;
                     check(zn_measure_to_json(mu, &s));
                     print(json::parse(take(s)));
                     return;
                   }
                   auto mu = load_measure(o.from);
                   const json raw_measure = parse_json(unwrap(o.from), o.from);
                   bool signed_weights = false;
                   for (const auto &w : raw_measure["weights"])
                     if (w.is_number() && w.get<double>() < 0) signed_weights = true;
                   if (signed_weights) {
                     zn_virtual *W = nullptr;
                     check(zn_measure_to_virtual(mu.get(), &W));
                     print(virtual_json(W));
                   } else {
                     zn_zonotope *K = nullptr;
                     check(zn_measure_to_zonotope(mu.get(), &K));
                     print(zonotope_json(K));
                   }
                 }});
    t.push_back({"cosine", "cosine transform H(mu)(u)", {"cosine_transform_eval"},
                 [](CLI::App &c, Options &o) {
                   files_opt(c, o, "measure");
                   c.add_option("--u", o.u, "direction")->required();
                 },
                 [](Options &o) {
                   need_files(o, 1, 1, "cosine");
                   auto mu = load_measure(o.files[0]);
                   const auto u = parse_vector(o.u, "--u");
                   double v = 0;
                   check(zn_cosine_transform_eval(mu.get(), u.data(), u.size(), &v));
                   print({{"value", v}});
                 }});

    // ---- constants
    t.push_back({"constants", "tau_m, Gamma_k(x), expected wedge norms and Gaussian determinant constants (--m, --k, --x)",
                 {"tau", "multivariate_gamma", "expected_simple_wedge_norm", "real_gaussian_abs_det", "complex_gaussian_abs_det", "j_volume_ball"},
                 [](CLI::App &c, Options &o) {
                   c.add_option("--m", o.m, "dimension")->required();
                   c.add_option("--k", o.k, "degree for Gamma_k and wedge norms");
                   c.add_option("--x", o.x, "argument of Gamma_k");
                 },
                 [](Options &o) {
                   json out;
                   double v = 0;
                   check(zn_tau(o.m, &v));
                   out["tau"] = v;
                   check(zn_real_gaussian_abs_det(o.m, &v));
                   out["real_gaussian_abs_det"] = v;
                   check(zn_complex_gaussian_abs_det(o.m, &v));
                   out["complex_gaussian_abs_det"] = v;
                   check(zn_j_volume_ball(o.m, &v));
                   out["j_volume_ball"] = v;
                   json norms = json::array();
                   for (int k = 1; k <= o.m; ++k) {
                     check(zn_expected_simple_wedge_norm(k, o.m, &v));
                     norms.push_back(v);
                   }
                   out["expected_simple_wedge_norm"] = norms;
                   if (o.k >= 1) {
                     const double x = o.x >= 0 ? o.x : o.m / 2.0;
                     check(zn_multivariate_gamma(o.k, x, &v));
                     out["multivariate_gamma"] = v;
                   }
                   out["value"] = out["tau"];
                   print(out);
                 }});
    return t;
  }

  void emit_error(const CliError &e) {
    const json err{{"error", {{"code", e.code}, {"message", e.message}}}};
    std::cerr << err.dump() << '\n';
  }

} // namespace

int main(int argc, char **argv) {
  Options opts;
  auto table = command_table();

  CLI::App app{"zonoid: zonoid algebra, mixed and J-volumes, and expected random determinants.\n\n"
               "Inputs are JSON files (\"-\" reads standard input). Schemas:\n"
               "  zonotope      {\"ambient_dim\": D, \"grading\": {\"base_dim\": m, \"degree\": k[, \"complex\": true]} | null, \"generators\": [[...]]}\n"
               "  virtual       {\"plus\": zonotope, \"minus\": zonotope}\n"
               "  measure       {\"atoms\": [[...unit...]], \"weights\": [...]}\n"
               "  distribution  {\"atoms\": [[...]], \"probs\": [...]}\n"
               "  sampler       distribution | {\"sampler\": \"gaussian\" | \"complex_gaussian\" | \"uniform_sphere\", \"dim\": d}\n"
               "  block model   {\"size\": m, \"field\": \"real\" | \"complex\", \"blocks\": [{\"width\": w, \"distribution\": ...} | {\"width\": w, \"sampler\": name}]}\n"
               "  face data     {\"ambient_dim\": 2n, \"vertices\": [[...]], \"n_faces\": [[indices]]}\n"
               "  multivector   {\"ambient_dim\": m, \"degree\": k, \"coeffs\": [...]} or {\"complex_dim\": n, \"degree\": k, \"coeffs\": [[re, im]]}\n\n"
               "Output is one JSON document with \"value\" and, where applicable, \"stderr\" and \"interval\".\n"
               "Exit codes: 0 success, 1 usage or I/O error, 2 schema error, 3 precondition violation.",
               "zonoid"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opts.seed, "random seed (u64)");
  app.add_option("--samples", opts.samples, "Monte Carlo sample count");
  app.add_option("--tol", opts.tol, "comparison tolerance");
  app.add_option("--net", opts.net, "angular resolution of direction nets");
  app.add_flag("--exact-rational", opts.exact_rational, "exact rational arithmetic (mv, vol)");

  CLI::App *list = app.add_subcommand("commands", "list commands and the library operations each one reaches");
  std::vector<CLI::App *> subs;
  for (auto &cmd : table) {
    CLI::App *sub = app.add_subcommand(cmd.name, cmd.help);
    cmd.configure(*sub, opts);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    emit_error({exit_usage, "usage", e.what()});
    return exit_usage;
  }

  try {
    if (list->parsed()) {
      json out = json::object();
      for (const auto &cmd : table) out[cmd.name] = cmd.ops;
      print(out);
      return 0;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      if (opts.exact_rational && table[i].name != "mv" && table[i].name != "vol") usage_error("--exact-rational is supported by mv and vol only");
      table[i].run(opts);
      return 0;
    }
  } catch (const CliError &e) {
    emit_error(e);
    return e.exit_code;
  } catch (const std::exception &e) {
    emit_error({exit_precondition, "internal", e.what()});
    return exit_precondition;
  }
  return exit_usage;
}
