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
/// Exact arithmetic for zonotopes with integer generators. Wedge products stay
/// integral, collinear generators merge through their primitive directions, and
/// top-degree lengths (hence mixed volumes and volumes) are exact rationals.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "zonoid/zonotope.hpp"

namespace zonoid::exact {

  using Rational = boost::rational<std::int64_t>;
  using IntegerVector = std::vector<std::int64_t>;

  struct IntegerZonotope {
    Grading grading;
    std::vector<IntegerVector> generators;
  };

  /// Integer copy of a degree-1 zonotope; throws unless every entry is an integer.
  IntegerZonotope from_zonotope(const Zonotope &K);

  /// True when every generator entry is an integer (and small enough for int64).
  bool is_integral(const Zonotope &K);

  IntegerZonotope canonicalize(const IntegerZonotope &K);
  IntegerZonotope wedge_product(const IntegerZonotope &K, const IntegerZonotope &L);
  IntegerZonotope wedge_power(const IntegerZonotope &K, int d);

  /// Sum of |coefficient| for a zonotope in the top exterior power (one coordinate).
  std::int64_t top_degree_length(const IntegerZonotope &K);

  Rational mixed_volume(std::span<const IntegerZonotope> bodies);
  Rational volume(const IntegerZonotope &K);

  std::string to_string(const Rational &q);

} // namespace zonoid::exact
