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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zonoid {

  enum class Errc {
    dimension_mismatch,
    invalid_argument,
    precondition,
    too_large,
    rank_deficient,
    schema,
  };

  class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

   private:
    Errc code_;
  };

  inline void require(bool ok, Errc code, const char *what) {
    if (!ok) throw Error(code, what);
  }

  inline void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) throw Error(Errc::dimension_mismatch, std::string(what) + ": " + std::to_string(a) + " != " + std::to_string(b));
  }

  /// Monte Carlo estimate: sample mean and its standard error.
  struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
  };

} // namespace zonoid
