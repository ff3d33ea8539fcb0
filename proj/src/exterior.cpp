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

#include "zonoid/exterior.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <utility>

namespace zonoid {

  std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
  }

  namespace {

    void enumerate_subsets(int m, int k, int start, Mask prefix, std::vector<Mask> &out) {
      if (k == 0) {
        out.push_back(prefix);
        return;
      }
      for (int i = start; i <= m - k; ++i) enumerate_subsets(m, k - 1, i + 1, prefix | (Mask{1} << i), out);
    }

  } // namespace

  const std::vector<Mask> &subset_masks(int m, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<Mask>> cache;
    detail::check_shape(m, k);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace({m, k});
    if (inserted && k <= m) enumerate_subsets(m, k, 0, 0, it->second);
    return it->second;
  }

  std::size_t subset_rank(int m, Mask mask) {
    const int k = std::popcount(mask);
    std::size_t rank = 0;
    int prev = -1;
    int j = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int c = prev + 1; c < i; ++c) rank += binomial(m - 1 - c, k - 1 - j);
      prev = i;
      ++j;
    }
    return rank;
  }

  int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    while (b) {
      const int low = std::countr_zero(b);
      b &= b - 1;
      inversions += std::popcount(a >> (low + 1));
    }
    return inversions % 2 ? -1 : 1;
  }

  std::vector<double> realify(const ComplexMultivector &a) {
    std::vector<double> out;
    out.reserve(2 * a.size());
    for (const auto &z : a.coeffs()) {
      out.push_back(z.real());
      out.push_back(z.imag());
    }
    return out;
  }

  ComplexMultivector complexify(int complex_dim, int degree, std::span<const double> interleaved) {
    require_same_dim(interleaved.size(), 2 * binomial(complex_dim, degree), "complexify: coordinate count");
    std::vector<std::complex<double>> c(interleaved.size() / 2);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = {interleaved[2 * i], interleaved[2 * i + 1]};
    return ComplexMultivector(complex_dim, degree, std::move(c));
  }

} // namespace zonoid
