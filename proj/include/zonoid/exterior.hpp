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
/// Dense multivectors in exterior powers of R^m (and C^n with complex scalars).
///
/// Basis blades of degree k are the sorted index tuples i_1 < ... < i_k,
/// stored in lexicographic order. A blade is identified with the bitmask of
/// its indices; the coefficient array of a degree-k element has C(m,k)
/// entries (none when k > m).

#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "zonoid/error.hpp"

namespace zonoid {

  using Mask = std::uint32_t;

  inline constexpr int max_exterior_dim = 30;

  /// C(n, k), zero outside 0 <= k <= n.
  std::uint64_t binomial(int n, int k);

  /// Blades of degree k in dimension m as bitmasks, lexicographic order. Cached.
  const std::vector<Mask> &subset_masks(int m, int k);

  /// Position of a blade within subset_masks(m, popcount(mask)).
  std::size_t subset_rank(int m, Mask mask);

  /// Sign of e_A ^ e_B relative to e_{A|B}: (-1)^{#{(a,b) : a > b}}; 0 when A and B overlap.
  int wedge_sign(Mask a, Mask b);

  namespace detail {

    template <class T> T checked_add(T a, T b) {
      if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::too_large, "integer overflow in exact arithmetic");
        return r;
      } else {
        return a + b;
      }
    }

    template <class T> T checked_mul(T a, T b) {
      if constexpr (std::is_integral_v<T>) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::too_large, "integer overflow in exact arithmetic");
        return r;
      } else {
        return a * b;
      }
    }

    template <class T> double magnitude(const T &x) {
      if constexpr (std::is_integral_v<T>) {
        return std::abs(static_cast<double>(x));
      } else {
        return std::abs(x);
      }
    }

    inline void check_shape(int m, int k) {
      require(m >= 1 && m <= max_exterior_dim, Errc::invalid_argument, "exterior: ambient dimension out of range");
      require(k >= 0, Errc::invalid_argument, "exterior: negative degree");
    }

  } // namespace detail

  /// Element of the k-th exterior power of an m-dimensional space, scalar type T.
  template <class T> class BasicMultivector {
   public:
    using scalar_type = T;

    /// Zero element.
    BasicMultivector(int ambient_dim, int degree) : m_(ambient_dim), k_(degree) {
      detail::check_shape(m_, k_);
      c_.assign(binomial(m_, k_), T{});
    }

    BasicMultivector(int ambient_dim, int degree, std::vector<T> coeffs) : m_(ambient_dim), k_(degree), c_(std::move(coeffs)) {
      detail::check_shape(m_, k_);
      require_same_dim(c_.size(), binomial(m_, k_), "multivector coefficient count");
    }

    /// The basis blade e_{i_1} ^ ... ^ e_{i_k} for sorted, distinct 0-based indices.
    static BasicMultivector basis(int ambient_dim, std::span<const int> indices) {
      Mask mask = 0;
      for (int i : indices) {
        require(i >= 0 && i < ambient_dim, Errc::invalid_argument, "basis index out of range");
        require(!(mask >> i & 1u), Errc::invalid_argument, "repeated basis index");
        mask |= Mask{1} << i;
      }
      BasicMultivector r(ambient_dim, static_cast<int>(indices.size()));
      r.c_[subset_rank(ambient_dim, mask)] = T{1};
      return r;
    }

    static BasicMultivector basis(int ambient_dim, std::initializer_list<int> indices) {
      std::vector<int> idx(indices);
      return basis(ambient_dim, std::span<const int>(idx));
    }

    /// Degree-1 element with the given coordinates.
    template <class Vec> static BasicMultivector from_vector(const Vec &v) {
      const int m = static_cast<int>(v.size());
      BasicMultivector r(m, 1);
      for (int i = 0; i < m; ++i) r.c_[i] = static_cast<T>(v[i]);
      return r;
    }

    [[nodiscard]] int ambient_dim() const noexcept { return m_; }
    [[nodiscard]] int degree() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] std::span<const T> coeffs() const noexcept { return c_; }
    [[nodiscard]] const std::vector<T> &coeff_vector() const noexcept { return c_; }

    T operator[](std::size_t i) const { return c_[i]; }
    T &operator[](std::size_t i) { return c_[i]; }

    /// Coefficient of the blade with the given index mask (degree must match).
    [[nodiscard]] T coeff(Mask mask) const { return c_[subset_rank(m_, mask)]; }

    [[nodiscard]] bool is_zero() const {
      for (const auto &x : c_)
        if (x != T{}) return false;
      return true;
    }

    BasicMultivector &operator+=(const BasicMultivector &o) {
      check_compatible(o);
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = detail::checked_add(c_[i], o.c_[i]);
      return *this;
    }

    BasicMultivector &operator-=(const BasicMultivector &o) {
      check_compatible(o);
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = detail::checked_add(c_[i], -o.c_[i]);
      return *this;
    }

    BasicMultivector &operator*=(const T &s) {
      for (auto &x : c_) x = detail::checked_mul(x, s);
      return *this;
    }

    friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector &b) { return a += b; }
    friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector &b) { return a -= b; }
    friend BasicMultivector operator*(BasicMultivector a, const T &s) { return a *= s; }
    friend BasicMultivector operator*(const T &s, BasicMultivector a) { return a *= s; }
    friend BasicMultivector operator-(BasicMultivector a) { return a *= T{-1}; }

    friend bool operator==(const BasicMultivector &a, const BasicMultivector &b) {
      return a.m_ == b.m_ && a.k_ == b.k_ && a.c_ == b.c_;
    }

   private:
    void check_compatible(const BasicMultivector &o) const {
      require_same_dim(static_cast<std::size_t>(m_), static_cast<std::size_t>(o.m_), "multivector ambient dimension");
      require_same_dim(static_cast<std::size_t>(k_), static_cast<std::size_t>(o.k_), "multivector degree");
    }

    int m_;
    int k_;
    std::vector<T> c_;
  };

  using Multivector = BasicMultivector<double>;
  using ComplexMultivector = BasicMultivector<std::complex<double>>;
  using IntegerMultivector = BasicMultivector<std::int64_t>;

  /// Exterior product. Degrees with k + l > m give the zero element of degree k + l.
  template <class T> BasicMultivector<T> wedge(const BasicMultivector<T> &a, const BasicMultivector<T> &b) {
    require_same_dim(static_cast<std::size_t>(a.ambient_dim()), static_cast<std::size_t>(b.ambient_dim()), "wedge: ambient dimension");
    const int m = a.ambient_dim();
    BasicMultivector<T> r(m, a.degree() + b.degree());
    if (a.degree() + b.degree() > m) return r;
    const auto &ma = subset_masks(m, a.degree());
    const auto &mb = subset_masks(m, b.degree());
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (a[i] == T{}) continue;
      for (std::size_t j = 0; j < mb.size(); ++j) {
        if (b[j] == T{}) continue;
        const int s = wedge_sign(ma[i], mb[j]);
        if (s == 0) continue;
        T term = detail::checked_mul(a[i], b[j]);
        if (s < 0) term = -term;
        auto &slot = r[subset_rank(m, ma[i] | mb[j])];
        slot = detail::checked_add(slot, term);
      }
    }
    return r;
  }

  /// v_1 ^ ... ^ v_k; the coefficient at I is the k x k minor of [v_1 .. v_k] on rows I.
  /// An empty list gives the unit scalar of degree 0 (requires ambient_dim).
  template <class T, class Range> BasicMultivector<T> blade_from_vectors(int ambient_dim, const Range &vectors) {
    std::vector<T> one{T{1}};
    BasicMultivector<T> r(ambient_dim, 0, std::move(one));
    for (const auto &v : vectors) {
      require_same_dim(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(ambient_dim), "blade_from_vectors: vector dimension");
      r = wedge(r, BasicMultivector<T>::from_vector(v));
    }
    return r;
  }

  /// Hodge star: e_I maps to sign(I, I^c) e_{I^c}, so that a ^ *b = <a, b> e_{1..m}.
  template <class T> BasicMultivector<T> hodge_star(const BasicMultivector<T> &a) {
    const int m = a.ambient_dim();
    require(a.degree() <= m, Errc::invalid_argument, "hodge_star: degree exceeds ambient dimension");
    const Mask full = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
    BasicMultivector<T> r(m, m - a.degree());
    const auto &masks = subset_masks(m, a.degree());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const Mask comp = full & ~masks[i];
      const T v = wedge_sign(masks[i], comp) > 0 ? a[i] : T(-a[i]);
      r[subset_rank(m, comp)] = v;
    }
    return r;
  }

  /// Euclidean (for complex scalars: hermitian) norm of the coefficient vector.
  template <class T> double norm(const BasicMultivector<T> &a) {
    double s = 0.0;
    for (const auto &x : a.coeffs()) {
      const double v = detail::magnitude(x);
      s += v * v;
    }
    return std::sqrt(s);
  }

  /// Real scalar product; for complex scalars the real part of the hermitian product.
  template <class T> double inner(const BasicMultivector<T> &a, const BasicMultivector<T> &b) {
    require(a.ambient_dim() == b.ambient_dim() && a.degree() == b.degree(), Errc::dimension_mismatch, "inner: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if constexpr (std::is_same_v<T, std::complex<double>>) {
        s += (a[i] * std::conj(b[i])).real();
      } else {
        s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
      }
    }
    return s;
  }

  /// Interleaved (re, im) coordinates of a complex multivector; norm preserving.
  std::vector<double> realify(const ComplexMultivector &a);

  /// Inverse of realify for a given complex shape.
  ComplexMultivector complexify(int complex_dim, int degree, std::span<const double> interleaved);

} // namespace zonoid
