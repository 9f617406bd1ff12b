// Copyright 2026 The ringcb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations. Nothing here touches the exp/log
// tables, Ben-Or test, or exponent arithmetic of the main headers; these are
// the independent side of every dual-route check.

#ifndef RINGCB_VERIFY_HPP_
#define RINGCB_VERIFY_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace ringcb::verify {

// Polynomials over F_p stored as full-length coefficient vectors.
struct NaiveField {
  std::uint32_t p;
  std::uint32_t m;
  std::vector<std::uint32_t> modulus;  // monic, size m + 1

  std::uint32_t q() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    return q;
  }

  std::vector<std::uint32_t> digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(m);
    for (auto& x : d) {
      x = code % p;
      code /= p;
    }
    return d;
  }

  std::uint32_t code(const std::vector<std::uint32_t>& d) const {
    std::uint32_t c = 0;
    for (std::size_t i = m; i-- > 0;) c = c * p + d[i];
    return c;
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    auto a = digits(x), b = digits(y);
    for (std::uint32_t i = 0; i < m; ++i) a[i] = (a[i] + b[i]) % p;
    return code(a);
  }

  // Schoolbook product, then reduce top-down using x^m = -(lower terms).
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    const auto a = digits(x), b = digits(y);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t k = 0; k < m; ++k) prod[i + k] += std::uint64_t{a[i]} * b[k];
    }
    for (auto& v : prod) v %= p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
      const std::uint64_t top = prod[d];
      prod[d] = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        prod[d - m + i] = (prod[d - m + i] + (p - modulus[i]) * top) % p;
      }
    }
    std::vector<std::uint32_t> r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return code(r);
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }

  // x + x^p + ... + x^(p^(m-1)) by repeated multiplication.
  std::uint32_t frobenius_sum(std::uint32_t x) const {
    std::uint32_t sum = 0;
    std::uint32_t conj = x;
    for (std::uint32_t i = 0; i < m; ++i) {
      sum = add(sum, conj);
      conj = pow(conj, p);
    }
    return sum;
  }

  std::uint32_t order(std::uint32_t x) const {
    if (x == 0) return 0;
    std::uint32_t acc = x, k = 1;
    while (acc != 1 && k <= q()) {
      acc = mul(acc, x);
      ++k;
    }
    return acc == 1 ? k : 0;
  }
};

// Remainder of a modulo monic b, both ascending and untrimmed-safe.
inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const std::uint64_t top = a[d] % p;
    if (top == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      a[d - db + i] = static_cast<std::uint32_t>(
          (a[d - db + i] + (p - b[i]) * top) % p);
    }
  }
  a.resize(db);
  return a;
}

// Irreducible iff no monic polynomial of degree 1..m/2 divides it.
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f,
                                          std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t v = lower;
      for (std::size_t i = 0; i < d; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
      g[d] = 1;
      const auto r = poly_rem(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

inline std::complex<double> unit_root(double numerator, double denominator) {
  return std::polar(1.0, 2.0 * std::numbers::pi * numerator / denominator);
}

}  // namespace ringcb::verify

#endif  // RINGCB_VERIFY_HPP_
