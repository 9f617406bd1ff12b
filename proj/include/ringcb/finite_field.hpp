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

#ifndef RINGCB_FINITE_FIELD_HPP_
#define RINGCB_FINITE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringcb {

inline constexpr std::uint64_t kDefaultFieldGuard = 512;

// Raised when a requested object exceeds a configured size limit.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Maximum field size q. RING_CODEBOOK_GUARD overrides the default.
inline std::uint64_t field_size_guard() {
  if (const char* env = std::getenv("RING_CODEBOOK_GUARD"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultFieldGuard;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Prime factorization as (prime, multiplicity) pairs in ascending order.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(f[0].first), f[0].second};
}

// An element of GF(p^m), identified by its little-endian base-p encoding
// sum coeffs[i] * p^i. Arithmetic lives on FieldSpec.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&,
                                    const FieldElement&) = default;
};

namespace detail {

// Dense polynomial over F_p, ascending degree, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = factor * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f,
                        std::uint32_t p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// base^(p^k) mod f by k successive p-th powers.
inline Poly frobenius_pow(Poly base, std::uint32_t k, const Poly& f,
                          std::uint32_t p) {
  for (std::uint32_t i = 0; i < k; ++i) {
    Poly acc{1};
    Poly b = base;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, b, f, p);
      b = poly_mulmod(b, b, f, p);
    }
    base = std::move(acc);
  }
  return base;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^(p^i) - x, f) = 1 for
// every i <= m/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = frobenius_pow(h, 1, f, p);
    const Poly g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace detail

class FieldSpec;

// Builds GF(p^m). Without a modulus, the first monic irreducible polynomial
// in ascending encoding order of its lower coefficients is used. Without a
// generator, the primitive element of smallest encoding is chosen.
FieldSpec build_field(std::uint32_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint32_t>> modulus = {},
                      std::optional<std::uint32_t> generator = {},
                      std::uint64_t guard = field_size_guard());

// Immutable realization of GF(p^m) with precomputed exp/log and trace tables.
class FieldSpec {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  // Monic modulus, ascending coefficients, size m + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return FieldElement{exp_[1 % (q_ - 1)]}; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return FieldElement{1}; }

  FieldElement element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("field element code out of range");
    return FieldElement{code};
  }

  std::vector<std::uint32_t> coeffs(FieldElement x) const {
    std::vector<std::uint32_t> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      c[i] = x.code % p_;
      x.code /= p_;
    }
    return c;
  }

  FieldElement from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > m_) throw std::invalid_argument("too many coefficients");
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) throw std::invalid_argument("coefficient not reduced");
      code = code * p_ + c[i];
    }
    return FieldElement{code};
  }

  FieldElement add(FieldElement x, FieldElement y) const {
    if (p_ == 2) return FieldElement{x.code ^ y.code};
    std::uint32_t out = 0;
    for (std::uint32_t i = 0, scale = 1; i < m_; ++i, scale *= p_) {
      const std::uint32_t d = (x.code % p_ + y.code % p_) % p_;
      out += d * scale;
      x.code /= p_;
      y.code /= p_;
    }
    return FieldElement{out};
  }

  FieldElement neg(FieldElement x) const {
    if (p_ == 2) return x;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0, scale = 1; i < m_; ++i, scale *= p_) {
      const std::uint32_t d = x.code % p_;
      out += ((p_ - d) % p_) * scale;
      x.code /= p_;
    }
    return FieldElement{out};
  }

  FieldElement sub(FieldElement x, FieldElement y) const {
    return add(x, neg(y));
  }

  FieldElement mul(FieldElement x, FieldElement y) const {
    if (x.code == 0 || y.code == 0) return {};
    return FieldElement{exp_[(log_[x.code] + log_[y.code]) % (q_ - 1)]};
  }

  FieldElement inv(FieldElement x) const {
    if (x.code == 0) throw std::domain_error("inverse of zero");
    return FieldElement{exp_[(q_ - 1 - log_[x.code]) % (q_ - 1)]};
  }

  FieldElement div(FieldElement x, FieldElement y) const {
    return mul(x, inv(y));
  }

  FieldElement pow(FieldElement x, std::uint64_t e) const {
    if (e == 0) return one();
    if (x.code == 0) return {};
    return FieldElement{
        exp_[static_cast<std::uint32_t>((log_[x.code] * (e % (q_ - 1))) %
                                        (q_ - 1))]};
  }

  // g^k.
  FieldElement exp(std::uint64_t k) const {
    return FieldElement{exp_[static_cast<std::uint32_t>(k % (q_ - 1))]};
  }

  // Absolute trace to F_p, as a residue in [0, p).
  std::uint32_t trace(FieldElement x) const { return trace_[x.code]; }

  // k in [0, q-2] with g^k = x.
  std::uint32_t discrete_log(FieldElement x) const {
    if (x.code == 0) throw std::domain_error("discrete log of zero");
    return log_[x.code];
  }

 private:
  friend FieldSpec build_field(std::uint32_t, std::uint32_t,
                               std::optional<std::vector<std::uint32_t>>,
                               std::optional<std::uint32_t>, std::uint64_t);

  FieldSpec() = default;

  detail::Poly to_poly(std::uint32_t code) const {
    detail::Poly a(m_);
    for (std::uint32_t i = 0; i < m_; ++i, code /= p_) a[i] = code % p_;
    detail::trim(a);
    return a;
  }

  std::uint32_t from_poly(const detail::Poly& a) const {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
    return code;
  }

  std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const {
    return from_poly(
        detail::poly_mulmod(to_poly(x), to_poly(y), modulus_, p_));
  }

  std::uint32_t multiplicative_order(std::uint32_t x) const {
    std::uint32_t acc = x;
    std::uint32_t order = 1;
    while (acc != 1) {
      acc = slow_mul(acc, x);
      ++order;
      if (order > q_) return 0;  // not invertible (reducible modulus)
    }
    return order;
  }

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;    // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;    // log_[x] for x != 0
  std::vector<std::uint32_t> trace_;  // trace_[x]
};

inline FieldSpec build_field(std::uint32_t p, std::uint32_t m,
                             std::optional<std::vector<std::uint32_t>> modulus,
                             std::optional<std::uint32_t> generator,
                             std::uint64_t guard) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > guard) {
      throw SizeGuardError("field size " + std::to_string(p) + "^" +
                           std::to_string(m) + " exceeds guard q <= " +
                           std::to_string(guard));
    }
  }

  FieldSpec f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    auto& mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " +
                                  std::to_string(m));
    }
    for (auto c : mod) {
      if (c >= p) throw std::invalid_argument("modulus coefficient >= p");
    }
    if (!detail::is_irreducible(mod, p)) {
      throw std::invalid_argument("modulus is reducible over F_" +
                                  std::to_string(p));
    }
    f.modulus_ = mod;
  } else {
    for (std::uint32_t lower = 0; lower < f.q_; ++lower) {
      detail::Poly cand(m + 1);
      std::uint32_t v = lower;
      for (std::uint32_t i = 0; i < m; ++i, v /= p) cand[i] = v % p;
      cand[m] = 1;
      if (detail::is_irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
  }

  std::uint32_t g = 0;
  if (generator) {
    if (*generator == 0 || *generator >= f.q_ ||
        f.multiplicative_order(*generator) != f.q_ - 1) {
      throw std::invalid_argument("generator " + std::to_string(*generator) +
                                  " is not a primitive element");
    }
    g = *generator;
  } else {
    for (std::uint32_t c = 1; c < f.q_; ++c) {
      if (f.multiplicative_order(c) == f.q_ - 1) {
        g = c;
        break;
      }
    }
  }

  f.exp_.assign(f.q_ - 1, 0);
  f.log_.assign(f.q_, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t k = 0; k + 1 < f.q_; ++k) {
    f.exp_[k] = acc;
    f.log_[acc] = k;
    acc = f.slow_mul(acc, g);
  }

  // Tr(x) = x + x^p + ... + x^(p^(m-1)); lands in the prime subfield.
  f.trace_.assign(f.q_, 0);
  for (std::uint32_t x = 1; x < f.q_; ++x) {
    FieldElement sum{};
    FieldElement conj{x};
    for (std::uint32_t i = 0; i < m; ++i) {
      sum = f.add(sum, conj);
      conj = f.pow(conj, p);
    }
    if (sum.code >= p) throw std::logic_error("trace outside prime field");
    f.trace_[x] = sum.code;
  }
  return f;
}

}  // namespace ringcb

#endif  // RINGCB_FINITE_FIELD_HPP_
