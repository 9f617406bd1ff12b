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

#ifndef RINGCB_CHARACTERS_HPP_
#define RINGCB_CHARACTERS_HPP_

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ringcb/finite_field.hpp"

namespace ringcb {

// Order of the root-of-unity group that holds every character value over
// GF(q): n = p(q-1). p-th roots are multiples of q-1, (q-1)-th roots are
// multiples of p.
inline std::uint32_t root_order(const FieldSpec& f) {
  if (std::gcd(f.p(), f.q() - 1) != 1) {
    throw std::logic_error("gcd(p, q-1) != 1");
  }
  return f.p() * (f.q() - 1);
}

// exp(2 pi i exponent / order), carried exactly.
class RootOfUnity {
 public:
  RootOfUnity(std::uint32_t order, std::uint64_t exponent)
      : order_(order), exponent_(static_cast<std::uint32_t>(exponent % order)) {
    if (order == 0) throw std::invalid_argument("root of unity order 0");
  }

  std::uint32_t order() const { return order_; }
  std::uint32_t exponent() const { return exponent_; }

  RootOfUnity operator*(const RootOfUnity& o) const {
    check_same(o);
    return {order_, std::uint64_t{exponent_} + o.exponent_};
  }

  RootOfUnity conj() const { return {order_, std::uint64_t{order_} - exponent_}; }

  std::complex<double> value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * exponent_ / order_);
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  void check_same(const RootOfUnity& o) const {
    if (o.order_ != order_) {
      throw std::invalid_argument("root of unity order mismatch");
    }
  }

  std::uint32_t order_;
  std::uint32_t exponent_;
};

// Lookup of exp(2 pi i e / n) for every e in [0, n).
class PhaseTable {
 public:
  explicit PhaseTable(std::uint32_t n) : table_(n) {
    for (std::uint32_t e = 0; e < n; ++e) {
      table_[e] = std::polar(1.0, 2.0 * std::numbers::pi * e / n);
    }
  }

  std::uint32_t order() const {
    return static_cast<std::uint32_t>(table_.size());
  }
  const std::complex<double>& operator[](std::uint32_t e) const {
    return table_[e];
  }

 private:
  std::vector<std::complex<double>> table_;
};

// chi_b(c) = chi(b c).
struct AdditiveCharIndex {
  FieldElement b;
};

// psi_j(g^k) = exp(2 pi i j k / (q-1)).
struct MultCharIndex {
  std::uint32_t j = 0;

  static MultCharIndex reduced(const FieldSpec& f, std::uint64_t j) {
    return {static_cast<std::uint32_t>(j % (f.q() - 1))};
  }
};

// zeta_p^{Tr(bc)} as an element of the order-n group.
inline RootOfUnity additive_char(const FieldSpec& f, AdditiveCharIndex b,
                                 FieldElement c) {
  return {root_order(f),
          std::uint64_t{f.trace(f.mul(b.b, c))} * (f.q() - 1)};
}

inline RootOfUnity mult_char(const FieldSpec& f, MultCharIndex j,
                             FieldElement c) {
  if (c.code == 0) {
    throw std::domain_error("multiplicative character at zero");
  }
  const std::uint64_t k = f.discrete_log(c);
  return {root_order(f), (std::uint64_t{j.j} * k % (f.q() - 1)) * f.p()};
}

// G(psi_j, chi_b) by direct summation over F_q^*.
inline std::complex<double> gauss_sum_fq(const FieldSpec& f, MultCharIndex j,
                                         AdditiveCharIndex b) {
  const PhaseTable phase(root_order(f));
  std::complex<double> sum = 0.0;
  for (std::uint32_t code = 1; code < f.q(); ++code) {
    const FieldElement c{code};
    sum += phase[(mult_char(f, j, c) * additive_char(f, b, c)).exponent()];
  }
  return sum;
}

// Absolute tolerance for a double-precision sum of `terms` unit-modulus
// values.
inline double sum_tolerance(std::uint64_t terms) {
  return 1e-9 * static_cast<double>(terms == 0 ? 1 : terms);
}

}  // namespace ringcb

#endif  // RINGCB_CHARACTERS_HPP_
