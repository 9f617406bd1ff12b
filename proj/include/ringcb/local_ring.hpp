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

// The local ring R = F_q + u F_q with u^2 = 0, its unit group
// R^* = F_q^* x (1 + uF_q), and its additive and multiplicative characters.
//
// Additive characters are lambda = chi_b * chi_c with
//   lambda(a0 + u a1) = chi_b(a0) chi_c(a1).
// Multiplicative characters are phi = psi_j * chi_a with
//   phi(t0 (1 + u t1)) = psi_j(t0) chi_a(t1).
// On a unit written as t0 (1 + u t1) the additive character reads
// chi_b(t0) chi_c(t0 t1), since a1 = t0 t1.

#ifndef RINGCB_LOCAL_RING_HPP_
#define RINGCB_LOCAL_RING_HPP_

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "ringcb/characters.hpp"
#include "ringcb/finite_field.hpp"

namespace ringcb {

// a0 + u a1.
struct RingElement {
  FieldElement a0;
  FieldElement a1;

  friend constexpr auto operator<=>(const RingElement&,
                                    const RingElement&) = default;
};

// t = t0 (1 + u t1), t0 != 0.
struct UnitDecomposition {
  FieldElement t0;
  FieldElement t1;

  friend constexpr auto operator<=>(const UnitDecomposition&,
                                    const UnitDecomposition&) = default;
};

struct RingAdditiveCharIndex {
  FieldElement b;
  FieldElement c;
};

struct RingMultCharIndex {
  MultCharIndex j;
  FieldElement a;
};

inline RingElement ring_add(const FieldSpec& f, RingElement x, RingElement y) {
  return {f.add(x.a0, y.a0), f.add(x.a1, y.a1)};
}

inline RingElement ring_neg(const FieldSpec& f, RingElement x) {
  return {f.neg(x.a0), f.neg(x.a1)};
}

// (a0 + u a1)(b0 + u b1) = a0 b0 + u (a0 b1 + a1 b0).
inline RingElement ring_mul(const FieldSpec& f, RingElement x, RingElement y) {
  return {f.mul(x.a0, y.a0),
          f.add(f.mul(x.a0, y.a1), f.mul(x.a1, y.a0))};
}

inline bool is_unit(RingElement x) { return x.a0.code != 0; }

// Index of x among all q^2 ring elements: a0 major, a1 minor.
inline std::uint32_t ring_index(const FieldSpec& f, RingElement x) {
  return x.a0.code * f.q() + x.a1.code;
}

inline RingElement ring_element_at(const FieldSpec& f, std::uint32_t index) {
  return {FieldElement{index / f.q()}, FieldElement{index % f.q()}};
}

inline UnitDecomposition unit_decompose(const FieldSpec& f, RingElement r) {
  if (!is_unit(r)) throw std::domain_error("not a unit of R");
  return {r.a0, f.mul(r.a1, f.inv(r.a0))};
}

inline RingElement recompose(const FieldSpec& f, UnitDecomposition d) {
  if (d.t0.code == 0) throw std::domain_error("t0 must be nonzero");
  return {d.t0, f.mul(d.t0, d.t1)};
}

// lambda(a0 + u a1) = zeta_p^{Tr(b a0 + c a1)}.
inline RootOfUnity ring_additive_char(const FieldSpec& f,
                                      RingAdditiveCharIndex idx,
                                      RingElement r) {
  return additive_char(f, {idx.b}, r.a0) * additive_char(f, {idx.c}, r.a1);
}

// The same character evaluated on a unit given in decomposed form:
// chi_b(t0) chi_c(t0 t1).
inline RootOfUnity ring_additive_char_unit(const FieldSpec& f,
                                           RingAdditiveCharIndex idx,
                                           UnitDecomposition t) {
  return additive_char(f, {idx.b}, t.t0) *
         additive_char(f, {idx.c}, f.mul(t.t0, t.t1));
}

inline RootOfUnity ring_mult_char(const FieldSpec& f, RingMultCharIndex idx,
                                  RingElement t) {
  const UnitDecomposition d = unit_decompose(f, t);
  return mult_char(f, idx.j, d.t0) * additive_char(f, {idx.a}, d.t1);
}

// G_R(psi_j * chi_a, chi_b * chi_c) from the four-case closed form:
//   a = 0, c = 0   : q G(psi_j, chi_b)
//   exactly one 0  : 0
//   a != 0, c != 0 : q psi_j(-a/c) chi_1(-ab/c)
// G(psi_j, chi_b) takes its exact value q-1, -1 or 0 when psi_j is trivial
// or b = 0; otherwise only its modulus sqrt(q) is known in closed form and
// the summed value is used.
inline std::complex<double> gauss_sum_ring_closed(const FieldSpec& f,
                                                  MultCharIndex j,
                                                  FieldElement a,
                                                  FieldElement b,
                                                  FieldElement c) {
  const double q = f.q();
  const bool a0 = a.code == 0;
  const bool c0 = c.code == 0;
  if (a0 && c0) {
    if (j.j == 0) return b.code == 0 ? q * (q - 1) : -q;
    if (b.code == 0) return 0.0;
    return q * gauss_sum_fq(f, j, {b});
  }
  if (a0 != c0) return 0.0;
  const FieldElement t0 = f.neg(f.div(a, c));  // -a/c
  const RootOfUnity v =
      mult_char(f, j, t0) * additive_char(f, {f.one()}, f.mul(b, t0));
  return q * v.value();
}

// G_R by enumerating every unit a0 + u a1 of R.
inline std::complex<double> gauss_sum_ring_oracle(const FieldSpec& f,
                                                  MultCharIndex j,
                                                  FieldElement a,
                                                  FieldElement b,
                                                  FieldElement c) {
  const PhaseTable phase(root_order(f));
  std::complex<double> sum = 0.0;
  for (std::uint32_t a0 = 1; a0 < f.q(); ++a0) {
    for (std::uint32_t a1 = 0; a1 < f.q(); ++a1) {
      const RingElement t{FieldElement{a0}, FieldElement{a1}};
      const RootOfUnity v = ring_mult_char(f, {j, a}, t) *
                            ring_additive_char(f, {b, c}, t);
      sum += phase[v.exponent()];
    }
  }
  return sum;
}

}  // namespace ringcb

#endif  // RINGCB_LOCAL_RING_HPP_
