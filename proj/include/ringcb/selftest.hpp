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

// Invariant suites run by `ringcb selftest`. Each suite is exhaustive over
// the given field and reports the first failure it meets.

#ifndef RINGCB_SELFTEST_HPP_
#define RINGCB_SELFTEST_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "ringcb/characters.hpp"
#include "ringcb/codebook.hpp"
#include "ringcb/evaluate.hpp"
#include "ringcb/finite_field.hpp"
#include "ringcb/local_ring.hpp"
#include "ringcb/verify.hpp"

namespace ringcb::selftest {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

namespace detail {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  bool expect(bool ok, const std::string& what) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
    return ok;
  }

  bool ok() const { return result_.passed; }
  SuiteResult done() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline std::string qtag(const FieldSpec& f) {
  return "q=" + std::to_string(f.q()) + ": ";
}

}  // namespace detail

// Field axioms, agreement with schoolbook arithmetic, trace linearity and
// fibers, Frobenius invariance of the trace, and the discrete-log table.
// A supplied modulus is checked by trial division before anything is built.
inline SuiteResult field_suite(std::uint32_t p, std::uint32_t m,
                               std::optional<std::vector<std::uint32_t>> modulus = {}) {
  detail::Checker ck("field p=" + std::to_string(p) + " m=" + std::to_string(m));
  if (modulus && modulus->size() == m + 1 &&
      !verify::irreducible_by_trial_division(*modulus, p)) {
    ck.expect(false, "modulus is reducible (trial division)");
    return std::move(ck).done();
  }
  std::optional<FieldSpec> built;
  try {
    built = build_field(p, m, modulus);
  } catch (const std::exception& e) {
    ck.expect(false, std::string("build_field: ") + e.what());
    return std::move(ck).done();
  }
  const FieldSpec& f = *built;
  const std::uint32_t q = f.q();
  const verify::NaiveField naive{p, m, f.modulus()};
  const auto tag = detail::qtag(f);

  ck.expect(verify::irreducible_by_trial_division(f.modulus(), p),
            tag + "modulus reducible");
  ck.expect(naive.order(f.generator().code) == q - 1, tag + "generator not primitive");

  for (std::uint32_t x = 0; x < q && ck.ok(); ++x) {
    const FieldElement fx{x};
    if (x != 0) {
      ck.expect(f.mul(fx, f.inv(fx)) == f.one(), tag + "x * inv(x) != 1");
      ck.expect(f.exp(f.discrete_log(fx)) == fx, tag + "g^dlog(x) != x");
    }
    ck.expect(f.add(fx, f.neg(fx)) == f.zero(), tag + "x + (-x) != 0");
    ck.expect(f.trace(f.pow(fx, p)) == f.trace(fx), tag + "Tr(x^p) != Tr(x)");
    ck.expect(f.trace(fx) == naive.frobenius_sum(x), tag + "trace mismatch");
    for (std::uint32_t y = 0; y < q && ck.ok(); ++y) {
      const FieldElement fy{y};
      ck.expect(f.mul(fx, fy).code == naive.mul(x, y), tag + "mul mismatch");
      ck.expect(f.add(fx, fy).code == naive.add(x, y), tag + "add mismatch");
      ck.expect(f.mul(fx, fy) == f.mul(fy, fx), tag + "mul not commutative");
      ck.expect(f.trace(f.add(fx, fy)) == (f.trace(fx) + f.trace(fy)) % p,
                tag + "trace not additive");
    }
  }
  for (std::uint32_t x = 0; x < q && ck.ok(); x += 1 + q / 16) {
    for (std::uint32_t y = 0; y < q && ck.ok(); y += 1 + q / 16) {
      for (std::uint32_t z = 0; z < q && ck.ok(); ++z) {
        const FieldElement a{x}, b{y}, c{z};
        ck.expect(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                  tag + "distributivity");
        ck.expect(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)),
                  tag + "mul associativity");
      }
    }
  }
  std::vector<std::uint32_t> fiber(p, 0);
  std::vector<bool> seen(q, false);
  for (std::uint32_t x = 0; x < q; ++x) ++fiber[f.trace(FieldElement{x})];
  for (auto count : fiber) ck.expect(count == q / p, tag + "trace fiber size");
  for (std::uint32_t x = 1; x < q; ++x) seen[f.discrete_log(FieldElement{x})] = true;
  for (std::uint32_t k = 0; k + 1 < q; ++k) ck.expect(seen[k], tag + "dlog not bijective");
  return std::move(ck).done();
}

// Homomorphism laws, additive orthogonality, Gauss-sum special values and
// the modulus sqrt(q).
inline SuiteResult characters_suite(const FieldSpec& f) {
  detail::Checker ck("characters q=" + std::to_string(f.q()));
  const std::uint32_t q = f.q();
  const auto tag = detail::qtag(f);
  for (std::uint32_t b = 0; b < q && ck.ok(); ++b) {
    std::complex<double> orth = 0.0;
    for (std::uint32_t x = 0; x < q; ++x) {
      orth += additive_char(f, {FieldElement{b}}, FieldElement{x}).value();
      for (std::uint32_t y = 0; y < q; ++y) {
        ck.expect(additive_char(f, {FieldElement{b}}, f.add({x}, {y})) ==
                      additive_char(f, {FieldElement{b}}, {x}) *
                          additive_char(f, {FieldElement{b}}, {y}),
                  tag + "additive homomorphism");
      }
    }
    const double expect = b == 0 ? q : 0.0;
    ck.expect(std::abs(orth - expect) < sum_tolerance(q), tag + "orthogonality");
  }
  for (std::uint32_t j = 0; j + 1 < q && ck.ok(); ++j) {
    for (std::uint32_t x = 1; x < q; ++x) {
      for (std::uint32_t y = 1; y < q; ++y) {
        ck.expect(mult_char(f, {j}, f.mul({x}, {y})) ==
                      mult_char(f, {j}, {x}) * mult_char(f, {j}, {y}),
                  tag + "multiplicative homomorphism");
      }
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto g = gauss_sum_fq(f, {j}, {FieldElement{b}});
      const double tol = sum_tolerance(q);
      if (j == 0 && b == 0) {
        ck.expect(std::abs(g - double(q - 1)) < tol, tag + "G(trivial, 0) != q-1");
      } else if (j == 0) {
        ck.expect(std::abs(g + 1.0) < tol, tag + "G(trivial, b) != -1");
      } else if (b == 0) {
        ck.expect(std::abs(g) < tol, tag + "G(psi, 0) != 0");
      } else {
        ck.expect(std::abs(std::abs(g) - std::sqrt(double(q))) < 1e-9,
                  tag + "|G(psi, chi_b)| != sqrt(q)");
      }
    }
  }
  return std::move(ck).done();
}

// Unit counts, decomposition round trip, ring character homomorphisms, and
// the closed-form Gauss sum against enumeration over R^*.
inline SuiteResult local_ring_suite(const FieldSpec& f) {
  detail::Checker ck("local_ring q=" + std::to_string(f.q()));
  const std::uint32_t q = f.q();
  const auto tag = detail::qtag(f);
  std::uint32_t units = 0;
  for (std::uint32_t i = 0; i < q * q; ++i) {
    const RingElement r = ring_element_at(f, i);
    if (!is_unit(r)) continue;
    ++units;
    ck.expect(recompose(f, unit_decompose(f, r)) == r, tag + "recompose");
  }
  ck.expect(units == q * (q - 1), tag + "|R*| != q(q-1)");

  for (std::uint32_t j = 0; j + 1 < q && ck.ok(); ++j) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto closed = gauss_sum_ring_closed(f, {j}, {a}, {b}, {c});
          const auto direct = gauss_sum_ring_oracle(f, {j}, {a}, {b}, {c});
          ck.expect(std::abs(closed - direct) < sum_tolerance(std::uint64_t{q} * (q - 1)),
                    tag + "Gauss sum closed form != enumeration at (j,a,b,c)=(" +
                        std::to_string(j) + "," + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (q <= 5) {
    const RingMultCharIndex phi{{q > 2 ? 1u : 0u}, FieldElement{q - 1}};
    const RingAdditiveCharIndex lam{FieldElement{1}, FieldElement{q - 1}};
    for (std::uint32_t x = 0; x < q * q && ck.ok(); ++x) {
      for (std::uint32_t y = 0; y < q * q; ++y) {
        const RingElement r = ring_element_at(f, x), s = ring_element_at(f, y);
        ck.expect(ring_additive_char(f, lam, ring_add(f, r, s)) ==
                      ring_additive_char(f, lam, r) * ring_additive_char(f, lam, s),
                  tag + "ring additive homomorphism");
        if (is_unit(r) && is_unit(s)) {
          ck.expect(ring_mult_char(f, phi, ring_mul(f, r, s)) ==
                        ring_mult_char(f, phi, r) * ring_mult_char(f, phi, s),
                    tag + "ring multiplicative homomorphism");
        }
      }
    }
  }
  return std::move(ck).done();
}

// Parameters, I_max, spectrum, closed-form inner products and the Welch
// ratio for both constructions.
inline SuiteResult codebook_suite(const FieldSpec& f) {
  detail::Checker ck("codebook q=" + std::to_string(f.q()));
  const std::uint64_t q = f.q();
  const auto tag = detail::qtag(f);
  const double target = 1.0 / (q - 1.0);
  for (const Construction kind : {Construction::kC1, Construction::kC2}) {
    const Codebook cb = kind == Construction::kC1 ? build_c1(f, {1 % (f.q() - 1)})
                                                  : build_c2(f, f.zero());
    const auto name = tag + std::string(to_string(kind)) + ": ";
    ck.expect(cb.size() == expected_rows(kind, q), name + "N");
    ck.expect(cb.length() == q * (q - 1), name + "K");
    const EvalReport r = evaluate(cb);
    ck.expect(std::abs(r.i_max - target) < 1e-9, name + "I_max != 1/(q-1)");
    ck.expect(spectrum_deviation(r) < 1e-9, name + "spectrum outside {0, 1/(q-1)}");
    const double formula =
        kind == Construction::kC1 ? ratio_formula_c1(q) : ratio_formula_c2(q);
    ck.expect(std::abs(r.ratio - formula) < 1e-9, name + "ratio formula");
    for (std::size_t i = 0; i < cb.size() && ck.ok(); ++i) {
      for (std::size_t k = i + 1; k < cb.size(); ++k) {
        if (std::abs(inner_product(cb, i, k) - predicted_inner_product(cb, i, k)) >= 1e-9) {
          ck.expect(false, name + "inner product != closed form at rows " +
                               std::to_string(i) + "," + std::to_string(k));
          break;
        }
      }
    }
  }
  return std::move(ck).done();
}

inline std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    if (as_prime_power(q)) out.push_back(q);
  }
  return out;
}

inline bool power_within(std::uint32_t p, std::uint32_t m, std::uint32_t limit) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m && q <= limit; ++i) q *= p;
  return q <= limit;
}

// A user-supplied modulus replacing the default one for GF(p^m).
struct Injection {
  std::uint32_t p;
  std::uint32_t m;
  std::vector<std::uint32_t> modulus;
};

// Every suite for every prime power q in [2, q_max], with the injected
// modulus (if any) used for its own (p, m).
inline std::vector<SuiteResult> run_all(std::uint32_t q_max,
                                        const std::optional<Injection>& inj = {}) {
  std::vector<SuiteResult> out;
  for (const std::uint32_t q : prime_powers_up_to(q_max)) {
    const PrimePower pp = *as_prime_power(q);
    std::optional<std::vector<std::uint32_t>> modulus;
    if (inj && inj->p == pp.p && inj->m == pp.m) modulus = inj->modulus;
    out.push_back(field_suite(pp.p, pp.m, modulus));
    if (!out.back().passed) continue;
    const FieldSpec f = build_field(pp.p, pp.m, modulus);
    out.push_back(characters_suite(f));
    out.push_back(local_ring_suite(f));
    out.push_back(codebook_suite(f));
  }
  if (inj && !power_within(inj->p, inj->m, q_max)) {
    out.push_back(field_suite(inj->p, inj->m, inj->modulus));
  }
  return out;
}

}  // namespace ringcb::selftest

#endif  // RINGCB_SELFTEST_HPP_
