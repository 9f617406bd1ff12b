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

// Codebooks built from products of ring characters phi(t) lambda(t) over the
// units t = t0 (1 + u t1) of R = F_q + u F_q. Every codeword has length
// K = q(q-1) and entries exp(2 pi i e / n) / sqrt(K), n = p(q-1).
//
//   C1: psi_j fixed; rows indexed by (a, b, c) in F_q^3, N = q^3.
//   C2: chi_b fixed; rows indexed by (j, a, c),          N = q^2 (q-1).
//   C0: nothing fixed; rows indexed by (j, a, b, c),     N = q^3 (q-1).
//
// Columns are ordered t0 ascending over F_q^*, then t1 ascending over F_q:
// column = (t0.code - 1) * q + t1.code. Rows are lexicographic in the index
// tuple using field encodings.

#ifndef RINGCB_CODEBOOK_HPP_
#define RINGCB_CODEBOOK_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcb/characters.hpp"
#include "ringcb/finite_field.hpp"
#include "ringcb/local_ring.hpp"

namespace ringcb {

// Upper bound on stored N * K exponents.
inline constexpr std::uint64_t kMaxCodebookEntries = std::uint64_t{1} << 25;

enum class Construction { kC0, kC1, kC2 };

inline std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::kC0: return "c0";
    case Construction::kC1: return "c1";
    case Construction::kC2: return "c2";
  }
  return "?";
}

inline Construction parse_construction(std::string_view s) {
  if (s == "c0") return Construction::kC0;
  if (s == "c1") return Construction::kC1;
  if (s == "c2") return Construction::kC2;
  throw std::invalid_argument("unknown construction '" + std::string(s) + "'");
}

// Index tuple of one codeword. Fields not varying in a construction hold the
// construction's fixed parameter.
struct RowLabel {
  MultCharIndex j;
  FieldElement a;
  FieldElement b;
  FieldElement c;
};

inline RowLabel decode_row_label(Construction kind, std::uint32_t q,
                                 std::optional<std::uint32_t> fixed,
                                 std::size_t row) {
  const auto r = static_cast<std::uint32_t>(row);
  switch (kind) {
    case Construction::kC1:
      return {{fixed.value()}, {r / (q * q)}, {r / q % q}, {r % q}};
    case Construction::kC2:
      return {{r / (q * q)}, {r / q % q}, {fixed.value()}, {r % q}};
    case Construction::kC0:
      return {{r / (q * q * q)}, {r / (q * q) % q}, {r / q % q}, {r % q}};
  }
  throw std::logic_error("bad construction");
}

inline std::uint64_t expected_rows(Construction kind, std::uint64_t q) {
  switch (kind) {
    case Construction::kC1: return q * q * q;
    case Construction::kC2: return q * q * (q - 1);
    case Construction::kC0: return q * q * q * (q - 1);
  }
  return 0;
}

class Codebook {
 public:
  Codebook(Construction construction, FieldSpec field,
           std::optional<std::uint32_t> fixed_param, std::size_t rows,
           std::vector<std::uint32_t> entries)
      : construction_(construction),
        field_(std::move(field)),
        fixed_param_(fixed_param),
        rows_(rows),
        cols_(std::size_t{field_.q()} * (field_.q() - 1)),
        n_root_(root_order(field_)),
        entries_(std::move(entries)),
        phase_(n_root_) {
    if ((construction_ == Construction::kC0) == fixed_param_.has_value()) {
      throw std::invalid_argument("fixed parameter required for c1/c2 only");
    }
    if (construction_ == Construction::kC1 && *fixed_param_ >= field_.q() - 1) {
      throw std::invalid_argument("fixed j out of range");
    }
    if (construction_ == Construction::kC2 && *fixed_param_ >= field_.q()) {
      throw std::invalid_argument("fixed b out of range");
    }
    if (rows_ != expected_rows(construction_, field_.q())) {
      throw std::invalid_argument("row count does not match construction");
    }
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("codebook entry count != N * K");
    }
    for (auto e : entries_) {
      if (e >= n_root_) throw std::invalid_argument("exponent >= n_root");
    }
  }

  Construction construction() const { return construction_; }
  const FieldSpec& field() const { return field_; }
  // j for C1, the code of b for C2, empty for C0.
  std::optional<std::uint32_t> fixed_param() const { return fixed_param_; }
  std::size_t size() const { return rows_; }
  std::size_t length() const { return cols_; }
  std::uint32_t n_root() const { return n_root_; }
  const PhaseTable& phases() const { return phase_; }

  std::span<const std::uint32_t> row(std::size_t i) const& {
    if (i >= rows_) throw std::out_of_range("codebook row out of range");
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const std::uint32_t> row(std::size_t i) const&& = delete;
  const std::vector<std::uint32_t>& entries() const& { return entries_; }

  RowLabel label(std::size_t i) const;

 private:
  Construction construction_;
  FieldSpec field_;
  std::optional<std::uint32_t> fixed_param_;
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t n_root_;
  std::vector<std::uint32_t> entries_;
  PhaseTable phase_;
};

inline RowLabel Codebook::label(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("codebook row out of range");
  return decode_row_label(construction_, field_.q(), fixed_param_, i);
}

// Column order of the codeword coordinates.
inline std::vector<UnitDecomposition> coordinate_order(const FieldSpec& f) {
  std::vector<UnitDecomposition> out;
  out.reserve(std::size_t{f.q()} * (f.q() - 1));
  for (std::uint32_t t0 = 1; t0 < f.q(); ++t0) {
    for (std::uint32_t t1 = 0; t1 < f.q(); ++t1) {
      out.push_back({FieldElement{t0}, FieldElement{t1}});
    }
  }
  return out;
}

namespace detail {

inline void check_codebook_size(std::uint64_t rows, std::uint64_t cols,
                                bool force) {
  if (!force && rows * cols > kMaxCodebookEntries) {
    throw SizeGuardError("codebook of " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " entries exceeds guard " +
                         std::to_string(kMaxCodebookEntries));
  }
}

// Exponent of phi(t) lambda(t) for phi = psi_j * chi_a, lambda = chi_b * chi_c.
inline std::uint32_t codeword_entry(const FieldSpec& f, const RowLabel& l,
                                    const UnitDecomposition& t) {
  return (ring_mult_char(f, {l.j, l.a}, recompose(f, t)) *
          ring_additive_char_unit(f, {l.b, l.c}, t))
      .exponent();
}

inline Codebook build(Construction kind, const FieldSpec& f,
                      std::optional<std::uint32_t> fixed, std::size_t rows,
                      bool force) {
  const auto coords = coordinate_order(f);
  check_codebook_size(rows, coords.size(), force);
  std::vector<std::uint32_t> entries(rows * coords.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const RowLabel l = decode_row_label(kind, f.q(), fixed, r);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      entries[r * coords.size() + k] = codeword_entry(f, l, coords[k]);
    }
  }
  return Codebook(kind, f, fixed, rows, std::move(entries));
}

}  // namespace detail

inline Codebook build_c1(const FieldSpec& f, MultCharIndex j,
                         bool force = false) {
  const std::uint64_t q = f.q();
  return detail::build(Construction::kC1, f,
                       MultCharIndex::reduced(f, j.j).j,
                       expected_rows(Construction::kC1, q), force);
}

inline Codebook build_c2(const FieldSpec& f, FieldElement b,
                         bool force = false) {
  const std::uint64_t q = f.q();
  return detail::build(Construction::kC2, f, f.element(b.code).code,
                       expected_rows(Construction::kC2, q), force);
}

inline Codebook build_c0(const FieldSpec& f, bool force = false) {
  const std::uint64_t q = f.q();
  return detail::build(Construction::kC0, f, std::nullopt,
                       expected_rows(Construction::kC0, q), force);
}

// c_i c_k^H = (1/K) sum_t c_i[t] conj(c_k[t]), without the 1/sqrt(K) factors
// on each side (they combine into the 1/K).
inline std::complex<double> inner_product(const Codebook& cb, std::size_t i,
                                          std::size_t k) {
  const auto x = cb.row(i);
  const auto y = cb.row(k);
  const std::uint32_t n = cb.n_root();
  const PhaseTable& phase = cb.phases();
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    sum += phase[x[t] >= y[t] ? x[t] - y[t] : x[t] + n - y[t]];
  }
  return sum / static_cast<double>(x.size());
}

// C1 inner product for the row difference (a, b, c):
//   K c1 c2^H = -q          if a = 0, c = 0, b != 0
//             = q chi(-ab/c) if a != 0, c != 0
//             = 0           otherwise.
inline std::complex<double> predicted_inner_product_c1(const FieldSpec& f,
                                                       FieldElement a,
                                                       FieldElement b,
                                                       FieldElement c) {
  if (a.code == 0 && b.code == 0 && c.code == 0) {
    throw std::invalid_argument("row difference is zero");
  }
  const double q = f.q();
  const double k = q * (q - 1);
  if (a.code == 0 && c.code == 0) return -q / k;
  if (a.code == 0 || c.code == 0) return 0.0;
  const FieldElement arg = f.neg(f.div(f.mul(a, b), c));
  return q / k * additive_char(f, {f.one()}, arg).value();
}

// C2 inner product for the row difference (psi_j = psi_j1 conj(psi_j2), a, c):
// (q/K) psi_j(-a/c) when a, c != 0, else 0.
inline std::complex<double> predicted_inner_product_c2(const FieldSpec& f,
                                                       MultCharIndex j,
                                                       FieldElement a,
                                                       FieldElement c) {
  if (j.j == 0 && a.code == 0 && c.code == 0) {
    throw std::invalid_argument("row difference is zero");
  }
  if (a.code == 0 || c.code == 0) return 0.0;
  const double q = f.q();
  const FieldElement arg = f.neg(f.div(a, c));
  return q / (q * (q - 1)) * mult_char(f, j, arg).value();
}

// Closed-form c_i c_k^H for two distinct rows of a C1 or C2 codebook.
inline std::complex<double> predicted_inner_product(const Codebook& cb,
                                                    std::size_t i,
                                                    std::size_t k) {
  const FieldSpec& f = cb.field();
  const RowLabel x = cb.label(i);
  const RowLabel y = cb.label(k);
  switch (cb.construction()) {
    case Construction::kC1:
      return predicted_inner_product_c1(f, f.sub(x.a, y.a), f.sub(x.b, y.b),
                                        f.sub(x.c, y.c));
    case Construction::kC2:
      return predicted_inner_product_c2(
          f, MultCharIndex::reduced(f, std::uint64_t{x.j.j} + f.q() - 1 - y.j.j),
          f.sub(x.a, y.a), f.sub(x.c, y.c));
    case Construction::kC0:
      break;
  }
  throw std::invalid_argument("no closed form for construction c0");
}

}  // namespace ringcb

#endif  // RINGCB_CODEBOOK_HPP_
