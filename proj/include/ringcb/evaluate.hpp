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

#ifndef RINGCB_EVALUATE_HPP_
#define RINGCB_EVALUATE_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ringcb/codebook.hpp"

namespace ringcb {

// Exhaustive evaluation is refused above this many codewords unless forced.
inline constexpr std::size_t kExhaustiveLimit = 5000;

// Amplitudes are bucketed on a grid of this spacing for spectrum reporting.
inline constexpr double kSpectrumResolution = 1e-9;

// Lower bound on I_max for any (N, K) codebook with N >= K.
inline double welch_bound(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || n < 2) throw std::invalid_argument("welch bound needs N >= 2, K >= 1");
  if (n < k) throw std::invalid_argument("welch bound needs N >= K");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::sqrt((nd - kd) / ((nd - 1.0) * kd));
}

// I_max / I_w for C1 with I_max = 1/(q-1), N = q^3, K = q(q-1).
inline double ratio_formula_c1(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const double x = static_cast<double>(q);
  const double num = x * x * x * x - x * x * x - x + 1.0;
  const double den = (x * x - x + 1.0) * (x - 1.0) * (x - 1.0);
  return std::sqrt(num / den);
}

// I_max / I_w for C2 with I_max = 1/(q-1), N = q^2(q-1), K = q(q-1).
inline double ratio_formula_c2(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const double x = static_cast<double>(q);
  const double num = x * x * x - x * x - 1.0;
  const double den = (x - 1.0) * (x - 1.0) * (x - 1.0);
  return std::sqrt(num / den);
}

enum class EvalMode { kExhaustive, kSampled };

struct EvalOptions {
  EvalMode mode = EvalMode::kExhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // Allow exhaustive evaluation beyond kExhaustiveLimit.
  bool force = false;
};

struct SpectrumBin {
  double amplitude;
  std::uint64_t count;

  friend bool operator==(const SpectrumBin&, const SpectrumBin&) = default;
};

struct EvalReport {
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  double i_max = 0.0;
  double i_w = 0.0;
  double ratio = 0.0;
  std::uint64_t pairs = 0;
  // Ascending by amplitude.
  std::vector<SpectrumBin> spectrum;
  bool degenerate = false;
  double elapsed_seconds = 0.0;
};

// Equality of everything except timing.
inline bool same_results(const EvalReport& x, const EvalReport& y) {
  return x.q == y.q && x.n == y.n && x.k == y.k && x.i_max == y.i_max &&
         x.i_w == y.i_w && x.ratio == y.ratio && x.pairs == y.pairs &&
         x.spectrum == y.spectrum && x.degenerate == y.degenerate;
}

// Largest distance from a spectrum bin to the set {0, 1/(q-1)}.
inline double spectrum_deviation(const EvalReport& r) {
  const double target = 1.0 / (r.q - 1.0);
  double worst = 0.0;
  for (const auto& bin : r.spectrum) {
    worst = std::max(worst, std::min(std::abs(bin.amplitude),
                                     std::abs(bin.amplitude - target)));
  }
  return worst;
}

// Pairs (i, k), i < k, drawn uniformly with a seeded generator. The pair set
// depends only on (N, count, seed).
inline std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(
    std::size_t n, std::uint64_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two codewords");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::size_t i = pick(gen);
    std::size_t k = pick(gen);
    if (i == k) continue;
    if (i > k) std::swap(i, k);
    out.emplace_back(i, k);
  }
  return out;
}

namespace detail {

struct PartialEval {
  double i_max = 0.0;
  std::uint64_t pairs = 0;
  std::map<std::int64_t, std::uint64_t> bins;

  void add(double amplitude) {
    i_max = std::max(i_max, amplitude);
    ++pairs;
    ++bins[std::llround(amplitude / kSpectrumResolution)];
  }

  void merge(const PartialEval& o) {
    i_max = std::max(i_max, o.i_max);
    pairs += o.pairs;
    for (const auto& [key, count] : o.bins) bins[key] += count;
  }
};

}  // namespace detail

// I_max, Welch bound, ratio and amplitude spectrum over all distinct pairs
// (exhaustive) or a seeded sample of pairs. Work is split across threads;
// every reduction is order-independent, so the report does not depend on the
// worker count.
inline EvalReport evaluate(const Codebook& cb, const EvalOptions& opt = {}) {
  const std::size_t n = cb.size();
  if (n < 2) throw std::invalid_argument("codebook needs at least two rows");
  if (opt.mode == EvalMode::kExhaustive && n > kExhaustiveLimit && !opt.force) {
    throw SizeGuardError("exhaustive evaluation of N = " + std::to_string(n) +
                         " > " + std::to_string(kExhaustiveLimit) +
                         " requires sampled mode or force");
  }
  const auto start = std::chrono::steady_clock::now();

  unsigned workers = opt.workers ? opt.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);

  std::vector<std::pair<std::size_t, std::size_t>> sampled;
  if (opt.mode == EvalMode::kSampled) {
    sampled = sample_pairs(n, opt.samples, opt.seed);
  }

  std::vector<detail::PartialEval> parts(workers);
  auto run = [&](unsigned w) {
    auto& part = parts[w];
    if (opt.mode == EvalMode::kExhaustive) {
      for (std::size_t i = w; i < n; i += workers) {
        for (std::size_t k = i + 1; k < n; ++k) {
          part.add(std::abs(inner_product(cb, i, k)));
        }
      }
    } else {
      for (std::size_t s = w; s < sampled.size(); s += workers) {
        part.add(std::abs(inner_product(cb, sampled[s].first, sampled[s].second)));
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  detail::PartialEval total;
  for (const auto& part : parts) total.merge(part);

  EvalReport r;
  r.q = cb.field().q();
  r.n = n;
  r.k = cb.length();
  r.i_max = total.i_max;
  r.i_w = welch_bound(r.n, r.k);
  r.ratio = r.i_w > 0.0 ? r.i_max / r.i_w : 0.0;
  r.pairs = total.pairs;
  for (const auto& [key, count] : total.bins) {
    r.spectrum.push_back({static_cast<double>(key) * kSpectrumResolution, count});
  }
  r.degenerate = r.q == 2;
  r.elapsed_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return r;
}

}  // namespace ringcb

#endif  // RINGCB_EVALUATE_HPP_
