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

// ringcb: build, evaluate and verify codebooks over F_q + uF_q.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringcb/characters.hpp"
#include "ringcb/codebook.hpp"
#include "ringcb/evaluate.hpp"
#include "ringcb/finite_field.hpp"
#include "ringcb/io.hpp"
#include "ringcb/local_ring.hpp"
#include "ringcb/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::string modulus;
  std::string construction = "c1";
  std::optional<std::uint32_t> fixed_j;
  std::optional<std::uint32_t> fixed_b;
  std::string mode;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string in;
  std::string out;
  std::string format;
  bool force = false;
  std::uint32_t q_max = 9;
  std::vector<std::uint64_t> q_list;
};

std::string describe_factorization(std::uint64_t q) {
  std::ostringstream os;
  os << q << " = ";
  const auto f = ringcb::factorize(q);
  if (f.empty()) return os.str() + "1";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " * ";
    os << f[i].first;
    if (f[i].second > 1) os << '^' << f[i].second;
  }
  return os.str();
}

ringcb::PrimePower resolve_prime_power(std::uint64_t q) {
  if (q < 2) throw UsageError("q must be at least 2");
  const auto pp = ringcb::as_prime_power(q);
  if (!pp) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power (" +
                     describe_factorization(q) + ")");
  }
  return *pp;
}

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad --modulus coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--modulus is empty");
  return out;
}

ringcb::FieldSpec field_from_config(const RunConfig& cfg) {
  ringcb::PrimePower pp;
  if (cfg.q) {
    if (cfg.p || cfg.m) throw UsageError("use either --q or --p/--m, not both");
    pp = resolve_prime_power(*cfg.q);
  } else if (cfg.p) {
    pp = {*cfg.p, cfg.m.value_or(1)};
  } else {
    throw UsageError("a field is required: --q or --p [--m]");
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.modulus.empty()) modulus = parse_coefficients(cfg.modulus);
  const std::uint64_t guard =
      cfg.force ? std::numeric_limits<std::uint64_t>::max() : ringcb::field_size_guard();
  try {
    return ringcb::build_field(pp.p, pp.m, modulus, std::nullopt, guard);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ringcb::EvalOptions eval_options(const RunConfig& cfg, std::size_t n) {
  ringcb::EvalOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.workers = cfg.workers;
  opt.force = cfg.force;
  if (cfg.mode == "sampled") {
    opt.mode = ringcb::EvalMode::kSampled;
  } else if (cfg.mode == "exhaustive" || cfg.mode.empty()) {
    opt.mode = ringcb::EvalMode::kExhaustive;
    if (cfg.mode.empty() && n > ringcb::kExhaustiveLimit && !cfg.force) {
      throw UsageError("N = " + std::to_string(n) + " exceeds " +
                       std::to_string(ringcb::kExhaustiveLimit) +
                       "; pass --mode sampled or --force");
    }
  } else {
    throw UsageError("unknown --mode '" + cfg.mode + "'");
  }
  return opt;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    ringcb::write_file(cfg.out, text);
  }
}

int cmd_gen(const RunConfig& cfg) {
  const ringcb::FieldSpec f = field_from_config(cfg);
  const auto kind = ringcb::parse_construction(cfg.construction);
  if (kind != ringcb::Construction::kC1 && cfg.fixed_j) {
    throw UsageError("--fixed-j applies to c1 only");
  }
  if (kind != ringcb::Construction::kC2 && cfg.fixed_b) {
    throw UsageError("--fixed-b applies to c2 only");
  }
  std::optional<ringcb::Codebook> cb;
  switch (kind) {
    case ringcb::Construction::kC1: {
      const std::uint32_t j = cfg.fixed_j.value_or(1);
      if (j >= f.q() - 1 && !(f.q() == 2 && !cfg.fixed_j)) {
        throw UsageError("--fixed-j must be in [0, q-2]");
      }
      cb.emplace(ringcb::build_c1(f, ringcb::MultCharIndex::reduced(f, j), cfg.force));
      break;
    }
    case ringcb::Construction::kC2: {
      const std::uint32_t b = cfg.fixed_b.value_or(0);
      if (b >= f.q()) throw UsageError("--fixed-b must be a field encoding in [0, q)");
      cb.emplace(ringcb::build_c2(f, ringcb::FieldElement{b}, cfg.force));
      break;
    }
    case ringcb::Construction::kC0:
      cb.emplace(ringcb::build_c0(f, cfg.force));
      break;
  }
  const std::string path = cfg.out.empty()
                               ? "codebook_" + cfg.construction + "_q" +
                                     std::to_string(f.q()) + ".json"
                               : cfg.out;
  ringcb::write_file(path, ringcb::codebook_to_json(*cb));
  std::cout << "N=" << cb->size() << " K=" << cb->length() << " file=" << path << '\n';
  if (f.q() == 2) std::cerr << "warning: q=2 is degenerate (I_max = 1)\n";
  return kExitOk;
}

int cmd_eval(const RunConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("eval needs a codebook file");
  ringcb::Codebook cb = [&] {
    try {
      return ringcb::codebook_from_json(ringcb::read_file(cfg.in));
    } catch (const ringcb::FormatError& e) {
      throw UsageError(e.what());
    }
  }();
  if (cb.size() < 2) throw UsageError("codebook needs N >= 2");
  const ringcb::EvalReport r = ringcb::evaluate(cb, eval_options(cfg, cb.size()));

  if (cfg.format == "csv") {
    emit(cfg, ringcb::report_csv_header() + "\n" + ringcb::report_csv_row(r) + "\n");
  } else if (cfg.format == "json" || cfg.format.empty()) {
    emit(cfg, ringcb::report_to_json(r).dump(2) + "\n");
  } else {
    throw UsageError("unknown --format '" + cfg.format + "'");
  }
  if (r.degenerate) std::cerr << "warning: q=2 is degenerate (I_max = 1)\n";
  if (cb.construction() == ringcb::Construction::kC0) return kExitOk;
  const double dev = ringcb::spectrum_deviation(r);
  if (dev >= 1e-9) {
    std::cerr << "spectrum violation: an amplitude lies " << dev
              << " from {0, 1/(q-1)}\n";
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_gauss(const RunConfig& cfg) {
  const ringcb::FieldSpec f = field_from_config(cfg);
  const std::uint32_t q = f.q();
  const double tol = ringcb::sum_tolerance(std::uint64_t{q} * (q - 1));
  std::ostringstream os;
  os << "j,a,b,c,closed_re,closed_im,oracle_re,oracle_im,abs_diff\n";
  double worst = 0.0;
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto closed = ringcb::gauss_sum_ring_closed(f, {j}, {a}, {b}, {c});
          const auto direct = ringcb::gauss_sum_ring_oracle(f, {j}, {a}, {b}, {c});
          const double diff = std::abs(closed - direct);
          worst = std::max(worst, diff);
          os << j << ',' << a << ',' << b << ',' << c << ','
             << ringcb::format_double(closed.real()) << ','
             << ringcb::format_double(closed.imag()) << ','
             << ringcb::format_double(direct.real()) << ','
             << ringcb::format_double(direct.imag()) << ','
             << ringcb::format_double(diff) << '\n';
        }
      }
    }
  }
  emit(cfg, os.str());
  std::cerr << "max |closed - enumerated| = " << worst << " (tolerance " << tol << ")\n";
  return worst < tol ? kExitOk : kExitVerify;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.q_list.empty()) throw UsageError("table needs --q with one or more values");
  const bool markdown = cfg.format == "markdown";
  if (!markdown && !cfg.format.empty() && cfg.format != "csv") {
    throw UsageError("unknown --format '" + cfg.format + "'");
  }
  std::ostringstream os;
  const char* header[] = {"construction", "q", "N", "K", "i_max_formula",
                          "i_max_measured", "i_w", "ratio", "source"};
  if (markdown) {
    os << '|';
    for (auto h : header) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < std::size(header); ++i) os << "---|";
    os << '\n';
  } else {
    for (std::size_t i = 0; i < std::size(header); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
  }
  bool ok = true;
  for (const std::uint64_t q : cfg.q_list) {
    const auto pp = resolve_prime_power(q);
    for (const auto kind : {ringcb::Construction::kC1, ringcb::Construction::kC2}) {
      const std::uint64_t n = ringcb::expected_rows(kind, q);
      const std::uint64_t k = q * (q - 1);
      const double i_max = 1.0 / (q - 1.0);
      const double i_w = ringcb::welch_bound(n, k);
      const double ratio = kind == ringcb::Construction::kC1 ? ringcb::ratio_formula_c1(q)
                                                             : ringcb::ratio_formula_c2(q);
      std::string measured;
      std::string source = "formula-only";
      if (q <= cfg.q_max && q <= ringcb::field_size_guard() &&
          n <= ringcb::kExhaustiveLimit) {
        const auto f = ringcb::build_field(pp.p, pp.m);
        const auto cb = kind == ringcb::Construction::kC1
                            ? ringcb::build_c1(f, ringcb::MultCharIndex::reduced(f, 1))
                            : ringcb::build_c2(f, f.zero());
        ringcb::EvalOptions opt;
        opt.workers = cfg.workers;
        const auto r = ringcb::evaluate(cb, opt);
        measured = ringcb::format_double(r.i_max);
        source = "brute-force";
        if (std::abs(r.i_max - i_max) >= 1e-9 || std::abs(r.ratio - ratio) >= 1e-9) {
          ok = false;
          source = "brute-force-MISMATCH";
        }
      }
      const std::string cells[] = {std::string(ringcb::to_string(kind)),
                                   std::to_string(q),
                                   std::to_string(n),
                                   std::to_string(k),
                                   ringcb::format_double(i_max),
                                   measured,
                                   ringcb::format_double(i_w),
                                   ringcb::format_double(ratio),
                                   source};
      if (markdown) {
        os << '|';
        for (const auto& c : cells) os << ' ' << c << " |";
      } else {
        for (std::size_t i = 0; i < std::size(cells); ++i) os << (i ? "," : "") << cells[i];
      }
      os << '\n';
    }
  }
  emit(cfg, os.str());
  return ok ? kExitOk : kExitVerify;
}

int cmd_selftest(const RunConfig& cfg) {
  std::optional<ringcb::selftest::Injection> inj;
  if (!cfg.modulus.empty()) {
    if (!cfg.p && !cfg.q) throw UsageError("--modulus needs --p/--m or --q");
    const auto pp = cfg.q ? resolve_prime_power(*cfg.q)
                          : ringcb::PrimePower{*cfg.p, cfg.m.value_or(1)};
    inj = ringcb::selftest::Injection{pp.p, pp.m, parse_coefficients(cfg.modulus)};
  }
  const auto results = ringcb::selftest::run_all(cfg.q_max, inj);
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << results.size() - failed << "/" << results.size() << " suites passed\n";
  return failed == 0 ? kExitOk : kExitVerify;
}

void add_field_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--q", cfg.q, "Field size (prime power)");
  sub->add_option("--p", cfg.p, "Characteristic");
  sub->add_option("--m", cfg.m, "Extension degree");
  sub->add_option("--modulus", cfg.modulus,
                  "Monic modulus, comma-separated ascending coefficients c0,...,cm");
  sub->add_flag("--force", cfg.force, "Override size guards");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codebooks from character sums over the local ring F_q + uF_q"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Build a codebook and write it as JSON");
  add_field_flags(gen, cfg);
  gen->add_option("--construction", cfg.construction, "c1, c2 or c0")
      ->check(CLI::IsMember({"c0", "c1", "c2"}));
  gen->add_option("--fixed-j", cfg.fixed_j, "Fixed multiplicative character index for c1");
  gen->add_option("--fixed-b", cfg.fixed_b, "Fixed additive character (encoding) for c2");
  gen->add_option("--out", cfg.out, "Output path");

  auto* eval = app.add_subcommand("eval", "Evaluate I_max, Welch bound and spectrum");
  eval->add_option("file", cfg.in, "Codebook JSON file")->required();
  eval->add_option("--mode", cfg.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  auto* samples = eval->add_option("--samples", cfg.samples, "Pair count for sampled mode");
  eval->add_option("--seed", cfg.seed, "Seed for sampled mode");
  eval->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
  eval->add_option("--format", cfg.format, "json or csv");
  eval->add_option("--out", cfg.out, "Report path (default stdout)");
  eval->add_flag("--force", cfg.force, "Allow exhaustive evaluation of large codebooks");

  auto* gauss = app.add_subcommand("gauss", "Closed-form vs enumerated Gauss sums over R");
  add_field_flags(gauss, cfg);
  gauss->add_option("--out", cfg.out, "CSV path (default stdout)");

  auto* table = app.add_subcommand("table", "Welch ratio table for a list of q");
  table->add_option("--q", cfg.q_list, "Prime powers")->delimiter(',')->required();
  table->add_option("--q-max", cfg.q_max, "Largest q to brute-force");
  table->add_option("--format", cfg.format, "csv or markdown");
  table->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
  table->add_option("--out", cfg.out, "Output path (default stdout)");

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_option("--q-max", cfg.q_max, "Largest q to test");
  self->add_option("--q", cfg.q, "Field for an injected --modulus");
  self->add_option("--p", cfg.p, "Characteristic for an injected --modulus");
  self->add_option("--m", cfg.m, "Degree for an injected --modulus");
  self->add_option("--modulus", cfg.modulus, "Replace the modulus for (p, m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (samples->count() && cfg.mode != "sampled") {
    std::cerr << "error: --samples requires --mode sampled\n";
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*gauss) return cmd_gauss(cfg);
    if (*table) return cmd_table(cfg);
    if (*self) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ringcb::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << " (use --force or RING_CODEBOOK_GUARD)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
