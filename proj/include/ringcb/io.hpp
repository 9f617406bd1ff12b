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

// JSON and CSV serialization.
//
// Codebook file:
//   {"construction", "p", "m", "modulus", "g", "fixed_param", "N", "K",
//    "n_root", "rows"}
// with rows an N x K array of exponents in [0, n_root). The complex entry is
// exp(2 pi i e / n_root) / sqrt(K). Keys appear in that order and each row is
// written on its own line, so identical codebooks give identical bytes.

#ifndef RINGCB_IO_HPP_
#define RINGCB_IO_HPP_

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringcb/codebook.hpp"
#include "ringcb/evaluate.hpp"
#include "ringcb/finite_field.hpp"
#include "ringcb/local_ring.hpp"

namespace ringcb {

// Malformed or schema-invalid input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_to_json(const FieldSpec& f) {
  ordered_json j;
  j["p"] = f.p();
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  j["g"] = f.generator().code;
  return j;
}

inline FieldSpec field_from_json(const nlohmann::json& j) {
  try {
    return build_field(j.at("p").get<std::uint32_t>(),
                       j.at("m").get<std::uint32_t>(),
                       j.at("modulus").get<std::vector<std::uint32_t>>(),
                       j.at("g").get<std::uint32_t>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("field: ") + e.what());
  }
}

inline nlohmann::json ring_element_to_json(RingElement r) {
  return nlohmann::json::array({r.a0.code, r.a1.code});
}

inline RingElement ring_element_from_json(const FieldSpec& f,
                                          const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw FormatError("ring element must be [a0, a1]");
  }
  try {
    return {f.element(j[0].get<std::uint32_t>()),
            f.element(j[1].get<std::uint32_t>())};
  } catch (const std::exception& e) {
    throw FormatError(std::string("ring element: ") + e.what());
  }
}

inline std::string codebook_to_json(const Codebook& cb) {
  const FieldSpec& f = cb.field();
  ordered_json head;
  head["construction"] = std::string(to_string(cb.construction()));
  head["p"] = f.p();
  head["m"] = f.m();
  head["modulus"] = f.modulus();
  head["g"] = f.generator().code;
  head["fixed_param"] = cb.fixed_param() ? ordered_json(*cb.fixed_param())
                                         : ordered_json(nullptr);
  head["N"] = cb.size();
  head["K"] = cb.length();
  head["n_root"] = cb.n_root();

  std::string out = head.dump();
  out.pop_back();  // reopen the object to append rows
  out += ",\"rows\":[\n";
  for (std::size_t i = 0; i < cb.size(); ++i) {
    out += '[';
    const auto row = cb.row(i);
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(row[t]);
    }
    out += i + 1 < cb.size() ? "],\n" : "]\n";
  }
  out += "]}\n";
  return out;
}

inline Codebook codebook_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("codebook: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("codebook: top level must be an object");
  try {
    const Construction kind =
        parse_construction(j.at("construction").get<std::string>());
    FieldSpec f = field_from_json(j);
    std::optional<std::uint32_t> fixed;
    if (!j.at("fixed_param").is_null()) {
      fixed = j.at("fixed_param").get<std::uint32_t>();
    }
    const auto n = j.at("N").get<std::uint64_t>();
    const auto k = j.at("K").get<std::uint64_t>();
    const auto n_root = j.at("n_root").get<std::uint32_t>();
    if (k != std::uint64_t{f.q()} * (f.q() - 1)) {
      throw FormatError("codebook: K != q(q-1)");
    }
    if (n_root != root_order(f)) throw FormatError("codebook: n_root != p(q-1)");
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n) {
      throw FormatError("codebook: rows length != N");
    }
    std::vector<std::uint32_t> entries;
    entries.reserve(n * k);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != k) {
        throw FormatError("codebook: row length != K");
      }
      for (const auto& e : row) {
        if (!e.is_number_unsigned()) {
          throw FormatError("codebook: exponent is not a non-negative integer");
        }
        entries.push_back(e.get<std::uint32_t>());
      }
    }
    return Codebook(kind, std::move(f), fixed, n, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("codebook: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("codebook: ") + e.what());
  }
}

inline ordered_json report_to_json(const EvalReport& r) {
  ordered_json j;
  j["q"] = r.q;
  j["N"] = r.n;
  j["K"] = r.k;
  j["i_max"] = r.i_max;
  j["i_w"] = r.i_w;
  j["ratio"] = r.ratio;
  j["pairs"] = r.pairs;
  j["degenerate"] = r.degenerate;
  ordered_json bins = ordered_json::array();
  for (const auto& bin : r.spectrum) {
    bins.push_back({{"amplitude", bin.amplitude}, {"count", bin.count}});
  }
  j["spectrum"] = std::move(bins);
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string report_csv_header() { return "q,N,K,i_max,i_w,ratio"; }

inline std::string report_csv_row(const EvalReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.n << ',' << r.k << ',' << format_double(r.i_max) << ','
     << format_double(r.i_w) << ',' << format_double(r.ratio);
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace ringcb

#endif  // RINGCB_IO_HPP_
