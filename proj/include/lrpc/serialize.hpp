// Copyright 2026 the lrpc authors.
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
//
// JSON serialization of codes and received words.  The code file carries the
// defining data only (parameters, modulus, phi, coefficient tensor); derived
// matrices are rebuilt and re-validated on load.

#ifndef LRPC_SERIALIZE_HPP_
#define LRPC_SERIALIZE_HPP_

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrpc/code.hpp"

namespace lrpc {

inline nlohmann::json element_to_json(const Field& f, const FieldElement& e) {
  std::vector<std::uint32_t> coeffs(f.m());
  for (std::size_t i = 0; i < f.m(); ++i) coeffs[i] = e.coeff(i);
  return coeffs;
}

inline FieldElement element_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != f.m()) {
    throw std::invalid_argument("element must be an array of m coefficients");
  }
  std::vector<std::uint8_t> coeffs(f.m());
  for (std::size_t i = 0; i < f.m(); ++i) {
    const auto v = j[i].get<std::uint32_t>();
    if (v >= f.q()) throw std::invalid_argument("coefficient out of range");
    coeffs[i] = static_cast<std::uint8_t>(v);
  }
  return f.from_coeffs(coeffs);
}

inline nlohmann::json code_to_json(const LrpcCode& code) {
  const CodeParams& p = code.params();
  nlohmann::json j;
  j["format"] = "lrpc-code";
  j["version"] = 1;
  j["q"] = p.field.q;
  j["m"] = p.field.m;
  j["modulus"] = p.field.modulus;
  j["n"] = p.n;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  j["u"] = p.u;
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& e : code.phi()) phi.push_back(element_to_json(code.field(), e));
  j["phi"] = phi;
  nlohmann::json h = nlohmann::json::array();
  for (std::size_t i = 0; i < p.n - p.k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t jj = 0; jj < p.n; ++jj) {
      nlohmann::json entry = nlohmann::json::array();
      for (std::size_t l = 0; l < p.lambda; ++l) {
        entry.push_back(code.h_coeff(i, jj, l));
      }
      row.push_back(entry);
    }
    h.push_back(row);
  }
  j["h_coeffs"] = h;
  return j;
}

inline LrpcCode code_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "lrpc-code") {
    throw std::invalid_argument("not a code file");
  }
  if (j.value("version", 0) != 1) {
    throw std::invalid_argument("unsupported code file version");
  }
  CodeParams p;
  p.field.q = j.at("q").get<std::uint32_t>();
  p.field.m = j.at("m").get<std::size_t>();
  p.field.modulus = j.at("modulus").get<std::vector<std::uint8_t>>();
  p.n = j.at("n").get<std::size_t>();
  p.k = j.at("k").get<std::size_t>();
  p.lambda = j.at("lambda").get<std::size_t>();
  p.u = j.at("u").get<std::size_t>();
  p.validate();
  const Field field(p.field);
  const auto& phi_json = j.at("phi");
  if (!phi_json.is_array() || phi_json.size() != p.lambda) {
    throw std::invalid_argument("phi must have lambda entries");
  }
  std::vector<FieldElement> phi;
  phi.reserve(p.lambda);
  for (const auto& e : phi_json) phi.push_back(element_from_json(field, e));
  const auto& h = j.at("h_coeffs");
  if (!h.is_array() || h.size() != p.n - p.k) {
    throw std::invalid_argument("h_coeffs must have n-k rows");
  }
  std::vector<std::uint8_t> coeffs((p.n - p.k) * p.n * p.lambda);
  for (std::size_t i = 0; i < p.n - p.k; ++i) {
    const auto& row = h[i];
    if (!row.is_array() || row.size() != p.n) {
      throw std::invalid_argument("h_coeffs row must have n entries");
    }
    for (std::size_t jj = 0; jj < p.n; ++jj) {
      const auto& entry = row[jj];
      if (!entry.is_array() || entry.size() != p.lambda) {
        throw std::invalid_argument("h_coeffs entry must have lambda values");
      }
      for (std::size_t l = 0; l < p.lambda; ++l) {
        const auto v = entry[l].get<std::uint32_t>();
        if (v >= p.field.q) throw std::invalid_argument("coefficient out of range");
        coeffs[(i * p.n + jj) * p.lambda + l] = static_cast<std::uint8_t>(v);
      }
    }
  }
  return LrpcCode::from_parts(p, std::move(phi), std::move(coeffs));
}

inline void save_code(const LrpcCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << code_to_json(code).dump(2) << '\n';
}

inline LrpcCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return code_from_json(j);
}

inline nlohmann::json word_to_json(const Field& f,
                                   std::span<const FieldElement> word) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : word) arr.push_back(element_to_json(f, e));
  nlohmann::json j;
  j["y"] = arr;
  return j;
}

inline std::vector<FieldElement> word_from_json(const Field& f,
                                                const nlohmann::json& j) {
  const auto& arr = j.at("y");
  if (!arr.is_array()) throw std::invalid_argument("y must be an array");
  std::vector<FieldElement> word;
  word.reserve(arr.size());
  for (const auto& e : arr) word.push_back(element_from_json(f, e));
  return word;
}

inline std::vector<FieldElement> load_word(const Field& f,
                                           const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return word_from_json(f, j);
}

}  // namespace lrpc

#endif  // LRPC_SERIALIZE_HPP_
