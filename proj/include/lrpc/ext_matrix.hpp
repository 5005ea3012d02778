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
// Small dense matrices over F_{q^m} and the elimination routines needed to
// derive generator matrices from parity-check matrices.

#ifndef LRPC_EXT_MATRIX_HPP_
#define LRPC_EXT_MATRIX_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lrpc/field.hpp"

namespace lrpc {

struct ExtMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> data;

  ExtMatrix() = default;
  ExtMatrix(std::size_t r, std::size_t c, const Field& f)
      : rows(r), cols(c), data(r * c, f.zero()) {}

  FieldElement& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;
};

struct ExtRrefResult {
  ExtMatrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

inline ExtRrefResult rref_ext(const Field& f, const ExtMatrix& in) {
  ExtRrefResult out{in, 0, {}};
  ExtMatrix& a = out.mat;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols && lead < a.rows; ++col) {
    std::size_t piv = lead;
    while (piv < a.rows && f.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < a.cols; ++j) {
        std::swap(a.at(piv, j), a.at(lead, j));
      }
    }
    const FieldElement s = f.inv(a.at(lead, col));
    for (std::size_t j = 0; j < a.cols; ++j) {
      a.at(lead, j) = f.mul(a.at(lead, j), s);
    }
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == lead || f.is_zero(a.at(r, col))) continue;
      const FieldElement c = a.at(r, col);
      for (std::size_t j = 0; j < a.cols; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(c, a.at(lead, j)));
      }
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

inline std::size_t rank_ext(const Field& f, const ExtMatrix& a) {
  return rref_ext(f, a).rank;
}

// Basis of {x : a x = 0} over F_{q^m}, one vector per row.
inline ExtMatrix kernel_ext(const Field& f, const ExtMatrix& a) {
  const ExtRrefResult r = rref_ext(f, a);
  std::vector<std::size_t> free_cols;
  std::size_t p = 0;
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
      ++p;
    } else {
      free_cols.push_back(c);
    }
  }
  ExtMatrix k(free_cols.size(), a.cols, f);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    k.at(i, fc) = f.one();
    for (std::size_t j = 0; j < r.pivot_cols.size(); ++j) {
      k.at(i, r.pivot_cols[j]) = f.neg(r.mat.at(j, fc));
    }
  }
  return k;
}

}  // namespace lrpc

#endif  // LRPC_EXT_MATRIX_HPP_
