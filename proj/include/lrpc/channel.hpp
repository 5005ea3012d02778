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
// Error model for the interleaved code: all u error blocks draw their entries
// from one t-dimensional support E.  With a basis (gamma_1..gamma_t) of E the
// error is determined by a (u*n) x t coefficient matrix over F_q,
//
//   e_{w,j} = sum_r coeffs[(w-1)*n + j][r] * gamma_r,
//
// and the support condition "rank weight exactly t" is rank(coeffs) = t.

#ifndef LRPC_CHANNEL_HPP_
#define LRPC_CHANNEL_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpc/code.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {

struct RankError {
  Subspace support;              // E, dimension t
  FqMatrix coeffs;               // (u*n) x t, rank t
  std::vector<FieldElement> value;  // the error vector itself, length u*n
};

// Uniform error of rank weight exactly t for the given code parameters.
// Draws a uniform t-dimensional support, then redraws the coefficient matrix
// until it has rank t, so every block shares the support and the realized
// support is all of E.  t = 0 yields the zero error.
inline RankError sample_error(const Field& field, const CodeParams& params,
                              std::size_t t, std::mt19937_64& rng) {
  const std::size_t len = params.u * params.n;
  if (t > field.m() || t > len) {
    throw std::invalid_argument("rank weight t exceeds min(m, u*n)");
  }
  RankError err{Subspace(field.q(), field.m()), FqMatrix(len, t, field.q()), {}};
  err.support = random_subspace(field, t, rng);
  if (t > 0) {
    for (;;) {
      err.coeffs = FqMatrix::random(len, t, field.q(), rng);
      if (rank_of(err.coeffs) == t) break;
    }
  }
  err.value.assign(len, field.zero());
  for (std::size_t idx = 0; idx < len; ++idx) {
    FieldElement acc = field.zero();
    for (std::size_t r = 0; r < t; ++r) {
      const std::uint8_t c = err.coeffs(idx, r);
      if (c != 0) {
        acc = field.add(acc, field.scalar_mul(c, err.support.basis_element(field, r)));
      }
    }
    err.value[idx] = acc;
  }
  return err;
}

inline std::vector<FieldElement> apply_error(
    const Field& field, std::span<const FieldElement> codeword,
    std::span<const FieldElement> error) {
  if (codeword.size() != error.size()) {
    throw std::invalid_argument("length mismatch");
  }
  std::vector<FieldElement> y(codeword.size(), field.zero());
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    y[i] = field.add(codeword[i], error[i]);
  }
  return y;
}

}  // namespace lrpc

#endif  // LRPC_CHANNEL_HPP_
