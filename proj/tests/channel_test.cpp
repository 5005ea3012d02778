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

#include "lrpc/channel.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lrpc {
namespace {

CodeParams params_with(std::size_t m, std::size_t n, std::size_t k,
                       std::size_t lambda, std::size_t u) {
  CodeParams p;
  p.field = make_field_params(2, m);
  p.n = n;
  p.k = k;
  p.lambda = lambda;
  p.u = u;
  return p;
}

TEST(SampleError, RealizedSupportEqualsDrawnSupport) {
  const CodeParams p = params_with(12, 8, 4, 2, 2);
  const Field f(p.field);
  std::mt19937_64 rng(13);
  for (std::size_t t = 0; t <= 5; ++t) {
    for (int round = 0; round < 40; ++round) {
      const RankError e = sample_error(f, p, t, rng);
      ASSERT_EQ(e.value.size(), p.u * p.n);
      EXPECT_EQ(e.support.dim(), t);
      EXPECT_EQ(rank_of(e.coeffs), t);
      // The span of the realized entries is exactly the drawn support.
      EXPECT_EQ(support(f, e.value), e.support);
    }
  }
}

TEST(SampleError, CoefficientsReassembleTheError) {
  const CodeParams p = params_with(10, 6, 3, 2, 3);
  const Field f(p.field);
  std::mt19937_64 rng(17);
  const RankError e = sample_error(f, p, 3, rng);
  for (std::size_t idx = 0; idx < p.u * p.n; ++idx) {
    FieldElement acc = f.zero();
    for (std::size_t r = 0; r < 3; ++r) {
      acc = f.add(acc, f.scalar_mul(e.coeffs(idx, r),
                                    e.support.basis_element(f, r)));
    }
    EXPECT_EQ(e.value[idx], acc);
  }
}

TEST(SampleError, ZeroWeightGivesZeroError) {
  const CodeParams p = params_with(8, 4, 2, 2, 1);
  const Field f(p.field);
  std::mt19937_64 rng(19);
  const RankError e = sample_error(f, p, 0, rng);
  EXPECT_EQ(e.support.dim(), 0u);
  for (const auto& x : e.value) EXPECT_TRUE(f.is_zero(x));
}

TEST(SampleError, FullLengthRankIsReachable) {
  // t = u*n forces the coefficient matrix to be square and invertible.
  const CodeParams p = params_with(8, 4, 2, 2, 1);
  const Field f(p.field);
  std::mt19937_64 rng(23);
  const RankError e = sample_error(f, p, 4, rng);
  EXPECT_EQ(e.support.dim(), 4u);
  EXPECT_EQ(rank_of(e.coeffs), 4u);
}

TEST(SampleError, RejectsInfeasibleWeight) {
  const CodeParams p = params_with(8, 4, 2, 2, 1);
  const Field f(p.field);
  std::mt19937_64 rng(29);
  EXPECT_THROW(sample_error(f, p, 5, rng), std::invalid_argument);  // > u*n
  const CodeParams p2 = params_with(3, 8, 4, 2, 1);
  const Field f2(p2.field);
  EXPECT_THROW(sample_error(f2, p2, 4, rng), std::invalid_argument);  // > m
}

TEST(ApplyError, AddsCoordinatewiseAndCancelsInCharacteristicTwo) {
  const CodeParams p = params_with(8, 4, 2, 2, 2);
  const Field f(p.field);
  std::mt19937_64 rng(31);
  std::vector<FieldElement> cw(p.u * p.n);
  for (auto& e : cw) e = f.random(rng);
  const RankError err = sample_error(f, p, 2, rng);
  const auto y = apply_error(f, cw, err.value);
  for (std::size_t i = 0; i < y.size(); ++i) {
    EXPECT_EQ(y[i], f.add(cw[i], err.value[i]));
  }
  const auto back = apply_error(f, y, err.value);
  EXPECT_EQ(back, cw);
  EXPECT_THROW(apply_error(f, cw, std::vector<FieldElement>(3)),
               std::invalid_argument);
}

}  // namespace
}  // namespace lrpc
