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

#include "lrpc/code.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "lrpc/serialize.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {
namespace {

CodeParams small_params() {
  CodeParams p;
  p.field = make_field_params(2, 30);
  p.n = 4;
  p.k = 2;
  p.lambda = 2;
  p.u = 1;
  return p;
}

CodeParams simulation_params(std::size_t u) {
  CodeParams p;
  p.field = make_field_params(2, 30);
  p.n = 32 / u;
  p.k = 16 / u;
  p.lambda = 2;
  p.u = u;
  return p;
}

TEST(CodeParams, ValidatesFeasibility) {
  CodeParams p = small_params();
  EXPECT_NO_THROW(p.validate());

  p.lambda = 1;  // 1*(n-k) = 2 < 4: expanded matrix cannot reach rank n
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = small_params();
  p.k = 4;
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = small_params();
  p.lambda = 31;  // exceeds m
  EXPECT_THROW(p.validate(), std::invalid_argument);

  p = small_params();
  p.u = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Keygen, ProducesUsableCodeAtSimulationParameters) {
  std::mt19937_64 rng(1);
  const LrpcCode code = LrpcCode::keygen(simulation_params(1), rng);
  const CodeParams& p = code.params();

  // The expanded parity-check matrix must be square here (lambda(n-k) = n)
  // and of full rank n.
  EXPECT_EQ(code.h_ext().rows(), (p.n - p.k) * p.lambda);
  EXPECT_EQ(code.h_ext().cols(), p.n);
  EXPECT_EQ(rank_of(code.h_ext()), p.n);

  // Entries of H span exactly the lambda-dimensional coefficient space.
  std::vector<FieldElement> entries;
  for (const auto& e : code.parity().data) entries.push_back(e);
  const Subspace entry_span = support(code.field(), entries);
  EXPECT_EQ(entry_span.dim(), p.lambda);
  EXPECT_EQ(entry_span,
            Subspace::from_elements(code.field(), code.phi()));

  EXPECT_EQ(rank_ext(code.field(), code.parity()), p.n - p.k);
  EXPECT_EQ(code.generator().rows, p.k);
  EXPECT_GE(code.keygen_attempts(), 1u);
}

TEST(Keygen, IsDeterministicUnderTheSameSeed) {
  std::mt19937_64 r1(42), r2(42);
  const LrpcCode c1 = LrpcCode::keygen(small_params(), r1);
  const LrpcCode c2 = LrpcCode::keygen(small_params(), r2);
  EXPECT_EQ(c1.h_coeffs(), c2.h_coeffs());
  EXPECT_EQ(c1.phi(), c2.phi());
  EXPECT_EQ(c1.generator(), c2.generator());
}

TEST(Keygen, GeneratorRowsSatisfyParityChecks) {
  std::mt19937_64 rng(2);
  const LrpcCode code = LrpcCode::keygen(simulation_params(2), rng);
  for (std::size_t i = 0; i < code.generator().rows; ++i) {
    std::vector<FieldElement> row(code.params().n);
    for (std::size_t j = 0; j < code.params().n; ++j) {
      row[j] = code.generator().at(i, j);
    }
    for (const auto& s : code.syndrome(row)) {
      EXPECT_TRUE(code.field().is_zero(s));
    }
  }
}

TEST(Encode, CodewordsHaveZeroSyndromePerBlock) {
  std::mt19937_64 rng(3);
  const LrpcCode code = LrpcCode::keygen(simulation_params(4), rng);
  const CodeParams& p = code.params();
  std::vector<FieldElement> msg(p.u * p.k);
  for (auto& e : msg) e = code.field().random(rng);
  const auto cw = code.encode(msg);
  ASSERT_EQ(cw.size(), p.u * p.n);
  for (std::size_t w = 0; w < p.u; ++w) {
    const auto s = code.syndrome(
        std::span<const FieldElement>(cw).subspan(w * p.n, p.n));
    for (const auto& e : s) EXPECT_TRUE(code.field().is_zero(e));
  }
}

TEST(Encode, ActsIndependentlyOnBlocks) {
  std::mt19937_64 rng(4);
  const LrpcCode code = LrpcCode::keygen(simulation_params(2), rng);
  const CodeParams& p = code.params();
  std::vector<FieldElement> msg(p.u * p.k);
  for (auto& e : msg) e = code.field().random(rng);
  const auto cw = code.encode(msg);
  for (std::size_t w = 0; w < p.u; ++w) {
    for (std::size_t j = 0; j < p.n; ++j) {
      FieldElement expect = code.field().zero();
      for (std::size_t i = 0; i < p.k; ++i) {
        expect = code.field().add(
            expect,
            code.field().mul(msg[w * p.k + i], code.generator().at(i, j)));
      }
      EXPECT_EQ(cw[w * p.n + j], expect);
    }
  }
  EXPECT_THROW(code.encode(std::vector<FieldElement>(p.k)), std::invalid_argument);
}

TEST(Syndrome, IsInvariantUnderCodewordShifts) {
  std::mt19937_64 rng(5);
  const LrpcCode code = LrpcCode::keygen(small_params(), rng);
  const CodeParams& p = code.params();
  std::vector<FieldElement> msg(p.k), e(p.n);
  for (auto& x : msg) x = code.field().random(rng);
  for (auto& x : e) x = code.field().random(rng);
  const auto cw = code.encode(msg);
  std::vector<FieldElement> y(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    y[j] = code.field().add(cw[j], e[j]);
  }
  EXPECT_EQ(code.syndrome(y), code.syndrome(e));
}

TEST(Syndrome, SingleCoordinateErrorPicksOneParityColumn) {
  std::mt19937_64 rng(6);
  const LrpcCode code = LrpcCode::keygen(small_params(), rng);
  const CodeParams& p = code.params();
  const FieldElement gamma = code.field().random(rng);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::vector<FieldElement> e(p.n, code.field().zero());
    e[j] = gamma;
    const auto s = code.syndrome(e);
    for (std::size_t i = 0; i < p.n - p.k; ++i) {
      EXPECT_EQ(s[i], code.field().mul(code.parity().at(i, j), gamma));
    }
  }
}

TEST(ExpandH, LaysOutRowsByCheckThenBasisIndex) {
  // n-k = 2, n = 3, lambda = 2 over F_3 with all-distinct coefficients:
  // row of h_{i,j,l} must be i*lambda + l, column j.
  const std::size_t n = 3, k = 1, lambda = 2;
  std::vector<std::uint8_t> tensor((n - k) * n * lambda);
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    tensor[i] = static_cast<std::uint8_t>(i % 3);
  }
  const FqMatrix ext = expand_h(3, n, k, lambda, tensor);
  ASSERT_EQ(ext.rows(), (n - k) * lambda);
  ASSERT_EQ(ext.cols(), n);
  for (std::size_t i = 0; i < n - k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < lambda; ++l) {
        EXPECT_EQ(ext(i * lambda + l, j), tensor[(i * n + j) * lambda + l]);
      }
    }
  }
}

TEST(ExpandH, CoefficientExtractionInvertsTheExpansion) {
  std::mt19937_64 rng(7);
  const LrpcCode code = LrpcCode::keygen(simulation_params(1), rng);
  const auto coeffs =
      extract_h_coeffs(code.field(), code.phi(), code.parity());
  EXPECT_EQ(coeffs, code.h_coeffs());
}

TEST(FullRankProbability, MatchesClosedFormAtSquareShape) {
  // (n-k)*lambda = n = 4 over F_2: prod_{j=1..4} (1 - 2^{j-1-4}) = 315/1024.
  CodeParams p = small_params();
  EXPECT_NEAR(h_ext_full_rank_prob(p), 315.0 / 1024.0, 1e-12);

  p.lambda = 1;  // 2 rows < 4 columns
  EXPECT_EQ(h_ext_full_rank_prob(p), 0.0);

  p.lambda = 8;  // wide margin: nearly certain
  EXPECT_GT(h_ext_full_rank_prob(p), 0.999);

  // Monotone in lambda.
  double prev = 0.0;
  for (std::size_t lam = 2; lam <= 6; ++lam) {
    p.lambda = lam;
    const double v = h_ext_full_rank_prob(p);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(FullRankProbability, MatchesEmpiricalRankFrequency) {
  const CodeParams p = small_params();
  std::mt19937_64 rng(8);
  const int draws = 30000;
  int full = 0;
  for (int i = 0; i < draws; ++i) {
    std::vector<std::uint8_t> tensor((p.n - p.k) * p.n * p.lambda);
    for (auto& c : tensor) c = static_cast<std::uint8_t>(uniform_below(rng, 2));
    const FqMatrix ext = expand_h(2, p.n, p.k, p.lambda, tensor);
    if (rank_of(ext) == p.n) ++full;
  }
  const double target = h_ext_full_rank_prob(p);
  const double sigma = std::sqrt(target * (1 - target) / draws);
  EXPECT_NEAR(full / static_cast<double>(draws), target, 4 * sigma);
}

TEST(Serialization, RoundTripsTheDefiningData) {
  std::mt19937_64 rng(9);
  const LrpcCode code = LrpcCode::keygen(simulation_params(2), rng);
  const nlohmann::json j = code_to_json(code);
  const LrpcCode back = code_from_json(j);
  EXPECT_EQ(back.params(), code.params());
  EXPECT_EQ(back.phi(), code.phi());
  EXPECT_EQ(back.h_coeffs(), code.h_coeffs());
  EXPECT_EQ(back.parity(), code.parity());
  EXPECT_EQ(back.h_ext(), code.h_ext());
  EXPECT_EQ(back.generator(), code.generator());
}

TEST(Serialization, RejectsCorruptedFiles) {
  std::mt19937_64 rng(10);
  const LrpcCode code = LrpcCode::keygen(small_params(), rng);
  nlohmann::json j = code_to_json(code);

  nlohmann::json bad = j;
  bad["format"] = "something-else";
  EXPECT_THROW(code_from_json(bad), std::invalid_argument);

  bad = j;
  bad["h_coeffs"][0][0][0] = 7;  // out of range for q=2
  EXPECT_THROW(code_from_json(bad), std::invalid_argument);

  bad = j;
  bad["phi"][1] = bad["phi"][0];  // dependent phi
  EXPECT_THROW(code_from_json(bad), std::invalid_argument);

  bad = j;
  bad.erase("modulus");
  EXPECT_THROW(code_from_json(bad), nlohmann::json::exception);
}

}  // namespace
}  // namespace lrpc
