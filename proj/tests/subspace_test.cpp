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

#include "lrpc/subspace.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"

namespace lrpc {
namespace {

std::set<std::uint64_t> as_set(const Field& f, const Subspace& s) {
  return oracles::enumerate(f, s);
}

// F_8 with modulus x^3 + x + 1; a = class of x.
class SmallFieldSpaces : public ::testing::Test {
 protected:
  Field f = Field::with_default_modulus(2, 3);
  FieldElement a = f.generator();
  FieldElement a2 = f.from_coeffs({0, 0, 1});
  FieldElement a_plus_1 = f.from_coeffs({1, 1, 0});
};

TEST_F(SmallFieldSpaces, SupportOfVectorSpansItsEntries) {
  const std::vector<FieldElement> v{a2, a_plus_1};
  const Subspace s = support(f, v);
  EXPECT_EQ(s.dim(), 2u);
  // {0, a^2, a+1, a^2+a+1}
  EXPECT_EQ(as_set(f, s), (std::set<std::uint64_t>{0, 4, 3, 7}));
  EXPECT_TRUE(s.contains(f, f.from_coeffs({1, 1, 1})));
  EXPECT_FALSE(s.contains(f, a));
  EXPECT_TRUE(s.contains(f, f.zero()));
}

TEST_F(SmallFieldSpaces, SupportIgnoresRepeatsAndZeros) {
  const std::vector<FieldElement> v{a, f.zero(), a, f.zero()};
  EXPECT_EQ(support(f, v).dim(), 1u);
  const std::vector<FieldElement> z{f.zero(), f.zero()};
  EXPECT_EQ(support(f, z).dim(), 0u);
}

TEST_F(SmallFieldSpaces, ProductSpaceOfWorkedExample) {
  const Subspace fa = Subspace::from_elements(
      f, std::vector<FieldElement>{f.one(), a});
  const Subspace e = Subspace::from_elements(f, std::vector<FieldElement>{a2});
  const Subspace p = product_space(f, fa, e);
  // span{1*a^2, a*a^2} = span{a^2, a^3} = span{a^2, a+1}
  EXPECT_EQ(p, Subspace::from_elements(
                   f, std::vector<FieldElement>{a2, a_plus_1}));
  EXPECT_EQ(p.dim(), 2u);
}

TEST_F(SmallFieldSpaces, ScalarInverseSpacePreservesDimension) {
  const Subspace p = Subspace::from_elements(
      f, std::vector<FieldElement>{a2, a_plus_1});
  const Subspace s = scalar_inverse_space(f, a, p);
  // a^{-1} * {a^2, a+1} spans {a, a^2}.
  EXPECT_EQ(s, Subspace::from_elements(f, std::vector<FieldElement>{a, a2}));
  EXPECT_EQ(s.dim(), p.dim());
  EXPECT_THROW(scalar_inverse_space(f, f.zero(), p), std::domain_error);
}

TEST_F(SmallFieldSpaces, IntersectionOfWorkedExample) {
  const Subspace s1 = Subspace::from_elements(
      f, std::vector<FieldElement>{a2, a_plus_1});
  const Subspace s2 = Subspace::from_elements(f, std::vector<FieldElement>{a, a2});
  const Subspace i = intersect(s1, s2);
  EXPECT_EQ(i, Subspace::from_elements(f, std::vector<FieldElement>{a2}));
}

TEST_F(SmallFieldSpaces, CanonicalBasisIsOrderIndependent) {
  const Subspace s1 = Subspace::from_elements(
      f, std::vector<FieldElement>{a2, a_plus_1, f.from_coeffs({1, 1, 1})});
  const Subspace s2 = Subspace::from_elements(
      f, std::vector<FieldElement>{f.from_coeffs({1, 1, 1}), a2});
  EXPECT_EQ(s1, s2);
}

TEST(Subspace, CanonicalBasisAbsorbsScaling) {
  const Field f = Field::with_default_modulus(3, 2);
  const FieldElement x = f.from_coeffs({1, 2});
  const FieldElement x2 = f.scalar_mul(2, x);
  const Subspace s1 = Subspace::from_elements(f, std::vector<FieldElement>{x});
  const Subspace s2 = Subspace::from_elements(f, std::vector<FieldElement>{x2});
  EXPECT_EQ(s1, s2);
}

TEST(Subspace, ProductMatchesExhaustiveOracleOnRandomSpaces) {
  std::mt19937_64 rng(71);
  for (const auto& [q, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 6}, {2, 8}, {3, 4}}) {
    const Field f = Field::with_default_modulus(q, m);
    for (int round = 0; round < 60; ++round) {
      const Subspace a = random_subspace(f, uniform_below(rng, 3) + 1, rng);
      const Subspace b = random_subspace(f, uniform_below(rng, 3) + 1, rng);
      const Subspace p = product_space(f, a, b);
      const auto closure =
          oracles::span_closure(f, oracles::product_elements(f, a, b));
      EXPECT_EQ(as_set(f, p), closure);
    }
  }
}

TEST(Subspace, IntersectionMatchesSetIntersectionOnRandomSpaces) {
  std::mt19937_64 rng(73);
  for (const auto& [q, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 6}, {2, 8}, {3, 4}}) {
    const Field f = Field::with_default_modulus(q, m);
    for (int round = 0; round < 60; ++round) {
      const Subspace a = random_subspace(f, uniform_below(rng, 4) + 1, rng);
      const Subspace b = random_subspace(f, uniform_below(rng, 4) + 1, rng);
      const Subspace i = intersect(a, b);
      std::set<std::uint64_t> expect;
      const auto ea = as_set(f, a);
      const auto eb = as_set(f, b);
      for (const auto v : ea) {
        if (eb.count(v)) expect.insert(v);
      }
      EXPECT_EQ(as_set(f, i), expect);
    }
  }
}

TEST(Subspace, IntersectionBasics) {
  const Field f = Field::with_default_modulus(2, 6);
  std::mt19937_64 rng(79);
  const Subspace a = random_subspace(f, 3, rng);
  EXPECT_EQ(intersect(a, a), a);
  const Subspace zero(f.q(), f.m());
  EXPECT_EQ(intersect(a, zero).dim(), 0u);
  const Subspace full = random_subspace(f, 6, rng);
  EXPECT_EQ(intersect(a, full), a);
}

TEST(Subspace, ProductWithUnitSpaceIsIdentity) {
  const Field f = Field::with_default_modulus(2, 8);
  std::mt19937_64 rng(83);
  const Subspace one = Subspace::from_elements(
      f, std::vector<FieldElement>{f.one()});
  for (int round = 0; round < 20; ++round) {
    const Subspace b = random_subspace(f, uniform_below(rng, 5), rng);
    EXPECT_EQ(product_space(f, one, b), b);
  }
}

TEST(Subspace, ShiftedSyndromeSpacesContainTheSupport) {
  // When S' equals the full product F.E, every phi^{-1} S' contains E; the
  // support recovery intersection can then only return a superset of E.
  std::mt19937_64 rng(89);
  const Field f = Field::with_default_modulus(2, 12);
  for (int round = 0; round < 100; ++round) {
    const Subspace fs = random_subspace(f, 2, rng);
    const Subspace e = random_subspace(f, 3, rng);
    const Subspace p = product_space(f, fs, e);
    for (std::size_t l = 0; l < fs.dim(); ++l) {
      const Subspace shifted =
          scalar_inverse_space(f, fs.basis_element(f, l), p);
      EXPECT_TRUE(is_subspace_of(e, shifted));
    }
  }
}

TEST(Subspace, RandomSubspaceHasRequestedDimension) {
  const Field f = Field::with_default_modulus(2, 10);
  std::mt19937_64 rng(97);
  for (std::size_t d = 0; d <= 10; ++d) {
    EXPECT_EQ(random_subspace(f, d, rng).dim(), d);
  }
  EXPECT_THROW(random_subspace(f, 11, rng), std::invalid_argument);
}

TEST(Subspace, RandomSubspaceIsUniformOverDimensionTwoInDimensionFour) {
  // F_2^4 has exactly 35 two-dimensional subspaces (Gaussian binomial).
  const Field f = Field::with_default_modulus(2, 4);
  std::mt19937_64 rng(101);
  std::map<std::string, int> counts;
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const Subspace s = random_subspace(f, 2, rng);
    std::string key;
    for (const auto b : s.basis().data()) key += static_cast<char>('0' + b);
    ++counts[key];
  }
  ASSERT_EQ(counts.size(), 35u);
  const double expected = draws / 35.0;
  double chi2 = 0;
  for (const auto& [key, c] : counts) {
    const double d = c - expected;
    chi2 += d * d / expected;
  }
  // 0.999 quantile of chi-square with 34 degrees of freedom.
  EXPECT_LT(chi2, 65.5);
}

TEST(Subspace, RandomElementStaysInsideAndCoversTheSpace) {
  const Field f = Field::with_default_modulus(2, 8);
  std::mt19937_64 rng(103);
  const Subspace s = random_subspace(f, 3, rng);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 400; ++i) {
    const FieldElement e = random_element_of(f, s, rng);
    EXPECT_TRUE(s.contains(f, e));
    seen.insert(f.to_index(e));
  }
  EXPECT_EQ(seen.size(), 8u);  // all of a dim-3 space over F_2
}

}  // namespace
}  // namespace lrpc
