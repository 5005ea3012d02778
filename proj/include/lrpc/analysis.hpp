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
// Closed-form decoding-failure analysis.  The decoder can only fail through
// three events, each with a union-bound term:
//
//   product space too small:   t * q^(lambda*t - m)
//   support recovery misses:   t * q^(lambda*t*(lambda+1)/2 - m)
//   syndromes span too little: q^(lambda*t - u*(n-k))
//
// The failure rate is at most the (clipped) sum.  Only the last term depends
// on u: interleaving buys syndrome coverage, nothing else.

#ifndef LRPC_ANALYSIS_HPP_
#define LRPC_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "lrpc/code.hpp"

namespace lrpc {

struct BoundReport {
  std::size_t t = 0;
  double term_product = 0.0;
  double term_intersection = 0.0;
  double term_syndrome = 0.0;
  double union_bound = 0.0;  // min(1, sum of terms)

  // Base-q-free view of the same terms for plotting far below double range.
  double log2_term_product = 0.0;
  double log2_term_intersection = 0.0;
  double log2_term_syndrome = 0.0;
};

// Union bound on the decoding failure rate at rank weight t.  Exponents are
// evaluated as exact signed integers before any floating-point step, so
// parameter families with equal exponents produce bit-identical values.
inline BoundReport union_bound(const CodeParams& p, std::size_t t) {
  p.validate();
  const double log2q = std::log2(static_cast<double>(p.field.q));
  const auto lam = static_cast<long long>(p.lambda);
  const auto tt = static_cast<long long>(t);
  const auto m = static_cast<long long>(p.field.m);
  const auto redundancy = static_cast<long long>(p.u * (p.n - p.k));

  const long long e_product = lam * tt - m;
  const long long e_intersection = lam * tt * (lam + 1) / 2 - m;
  const long long e_syndrome = lam * tt - redundancy;

  BoundReport r;
  r.t = t;
  const double log2t = t > 0 ? std::log2(static_cast<double>(t))
                             : -std::numeric_limits<double>::infinity();
  r.log2_term_product = log2t + static_cast<double>(e_product) * log2q;
  r.log2_term_intersection = log2t + static_cast<double>(e_intersection) * log2q;
  r.log2_term_syndrome = static_cast<double>(e_syndrome) * log2q;
  r.term_product =
      static_cast<double>(t) * std::exp2(static_cast<double>(e_product) * log2q);
  r.term_intersection = static_cast<double>(t) *
                        std::exp2(static_cast<double>(e_intersection) * log2q);
  r.term_syndrome = std::exp2(static_cast<double>(e_syndrome) * log2q);
  r.union_bound =
      std::min(1.0, r.term_product + r.term_intersection + r.term_syndrome);
  return r;
}

// Leading-order operation counts of the three decoding stages.
struct ComplexityEstimate {
  double syndrome_stage = 0.0;  // u * n^2 * m^2
  double support_stage = 0.0;   // 4 * t^2 * lambda^2 * m
  double solve_stage = 0.0;     // u * n^2 * t^2
};

inline ComplexityEstimate complexity_estimate(const CodeParams& p,
                                              std::size_t t) {
  p.validate();
  const double n = static_cast<double>(p.n);
  const double m = static_cast<double>(p.field.m);
  const double u = static_cast<double>(p.u);
  const double td = static_cast<double>(t);
  const double lam = static_cast<double>(p.lambda);
  return ComplexityEstimate{
      u * n * n * m * m,
      4.0 * td * td * lam * lam * m,
      u * n * n * td * td,
  };
}

}  // namespace lrpc

#endif  // LRPC_ANALYSIS_HPP_
