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
// Low-rank parity-check codes over F_{q^m} and their u-fold horizontal
// interleaving.  A code is defined by a parity-check matrix H whose entries
// all lie in a lambda-dimensional F_q-subspace spanned by phi_1..phi_lambda:
//
//   h_{i,j} = sum_l h_{i,j,l} phi_l,   h_{i,j,l} in F_q.
//
// The interleaved code of order u is the u-fold direct sum; codewords are u
// blocks of length n sharing the same H.  Decoding works on the expanded
// parity-check matrix over F_q,
//
//   H_ext[(i-1)*lambda + (l-1)][j-1] = h_{i,j,l},
//
// an (n-k)*lambda x n matrix that must have rank n for the support-solving
// step to pin down error coordinates.

#ifndef LRPC_CODE_HPP_
#define LRPC_CODE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpc/ext_matrix.hpp"
#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {

struct CodeParams {
  FieldParams field;
  std::size_t n = 0;       // component code length
  std::size_t k = 0;       // component code dimension
  std::size_t lambda = 0;  // dimension of the coefficient subspace
  std::size_t u = 1;       // interleaving order

  void validate() const {
    if (n == 0 || k == 0 || k >= n) {
      throw std::invalid_argument("need 0 < k < n");
    }
    if (u == 0) throw std::invalid_argument("interleaving order must be positive");
    if (lambda == 0 || lambda > field.m) {
      throw std::invalid_argument("need 1 <= lambda <= m");
    }
    if (lambda * (n - k) < n) {
      throw std::invalid_argument(
          "lambda*(n-k) < n: expanded parity-check matrix cannot reach rank n");
    }
  }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// Expanded parity-check matrix over F_q from the coefficient tensor
// h[i][j][l], laid out with row (i-1)*lambda + (l-1) and column j-1.
inline FqMatrix expand_h(std::uint32_t q, std::size_t n, std::size_t k,
                         std::size_t lambda,
                         std::span<const std::uint8_t> h_coeffs) {
  const std::size_t rows = n - k;
  if (h_coeffs.size() != rows * n * lambda) {
    throw std::invalid_argument("coefficient tensor has wrong size");
  }
  FqMatrix ext(rows * lambda, n, q);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < lambda; ++l) {
        ext(i * lambda + l, j) = h_coeffs[(i * n + j) * lambda + l];
      }
    }
  }
  return ext;
}

// Probability that a uniform (n-k)*lambda x n matrix over F_q has rank n,
// evaluated in log space.  This is the per-attempt chance that a random draw
// passes the H_ext rank test; zero when lambda*(n-k) < n.
inline double h_ext_full_rank_prob(const CodeParams& p) {
  const std::size_t rows = (p.n - p.k) * p.lambda;
  if (rows < p.n) return 0.0;
  const double log2q = std::log2(static_cast<double>(p.field.q));
  double prob = 1.0;
  for (std::size_t j = 1; j <= p.n; ++j) {
    const double e = (static_cast<double>(j) - 1.0 - static_cast<double>(rows)) * log2q;
    prob *= 1.0 - std::exp2(e);
  }
  return prob;
}

class LrpcCode {
 public:
  // Draw (phi, h_coeffs) until the draw defines a usable code: the entries of
  // H span exactly a lambda-dimensional space, H has full rank n-k over
  // F_{q^m}, and H_ext has rank n over F_q.  Each retry redraws everything.
  static LrpcCode keygen(const CodeParams& params, std::mt19937_64& rng,
                         std::size_t max_attempts = 100) {
    params.validate();
    const Field field(params.field);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
      const Subspace f_space = random_subspace(field, params.lambda, rng);
      std::vector<FieldElement> phi(params.lambda);
      for (std::size_t l = 0; l < params.lambda; ++l) {
        phi[l] = f_space.basis_element(field, l);
      }
      std::vector<std::uint8_t> h_coeffs(
          (params.n - params.k) * params.n * params.lambda);
      for (auto& c : h_coeffs) {
        c = static_cast<std::uint8_t>(uniform_below(rng, params.field.q));
      }
      LrpcCode code(params, field, std::move(phi), std::move(h_coeffs));
      if (code.draw_is_usable()) {
        code.attempts_ = attempt;
        code.finish_construction();
        return code;
      }
    }
    throw std::runtime_error("keygen attempt budget exhausted");
  }

  // Rebuild a code from its defining data (deserialization path).  Applies
  // the same usability checks as keygen and rejects data that fails them.
  static LrpcCode from_parts(const CodeParams& params,
                             std::vector<FieldElement> phi,
                             std::vector<std::uint8_t> h_coeffs) {
    params.validate();
    const Field field(params.field);
    if (phi.size() != params.lambda) {
      throw std::invalid_argument("phi must have lambda elements");
    }
    if (h_coeffs.size() != (params.n - params.k) * params.n * params.lambda) {
      throw std::invalid_argument("coefficient tensor has wrong size");
    }
    for (auto c : h_coeffs) {
      if (c >= params.field.q) {
        throw std::invalid_argument("coefficient out of range");
      }
    }
    if (Subspace::from_elements(field, phi).dim() != params.lambda) {
      throw std::invalid_argument("phi elements are linearly dependent");
    }
    LrpcCode code(params, field, std::move(phi), std::move(h_coeffs));
    if (!code.draw_is_usable()) {
      throw std::invalid_argument("data does not define a usable code");
    }
    code.attempts_ = 1;
    code.finish_construction();
    return code;
  }

  const CodeParams& params() const { return params_; }
  const Field& field() const { return field_; }
  const std::vector<FieldElement>& phi() const { return phi_; }
  const std::vector<std::uint8_t>& h_coeffs() const { return h_coeffs_; }
  const ExtMatrix& parity() const { return h_; }
  const FqMatrix& h_ext() const { return h_ext_; }
  const ExtMatrix& generator() const { return gen_; }
  std::size_t keygen_attempts() const { return attempts_; }

  std::uint8_t h_coeff(std::size_t i, std::size_t j, std::size_t l) const {
    return h_coeffs_[(i * params_.n + j) * params_.lambda + l];
  }

  // Encode u message blocks of length k into u codeword blocks of length n.
  std::vector<FieldElement> encode(std::span<const FieldElement> msg) const {
    if (msg.size() != params_.u * params_.k) {
      throw std::invalid_argument("message must have length u*k");
    }
    std::vector<FieldElement> cw(params_.u * params_.n, field_.zero());
    for (std::size_t w = 0; w < params_.u; ++w) {
      for (std::size_t j = 0; j < params_.n; ++j) {
        FieldElement acc = field_.zero();
        for (std::size_t i = 0; i < params_.k; ++i) {
          acc = field_.add(acc, field_.mul(msg[w * params_.k + i], gen_.at(i, j)));
        }
        cw[w * params_.n + j] = acc;
      }
    }
    return cw;
  }

  // Syndrome y H^T of one length-n block.
  std::vector<FieldElement> syndrome(std::span<const FieldElement> y) const {
    if (y.size() != params_.n) {
      throw std::invalid_argument("block must have length n");
    }
    std::vector<FieldElement> s(params_.n - params_.k, field_.zero());
    for (std::size_t i = 0; i < s.size(); ++i) {
      FieldElement acc = field_.zero();
      for (std::size_t j = 0; j < params_.n; ++j) {
        acc = field_.add(acc, field_.mul(y[j], h_.at(i, j)));
      }
      s[i] = acc;
    }
    return s;
  }

 private:
  LrpcCode(const CodeParams& params, const Field& field,
           std::vector<FieldElement> phi, std::vector<std::uint8_t> h_coeffs)
      : params_(params),
        field_(field),
        phi_(std::move(phi)),
        h_coeffs_(std::move(h_coeffs)) {
    h_ = ExtMatrix(params_.n - params_.k, params_.n, field_);
    for (std::size_t i = 0; i < params_.n - params_.k; ++i) {
      for (std::size_t j = 0; j < params_.n; ++j) {
        FieldElement acc = field_.zero();
        for (std::size_t l = 0; l < params_.lambda; ++l) {
          const std::uint8_t c = h_coeff(i, j, l);
          if (c != 0) acc = field_.add(acc, field_.scalar_mul(c, phi_[l]));
        }
        h_.at(i, j) = acc;
      }
    }
    h_ext_ = expand_h(params_.field.q, params_.n, params_.k, params_.lambda,
                      h_coeffs_);
  }

  bool draw_is_usable() const {
    // Entries must span the full lambda-dimensional space: the coefficient
    // tensor, viewed as (n-k)*n vectors of length lambda, needs rank lambda.
    FqMatrix coeff_rows((params_.n - params_.k) * params_.n, params_.lambda,
                        params_.field.q);
    for (std::size_t i = 0; i < params_.n - params_.k; ++i) {
      for (std::size_t j = 0; j < params_.n; ++j) {
        for (std::size_t l = 0; l < params_.lambda; ++l) {
          coeff_rows(i * params_.n + j, l) = h_coeff(i, j, l);
        }
      }
    }
    if (rank_of(coeff_rows) != params_.lambda) return false;
    if (rank_ext(field_, h_) != params_.n - params_.k) return false;
    return rank_of(h_ext_) == params_.n;
  }

  void finish_construction() {
    const ExtMatrix null_basis = kernel_ext(field_, h_);
    gen_ = rref_ext(field_, null_basis).mat;
    if (null_basis.rows != params_.k) {
      throw std::logic_error("kernel dimension mismatch");
    }
  }

  CodeParams params_;
  Field field_;
  std::vector<FieldElement> phi_;
  std::vector<std::uint8_t> h_coeffs_;
  ExtMatrix h_;
  FqMatrix h_ext_;
  ExtMatrix gen_;
  std::size_t attempts_ = 0;
};

// Recover the coefficient tensor of H with respect to phi; inverse of the
// expansion h_{i,j} = sum_l h_{i,j,l} phi_l.  Requires phi independent.
inline std::vector<std::uint8_t> extract_h_coeffs(
    const Field& field, std::span<const FieldElement> phi, const ExtMatrix& h) {
  const std::size_t lambda = phi.size();
  FqMatrix basis(field.m(), lambda, field.q());
  for (std::size_t l = 0; l < lambda; ++l) {
    for (std::size_t i = 0; i < field.m(); ++i) basis(i, l) = phi[l].coeff(i);
  }
  const EchelonSolver solver(basis);
  if (solver.rank() != lambda) {
    throw std::invalid_argument("phi elements are linearly dependent");
  }
  std::vector<std::uint8_t> out(h.rows * h.cols * lambda, 0);
  std::vector<std::uint8_t> rhs(field.m());
  for (std::size_t i = 0; i < h.rows; ++i) {
    for (std::size_t j = 0; j < h.cols; ++j) {
      for (std::size_t b = 0; b < field.m(); ++b) rhs[b] = h.at(i, j).coeff(b);
      const SolveResult r = solver.solve(rhs);
      if (r.status != SolveStatus::kUnique) {
        throw std::invalid_argument("entry outside the span of phi");
      }
      for (std::size_t l = 0; l < lambda; ++l) {
        out[(i * h.cols + j) * lambda + l] = r.x[l];
      }
    }
  }
  return out;
}

}  // namespace lrpc

#endif  // LRPC_CODE_HPP_
