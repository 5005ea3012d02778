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
// Three-step decoder for the horizontally interleaved code.
//
//   1. Support recovery: the span S' of all u*(n-k) syndrome entries sits
//      inside the product of the coefficient space F and the error support E;
//      intersecting the shifted spaces phi_l^{-1} S' recovers a candidate
//      support E_hat.
//   2. Syndrome expansion: each syndrome entry is rewritten in the product
//      basis {phi_l * gamma_r} of F.E_hat, giving F_q coordinates
//      s_{i,l,r}^{(w)}.
//   3. Error recovery: for each block w and each support direction r, the
//      coordinates satisfy  s_{i,l,r}^{(w)} = sum_j h_{i,j,l} e_{j,r}^{(w)},
//      i.e. an H_ext system over F_q whose solution is unique because H_ext
//      has rank n.
//
// Failures are classified by their first observable symptom:
//   kSyndromeSpaceDeficient - the products phi_l*gamma_r are F_q-dependent,
//     so the expansion basis collapses (the product space is too small);
//   kSupportTooLarge        - the recovered support cannot fit the expansion
//     (lambda * dim(E_hat) > m);
//   kSystemUnsolvable       - some linear system is inconsistent, e.g. a
//     syndrome entry falls outside the span of the product basis because the
//     syndromes did not generate the full product space;
//   kVerificationMismatch   - the re-encoded word fails the parity check.

#ifndef LRPC_DECODER_HPP_
#define LRPC_DECODER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lrpc/code.hpp"
#include "lrpc/fq_matrix.hpp"
#include "lrpc/subspace.hpp"

namespace lrpc {

enum class FailureReason {
  kSyndromeSpaceDeficient,
  kSupportTooLarge,
  kSystemUnsolvable,
  kVerificationMismatch,
};

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::kSyndromeSpaceDeficient:
      return "syndrome_space_deficient";
    case FailureReason::kSupportTooLarge:
      return "support_too_large";
    case FailureReason::kSystemUnsolvable:
      return "system_unsolvable";
    case FailureReason::kVerificationMismatch:
      return "verification_mismatch";
  }
  return "unknown";
}

struct DecodeOutcome {
  bool ok = false;
  FailureReason reason = FailureReason::kVerificationMismatch;
  std::vector<FieldElement> codeword;  // filled on success
  std::vector<FieldElement> error;     // filled on success

  static DecodeOutcome failure(FailureReason r) {
    DecodeOutcome o;
    o.ok = false;
    o.reason = r;
    return o;
  }
};

// Per-block syndromes together with their joint span.
struct SyndromeSpaces {
  std::vector<std::vector<FieldElement>> syndromes;  // u blocks of length n-k
  Subspace joint_span;                               // S'
};

// F_q coordinates s_{i,l,r}^{(w)} of every syndrome entry in the product
// basis {phi_l gamma_r}; index order (w, i, l, r).
class SyndromeExpansion {
 public:
  SyndromeExpansion(std::size_t u, std::size_t rows, std::size_t lambda,
                    std::size_t t)
      : u_(u), rows_(rows), lambda_(lambda), t_(t),
        a_(u * rows * lambda * t, 0) {}

  std::size_t u() const { return u_; }
  std::size_t rows() const { return rows_; }
  std::size_t lambda() const { return lambda_; }
  std::size_t t() const { return t_; }

  std::uint8_t& at(std::size_t w, std::size_t i, std::size_t l, std::size_t r) {
    return a_[((w * rows_ + i) * lambda_ + l) * t_ + r];
  }
  std::uint8_t at(std::size_t w, std::size_t i, std::size_t l, std::size_t r) const {
    return a_[((w * rows_ + i) * lambda_ + l) * t_ + r];
  }

 private:
  std::size_t u_, rows_, lambda_, t_;
  std::vector<std::uint8_t> a_;
};

// Support recovery usable without a full code object: intersect the spaces
// phi_l^{-1} s_space over the given basis of the coefficient space.
inline Subspace recover_support(const Field& field,
                                std::span<const FieldElement> phi,
                                const Subspace& s_space) {
  if (phi.empty()) throw std::invalid_argument("phi must be nonempty");
  Subspace acc = scalar_inverse_space(field, phi[0], s_space);
  for (std::size_t l = 1; l < phi.size(); ++l) {
    acc = intersect(acc, scalar_inverse_space(field, phi[l], s_space));
  }
  return acc;
}

class Decoder {
 public:
  explicit Decoder(const LrpcCode& code)
      : code_(&code), h_ext_solver_(code.h_ext()) {}

  // Step 0: per-block syndromes and their joint span S'.
  SyndromeSpaces syndrome_space(std::span<const FieldElement> y) const {
    const CodeParams& p = code_->params();
    if (y.size() != p.u * p.n) {
      throw std::invalid_argument("received word must have length u*n");
    }
    SyndromeSpaces out{{}, Subspace(p.field.q, p.field.m)};
    out.syndromes.reserve(p.u);
    std::vector<FieldElement> all;
    all.reserve(p.u * (p.n - p.k));
    for (std::size_t w = 0; w < p.u; ++w) {
      out.syndromes.push_back(
          code_->syndrome(y.subspan(w * p.n, p.n)));
      for (const auto& s : out.syndromes.back()) all.push_back(s);
    }
    out.joint_span = support(code_->field(), all);
    return out;
  }

  Subspace recover_support(const Subspace& s_space) const {
    return lrpc::recover_support(code_->field(), code_->phi(), s_space);
  }

  // Step 2: coordinates of every syndrome entry in the product basis
  // {phi_l gamma_r} over the candidate support.  Fails with
  // kSyndromeSpaceDeficient when that basis is F_q-dependent and with
  // kSystemUnsolvable when a syndrome entry lies outside its span.
  std::variant<SyndromeExpansion, FailureReason> expand_syndrome(
      const std::vector<std::vector<FieldElement>>& syndromes,
      const Subspace& supp) const {
    const CodeParams& p = code_->params();
    const Field& field = code_->field();
    const std::size_t t = supp.dim();
    const std::size_t rows = p.n - p.k;
    // Product basis matrix: column (l * t + r) holds phi_l * gamma_r.
    FqMatrix basis(field.m(), p.lambda * t, field.q());
    for (std::size_t l = 0; l < p.lambda; ++l) {
      for (std::size_t r = 0; r < t; ++r) {
        const FieldElement prod =
            field.mul(code_->phi()[l], supp.basis_element(field, r));
        for (std::size_t b = 0; b < field.m(); ++b) {
          basis(b, l * t + r) = prod.coeff(b);
        }
      }
    }
    const EchelonSolver solver(basis);
    if (solver.rank() < p.lambda * t) {
      return FailureReason::kSyndromeSpaceDeficient;
    }
    SyndromeExpansion exp(p.u, rows, p.lambda, t);
    std::vector<std::uint8_t> rhs(field.m());
    for (std::size_t w = 0; w < p.u; ++w) {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t b = 0; b < field.m(); ++b) {
          rhs[b] = syndromes[w][i].coeff(b);
        }
        const SolveResult res = solver.solve(rhs);
        if (res.status != SolveStatus::kUnique) {
          return FailureReason::kSystemUnsolvable;
        }
        for (std::size_t l = 0; l < p.lambda; ++l) {
          for (std::size_t r = 0; r < t; ++r) {
            exp.at(w, i, l, r) = res.x[l * t + r];
          }
        }
      }
    }
    return exp;
  }

  // Step 3: solve H_ext e_col = s_col for every block and support direction,
  // then assemble e_{w,j} = sum_r e_col[j] gamma_r.
  std::variant<std::vector<FieldElement>, FailureReason> solve_error(
      const SyndromeExpansion& exp, const Subspace& supp) const {
    const CodeParams& p = code_->params();
    const Field& field = code_->field();
    const std::size_t t = supp.dim();
    std::vector<FieldElement> error(p.u * p.n, field.zero());
    std::vector<std::uint8_t> rhs((p.n - p.k) * p.lambda);
    for (std::size_t w = 0; w < p.u; ++w) {
      for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t i = 0; i < p.n - p.k; ++i) {
          for (std::size_t l = 0; l < p.lambda; ++l) {
            rhs[i * p.lambda + l] = exp.at(w, i, l, r);
          }
        }
        const SolveResult res = h_ext_solver_.solve(rhs);
        if (res.status != SolveStatus::kUnique) {
          return FailureReason::kSystemUnsolvable;
        }
        const FieldElement gamma = supp.basis_element(field, r);
        for (std::size_t j = 0; j < p.n; ++j) {
          if (res.x[j] != 0) {
            error[w * p.n + j] =
                field.add(error[w * p.n + j],
                          field.scalar_mul(res.x[j], gamma));
          }
        }
      }
    }
    return error;
  }

  DecodeOutcome decode(std::span<const FieldElement> y) const {
    const CodeParams& p = code_->params();
    const Field& field = code_->field();
    const SyndromeSpaces ss = syndrome_space(y);
    const Subspace supp = recover_support(ss.joint_span);
    if (p.lambda * supp.dim() > field.m()) {
      return DecodeOutcome::failure(FailureReason::kSupportTooLarge);
    }
    auto expanded = expand_syndrome(ss.syndromes, supp);
    if (std::holds_alternative<FailureReason>(expanded)) {
      return DecodeOutcome::failure(std::get<FailureReason>(expanded));
    }
    auto solved = solve_error(std::get<SyndromeExpansion>(expanded), supp);
    if (std::holds_alternative<FailureReason>(solved)) {
      return DecodeOutcome::failure(std::get<FailureReason>(solved));
    }
    DecodeOutcome out;
    out.error = std::move(std::get<std::vector<FieldElement>>(solved));
    out.codeword.resize(y.size(), field.zero());
    for (std::size_t i = 0; i < y.size(); ++i) {
      out.codeword[i] = field.sub(y[i], out.error[i]);
    }
    for (std::size_t w = 0; w < p.u; ++w) {
      const auto s = code_->syndrome(
          std::span<const FieldElement>(out.codeword).subspan(w * p.n, p.n));
      for (const auto& e : s) {
        if (!field.is_zero(e)) {
          return DecodeOutcome::failure(FailureReason::kVerificationMismatch);
        }
      }
    }
    out.ok = true;
    return out;
  }

 private:
  const LrpcCode* code_;
  EchelonSolver h_ext_solver_;
};

}  // namespace lrpc

#endif  // LRPC_DECODER_HPP_
