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
// Dense linear algebra over the prime field F_q with byte entries.  All
// shapes in this library are small (at most a few dozen rows/columns), so a
// single generic Gauss-Jordan elimination serves every q.

#ifndef LRPC_FQ_MATRIX_HPP_
#define LRPC_FQ_MATRIX_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/random.hpp"

namespace lrpc {

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
      : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
    if (!detail::is_prime_u32(q) || q > 255) {
      throw std::invalid_argument("q must be a prime < 256");
    }
  }

  static FqMatrix identity(std::size_t n, std::uint32_t q) {
    FqMatrix r(n, n, q);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
    return r;
  }

  static FqMatrix random(std::size_t rows, std::size_t cols, std::uint32_t q,
                         std::mt19937_64& rng) {
    FqMatrix r(rows, cols, q);
    for (auto& v : r.data_) v = static_cast<std::uint8_t>(uniform_below(rng, q));
    return r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t q() const { return q_; }

  std::uint8_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::uint8_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint8_t> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<std::uint8_t>& data() const { return data_; }

  FqMatrix transposed() const {
    FqMatrix r(cols_, rows_, q_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  FqMatrix mul(const FqMatrix& other) const {
    if (cols_ != other.rows_ || q_ != other.q_) {
      throw std::invalid_argument("shape or modulus mismatch");
    }
    FqMatrix r(rows_, other.cols_, q_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint32_t a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          r(i, j) = static_cast<std::uint8_t>((r(i, j) + a * other(k, j)) % q_);
        }
      }
    }
    return r;
  }

  std::vector<std::uint8_t> mul_vec(std::span<const std::uint8_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("length mismatch");
    std::vector<std::uint8_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        acc += static_cast<std::uint32_t>((*this)(i, j)) * x[j];
      }
      y[i] = static_cast<std::uint8_t>(acc % q_);
    }
    return y;
  }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t q_ = 2;
  std::vector<std::uint8_t> data_;
};

struct RrefResult {
  FqMatrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form: pivots are 1, pivot columns are cleared above and
// below, zero rows sink to the bottom.
inline RrefResult rref(const FqMatrix& in) {
  RrefResult out{in, 0, {}};
  FqMatrix& a = out.mat;
  const std::uint32_t q = a.q();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
    }
    const std::uint32_t s = detail::inv_mod_prime(a(lead, col), q);
    if (s != 1) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(lead, j) = static_cast<std::uint8_t>(a(lead, j) * s % q);
      }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const std::uint32_t f = a(r, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const std::uint32_t sub = f * a(lead, j) % q;
        a(r, j) = static_cast<std::uint8_t>((a(r, j) + q - sub) % q);
      }
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

inline std::size_t rank_of(const FqMatrix& a) { return rref(a).rank; }

inline bool is_full_rank(const FqMatrix& a) {
  return rank_of(a) == std::min(a.rows(), a.cols());
}

// Basis of the right null space {x : a x = 0}, one vector per row.  Empty
// (0 x cols) when the kernel is trivial.
inline FqMatrix kernel(const FqMatrix& a) {
  const RrefResult r = rref(a);
  const std::uint32_t q = a.q();
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  FqMatrix k(free_cols.size(), a.cols(), q);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t f = free_cols[i];
    k(i, f) = 1;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
      const std::uint8_t v = r.mat(p, f);
      if (v != 0) k(i, r.pivot_cols[p]) = static_cast<std::uint8_t>((q - v) % q);
    }
  }
  return k;
}

enum class SolveStatus { kUnique, kNoSolution, kUnderdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::kNoSolution;
  std::vector<std::uint8_t> x;  // filled only for kUnique
};

// Factor a matrix once and solve a x = b for many right-hand sides.  Keeps
// the row transform T with T a in reduced echelon form, so each solve is a
// matrix-vector product plus a consistency scan.
class EchelonSolver {
 public:
  explicit EchelonSolver(const FqMatrix& a)
      : rows_(a.rows()), cols_(a.cols()), q_(a.q()), work_(a.rows(), a.cols() + a.rows(), a.q()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) work_(i, j) = a(i, j);
      work_(i, cols_ + i) = 1;
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
      std::size_t piv = lead;
      while (piv < rows_ && work_(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != lead) {
        for (std::size_t j = 0; j < work_.cols(); ++j) {
          std::swap(work_(piv, j), work_(lead, j));
        }
      }
      const std::uint32_t s = detail::inv_mod_prime(work_(lead, col), q_);
      if (s != 1) {
        for (std::size_t j = 0; j < work_.cols(); ++j) {
          work_(lead, j) = static_cast<std::uint8_t>(work_(lead, j) * s % q_);
        }
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == lead) continue;
        const std::uint32_t f = work_(r, col);
        if (f == 0) continue;
        for (std::size_t j = 0; j < work_.cols(); ++j) {
          const std::uint32_t sub = f * work_(lead, j) % q_;
          work_(r, j) = static_cast<std::uint8_t>((work_(r, j) + q_ - sub) % q_);
        }
      }
      pivot_cols_.push_back(col);
      ++lead;
    }
  }

  std::size_t rank() const { return pivot_cols_.size(); }

  SolveResult solve(std::span<const std::uint8_t> b) const {
    if (b.size() != rows_) throw std::invalid_argument("length mismatch");
    std::vector<std::uint8_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < rows_; ++j) {
        acc += static_cast<std::uint32_t>(work_(i, cols_ + j)) * b[j];
      }
      y[i] = static_cast<std::uint8_t>(acc % q_);
    }
    const std::size_t r = rank();
    for (std::size_t i = r; i < rows_; ++i) {
      if (y[i] != 0) return {SolveStatus::kNoSolution, {}};
    }
    if (r < cols_) return {SolveStatus::kUnderdetermined, {}};
    // Full column rank: every column is a pivot in order, so x = y[0..cols).
    std::vector<std::uint8_t> x(y.begin(), y.begin() + cols_);
    return {SolveStatus::kUnique, std::move(x)};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t q_;
  FqMatrix work_;
  std::vector<std::size_t> pivot_cols_;
};

// One-shot solve of a x = b.
inline SolveResult solve(const FqMatrix& a, std::span<const std::uint8_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("length mismatch");
  FqMatrix aug(a.rows(), a.cols() + 1, a.q());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  for (auto p : r.pivot_cols) {
    if (p == a.cols()) return {SolveStatus::kNoSolution, {}};
  }
  if (r.rank < a.cols()) return {SolveStatus::kUnderdetermined, {}};
  std::vector<std::uint8_t> x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) {
    x[r.pivot_cols[i]] = r.mat(i, a.cols());
  }
  return {SolveStatus::kUnique, std::move(x)};
}

}  // namespace lrpc

#endif  // LRPC_FQ_MATRIX_HPP_
