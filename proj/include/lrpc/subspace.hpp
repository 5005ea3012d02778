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
// F_q-subspaces of F_{q^m}, viewed through the coefficient-vector isomorphism
// F_{q^m} ~ F_q^m.  A subspace is held as the reduced row echelon form of a
// generating set, which makes equality of subspaces equality of bases.

#ifndef LRPC_SUBSPACE_HPP_
#define LRPC_SUBSPACE_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"

namespace lrpc {

class Subspace {
 public:
  // Zero subspace of F_q^m.
  Subspace(std::uint32_t q, std::size_t m) : basis_(0, m, q) {}

  // Row span of the given generators (need not be independent).
  static Subspace from_generators(const FqMatrix& gens) {
    RrefResult r = rref(gens);
    FqMatrix b(r.rank, gens.cols(), gens.q());
    for (std::size_t i = 0; i < r.rank; ++i) {
      for (std::size_t j = 0; j < gens.cols(); ++j) b(i, j) = r.mat(i, j);
    }
    Subspace s(gens.q(), gens.cols());
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace from_elements(const Field& f,
                                std::span<const FieldElement> elems) {
    FqMatrix gens(elems.size(), f.m(), f.q());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < f.m(); ++j) gens(i, j) = elems[i].coeff(j);
    }
    return from_generators(gens);
  }

  const FqMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::uint32_t q() const { return basis_.q(); }

  FieldElement basis_element(const Field& f, std::size_t i) const {
    return f.from_coeffs(basis_.row(i));
  }

  bool contains(std::span<const std::uint8_t> coeffs) const {
    if (coeffs.size() != basis_.cols()) {
      throw std::invalid_argument("length mismatch");
    }
    const std::uint32_t q = basis_.q();
    std::vector<std::uint8_t> x(coeffs.begin(), coeffs.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = 0;
      while (p < basis_.cols() && basis_(i, p) == 0) ++p;
      if (p == basis_.cols()) continue;
      const std::uint32_t c = x[p];  // pivot entries are 1 in rref
      if (c == 0) continue;
      for (std::size_t j = 0; j < basis_.cols(); ++j) {
        const std::uint32_t sub = c * basis_(i, j) % q;
        x[j] = static_cast<std::uint8_t>((x[j] + q - sub) % q);
      }
    }
    for (auto v : x) {
      if (v != 0) return false;
    }
    return true;
  }

  bool contains(const Field& f, const FieldElement& e) const {
    std::vector<std::uint8_t> coeffs(f.m());
    for (std::size_t i = 0; i < f.m(); ++i) coeffs[i] = e.coeff(i);
    return contains(coeffs);
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FqMatrix basis_;  // rref, rows independent
};

// Support of a vector over F_{q^m}: the F_q-span of its entries.  Its
// dimension is the rank weight of the vector.
inline Subspace support(const Field& f, std::span<const FieldElement> v) {
  return Subspace::from_elements(f, v);
}

// Product space A.B = span{a*b : a in A, b in B}, generated by the pairwise
// products of the two bases.
inline Subspace product_space(const Field& f, const Subspace& a,
                              const Subspace& b) {
  std::vector<FieldElement> prods;
  prods.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const FieldElement ai = a.basis_element(f, i);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      prods.push_back(f.mul(ai, b.basis_element(f, j)));
    }
  }
  if (prods.empty()) return Subspace(f.q(), f.m());
  return Subspace::from_elements(f, prods);
}

// phi^{-1} S for a nonzero scalar phi in F_{q^m}; dimension is preserved.
inline Subspace scalar_inverse_space(const Field& f, const FieldElement& phi,
                                     const Subspace& s) {
  if (f.is_zero(phi)) throw std::domain_error("scaling by inverse of zero");
  const FieldElement pinv = f.inv(phi);
  std::vector<FieldElement> gens;
  gens.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    gens.push_back(f.mul(pinv, s.basis_element(f, i)));
  }
  if (gens.empty()) return Subspace(f.q(), f.m());
  return Subspace::from_elements(f, gens);
}

// Intersection via the Zassenhaus construction: eliminate rows [a|a], [b|0];
// rows whose left half vanishes carry a basis of the intersection on the
// right.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.q() != b.q()) {
    throw std::invalid_argument("subspaces live in different spaces");
  }
  const std::size_t m = a.ambient_dim();
  FqMatrix z(a.dim() + b.dim(), 2 * m, a.q());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, m + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < m; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  }
  const RrefResult r = rref(z);
  FqMatrix gens(r.rank, m, a.q());
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < m && left_zero; ++j) {
      left_zero = r.mat(i, j) == 0;
    }
    if (!left_zero) continue;
    for (std::size_t j = 0; j < m; ++j) gens(cnt, j) = r.mat(i, m + j);
    ++cnt;
  }
  FqMatrix trimmed(cnt, m, a.q());
  for (std::size_t i = 0; i < cnt; ++i) {
    for (std::size_t j = 0; j < m; ++j) trimmed(i, j) = gens(i, j);
  }
  return Subspace::from_generators(trimmed);
}

inline bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis().row(i))) return false;
  }
  return true;
}

// Uniform d-dimensional subspace by rejection: draw a d x m matrix until it
// has rank d.  Each subspace is hit by the same number of full-rank matrices,
// so the result is uniform over the Grassmannian.
inline Subspace random_subspace(const Field& f, std::size_t d,
                                std::mt19937_64& rng) {
  if (d > f.m()) throw std::invalid_argument("dimension exceeds ambient space");
  if (d == 0) return Subspace(f.q(), f.m());
  for (;;) {
    FqMatrix g = FqMatrix::random(d, f.m(), f.q(), rng);
    RrefResult r = rref(g);
    if (r.rank == d) return Subspace::from_generators(g);
  }
}

// Uniform element of the subspace (zero included).
inline FieldElement random_element_of(const Field& f, const Subspace& s,
                                      std::mt19937_64& rng) {
  std::vector<std::uint8_t> coeffs(f.m(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::uint32_t c = uniform_below(rng, f.q());
    if (c == 0) continue;
    for (std::size_t j = 0; j < f.m(); ++j) {
      coeffs[j] = static_cast<std::uint8_t>((coeffs[j] + c * s.basis()(i, j)) % f.q());
    }
  }
  return f.from_coeffs(coeffs);
}

}  // namespace lrpc

#endif  // LRPC_SUBSPACE_HPP_
