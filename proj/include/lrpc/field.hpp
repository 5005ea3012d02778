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
// Arithmetic in the extension field F_{q^m} = F_q[x]/(f) for a prime q and a
// monic irreducible modulus f of degree m.  Elements are stored as coefficient
// vectors over F_q in the polynomial basis {1, x, ..., x^{m-1}}, so the F_q
// vector-space structure used by the subspace routines is just the coefficient
// vector itself.

#ifndef LRPC_FIELD_HPP_
#define LRPC_FIELD_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrpc/random.hpp"

namespace lrpc {

inline constexpr std::size_t kMaxExtensionDegree = 63;

namespace detail {

inline bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t q) {
  a %= q;
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  // q is tiny (< 256), a linear scan beats carrying an exponentiation around.
  for (std::uint32_t b = 1; b < q; ++b) {
    if (a * b % q == 1) return b;
  }
  throw std::logic_error("no inverse found; q not prime?");
}

// Dense polynomials over F_q, little-endian coefficients, no trailing zeros.
using Poly = std::vector<std::uint8_t>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      t[i + j] = (t[i + j] + static_cast<std::uint32_t>(a[i]) * b[j]) % q;
    }
  }
  Poly r(t.begin(), t.end());
  poly_trim(r);
  return r;
}

// Remainder of a modulo a monic divisor d.
inline Poly poly_mod(Poly a, const Poly& d, std::uint32_t q) {
  poly_trim(a);
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    if (c != 0) {
      for (std::size_t i = 0; i <= dd; ++i) {
        const std::uint32_t sub = c * d[i] % q;
        a[shift + i] = static_cast<std::uint8_t>((a[shift + i] + q - sub) % q);
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.size() <= dd) break;
  }
  poly_trim(a);
  return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod,
                        std::uint32_t q) {
  Poly r{1};
  base = poly_mod(std::move(base), mod, q);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, q), mod, q);
    base = poly_mod(poly_mul(base, base, q), mod, q);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t q) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), q);
    Poly bm = b;
    for (auto& c : bm) c = static_cast<std::uint8_t>(c * lead_inv % q);
    Poly r = poly_mod(a, bm, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test for a monic f of degree m over F_q:
// x^{q^m} = x (mod f) and gcd(x^{q^{m/p}} - x, f) = 1 for every prime p | m.
inline bool is_irreducible(const Poly& f, std::uint32_t q) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  // frob[j] = x^{q^j} mod f, built by repeated q-th powers.
  std::vector<Poly> frob(m + 1);
  frob[0] = poly_mod(Poly{0, 1}, f, q);
  for (std::size_t j = 1; j <= m; ++j) {
    frob[j] = poly_powmod(frob[j - 1], q, f, q);
  }
  Poly x = poly_mod(Poly{0, 1}, f, q);
  if (frob[m] != x) return false;
  std::size_t rem = m;
  for (std::size_t p = 2; p <= rem; ++p) {
    if (rem % p != 0) continue;
    while (rem % p == 0) rem /= p;
    Poly diff = frob[m / p];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint8_t>((diff[1] + q - 1) % q);
    poly_trim(diff);
    Poly g = poly_gcd(f, diff, q);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

// Defining data of F_{q^m}.  The modulus is stored little-endian with the
// coefficient of x^i at index i; it has length m+1 and is monic.
struct FieldParams {
  std::uint32_t q = 2;
  std::size_t m = 1;
  std::vector<std::uint8_t> modulus;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// First monic irreducible of degree m, scanning the low coefficients in base-q
// counting order (x^3+x+1 for q=2, m=3; x^4+x+1 for q=2, m=4).  Memoized.
inline std::vector<std::uint8_t> default_modulus(std::uint32_t q,
                                                 std::size_t m) {
  if (!detail::is_prime_u32(q) || q > 255) {
    throw std::invalid_argument("q must be a prime < 256");
  }
  if (m < 1 || m > kMaxExtensionDegree) {
    throw std::invalid_argument("extension degree out of range");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::size_t>,
                  std::vector<std::uint8_t>>
      cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find({q, m});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint8_t> f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    if (detail::is_irreducible(f, q)) break;
    // Increment the low m coefficients as a base-q odometer.
    std::size_t i = 0;
    while (i < m) {
      if (++f[i] < q) break;
      f[i] = 0;
      ++i;
    }
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
  std::scoped_lock lock(mu);
  cache.insert({{q, m}, f});
  return f;
}

inline FieldParams make_field_params(std::uint32_t q, std::size_t m) {
  return FieldParams{q, m, default_modulus(q, m)};
}

// Element of F_{q^m}.  Plain coefficient storage with a creator tag so that
// mixing elements across inequivalent fields is caught at run time; the
// default-constructed element is the zero of any field.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint8_t coeff(std::size_t i) const { return c_[i]; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_ == b.c_;
  }

 private:
  friend class Field;
  std::array<std::uint8_t, kMaxExtensionDegree + 1> c_{};
  std::uint32_t tag_ = 0;
};

// Arithmetic context for one F_{q^m}.  Validates its parameters on
// construction (q prime, modulus monic irreducible of degree m).
class Field {
 public:
  explicit Field(FieldParams params) : params_(std::move(params)) {
    if (!detail::is_prime_u32(params_.q) || params_.q > 255) {
      throw std::invalid_argument("q must be a prime < 256");
    }
    if (params_.m < 1 || params_.m > kMaxExtensionDegree) {
      throw std::invalid_argument("extension degree out of range");
    }
    if (params_.modulus.size() != params_.m + 1) {
      throw std::invalid_argument("modulus must have degree m");
    }
    for (auto c : params_.modulus) {
      if (c >= params_.q) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (params_.modulus.back() != 1) {
      throw std::invalid_argument("modulus must be monic");
    }
    if (!validated_before(params_)) {
      detail::Poly f(params_.modulus.begin(), params_.modulus.end());
      if (!detail::is_irreducible(f, params_.q)) {
        throw std::invalid_argument("modulus is reducible");
      }
      remember_validated(params_);
    }
    tag_ = fingerprint(params_);
    if (params_.q == 2) {
      mod_bits_ = 0;
      for (std::size_t i = 0; i <= params_.m; ++i) {
        mod_bits_ |= static_cast<std::uint64_t>(params_.modulus[i] & 1) << i;
      }
    }
  }

  static Field with_default_modulus(std::uint32_t q, std::size_t m) {
    return Field(make_field_params(q, m));
  }

  const FieldParams& params() const { return params_; }
  std::uint32_t q() const { return params_.q; }
  std::size_t m() const { return params_.m; }
  std::uint32_t tag() const { return tag_; }

  FieldElement zero() const {
    FieldElement e;
    e.tag_ = tag_;
    return e;
  }

  FieldElement one() const {
    FieldElement e = zero();
    e.c_[0] = 1;
    return e;
  }

  // Residue class of x; only meaningful for m >= 2.
  FieldElement generator() const {
    if (params_.m < 2) throw std::invalid_argument("generator needs m >= 2");
    FieldElement e = zero();
    e.c_[1] = 1;
    return e;
  }

  FieldElement from_coeffs(std::span<const std::uint8_t> coeffs) const {
    if (coeffs.size() != params_.m) {
      throw std::invalid_argument("coefficient vector must have length m");
    }
    FieldElement e = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] >= params_.q) {
        throw std::invalid_argument("coefficient out of range");
      }
      e.c_[i] = coeffs[i];
    }
    return e;
  }

  FieldElement from_coeffs(std::initializer_list<std::uint8_t> coeffs) const {
    return from_coeffs(std::span<const std::uint8_t>(coeffs.begin(), coeffs.size()));
  }

  // Integer encoding sum c_i q^i; requires q^m to fit in 64 bits.  Intended
  // for exhaustive tests over small fields.
  std::uint64_t to_index(const FieldElement& a) const {
    check(a);
    std::uint64_t v = 0;
    for (std::size_t i = params_.m; i-- > 0;) {
      v = v * params_.q + a.c_[i];
    }
    return v;
  }

  FieldElement from_index(std::uint64_t v) const {
    FieldElement e = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      e.c_[i] = static_cast<std::uint8_t>(v % params_.q);
      v /= params_.q;
    }
    if (v != 0) throw std::invalid_argument("index out of range");
    return e;
  }

  bool is_zero(const FieldElement& a) const {
    check(a);
    for (std::size_t i = 0; i < params_.m; ++i) {
      if (a.c_[i] != 0) return false;
    }
    return true;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      r.c_[i] = static_cast<std::uint8_t>((a.c_[i] + b.c_[i]) % params_.q);
    }
    return r;
  }

  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      r.c_[i] = static_cast<std::uint8_t>((a.c_[i] + params_.q - b.c_[i]) % params_.q);
    }
    return r;
  }

  FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

  // Scalar multiple by s in F_q; acts coordinate-wise on the basis expansion.
  FieldElement scalar_mul(std::uint8_t s, const FieldElement& a) const {
    check(a);
    if (s >= params_.q) throw std::invalid_argument("scalar out of range");
    FieldElement r = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      r.c_[i] = static_cast<std::uint8_t>(a.c_[i] * s % params_.q);
    }
    return r;
  }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (params_.q == 2) return mul_packed(a, b);
    return mul_generic(a, b);
  }

  FieldElement inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    // Extended Euclid on (modulus, a) over F_q[x].
    detail::Poly r0(params_.modulus.begin(), params_.modulus.end());
    detail::Poly r1(a.c_.begin(), a.c_.begin() + params_.m);
    detail::poly_trim(r1);
    detail::Poly t0{}, t1{1};
    while (!r1.empty()) {
      // Divide r0 by r1: quotient accumulated into the Bezout update.
      const std::uint32_t lead_inv = detail::inv_mod_prime(r1.back(), params_.q);
      detail::Poly quot(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      detail::Poly rem = r0;
      while (rem.size() >= r1.size() && !rem.empty()) {
        const std::uint32_t c = rem.back() * lead_inv % params_.q;
        const std::size_t shift = rem.size() - r1.size();
        quot[shift] = static_cast<std::uint8_t>(c);
        for (std::size_t i = 0; i < r1.size(); ++i) {
          const std::uint32_t sub = c * r1[i] % params_.q;
          rem[shift + i] = static_cast<std::uint8_t>((rem[shift + i] + params_.q - sub) % params_.q);
        }
        detail::poly_trim(rem);
        if (rem.size() < r1.size()) break;
      }
      detail::poly_trim(quot);
      detail::Poly t2 = detail::poly_mul(quot, t1, params_.q);
      // t0 - t2
      detail::Poly tn(std::max(t0.size(), t2.size()), 0);
      for (std::size_t i = 0; i < tn.size(); ++i) {
        const std::uint32_t x = i < t0.size() ? t0[i] : 0;
        const std::uint32_t y = i < t2.size() ? t2[i] : 0;
        tn[i] = static_cast<std::uint8_t>((x + params_.q - y) % params_.q);
      }
      detail::poly_trim(tn);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(tn);
    }
    // r0 is a nonzero constant (modulus irreducible, a != 0).
    const std::uint32_t scale = detail::inv_mod_prime(r0.empty() ? 0 : r0[0], params_.q);
    FieldElement out = zero();
    for (std::size_t i = 0; i < t0.size() && i < params_.m; ++i) {
      out.c_[i] = static_cast<std::uint8_t>(t0[i] * scale % params_.q);
    }
    return out;
  }

  // Uniform element: each coefficient uniform in [0, q).
  FieldElement random(std::mt19937_64& rng) const {
    FieldElement e = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      e.c_[i] = static_cast<std::uint8_t>(uniform_below(rng, params_.q));
    }
    return e;
  }

  std::string to_string(const FieldElement& a) const {
    check(a);
    std::string s = "[";
    for (std::size_t i = 0; i < params_.m; ++i) {
      if (i) s += ' ';
      s += std::to_string(a.c_[i]);
    }
    return s + "]";
  }

 private:
  void check(const FieldElement& a) const {
    if (a.tag_ != tag_ && a.tag_ != 0) {
      throw std::invalid_argument("element belongs to a different field");
    }
  }

  FieldElement mul_packed(const FieldElement& a, const FieldElement& b) const {
    std::uint64_t av = 0, bv = 0;
    for (std::size_t i = 0; i < params_.m; ++i) {
      av |= static_cast<std::uint64_t>(a.c_[i] & 1) << i;
      bv |= static_cast<std::uint64_t>(b.c_[i] & 1) << i;
    }
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << params_.m;
    for (std::size_t i = 0; i < params_.m; ++i) {
      if ((bv >> i) & 1) r ^= av;
      av <<= 1;
      if (av & top) av ^= mod_bits_;
    }
    FieldElement out = zero();
    for (std::size_t i = 0; i < params_.m; ++i) {
      out.c_[i] = static_cast<std::uint8_t>((r >> i) & 1);
    }
    return out;
  }

  FieldElement mul_generic(const FieldElement& a, const FieldElement& b) const {
    const std::size_t m = params_.m;
    const std::uint32_t q = params_.q;
    std::array<std::uint32_t, 2 * kMaxExtensionDegree> t{};
    for (std::size_t i = 0; i < m; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        t[i + j] = (t[i + j] + static_cast<std::uint32_t>(a.c_[i]) * b.c_[j]) % q;
      }
    }
    for (std::size_t d = 2 * m - 2; d + 1 > m; --d) {
      const std::uint32_t c = t[d];
      if (c == 0) continue;
      t[d] = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const std::uint32_t sub = c * params_.modulus[i] % q;
        t[d - m + i] = (t[d - m + i] + q - sub) % q;
      }
    }
    FieldElement out = zero();
    for (std::size_t i = 0; i < m; ++i) {
      out.c_[i] = static_cast<std::uint8_t>(t[i]);
    }
    return out;
  }

  static std::uint32_t fingerprint(const FieldParams& p) {
    std::uint32_t h = 2166136261u;
    auto mix = [&h](std::uint32_t v) {
      h ^= v;
      h *= 16777619u;
    };
    mix(p.q);
    mix(static_cast<std::uint32_t>(p.m));
    for (auto c : p.modulus) mix(c);
    return h == 0 ? 1 : h;
  }

  static bool validated_before(const FieldParams& p) {
    std::scoped_lock lock(validated_mutex());
    const auto& v = validated_set();
    return std::find(v.begin(), v.end(), p) != v.end();
  }

  static void remember_validated(const FieldParams& p) {
    std::scoped_lock lock(validated_mutex());
    validated_set().push_back(p);
  }

  static std::mutex& validated_mutex() {
    static std::mutex mu;
    return mu;
  }

  static std::vector<FieldParams>& validated_set() {
    static std::vector<FieldParams> v;
    return v;
  }

  FieldParams params_;
  std::uint32_t tag_ = 0;
  std::uint64_t mod_bits_ = 0;
};

}  // namespace lrpc

#endif  // LRPC_FIELD_HPP_
