// Copyright 2026 The Authors.
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


// Arithmetic in GF(2^m) with a polynomial-basis representation.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locrep/error.hpp"

namespace locrep {

// An element of GF(2^m): bit k holds the coefficient of z^k.
struct FieldElement {
  std::uint64_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace gf2poly {

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of a divided by b over GF(2); b must be nonzero.
inline std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

// Irreducibility by trial division against every polynomial of degree
// 1..deg(p)/2.
inline bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  const std::uint64_t limit = std::uint64_t{1} << (d / 2 + 1);
  for (std::uint64_t divisor = 2; divisor < limit; ++divisor) {
    if (mod(p, divisor) == 0) return false;
  }
  return true;
}

}  // namespace gf2poly

// GF(2^m) defined by a monic irreducible modulus of degree m. Immutable.
class FieldSpec {
 public:
  static constexpr int kMaxDegree = 32;

  // Uses the smallest irreducible polynomial of degree m (as an integer).
  explicit FieldSpec(int degree) : FieldSpec(degree, default_modulus(degree)) {}

  FieldSpec(int degree, std::uint64_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > kMaxDegree) {
      throw DomainError("field degree must be in [1, " + std::to_string(kMaxDegree) +
                        "], got " + std::to_string(degree));
    }
    if (gf2poly::degree(modulus) != degree) {
      throw DomainError("modulus degree does not match field degree " +
                        std::to_string(degree));
    }
    if (!gf2poly::is_irreducible(modulus)) {
      throw DomainError("modulus is reducible over GF(2)");
    }
  }

  static std::uint64_t default_modulus(int degree) {
    if (degree < 1 || degree > kMaxDegree) {
      throw DomainError("field degree must be in [1, " + std::to_string(kMaxDegree) +
                        "], got " + std::to_string(degree));
    }
    const std::uint64_t lo = std::uint64_t{1} << degree;
    for (std::uint64_t p = lo; p < 2 * lo; ++p) {
      if (gf2poly::is_irreducible(p)) return p;
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
  }

  int degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return std::uint64_t{1} << degree_; }

  bool contains(FieldElement a) const { return (a.bits >> degree_) == 0; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // z^k reduced modulo the modulus.
  FieldElement monomial(int k) const {
    FieldElement z = degree_ > 1 ? FieldElement{2} : reduce_low(2);
    return pow(z, static_cast<std::uint64_t>(k));
  }

  FieldElement element(std::uint64_t bits) const {
    FieldElement e{bits};
    if (!contains(e)) throw UsageError("value does not fit the field degree");
    return e;
  }

  FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
  // Negation is the identity in characteristic 2.
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, b); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    const std::uint64_t high = std::uint64_t{1} << degree_;
    std::uint64_t x = a.bits, y = b.bits, acc = 0;
    while (y != 0) {
      if (y & 1) acc ^= x;
      y >>= 1;
      x <<= 1;
      if (x & high) x ^= modulus_;
    }
    return {acc};
  }

  FieldElement square(FieldElement a) const { return mul(a, a); }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = one();
    while (e != 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw DomainError("inversion of zero in GF(2^m)");
    return pow(a, order() - 2);
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  // a^(2^k) by k repeated squarings.
  FieldElement frobenius(FieldElement a, int k) const {
    if (k < 0) throw UsageError("frobenius power must be nonnegative");
    for (int i = 0; i < k; ++i) a = square(a);
    return a;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  // Only used for m == 1 where z itself is reduced away.
  FieldElement reduce_low(std::uint64_t v) const { return {gf2poly::mod(v, modulus_)}; }

  int degree_;
  std::uint64_t modulus_;
};

// Dimension over GF(2) of the span of the coefficient vectors.
inline int gf2_rank(std::span<const FieldElement> elems) {
  std::vector<std::uint64_t> basis;  // kept with distinct leading bits
  for (FieldElement e : elems) {
    std::uint64_t v = e.bits;
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return static_cast<int>(basis.size());
}

// True iff the elements are linearly independent over GF(2). A list longer
// than the field degree is never independent.
inline bool linearly_independent(const FieldSpec& field, std::span<const FieldElement> elems) {
  if (static_cast<int>(elems.size()) > field.degree()) return false;
  return gf2_rank(elems) == static_cast<int>(elems.size());
}

using Column = std::vector<FieldElement>;

// Rank over GF(2^m) of the matrix whose columns are given, each of length
// `rows`. Gaussian elimination with exact pivot inversion.
inline int matrix_rank(const FieldSpec& field, int rows, std::span<const Column> cols) {
  for (const Column& c : cols) {
    if (static_cast<int>(c.size()) != rows) {
      throw UsageError("ragged matrix: column of length " + std::to_string(c.size()) +
                       ", expected " + std::to_string(rows));
    }
  }
  // Work on rows-as-columns transposed copy: eliminate column vectors
  // against a growing echelon basis.
  std::vector<Column> basis;
  std::vector<int> pivot;
  for (const Column& c : cols) {
    Column v = c;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const FieldElement coef = v[pivot[b]];
      if (coef.is_zero()) continue;
      for (int k = 0; k < rows; ++k) v[k] = field.sub(v[k], field.mul(coef, basis[b][k]));
    }
    int p = -1;
    for (int k = 0; k < rows; ++k) {
      if (!v[k].is_zero()) {
        p = k;
        break;
      }
    }
    if (p < 0) continue;
    const FieldElement scale = field.inv(v[p]);
    for (int k = 0; k < rows; ++k) v[k] = field.mul(v[k], scale);
    basis.push_back(std::move(v));
    pivot.push_back(p);
    if (static_cast<int>(basis.size()) == rows) break;
  }
  return static_cast<int>(basis.size());
}

}  // namespace locrep
