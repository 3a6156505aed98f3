// Copyright 2026 The GDM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdm/error.hpp"
#include "gdm/ext_field.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/prime_field.hpp"

namespace gdm {

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace detail {

inline bool is_one(const PrimeFieldElement& x) { return x.value() == 1; }
inline bool is_one(const ExtFieldElement& x) { return x == x.field().one(); }
inline bool is_one(const GaloisInt& x) { return x == GaloisInt::one(x.field()); }

inline bool is_unit(const PrimeFieldElement& x) { return !x.is_zero(); }
inline bool is_unit(const ExtFieldElement& x) { return !x.is_zero(); }
inline bool is_unit(const GaloisInt& x) { return x.is_unit(); }

// Exponent that every unit satisfies: p-1, q-1, and q^2-1 for GI(q) (which covers both the
// field case and the split case, whose exponent q-1 divides q^2-1).
inline std::uint64_t unit_exponent(const PrimeFieldElement& x) { return x.p() - 1; }
inline std::uint64_t unit_exponent(const ExtFieldElement& x) { return x.field().q() - 1; }
inline std::uint64_t unit_exponent(const GaloisInt& x) { return x.field().q() * x.field().q() - 1; }

}  // namespace detail

/// Multiplicative order: the smallest t >= 1 with x^t = 1.
template <typename Element>
std::uint64_t mult_order(const Element& x) {
  if (!detail::is_unit(x)) throw Error(Errc::kNotAUnit, "order of a non-unit is undefined");
  std::uint64_t t = detail::unit_exponent(x);
  for (std::uint64_t f : prime_factors(t)) {
    while (t % f == 0 && detail::is_one(x.pow(t / f))) t /= f;
  }
  return t;
}

/// First element of GF(p^m), in canonical enumeration order, of multiplicative order exactly n.
inline ExtFieldElement find_root_of_unity(const ExtField& field, std::uint64_t n) {
  const std::uint64_t units = field.q() - 1;
  if (n == 0 || units % n != 0)
    throw Error(Errc::kNoSuchRoot, "N = " + std::to_string(n) + " does not divide q-1 = " + std::to_string(units));
  const auto factors = prime_factors(n);
  const ExtFieldElement one = field.one();
  for (std::uint64_t idx = 1; idx < field.q(); ++idx) {
    const ExtFieldElement x = field.from_index(idx);
    if (x.pow(n) != one) continue;
    bool exact = true;
    for (std::uint64_t f : factors)
      if (x.pow(n / f) == one) exact = false;
    if (exact) return x;
  }
  throw Error(Errc::kNoSuchRoot, "no element of order " + std::to_string(n));  // unreachable: GF(q)* is cyclic
}

inline ExtFieldElement find_root_of_unity(std::uint32_t p, std::uint32_t m, std::uint64_t n,
                                          std::optional<std::vector<std::uint32_t>> poly = std::nullopt) {
  return find_root_of_unity(ExtField::get(p, m, std::move(poly)), n);
}

/// Smallest x (canonical order) with x^2 = -1, present exactly when q = 1 (mod 4).
inline std::optional<ExtFieldElement> sqrt_of_minus_one(const ExtField& field) {
  if (field.q() % 4 != 1) return std::nullopt;
  const ExtFieldElement minus_one = -field.one();
  for (std::uint64_t idx = 1; idx < field.q(); ++idx) {
    const ExtFieldElement x = field.from_index(idx);
    if (x * x == minus_one) return x;
  }
  return std::nullopt;
}

inline std::optional<ExtFieldElement> sqrt_of_minus_one(std::uint32_t p, std::uint32_t m) {
  return sqrt_of_minus_one(ExtField::get(p, m));
}

/// One GDM system: GF(p^m), block length N and a root zeta of order exactly N.
class SystemParams {
 public:
  /// Validates N | p^m - 1. zeta defaults to find_root_of_unity.
  static SystemParams make(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                           std::optional<std::vector<std::uint32_t>> poly = std::nullopt,
                           std::optional<std::vector<std::uint32_t>> zeta = std::nullopt) {
    const ExtField& field = ExtField::get(p, m, std::move(poly));
    if (n == 0 || (field.q() - 1) % n != 0)
      throw Error(Errc::kInvalidParams,
                  "N = " + std::to_string(n) + " must divide p^m - 1 = " + std::to_string(field.q() - 1));
    if (n > 0xFFFF) throw Error(Errc::kInvalidParams, "N must fit the 16-bit frame header");
    if (!zeta) return SystemParams(field, n, find_root_of_unity(field, n));
    const ExtFieldElement z = field.from_coeffs(*zeta);
    if (z.is_zero() || mult_order(z) != n)
      throw Error(Errc::kInvalidParams, "zeta " + z.to_string() + " does not have order " + std::to_string(n));
    return SystemParams(field, n, z);
  }

  const ExtField& field() const { return *field_; }
  std::uint32_t p() const { return field_->p(); }
  std::uint32_t m() const { return field_->m(); }
  std::uint32_t n() const { return n_; }
  const ExtFieldElement& zeta() const { return zeta_; }
  PrimeField prime_field() const { return field_->prime_field(); }

  /// zeta^e for any integer e, reduced mod N.
  ExtFieldElement zeta_pow(std::int64_t e) const {
    return zeta_.pow(static_cast<std::uint64_t>(((e % n_) + n_) % n_));
  }

  friend bool operator==(const SystemParams& a, const SystemParams& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.zeta_ == b.zeta_;
  }

 private:
  SystemParams(const ExtField& field, std::uint32_t n, ExtFieldElement zeta) : field_(&field), n_(n), zeta_(zeta) {}

  const ExtField* field_;
  std::uint32_t n_;
  ExtFieldElement zeta_;
};

}  // namespace gdm
