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

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gdm/error.hpp"
#include "gdm/prime_field.hpp"

namespace gdm {

/// 3^13 already exceeds the 2^20 element budget.
inline constexpr std::uint32_t kMaxDegree = 12;
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

using Coeffs = std::array<std::uint8_t, kMaxDegree>;

namespace detail {

// Dense polynomial over GF(p), low degree first, no trailing-zero invariant.
using Poly = std::vector<std::uint32_t>;

inline int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of a modulo a monic divisor.
inline Poly poly_rem(Poly a, const Poly& monic, std::uint32_t p) {
  const int dd = degree(monic);
  for (int da = degree(a); da >= dd; da = degree(a)) {
    const std::uint32_t lead = a[static_cast<std::size_t>(da)];
    const int shift = da - dd;
    for (int k = 0; k <= dd; ++k) {
      auto& slot = a[static_cast<std::size_t>(k + shift)];
      slot = (slot + p - lead * monic[static_cast<std::size_t>(k)] % p) % p;
    }
  }
  return a;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw Error(Errc::kInvalidParams, "integer power overflows");
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Trial factorisation: no monic factor of degree 1..m/2 divides the monic polynomial
/// x^m + lower[m-1] x^{m-1} + ... + lower[0].
inline bool is_irreducible(std::span<const std::uint32_t> lower, std::uint32_t p) {
  const auto m = static_cast<std::uint32_t>(lower.size());
  if (m == 0) return false;
  if (m == 1) return true;
  detail::Poly f(lower.begin(), lower.end());
  f.push_back(1);
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    const std::uint64_t count = detail::checked_pow(p, d);
    detail::Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::uint32_t k = 0; k < d; ++k) {
        g[k] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (detail::degree(detail::poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

/// Smallest monic irreducible of degree m, searching lower coefficients with the constant term
/// varying fastest. For m = 1 this is x itself, so GF(p) is embedded as constants.
inline std::vector<std::uint32_t> default_polynomial(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = detail::checked_pow(p, m);
  std::vector<std::uint32_t> lower(m, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t k = 0; k < m; ++k) {
      lower[k] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(lower, p)) return lower;
  }
  throw Error(Errc::kInvalidParams, "no irreducible polynomial found");  // unreachable for m >= 1
}

class ExtFieldElement;

/// GF(p^m) in polynomial basis. Contexts are interned and immutable, so elements keep a plain
/// pointer to theirs and the pointer doubles as the context identity.
class ExtField {
 public:
  /// Returns the shared context for (p, m, poly); the default polynomial is used when none is given.
  static const ExtField& get(std::uint32_t p, std::uint32_t m,
                             std::optional<std::vector<std::uint32_t>> poly = std::nullopt) {
    validate_prime(p);
    if (m < 1 || m > kMaxDegree) throw Error(Errc::kInvalidParams, "extension degree out of range");
    if (detail::checked_pow(p, m) > kMaxFieldSize)
      throw Error(Errc::kInvalidParams, "p^m exceeds 2^20");
    std::vector<std::uint32_t> lower = poly ? *poly : default_polynomial(p, m);
    if (lower.size() != m) throw Error(Errc::kInvalidParams, "reduction polynomial needs m lower coefficients");
    for (auto c : lower)
      if (c >= p) throw Error(Errc::kInvalidParams, "polynomial coefficient out of range");

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<ExtField>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, lower);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    if (!is_irreducible(lower, p)) throw Error(Errc::kInvalidParams, "reduction polynomial is reducible");
    auto [it, _] = cache.emplace(key, std::unique_ptr<ExtField>(new ExtField(p, std::move(lower))));
    return *it->second;
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& poly() const { return poly_; }
  /// GI(q) is a field exactly when -1 is a non-residue in GF(q).
  bool gaussian_is_field() const { return q_ % 4 == 3; }
  PrimeField prime_field() const { return PrimeField(p_); }

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  ExtFieldElement constant(std::int64_t value) const;
  ExtFieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Element number `index` in canonical enumeration order (base-p digits, constant term fastest).
  ExtFieldElement from_index(std::uint64_t index) const;
  ExtFieldElement lift(const PrimeFieldElement& a) const;

  std::string describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << "^" << m_;
    os << ") mod x^" << m_;
    for (std::uint32_t k = m_; k-- > 0;) {
      if (poly_[k] == 0) continue;
      os << " + " << poly_[k];
      if (k > 0) os << "x^" << k;
    }
    return os.str();
  }

 private:
  ExtField(std::uint32_t p, std::vector<std::uint32_t> lower)
      : p_(p), m_(static_cast<std::uint32_t>(lower.size())), q_(detail::checked_pow(p, m_)), poly_(std::move(lower)) {}

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> poly_;
};

class ExtFieldElement {
 public:
  ExtFieldElement(const ExtField& field, const Coeffs& coeffs) : c_(coeffs), f_(&field) {}

  const ExtField& field() const { return *f_; }
  std::uint32_t coeff(std::size_t k) const { return c_[k]; }
  std::span<const std::uint8_t> coeffs() const { return {c_.data(), f_->m()}; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + f_->m(), [](auto c) { return c == 0; });
  }
  /// True when the element lies in the prime subfield.
  bool in_ground_field() const {
    return std::all_of(c_.begin() + 1, c_.begin() + f_->m(), [](auto c) { return c == 0; });
  }
  PrimeFieldElement ground_value() const { return PrimeFieldElement(c_[0], f_->prime_field()); }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (std::uint32_t k = f_->m(); k-- > 0;) idx = idx * f_->p() + c_[k];
    return idx;
  }

  ExtFieldElement operator-() const {
    ExtFieldElement r = *this;
    const auto p = f_->p();
    for (std::uint32_t k = 0; k < f_->m(); ++k) r.c_[k] = static_cast<std::uint8_t>((p - c_[k]) % p);
    return r;
  }
  ExtFieldElement& operator+=(const ExtFieldElement& o) {
    check(o);
    const auto p = f_->p();
    for (std::uint32_t k = 0; k < f_->m(); ++k) c_[k] = static_cast<std::uint8_t>((c_[k] + o.c_[k]) % p);
    return *this;
  }
  ExtFieldElement& operator-=(const ExtFieldElement& o) {
    check(o);
    const auto p = f_->p();
    for (std::uint32_t k = 0; k < f_->m(); ++k) c_[k] = static_cast<std::uint8_t>((c_[k] + p - o.c_[k]) % p);
    return *this;
  }
  ExtFieldElement& operator*=(const ExtFieldElement& o) {
    check(o);
    const std::uint32_t p = f_->p();
    const std::uint32_t m = f_->m();
    std::array<std::uint32_t, 2 * kMaxDegree> prod{};
    for (std::uint32_t a = 0; a < m; ++a) {
      if (c_[a] == 0) continue;
      for (std::uint32_t b = 0; b < m; ++b) prod[a + b] = (prod[a + b] + std::uint32_t{c_[a]} * o.c_[b]) % p;
    }
    // x^m = -(poly lower part)
    const auto& poly = f_->poly();
    for (std::uint32_t d = 2 * m - 1; d-- > m;) {
      const std::uint32_t lead = prod[d];
      if (lead == 0) continue;
      prod[d] = 0;
      for (std::uint32_t k = 0; k < m; ++k)
        prod[d - m + k] = (prod[d - m + k] + p - lead * poly[k] % p) % p;
    }
    for (std::uint32_t k = 0; k < m; ++k) c_[k] = static_cast<std::uint8_t>(prod[k]);
    return *this;
  }
  /// Scalar multiplication by a GF(p) element.
  ExtFieldElement& operator*=(const PrimeFieldElement& s) {
    if (s.p() != f_->p()) throw Error(Errc::kContextMismatch, "scalar from a different prime field");
    for (std::uint32_t k = 0; k < f_->m(); ++k) c_[k] = static_cast<std::uint8_t>(c_[k] * s.value() % f_->p());
    return *this;
  }

  friend ExtFieldElement operator+(ExtFieldElement a, const ExtFieldElement& b) { return a += b; }
  friend ExtFieldElement operator-(ExtFieldElement a, const ExtFieldElement& b) { return a -= b; }
  friend ExtFieldElement operator*(ExtFieldElement a, const ExtFieldElement& b) { return a *= b; }
  friend ExtFieldElement operator*(ExtFieldElement a, const PrimeFieldElement& s) { return a *= s; }
  friend ExtFieldElement operator*(const PrimeFieldElement& s, ExtFieldElement a) { return a *= s; }
  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) {
    return a.f_ == b.f_ && std::equal(a.c_.begin(), a.c_.begin() + a.f_->m(), b.c_.begin());
  }

  ExtFieldElement pow(std::uint64_t exp) const {
    ExtFieldElement result = f_->one();
    ExtFieldElement base = *this;
    while (exp > 0) {
      if (exp & 1) result *= base;
      base *= base;
      exp >>= 1;
    }
    return result;
  }

  ExtFieldElement inv() const {
    if (is_zero()) throw Error(Errc::kNonInvertible, "zero has no inverse in " + f_->describe());
    return pow(f_->q() - 2);
  }

  /// x -> x^p, the generator of Gal(GF(p^m)/GF(p)).
  ExtFieldElement frobenius() const { return pow(f_->p()); }

  std::string to_string() const {
    if (f_->m() == 1) return std::to_string(c_[0]);
    std::string s = "(";
    for (std::uint32_t k = 0; k < f_->m(); ++k) {
      if (k) s += ',';
      s += std::to_string(c_[k]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtFieldElement& a) { return os << a.to_string(); }

 private:
  void check(const ExtFieldElement& o) const {
    if (o.f_ != f_) throw Error(Errc::kContextMismatch, "operands from different extension fields");
  }

  Coeffs c_;
  const ExtField* f_;
};

inline ExtFieldElement ExtField::zero() const { return ExtFieldElement(*this, Coeffs{}); }
inline ExtFieldElement ExtField::one() const { return constant(1); }
inline ExtFieldElement ExtField::constant(std::int64_t value) const {
  Coeffs c{};
  c[0] = static_cast<std::uint8_t>(reduce(value, p_));
  return ExtFieldElement(*this, c);
}
inline ExtFieldElement ExtField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) throw Error(Errc::kInvalidParams, "too many coefficients");
  Coeffs c{};
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = static_cast<std::uint8_t>(coeffs[k] % p_);
  return ExtFieldElement(*this, c);
}
inline ExtFieldElement ExtField::from_index(std::uint64_t index) const {
  if (index >= q_) throw Error(Errc::kInvalidParams, "element index out of range");
  Coeffs c{};
  for (std::uint32_t k = 0; k < m_; ++k) {
    c[k] = static_cast<std::uint8_t>(index % p_);
    index /= p_;
  }
  return ExtFieldElement(*this, c);
}
inline ExtFieldElement ExtField::lift(const PrimeFieldElement& a) const {
  if (a.p() != p_) throw Error(Errc::kContextMismatch, "lifting from a different prime field");
  return constant(a.value());
}

}  // namespace gdm
