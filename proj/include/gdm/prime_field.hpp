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
#include <ostream>
#include <string>

#include "gdm/error.hpp"

namespace gdm {

/// Largest supported characteristic; one byte per coefficient on the wire.
inline constexpr std::uint32_t kMaxPrime = 251;

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// Reduces any integer to its canonical residue in [0, p).
constexpr std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
  const std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Centered representative in {-(p-1)/2, ..., (p-1)/2}.
constexpr int centered(std::uint32_t value, std::uint32_t p) {
  return value > p / 2 ? static_cast<int>(value) - static_cast<int>(p) : static_cast<int>(value);
}

inline void validate_prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p) || p > kMaxPrime)
    throw Error(Errc::kInvalidParams, "p must be an odd prime <= 251, got " + std::to_string(p));
}

class PrimeFieldElement;

/// GF(p) context. Construction validates p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) { validate_prime(p); }

  std::uint32_t p() const { return p_; }
  PrimeFieldElement operator()(std::int64_t value) const;

 private:
  std::uint32_t p_;
};

/// Element of GF(p). The modulus travels with the value.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, const PrimeField& field)
      : value_(static_cast<std::uint16_t>(reduce(value, field.p()))),
        p_(static_cast<std::uint16_t>(field.p())) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t p() const { return p_; }
  int centered() const { return gdm::centered(value_, p_); }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator-() const { return make(p_ - value_); }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
    check(o);
    value_ = static_cast<std::uint16_t>((value_ + o.value_) % p_);
    return *this;
  }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
    check(o);
    value_ = static_cast<std::uint16_t>((value_ + p_ - o.value_) % p_);
    return *this;
  }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
    check(o);
    value_ = static_cast<std::uint16_t>(std::uint32_t{value_} * o.value_ % p_);
    return *this;
  }
  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

  PrimeFieldElement pow(std::uint64_t exp) const { return make(mod_pow(value_, exp, p_)); }

  PrimeFieldElement inv() const {
    if (value_ == 0) throw Error(Errc::kNonInvertible, "zero has no inverse in GF(" + std::to_string(p_) + ")");
    return pow(p_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.value_; }

 private:
  PrimeFieldElement make(std::uint32_t v) const {
    PrimeFieldElement r = *this;
    r.value_ = static_cast<std::uint16_t>(v);
    return r;
  }
  void check(const PrimeFieldElement& o) const {
    if (o.p_ != p_) throw Error(Errc::kContextMismatch, "operands from GF(" + std::to_string(p_) + ") and GF(" +
                                                            std::to_string(o.p_) + ")");
  }

  std::uint16_t value_;
  std::uint16_t p_;
};

inline PrimeFieldElement PrimeField::operator()(std::int64_t value) const { return PrimeFieldElement(value, *this); }

}  // namespace gdm
