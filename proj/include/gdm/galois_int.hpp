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

#include <ostream>
#include <string>

#include "gdm/error.hpp"
#include "gdm/ext_field.hpp"

namespace gdm {

/// re + j*im in GI(p^m) = GF(p^m)[j]/(j^2 + 1).
///
/// j stays formal even when -1 is a square in GF(p^m). In that case GI(p^m) splits into
/// GF(p^m) x GF(p^m) and has zero divisors, so inv() is partial.
class GaloisInt {
 public:
  explicit GaloisInt(ExtFieldElement re) : re_(re), im_(re.field().zero()) {}
  GaloisInt(ExtFieldElement re, ExtFieldElement im) : re_(re), im_(im) {
    if (&re.field() != &im.field()) throw Error(Errc::kContextMismatch, "re and im from different fields");
  }

  static GaloisInt zero(const ExtField& f) { return GaloisInt(f.zero()); }
  static GaloisInt one(const ExtField& f) { return GaloisInt(f.one()); }
  static GaloisInt j(const ExtField& f) { return GaloisInt(f.zero(), f.one()); }
  /// a + bj with a, b taken as GF(p) integers.
  static GaloisInt of(const ExtField& f, std::int64_t a, std::int64_t b = 0) {
    return GaloisInt(f.constant(a), f.constant(b));
  }

  const ExtFieldElement& re() const { return re_; }
  const ExtFieldElement& im() const { return im_; }
  const ExtField& field() const { return re_.field(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  /// Both components lie in GF(p) and the imaginary part vanishes.
  bool in_ground_field() const { return im_.is_zero() && re_.in_ground_field(); }

  /// re^2 + im^2; z is a unit exactly when this is nonzero.
  ExtFieldElement norm() const { return re_ * re_ + im_ * im_; }
  bool is_unit() const { return !norm().is_zero(); }

  GaloisInt operator-() const { return GaloisInt(-re_, -im_); }
  GaloisInt& operator+=(const GaloisInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaloisInt& operator-=(const GaloisInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaloisInt& operator*=(const GaloisInt& o) {
    const ExtFieldElement re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    return *this;
  }
  GaloisInt& operator*=(const PrimeFieldElement& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  GaloisInt& operator*=(const ExtFieldElement& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }

  friend GaloisInt operator+(GaloisInt a, const GaloisInt& b) { return a += b; }
  friend GaloisInt operator-(GaloisInt a, const GaloisInt& b) { return a -= b; }
  friend GaloisInt operator*(GaloisInt a, const GaloisInt& b) { return a *= b; }
  friend GaloisInt operator*(GaloisInt a, const PrimeFieldElement& s) { return a *= s; }
  friend GaloisInt operator*(const PrimeFieldElement& s, GaloisInt a) { return a *= s; }
  friend GaloisInt operator*(GaloisInt a, const ExtFieldElement& s) { return a *= s; }
  friend GaloisInt operator*(const ExtFieldElement& s, GaloisInt a) { return a *= s; }
  friend bool operator==(const GaloisInt&, const GaloisInt&) = default;

  GaloisInt pow(std::uint64_t exp) const {
    GaloisInt result = one(field());
    GaloisInt base = *this;
    while (exp > 0) {
      if (exp & 1) result *= base;
      base *= base;
      exp >>= 1;
    }
    return result;
  }

  GaloisInt inv() const {
    const ExtFieldElement n = norm();
    if (n.is_zero()) throw Error(Errc::kNonInvertible, to_string() + " is a zero divisor in GI(q)");
    const ExtFieldElement ninv = n.inv();
    return GaloisInt(re_ * ninv, -(im_ * ninv));
  }

  std::string to_string() const {
    const bool re0 = re_.is_zero();
    const bool im0 = im_.is_zero();
    if (im0) return re_.to_string();
    std::string im = (field().m() == 1 && im_.coeff(0) == 1) ? "" : im_.to_string();
    if (re0) return im + "j";
    return re_.to_string() + "+" + im + "j";
  }
  friend std::ostream& operator<<(std::ostream& os, const GaloisInt& z) { return os << z.to_string(); }

 private:
  ExtFieldElement re_;
  ExtFieldElement im_;
};

inline GaloisInt conj(const GaloisInt& z) { return GaloisInt(z.re(), -z.im()); }

/// z^p, evaluated as frob(re) + j^p frob(im) with j^p = j for p = 1 (mod 4) and -j otherwise.
inline GaloisInt frobenius(const GaloisInt& z) {
  const ExtFieldElement im = z.im().frobenius();
  return GaloisInt(z.re().frobenius(), z.field().p() % 4 == 1 ? im : -im);
}

/// Componentwise p-th power frob(re) + j frob(im). On spectra with GF(p)-valued inputs this
/// carries V_k to V_{pk} for both transform kinds.
inline GaloisInt frobenius_components(const GaloisInt& z) {
  return GaloisInt(z.re().frobenius(), z.im().frobenius());
}

/// conj(frob(re) + j frob(im)): carries a Hartley coefficient V_k to V_{-pk} for every odd p.
/// Equal to frobenius(z) when p = 3 (mod 4).
inline GaloisInt hartley_conjugate(const GaloisInt& z) { return conj(frobenius_components(z)); }

}  // namespace gdm
