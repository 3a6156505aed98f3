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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdm/error.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/roots.hpp"
#include "gdm/trig.hpp"

namespace gdm {

enum class TransformKind : std::uint8_t { kFourier = 0, kHartley = 1 };

inline std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::kFourier ? "fourier" : "hartley";
}

/// Users' symbols v_0..v_{N-1} for one frame.
struct TimeBlock {
  std::vector<PrimeFieldElement> v;
  friend bool operator==(const TimeBlock&, const TimeBlock&) = default;
};

/// Galois-domain spectrum. Fourier spectra are GF(p^m)-valued and carried with a zero
/// imaginary part so both kinds share one representation.
struct SpectrumBlock {
  std::vector<GaloisInt> values;
  TransformKind kind;
  friend bool operator==(const SpectrumBlock&, const SpectrumBlock&) = default;
};

/// Index map that generates conjugacy orbits: k -> pk (Fourier) or k -> -pk (Hartley), mod N.
inline std::uint32_t conjugate_index(TransformKind kind, std::uint64_t k, std::uint32_t p, std::uint32_t n) {
  const std::uint64_t pk = p * k % n;
  return static_cast<std::uint32_t>(kind == TransformKind::kFourier ? pk : (n - pk) % n);
}

/// Value map matching conjugate_index: V_{sigma(k)} = conjugate_value(V_k) for every spectrum of
/// a GF(p) block.
inline GaloisInt conjugate_value(TransformKind kind, const GaloisInt& z) {
  return kind == TransformKind::kFourier ? frobenius(z) : hartley_conjugate(z);
}

inline bool satisfies_conjugacy(const SpectrumBlock& spectrum) {
  const auto n = static_cast<std::uint32_t>(spectrum.values.size());
  if (n == 0) return true;
  const std::uint32_t p = spectrum.values.front().field().p();
  for (std::uint32_t k = 0; k < n; ++k) {
    if (spectrum.values[conjugate_index(spectrum.kind, k, p, n)] != conjugate_value(spectrum.kind, spectrum.values[k]))
      return false;
  }
  return true;
}

/// FFFT / FFHT of length N over one SystemParams, with direct O(N^2) evaluation and a
/// mixed-radix fast path that reproduces it exactly.
class Transformer {
 public:
  explicit Transformer(const SystemParams& params)
      : trig_(params),
        half_(params.field().constant(2).inv()),
        n_inv_(params.field().constant(params.n()).inv()) {
    zeta_pows_.reserve(params.n());
    for (std::uint32_t e = 0; e < params.n(); ++e) zeta_pows_.push_back(params.zeta_pow(e));
  }

  const SystemParams& params() const { return trig_.params(); }
  const TrigTable& trig() const { return trig_; }
  std::uint32_t n() const { return trig_.n(); }

  /// V_k = sum_i v_i cas_k(i).
  SpectrumBlock ffht_forward(std::span<const PrimeFieldElement> v) const {
    check_length(v.size());
    SpectrumBlock out{{}, TransformKind::kHartley};
    out.values.reserve(n());
    for (std::uint32_t k = 0; k < n(); ++k) {
      GaloisInt acc = zero();
      for (std::uint32_t i = 0; i < n(); ++i)
        if (!v[i].is_zero()) acc += trig_.cas(k, i) * v[i];
      out.values.push_back(acc);
    }
    return out;
  }

  /// V_k = sum_i v_i zeta^{ik}.
  SpectrumBlock ffft_forward(std::span<const PrimeFieldElement> v) const {
    check_length(v.size());
    SpectrumBlock out{{}, TransformKind::kFourier};
    out.values.reserve(n());
    for (std::uint32_t k = 0; k < n(); ++k) {
      ExtFieldElement acc = field().zero();
      for (std::uint32_t i = 0; i < n(); ++i)
        if (!v[i].is_zero()) acc += zeta_pows_[std::uint64_t{i} * k % n()] * v[i];
      out.values.emplace_back(acc);
    }
    return out;
  }

  SpectrumBlock forward(std::span<const PrimeFieldElement> v, TransformKind kind) const {
    return kind == TransformKind::kFourier ? ffft_forward(v) : ffht_forward(v);
  }

  /// v_i = N^{-1} sum_k V_k cas_i(k); the FFHT kernel is its own inverse up to 1/N.
  TimeBlock ffht_inverse(const SpectrumBlock& spectrum) const {
    check_length(spectrum.values.size());
    std::vector<GaloisInt> raw;
    raw.reserve(n());
    for (std::uint32_t i = 0; i < n(); ++i) {
      GaloisInt acc = zero();
      for (std::uint32_t k = 0; k < n(); ++k) acc += spectrum.values[k] * trig_.cas(i, k);
      raw.push_back(acc * n_inv_);
    }
    return to_ground(raw);
  }

  /// v_i = N^{-1} sum_k V_k zeta^{-ik}.
  TimeBlock ffft_inverse(const SpectrumBlock& spectrum) const {
    check_length(spectrum.values.size());
    std::vector<GaloisInt> raw;
    raw.reserve(n());
    for (std::uint32_t i = 0; i < n(); ++i) {
      GaloisInt acc = zero();
      for (std::uint32_t k = 0; k < n(); ++k)
        acc += spectrum.values[k] * zeta_pows_[(n() - std::uint64_t{i} * k % n()) % n()];
      raw.push_back(acc * n_inv_);
    }
    return to_ground(raw);
  }

  TimeBlock inverse(const SpectrumBlock& spectrum) const {
    return spectrum.kind == TransformKind::kFourier ? ffft_inverse(spectrum) : ffht_inverse(spectrum);
  }

  /// Fast forward transform; equal to forward(v, kind) element for element.
  SpectrumBlock fast_transform(std::span<const PrimeFieldElement> v, TransformKind kind) const {
    check_length(v.size());
    std::vector<ExtFieldElement> x;
    x.reserve(n());
    for (const auto& s : v) x.push_back(field().lift(s));
    const auto a = dft(x, false);
    SpectrumBlock out{{}, kind};
    out.values.reserve(n());
    for (std::uint32_t k = 0; k < n(); ++k) {
      if (kind == TransformKind::kFourier) {
        out.values.emplace_back(a[k]);
      } else {
        const auto& neg = a[(n() - k) % n()];
        out.values.emplace_back((a[k] + neg) * half_, (neg - a[k]) * half_);
      }
    }
    return out;
  }

  /// Fast inverse; equal to inverse(spectrum), including the NotGroundField check.
  TimeBlock fast_inverse(const SpectrumBlock& spectrum) const {
    return to_ground(fast_inverse_raw(spectrum));
  }

  /// Inverse transform without projecting to GF(p).
  std::vector<GaloisInt> fast_inverse_raw(const SpectrumBlock& spectrum) const {
    check_length(spectrum.values.size());
    std::vector<ExtFieldElement> re, im;
    re.reserve(n());
    im.reserve(n());
    for (const auto& z : spectrum.values) {
      re.push_back(z.re());
      im.push_back(z.im());
    }
    std::vector<GaloisInt> raw;
    raw.reserve(n());
    if (spectrum.kind == TransformKind::kFourier) {
      const auto x = dft(re, true);
      const auto y = dft(im, true);
      for (std::uint32_t i = 0; i < n(); ++i) raw.push_back(GaloisInt(x[i], y[i]) * n_inv_);
      return raw;
    }
    // Hartley of a GI vector: H(re) + j H(im), each assembled from one forward DFT.
    const auto x = dft(re, false);
    const auto y = dft(im, false);
    for (std::uint32_t i = 0; i < n(); ++i) {
      const std::uint32_t ni = (n() - i) % n();
      const ExtFieldElement r = (x[i] + x[ni] - y[ni] + y[i]) * half_;
      const ExtFieldElement s = (x[ni] - x[i] + y[i] + y[ni]) * half_;
      raw.push_back(GaloisInt(r, s) * n_inv_);
    }
    return raw;
  }

  /// Mixed-radix DFT over GF(p^m) with root zeta (or zeta^{-1} when inverse), unnormalised.
  std::vector<ExtFieldElement> dft(std::span<const ExtFieldElement> x, bool inverse) const {
    check_length(x.size());
    std::vector<ExtFieldElement> out(n(), field().zero());
    dft_recursive(x, 0, 1, n(), 1, inverse, out);
    return out;
  }

 private:
  const ExtField& field() const { return params().field(); }
  GaloisInt zero() const { return GaloisInt::zero(field()); }

  void check_length(std::size_t len) const {
    if (len != n())
      throw Error(Errc::kLengthMismatch, "block length " + std::to_string(len) + " != N = " + std::to_string(n()));
  }

  const ExtFieldElement& root_pow(std::uint64_t e, bool inverse) const {
    e %= n();
    return zeta_pows_[inverse ? (n() - e) % n() : e];
  }

  static std::uint64_t smallest_factor(std::uint64_t n) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  }

  // out[k] = sum_{t<len} x[offset + t*stride] * w^{tk}, w = zeta^{step} (or its inverse).
  void dft_recursive(std::span<const ExtFieldElement> x, std::size_t offset, std::size_t stride, std::uint64_t len,
                     std::uint64_t step, bool inverse, std::span<ExtFieldElement> out) const {
    if (len == 1) {
      out[0] = x[offset];
      return;
    }
    const std::uint64_t radix = smallest_factor(len);
    if (radix == len) {
      for (std::uint64_t k = 0; k < len; ++k) {
        ExtFieldElement acc = field().zero();
        for (std::uint64_t t = 0; t < len; ++t) acc += x[offset + t * stride] * root_pow(step * (t * k % len), inverse);
        out[k] = acc;
      }
      return;
    }
    const std::uint64_t sub_len = len / radix;
    std::vector<ExtFieldElement> sub(len, field().zero());
    for (std::uint64_t s = 0; s < radix; ++s)
      dft_recursive(x, offset + s * stride, stride * radix, sub_len, step * radix, inverse,
                    std::span(sub).subspan(s * sub_len, sub_len));
    for (std::uint64_t k = 0; k < len; ++k) {
      ExtFieldElement acc = sub[k % sub_len];
      for (std::uint64_t s = 1; s < radix; ++s) acc += sub[s * sub_len + k % sub_len] * root_pow(step * (s * k % len), inverse);
      out[k] = acc;
    }
  }

  TimeBlock to_ground(const std::vector<GaloisInt>& raw) const {
    TimeBlock out;
    out.v.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (!raw[i].in_ground_field())
        throw Error(Errc::kNotGroundField, "recovered symbol " + std::to_string(i) + " = " + raw[i].to_string() +
                                               " is not in GF(" + std::to_string(field().p()) + ")");
      out.v.push_back(raw[i].re().ground_value());
    }
    return out;
  }

  TrigTable trig_;
  ExtFieldElement half_;
  ExtFieldElement n_inv_;
  std::vector<ExtFieldElement> zeta_pows_;
};

}  // namespace gdm
