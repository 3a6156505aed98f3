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

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gdm/cyclotomic.hpp"
#include "gdm/error.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/roots.hpp"
#include "gdm/transforms.hpp"

namespace gdm {

/// Identifies the system a frame was produced by; travels in every frame header.
struct ParamsFingerprint {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  TransformKind kind = TransformKind::kHartley;
  std::vector<std::uint32_t> poly;  // m lower coefficients, constant term first

  /// FNV-1a over the fields.
  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(p);
    mix(m);
    mix(n);
    mix(static_cast<std::uint64_t>(kind));
    for (auto c : poly) mix(c);
    return h;
  }
  friend bool operator==(const ParamsFingerprint&, const ParamsFingerprint&) = default;
};

/// The nu coset-leader spectrum values sent for one frame, in ascending leader order.
struct CompressedFrame {
  ParamsFingerprint params;
  std::vector<GaloisInt> leaders;
  friend bool operator==(const CompressedFrame&, const CompressedFrame&) = default;
};

/// Transform, coset-leader compression and exact reconstruction for one (params, kind).
class Multiplexer {
 public:
  /// Refuses params whose carrier matrix is not orthogonal, whose spectra break the conjugacy
  /// rule, or whose frames could not carry N GF(p) symbols.
  Multiplexer(const SystemParams& params, TransformKind kind = TransformKind::kHartley)
      : transformer_(params), cosets_(kind, params.n(), params.p()), kind_(kind) {
    fingerprint_ = ParamsFingerprint{params.p(), params.m(), params.n(), kind, params.field().poly()};
    validate();
  }

  const SystemParams& params() const { return transformer_.params(); }
  const Transformer& transformer() const { return transformer_; }
  const CosetTable& cosets() const { return cosets_; }
  TransformKind kind() const { return kind_; }
  const ParamsFingerprint& fingerprint() const { return fingerprint_; }
  std::uint32_t n() const { return params().n(); }
  std::uint32_t nu() const { return cosets_.nu(); }

  CompressedFrame mux(std::span<const PrimeFieldElement> v) const {
    const SpectrumBlock spectrum = transformer_.fast_transform(v, kind_);
    CompressedFrame frame{fingerprint_, {}};
    frame.leaders.reserve(nu());
    for (auto leader : cosets_.leaders()) frame.leaders.push_back(spectrum.values[leader]);
    return frame;
  }
  CompressedFrame mux(const TimeBlock& block) const { return mux(block.v); }

  /// Fills every orbit from its leader by repeated application of the conjugacy value map.
  SpectrumBlock reconstruct_spectrum(const CompressedFrame& frame) const {
    check_frame(frame);
    SpectrumBlock out{std::vector<GaloisInt>(n(), GaloisInt::zero(params().field())), kind_};
    for (std::size_t c = 0; c < cosets_.cosets().size(); ++c) {
      const auto& orbit = cosets_.cosets()[c];
      GaloisInt value = frame.leaders[c];
      for (auto k : orbit) {
        out.values[k] = value;
        value = conjugate_value(kind_, value);
      }
      if (value != frame.leaders[c])
        throw Error(Errc::kInconsistentFrame, "orbit of leader " + std::to_string(orbit.front()) +
                                                  " does not close on " + frame.leaders[c].to_string());
    }
    return out;
  }

  TimeBlock demux(const CompressedFrame& frame) const { return transformer_.fast_inverse(reconstruct_spectrum(frame)); }

 private:
  void check_frame(const CompressedFrame& frame) const {
    if (!(frame.params == fingerprint_))
      throw Error(Errc::kParamMismatch, "frame was produced by a different system");
    if (frame.leaders.size() != nu())
      throw Error(Errc::kBadLength, "frame carries " + std::to_string(frame.leaders.size()) + " values, expected " +
                                        std::to_string(nu()));
    for (const auto& z : frame.leaders)
      if (&z.field() != &params().field()) throw Error(Errc::kParamMismatch, "frame value from another field");
  }

  void validate() const {
    const auto& f = params().field();
    if (std::uint64_t{nu()} * 2 * params().m() < n())
      throw Error(Errc::kUnsupportedParams, "nu*2m < N: frames cannot carry N symbols");
    const TrigTable& trig = transformer_.trig();
    const GaloisInt one = GaloisInt::one(f);
    const GaloisInt zero = GaloisInt::zero(f);
    const PrimeField gf = params().prime_field();
    for (std::uint32_t i = 0; i < n(); ++i) {
      // Column i of C*C/N must be e_i. C is symmetric (cas depends on ik), so this is
      // orthogonality of rows and columns at once.
      SpectrumBlock column{{}, TransformKind::kHartley};
      column.values.reserve(n());
      for (std::uint32_t k = 0; k < n(); ++k) column.values.push_back(trig.cas(k, i));
      const auto back = transformer_.fast_inverse_raw(column);
      for (std::uint32_t k = 0; k < n(); ++k)
        if (back[k] != (k == i ? one : zero))
          throw Error(Errc::kUnsupportedParams, "carrier matrix is not orthogonal");
      // Conjugacy on the impulse basis covers every GF(p) block by linearity.
      std::vector<PrimeFieldElement> impulse(n(), gf(0));
      impulse[i] = gf(1);
      if (!satisfies_conjugacy(transformer_.fast_transform(impulse, kind_)))
        throw Error(Errc::kUnsupportedParams, std::string(to_string(kind_)) + " conjugacy rule fails");
    }
  }

  Transformer transformer_;
  CosetTable cosets_;
  TransformKind kind_;
  ParamsFingerprint fingerprint_;
};

using Rational = boost::rational<std::int64_t>;

/// Efficiency figures relative to TDM/FDM for one (N, nu, p).
struct MuxMetrics {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t nu = 0;
  Rational gamma_cc;        // N / nu
  Rational gain_percent;    // 100 (1 - 1/gamma_cc)
  Rational extra_channels;  // (1 - 1/gamma_cc) N = N - nu
  Rational bandwidth_ratio; // B_GDM / B_1 = N / gamma_cc = nu
  double eta_single = 0;    // log2 p, one user
  double eta_tdm = 0;       // log2 p, N users interleaved
  double eta_gdm = 0;       // gamma_cc log2 p
};

inline MuxMetrics metrics_from_counts(std::uint32_t p, std::uint32_t n, std::uint32_t nu) {
  if (nu == 0 || nu > n) throw Error(Errc::kInvalidParams, "nu must lie in [1, N]");
  MuxMetrics out;
  out.p = p;
  out.n = n;
  out.nu = nu;
  out.gamma_cc = Rational(n, nu);
  const Rational saved = Rational(1) - Rational(1) / out.gamma_cc;
  out.gain_percent = Rational(100) * saved;
  out.extra_channels = saved * Rational(n);
  out.bandwidth_ratio = Rational(n) / out.gamma_cc;
  out.eta_single = std::log2(static_cast<double>(p));
  out.eta_tdm = out.eta_single;
  out.eta_gdm = boost::rational_cast<double>(out.gamma_cc) * out.eta_single;
  return out;
}

/// Metrics with nu from the brute-force coset count.
inline MuxMetrics metrics(std::uint32_t p, std::uint32_t n, TransformKind kind) {
  return metrics_from_counts(p, n, CosetTable(kind, n, p).nu());
}
inline MuxMetrics metrics(const SystemParams& params, TransformKind kind) { return metrics(params.p(), params.n(), kind); }

struct CapacityCheck {
  double gamma_max = 0;  // log_p(1 + snr)
  double min_snr = 0;    // p^gamma_cc - 1
  bool admissible = false;
};

/// Smallest linear SNR with log_p(1 + snr) >= gamma.
inline double min_snr_for(const Rational& gamma, std::uint32_t p) {
  return std::pow(static_cast<double>(p), boost::rational_cast<double>(gamma)) - 1.0;
}

inline CapacityCheck capacity_check(const MuxMetrics& m, double snr_linear) {
  if (!(snr_linear >= 0)) throw Error(Errc::kInvalidParams, "snr must be non-negative");
  CapacityCheck out;
  out.gamma_max = std::log1p(snr_linear) / std::log(static_cast<double>(m.p));
  out.min_snr = min_snr_for(m.gamma_cc, m.p);
  // Decided on the SNR axis so the flip happens exactly at min_snr.
  out.admissible = snr_linear >= out.min_snr;
  return out;
}

struct CrosstalkReport {
  std::uint32_t active_user = 0;
  std::uint64_t trials = 0;
  /// Nonzero symbols recovered on each channel other than the active one.
  std::vector<std::uint64_t> leaked;
  /// Trials where the active user's symbol came back wrong.
  std::uint64_t active_errors = 0;
  bool clean() const {
    if (active_errors != 0) return false;
    for (auto c : leaked)
      if (c != 0) return false;
    return true;
  }
};

/// Muxes blocks where only `active_user` transmits (random symbols) and counts what leaks
/// onto the other channels after demux.
inline CrosstalkReport crosstalk_probe(const Multiplexer& mux, std::uint32_t active_user, std::uint64_t trials,
                                       std::uint64_t seed = 0) {
  if (active_user >= mux.n()) throw Error(Errc::kInvalidParams, "active user out of range");
  const PrimeField gf = mux.params().prime_field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> symbol(0, gf.p() - 1);
  CrosstalkReport rep;
  rep.active_user = active_user;
  rep.trials = trials;
  rep.leaked.assign(mux.n(), 0);
  std::vector<PrimeFieldElement> v(mux.n(), gf(0));
  for (std::uint64_t t = 0; t < trials; ++t) {
    const PrimeFieldElement sent = gf(symbol(rng));
    v[active_user] = sent;
    const TimeBlock back = mux.demux(mux.mux(v));
    for (std::uint32_t u = 0; u < mux.n(); ++u) {
      if (u == active_user) {
        if (back.v[u] != sent) ++rep.active_errors;
      } else if (!back.v[u].is_zero()) {
        ++rep.leaked[u];
      }
    }
  }
  return rep;
}

}  // namespace gdm
