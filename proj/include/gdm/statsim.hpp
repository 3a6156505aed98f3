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
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include <fftw3.h>

#include "gdm/error.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/pipeline.hpp"

namespace gdm::statsim {

using cplx = std::complex<double>;

/// Point of the two-dimensional constellation: centered representatives of re and im.
struct ConstellationPoint {
  double re = 0;
  double im = 0;
  cplx value() const { return {re, im}; }
  friend bool operator==(const ConstellationPoint&, const ConstellationPoint&) = default;
};

inline ConstellationPoint embed(const GaloisInt& z) {
  if (z.field().m() != 1)
    throw Error(Errc::kExtensionNotEmbeddable, "only GI(p) values have a 2-D constellation point");
  const std::uint32_t p = z.field().p();
  return {static_cast<double>(centered(z.re().coeff(0), p)), static_cast<double>(centered(z.im().coeff(0), p))};
}

/// i.i.d. uniform GF(p) symbols, reported by centered representative.
class SymbolSource {
 public:
  SymbolSource(std::uint32_t p, std::uint64_t seed) : p_(p), rng_(seed), dist_(0, p - 1) { validate_prime(p); }

  int next() { return centered(dist_(rng_), p_); }
  std::uint32_t next_residue() { return dist_(rng_); }

 private:
  std::uint32_t p_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::uint32_t> dist_;
};

/// Per-realisation RNG seed derived from (seed, index) so realisations are order independent.
inline std::mt19937_64 realization_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct AcfEstimate {
  std::vector<cplx> acf;       // R(j) = mean x_t conj(x_{t-j})
  std::vector<double> std_error;  // standard error of each mean
  std::vector<std::uint64_t> count;
};

/// Streaming estimator of R(j) for j = 0..max_lag. Sums are additive, so accumulators from
/// independent streams can be merged in any order.
class AcfAccumulator {
 public:
  explicit AcfAccumulator(std::size_t max_lag)
      : max_lag_(max_lag), sum_(max_lag + 1), sq_(max_lag + 1), count_(max_lag + 1), history_(max_lag + 1) {}

  /// Starts a new independent stream; products never span streams.
  void reset_stream() { filled_ = 0; }

  void push(cplx x) {
    head_ = (head_ + 1) % history_.size();
    history_[head_] = x;
    filled_ = std::min(filled_ + 1, history_.size());
    for (std::size_t j = 0; j < filled_; ++j) {
      const cplx prod = x * std::conj(history_[(head_ + history_.size() - j) % history_.size()]);
      sum_[j] += prod;
      sq_[j] += std::norm(prod);
      ++count_[j];
    }
  }

  void merge(const AcfAccumulator& o) {
    for (std::size_t j = 0; j <= max_lag_; ++j) {
      sum_[j] += o.sum_[j];
      sq_[j] += o.sq_[j];
      count_[j] += o.count_[j];
    }
  }

  AcfEstimate result() const {
    AcfEstimate out;
    for (std::size_t j = 0; j <= max_lag_; ++j) {
      const double n = static_cast<double>(count_[j]);
      const cplx mean = n > 0 ? sum_[j] / n : cplx{};
      const double var = n > 1 ? std::max(0.0, sq_[j] / n - std::norm(mean)) : 0.0;
      out.acf.push_back(mean);
      out.std_error.push_back(n > 1 ? std::sqrt(var / n) : 0.0);
      out.count.push_back(count_[j]);
    }
    return out;
  }

 private:
  std::size_t max_lag_;
  std::vector<cplx> sum_;
  std::vector<double> sq_;
  std::vector<std::uint64_t> count_;
  std::vector<cplx> history_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
};

struct GaloisAcfReport {
  AcfEstimate galois;  // embedded spectrum stream V
  AcfEstimate time;    // centered symbol stream v
  std::uint64_t frames = 0;
  /// R_V(0) / R_v(0).
  double power_ratio() const { return galois.acf[0].real() / time.acf[0].real(); }
  /// max_{j != 0} |R_V(j)| / R_V(0).
  double max_off_peak() const {
    double worst = 0;
    for (std::size_t j = 1; j < galois.acf.size(); ++j) worst = std::max(worst, std::abs(galois.acf[j]) / galois.acf[0].real());
    return worst;
  }
};

/// Whiteness of the Galois-domain sequence: random GF(p) blocks, full N-point spectra,
/// embedded and concatenated frame after frame.
inline GaloisAcfReport galois_acf(const Multiplexer& mux, std::uint64_t frames, std::uint64_t seed,
                                  std::size_t max_lag) {
  if (mux.params().m() != 1) throw Error(Errc::kExtensionNotEmbeddable, "Galois ACF needs m = 1");
  const PrimeField gf = mux.params().prime_field();
  SymbolSource source(gf.p(), seed);
  AcfAccumulator spec(max_lag), time(max_lag);
  std::vector<PrimeFieldElement> v(mux.n(), gf(0));
  for (std::uint64_t f = 0; f < frames; ++f) {
    for (auto& s : v) s = gf(source.next_residue());
    for (const auto& s : v) time.push(cplx(s.centered(), 0));
    for (const auto& z : mux.transformer().fast_transform(v, mux.kind()).values) spec.push(embed(z).value());
  }
  return {spec.result(), time.result(), frames};
}

/// Unit-energy pulse u(t) sampled at samples_per_symbol per symbol duration.
struct PulseShape {
  enum class Kind { kRectangular, kRaisedCosine };
  Kind kind = Kind::kRectangular;
  double beta = 0.35;           // roll-off, raised cosine only
  double symbol_duration = 1.0; // seconds
  std::uint32_t samples_per_symbol = 16;
  std::uint32_t span_symbols = 8;  // raised-cosine truncation

  double sample_period() const { return symbol_duration / samples_per_symbol; }
  double sample_rate() const { return samples_per_symbol / symbol_duration; }

  /// Taps scaled so that sum(taps^2) * sample_period = 1.
  std::vector<double> taps() const {
    if (samples_per_symbol == 0) throw Error(Errc::kInvalidParams, "samples per symbol must be positive");
    std::vector<double> h;
    if (kind == Kind::kRectangular) {
      h.assign(samples_per_symbol, 1.0);
    } else {
      const std::uint32_t len = span_symbols * samples_per_symbol + 1;
      const double centre = (len - 1) / 2.0;
      for (std::uint32_t n = 0; n < len; ++n) {
        const double t = (n - centre) / samples_per_symbol;  // in symbols
        const double denom = 1.0 - 4.0 * beta * beta * t * t;
        double v;
        if (std::abs(denom) < 1e-12) {
          v = std::numbers::pi / 4.0 * sinc(1.0 / (2.0 * beta));
        } else {
          v = sinc(t) * std::cos(std::numbers::pi * beta * t) / denom;
        }
        h.push_back(v);
      }
    }
    double energy = 0;
    for (double x : h) energy += x * x;
    energy *= sample_period();
    for (double& x : h) x /= std::sqrt(energy);
    return h;
  }

  /// |U(f)|^2 of the sampled pulse (its DTFT scaled by the sample period). For the
  /// rectangular pulse this is T (sin(pi f T) / (L sin(pi f T / L)))^2, the periodised
  /// T sinc^2(f T).
  double energy_spectrum(double f) const {
    if (kind == Kind::kRectangular) {
      const double x = f * symbol_duration;
      const double den = samples_per_symbol * std::sin(std::numbers::pi * x / samples_per_symbol);
      const double r = std::abs(den) < 1e-15 ? 1.0 : std::sin(std::numbers::pi * x) / den;
      return symbol_duration * r * r;
    }
    const auto h = taps();
    cplx acc{};
    const double ts = sample_period();
    for (std::size_t n = 0; n < h.size(); ++n) acc += h[n] * std::polar(1.0, -2 * std::numbers::pi * f * n * ts);
    return std::norm(acc * ts) ;
  }

  static double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    return std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
  }
};

/// Complex baseband pulse train: symbol s occupies taps starting at offset + s*L.
inline std::vector<cplx> synthesize_envelope(std::span<const cplx> symbols, const PulseShape& pulse,
                                             std::size_t offset_samples) {
  const auto h = pulse.taps();
  const std::size_t step = pulse.samples_per_symbol;
  std::vector<cplx> out(offset_samples + (symbols.empty() ? 0 : (symbols.size() - 1) * step + h.size()));
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    const std::size_t base = offset_samples + s * step;
    for (std::size_t n = 0; n < h.size(); ++n) out[base + n] += symbols[s] * h[n];
  }
  return out;
}

namespace detail {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
struct FftwPlanDestroy {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

}  // namespace detail

/// Welch estimator: Hann-windowed segments of nfft samples with 50% overlap, two-sided.
/// Sums are additive across realisations.
class PsdAccumulator {
 public:
  explicit PsdAccumulator(std::size_t nfft)
      : nfft_(nfft),
        buf_(fftw_alloc_complex(nfft)),
        plan_(fftw_plan_dft_1d(static_cast<int>(nfft), buf_.get(), buf_.get(), FFTW_FORWARD, FFTW_ESTIMATE)),
        window_(nfft),
        sum_(nfft, 0.0) {
    if (nfft < 4 || nfft % 2 != 0) throw Error(Errc::kInvalidParams, "nfft must be even and >= 4");
    for (std::size_t n = 0; n < nfft; ++n)
      window_[n] = 0.5 - 0.5 * std::cos(2 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(nfft));
    for (double w : window_) window_power_ += w * w;
  }

  void accumulate(std::span<const cplx> x) {
    const std::size_t hop = nfft_ / 2;
    for (std::size_t start = 0; start + nfft_ <= x.size(); start += hop) {
      for (std::size_t n = 0; n < nfft_; ++n) {
        buf_.get()[n][0] = window_[n] * x[start + n].real();
        buf_.get()[n][1] = window_[n] * x[start + n].imag();
      }
      fftw_execute(plan_.get());
      for (std::size_t k = 0; k < nfft_; ++k) sum_[k] += buf_.get()[k][0] * buf_.get()[k][0] + buf_.get()[k][1] * buf_.get()[k][1];
      ++segments_;
    }
  }

  void merge(const PsdAccumulator& o) {
    if (o.nfft_ != nfft_) throw Error(Errc::kLengthMismatch, "merging PSD accumulators of different nfft");
    for (std::size_t k = 0; k < nfft_; ++k) sum_[k] += o.sum_[k];
    segments_ += o.segments_;
  }

  std::size_t nfft() const { return nfft_; }
  std::uint64_t segments() const { return segments_; }

  /// Bins k = -(nfft/2 - 1) .. nfft/2 - 1 (symmetric about 0), PSD in units per Hz.
  void result(double sample_rate, std::vector<double>& freq, std::vector<double>& power) const {
    freq.clear();
    power.clear();
    const double scale = segments_ ? 1.0 / (static_cast<double>(segments_) * window_power_ * sample_rate) : 0.0;
    const auto half = static_cast<std::ptrdiff_t>(nfft_ / 2);
    for (std::ptrdiff_t k = -(half - 1); k <= half - 1; ++k) {
      const std::size_t idx = static_cast<std::size_t>((k + static_cast<std::ptrdiff_t>(nfft_)) % static_cast<std::ptrdiff_t>(nfft_));
      freq.push_back(static_cast<double>(k) * sample_rate / static_cast<double>(nfft_));
      power.push_back(sum_[idx] * scale);
    }
  }

 private:
  std::size_t nfft_;
  std::unique_ptr<fftw_complex, detail::FftwFree> buf_;
  std::unique_ptr<fftw_plan_s, detail::FftwPlanDestroy> plan_;
  std::vector<double> window_;
  double window_power_ = 0;
  std::vector<double> sum_;
  std::uint64_t segments_ = 0;
};

enum class SymbolKind {
  kGdm,    // embedded compressed-frame coefficients
  kWhite,  // complex Gaussian with the same power (control)
};

struct PsdConfig {
  std::uint64_t frames = 1000;        // per realisation
  std::uint64_t realizations = 100;
  std::size_t nfft = 1024;
  PulseShape pulse;                   // symbol_duration is one transmitted coefficient
  std::uint64_t seed = 0;
  SymbolKind symbols = SymbolKind::kGdm;
  double main_lobe = 0.9;             // main-lobe bins: |f| * Tsym <= main_lobe
};

struct PsdEstimate {
  std::vector<double> freq;
  std::vector<double> power;
  std::vector<double> theory;  // (P / Tsym) |U(f)|^2 with P the measured symbol power
  std::uint64_t frames = 0;
  std::uint64_t realizations = 0;
  std::uint64_t segments = 0;
  double symbol_power = 0;     // empirical E|V|^2 of transmitted symbols
  double fitted_scale = 0;     // least-squares scale of theory onto power over the main lobe
  double max_rel_error = 0;    // main lobe, theory as computed
  double max_rel_error_fitted = 0;
  double ratio_spread = 0;     // (max - min) / mean of power/theory over the main lobe
  std::size_t main_lobe_bins = 0;
};

namespace detail {

inline void main_lobe_stats(PsdEstimate& est, double symbol_duration, double main_lobe) {
  double num = 0, den = 0;
  std::vector<std::size_t> bins;
  for (std::size_t k = 0; k < est.freq.size(); ++k) {
    if (std::abs(est.freq[k]) * symbol_duration > main_lobe) continue;
    bins.push_back(k);
    num += est.power[k] * est.theory[k];
    den += est.theory[k] * est.theory[k];
  }
  est.main_lobe_bins = bins.size();
  if (bins.empty() || den == 0) return;
  est.fitted_scale = num / den;
  double lo = INFINITY, hi = -INFINITY, mean = 0;
  for (auto k : bins) {
    const double ratio = est.power[k] / est.theory[k];
    est.max_rel_error = std::max(est.max_rel_error, std::abs(ratio - 1.0));
    est.max_rel_error_fitted = std::max(est.max_rel_error_fitted, std::abs(ratio / est.fitted_scale - 1.0));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    mean += ratio;
  }
  mean /= static_cast<double>(bins.size());
  est.ratio_spread = (hi - lo) / mean;
}

}  // namespace detail

/// Averaged periodogram of the GDM baseband signal. Each realisation muxes `frames` random
/// blocks, embeds the nu transmitted coefficients per frame, shapes them with the pulse and
/// starts at a uniformly random offset within one frame.
inline PsdEstimate psd_estimate(const Multiplexer& mux, const PsdConfig& cfg) {
  if (mux.params().m() != 1) throw Error(Errc::kExtensionNotEmbeddable, "PSD simulation needs m = 1");
  if (cfg.realizations == 0 || cfg.frames == 0) throw Error(Errc::kInvalidParams, "empty experiment");
  const PrimeField gf = mux.params().prime_field();
  const std::uint32_t nu = mux.nu();
  PsdAccumulator acc(cfg.nfft);
  double power_sum = 0;
  std::uint64_t power_count = 0;
  std::vector<PrimeFieldElement> v(mux.n(), gf(0));
  std::vector<cplx> symbols;
  for (std::uint64_t r = 0; r < cfg.realizations; ++r) {
    auto rng = realization_rng(cfg.seed, r);
    std::uniform_int_distribution<std::uint32_t> residue(0, gf.p() - 1);
    symbols.clear();
    for (std::uint64_t f = 0; f < cfg.frames; ++f) {
      for (auto& s : v) s = gf(residue(rng));
      for (const auto& z : mux.mux(v).leaders) symbols.push_back(embed(z).value());
    }
    if (cfg.symbols == SymbolKind::kWhite) {
      // Same per-symbol power as the GDM stream, drawn before replacement.
      double p = 0;
      for (const auto& s : symbols) p += std::norm(s);
      const double sigma = std::sqrt(p / static_cast<double>(symbols.size()) / 2.0);
      std::normal_distribution<double> g(0.0, sigma);
      for (auto& s : symbols) s = cplx(g(rng), g(rng));
    }
    for (const auto& s : symbols) power_sum += std::norm(s);
    power_count += symbols.size();
    std::uniform_int_distribution<std::size_t> offset(0, std::size_t{nu} * cfg.pulse.samples_per_symbol - 1);
    const auto envelope = synthesize_envelope(symbols, cfg.pulse, offset(rng));
    acc.accumulate(envelope);
  }

  PsdEstimate est;
  est.frames = cfg.frames;
  est.realizations = cfg.realizations;
  est.segments = acc.segments();
  est.symbol_power = power_sum / static_cast<double>(power_count);
  acc.result(cfg.pulse.sample_rate(), est.freq, est.power);
  for (double f : est.freq)
    est.theory.push_back(est.symbol_power / cfg.pulse.symbol_duration * cfg.pulse.energy_spectrum(f));
  detail::main_lobe_stats(est, cfg.pulse.symbol_duration, cfg.main_lobe);
  return est;
}

}  // namespace gdm::statsim
