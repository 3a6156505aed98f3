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

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdm/gdm.hpp"
#include "gdm/statsim.hpp"

namespace {

using namespace gdm;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no hard limit
  std::function<Outcome()> run;
};

std::vector<PrimeFieldElement> random_block(const PrimeField& gf, std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, gf.p() - 1);
  std::vector<PrimeFieldElement> v;
  v.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) v.push_back(gf(d(rng)));
  return v;
}

struct System {
  std::uint32_t p, m, n;
};
const std::vector<System> kPropertySystems{{5, 1, 4}, {3, 3, 26}, {7, 2, 48}};
constexpr TransformKind kKinds[] = {TransformKind::kFourier, TransformKind::kHartley};

std::string str(const Rational& r) {
  return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
}

Outcome table_one() {
  const auto params = SystemParams::make(5, 1, 4);
  const ExtField& f = params.field();
  const GaloisInt one = GaloisInt::of(f, 1), four = GaloisInt::of(f, 4);
  const GaloisInt j3 = GaloisInt::of(f, 0, 3), j2 = GaloisInt::of(f, 0, 2);
  const std::vector<std::vector<GaloisInt>> table{
      {one, one, one, one}, {one, j3, four, j2}, {one, four, one, four}, {one, j2, four, j3}};
  const auto matrix = carrier_matrix(params);
  int matched = 0;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t k = 0; k < 4; ++k) matched += matrix.at(i, k) == table[i][k] && cas(i, k, params) == table[i][k];
  return {matched == 16, std::to_string(matched) + "/16 entries"};
}

Outcome walsh() {
  const auto w = rationalize_walsh(carrier_matrix(SystemParams::make(5, 1, 4)));
  const std::vector<std::vector<int>> listing{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  // Sylvester H4; the carrier matrix lists the same rows in another order.
  const std::vector<std::vector<int>> sylvester{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  const bool exact = w == listing;
  const bool permuted = std::is_permutation(w.begin(), w.end(), sylvester.begin(), sylvester.end());
  return {exact && permuted, std::string(exact ? "matrix matches" : "matrix differs") +
                                 (permuted ? ", row permutation of H4" : ", not a permutation of H4")};
}

Outcome mux_example() {
  const auto params = SystemParams::make(5, 1, 4);
  const PrimeField gf(5);
  const auto s = Transformer(params).ffht_forward(std::vector<PrimeFieldElement>{gf(4), gf(0), gf(1), gf(2)});
  std::string got;
  for (const auto& z : s.values) got += (got.empty() ? "" : ", ") + z.to_string();
  return {got == "2, 3+4j, 3, 3+j", "(" + got + ")"};
}

Outcome coset_tables() {
  using Sets = std::set<std::set<std::uint32_t>>;
  auto sets = [](const CosetTable& t) {
    Sets out;
    for (const auto& c : t.cosets()) out.insert(std::set<std::uint32_t>(c.begin(), c.end()));
    return out;
  };
  const Sets fourier{{0},          {1, 3, 9},   {2, 6, 18}, {4, 12, 10},  {5, 15, 19},
                     {7, 21, 11},  {8, 24, 20}, {13},       {14, 16, 22}, {17, 25, 23}};
  const Sets hartley{{0},
                     {1, 23, 9, 25, 3, 17},
                     {2, 6, 18, 8, 24, 20},
                     {4, 14, 10, 22, 12, 16},
                     {5, 11, 19, 21, 15, 7},
                     {13}};
  const auto f = fourier_cosets(26, 3), h = hartley_cosets(26, 3);
  const bool ok = sets(f) == fourier && sets(h) == hartley;
  return {ok, "nu_G=" + std::to_string(f.nu()) + " nu_H=" + std::to_string(h.nu())};
}

Outcome counting() {
  Outcome out;
  const auto g = nu_g_formula(3, 3), h = nu_h_formula(g, 26);
  out.pass = g == 10 && h == 6;
  int compared = 0, mismatched = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t m = 1; m <= 4; ++m) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < m; ++i) q *= p;
      if (q > 3000) continue;
      ++compared;
      if (nu_g_formula(p, m) != static_cast<std::int64_t>(fourier_cosets(static_cast<std::uint32_t>(q - 1), p).nu()))
        ++mismatched;
    }
  out.pass = out.pass && mismatched == 0;
  out.detail = "nu_G(3,3)=" + std::to_string(g) + " nu_H=" + std::to_string(h) + ", brute force " +
               std::to_string(compared - mismatched) + "/" + std::to_string(compared);
  return out;
}

Outcome metrics_check() {
  const auto h = metrics(3, 26, TransformKind::kHartley);
  const auto f = metrics(3, 26, TransformKind::kFourier);
  const double log2_3 = std::log2(3.0);
  bool ok = h.gamma_cc == Rational(13, 3) && f.gamma_cc == Rational(13, 5) &&
            boost::rational_cast<double>(f.gamma_cc) == 2.6 && h.gain_percent == Rational(1000, 13) &&
            f.gain_percent == Rational(800, 13) && h.extra_channels == Rational(20) &&
            f.extra_channels == Rational(16) && h.bandwidth_ratio == Rational(6) && f.bandwidth_ratio == Rational(10);
  ok = ok && std::abs(h.eta_gdm - 13.0 / 3.0 * log2_3) < 1e-9 && std::abs(f.eta_gdm - 2.6 * log2_3) < 1e-9 &&
       std::abs(h.eta_tdm - log2_3) < 1e-9 && std::abs(h.eta_single - log2_3) < 1e-9;
  ok = ok && std::abs(boost::rational_cast<double>(h.gain_percent) - 76.9) < 0.05 &&
       std::abs(boost::rational_cast<double>(f.gain_percent) - 61.5) < 0.05;
  std::ostringstream os;
  os.precision(6);
  os << "hartley gamma " << str(h.gamma_cc) << ", gain " << boost::rational_cast<double>(h.gain_percent) << "%, extra "
     << str(h.extra_channels) << ", eta " << h.eta_gdm << "; fourier gamma " << str(f.gamma_cc) << ", gain "
     << boost::rational_cast<double>(f.gain_percent) << "%, extra " << str(f.extra_channels) << ", eta " << f.eta_gdm;
  return {ok, os.str()};
}

Outcome round_trip() {
  std::uint64_t checked = 0, failed = 0;
  for (const auto& s : kPropertySystems) {
    const auto params = SystemParams::make(s.p, s.m, s.n);
    for (auto kind : kKinds) {
      const Multiplexer mux(params, kind);
      std::mt19937_64 rng(s.n * 2 + static_cast<unsigned>(kind));
      for (int t = 0; t < 10000; ++t) {
        const auto v = random_block(params.prime_field(), s.n, rng);
        ++checked;
        if (mux.demux(mux.mux(v)).v != v) ++failed;
      }
    }
  }
  const auto params = SystemParams::make(5, 1, 4);
  const PrimeField gf(5);
  for (auto kind : kKinds) {
    const Multiplexer mux(params, kind);
    for (int code = 0; code < 625; ++code) {
      const std::vector<PrimeFieldElement> v{gf(code % 5), gf(code / 5 % 5), gf(code / 25 % 5), gf(code / 125)};
      ++checked;
      if (mux.demux(mux.mux(v)).v != v) ++failed;
    }
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) + " blocks exact"};
}

Outcome crosstalk() {
  std::uint64_t leaked = 0, active = 0, probes = 0;
  for (const auto& s : kPropertySystems) {
    const auto params = SystemParams::make(s.p, s.m, s.n);
    for (auto kind : kKinds) {
      const Multiplexer mux(params, kind);
      for (std::uint32_t u = 0; u < s.n; ++u) {
        const auto rep = crosstalk_probe(mux, u, 200, u);
        for (auto c : rep.leaked) leaked += c;
        active += rep.active_errors;
        probes += rep.trials;
      }
    }
  }
  return {leaked == 0 && active == 0, std::to_string(probes) + " probes, leaked symbols " + std::to_string(leaked) +
                                          ", active errors " + std::to_string(active)};
}

Outcome conjugacy() {
  std::uint64_t checked = 0, failed = 0;
  std::string literal;
  for (const auto& s : kPropertySystems) {
    const auto params = SystemParams::make(s.p, s.m, s.n);
    const Transformer t(params);
    std::mt19937_64 rng(s.p * 7 + s.n);
    std::uint64_t literal_misses = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto v = random_block(params.prime_field(), s.n, rng);
      const auto a = t.fast_transform(v, TransformKind::kFourier);
      const auto h = t.fast_transform(v, TransformKind::kHartley);
      for (std::uint32_t k = 0; k < s.n; ++k) {
        const auto fk = conjugate_index(TransformKind::kFourier, k, s.p, s.n);
        const auto hk = conjugate_index(TransformKind::kHartley, k, s.p, s.n);
        checked += 2;
        if (a.values[fk] != frobenius(a.values[k])) ++failed;
        if (h.values[hk] != conjugate_value(TransformKind::kHartley, h.values[k])) ++failed;
        if (h.values[hk] != frobenius(h.values[k])) ++literal_misses;
      }
    }
    literal += " " + std::to_string(s.p) + "^" + std::to_string(s.m) + ":" + (literal_misses ? "no" : "yes");
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " coefficients; Hartley V_{-pk} = V_k^p literally:" + literal};
}

// Embeds z with j replaced by sqrt(-1) in GF(p): a one-dimensional (real) point.
double rationalized(const GaloisInt& z, const ExtFieldElement& root) {
  const ExtFieldElement x = z.re() + z.im() * root;
  return centered(x.coeff(0), z.field().p());
}

Outcome galois_whiteness() {
  const auto params = SystemParams::make(5, 1, 4);
  constexpr std::uint64_t kFrames = 100000;
  constexpr std::size_t kLags = 16;
  const Multiplexer hartley(params, TransformKind::kHartley);
  const Multiplexer fourier(params, TransformKind::kFourier);
  const auto h = statsim::galois_acf(hartley, kFrames, 0, kLags);
  const auto f = statsim::galois_acf(fourier, kFrames, 0, kLags);

  // Rationalised embedding of the Hartley spectra.
  const ExtFieldElement root = *sqrt_of_minus_one(params.field());
  statsim::AcfAccumulator rat(kLags);
  statsim::SymbolSource src(5, 0);
  std::vector<PrimeFieldElement> v(4, params.prime_field()(0));
  for (std::uint64_t i = 0; i < kFrames; ++i) {
    for (auto& s : v) s = params.prime_field()(src.next_residue());
    for (const auto& z : hartley.transformer().fast_transform(v, TransformKind::kHartley).values)
      rat.push(statsim::cplx(rationalized(z, root), 0));
  }
  const auto r = rat.result();

  const bool white = h.max_off_peak() < 0.02;
  const bool power = std::abs(h.power_ratio() - 1.0) <= 0.02;
  std::ostringstream os;
  os.precision(4);
  os << "max|R_V(j)|/R_V(0)=" << h.max_off_peak() << (white ? " ok" : " FAIL") << "; R_V(0)/R_v(0)=" << h.power_ratio()
     << (power ? " ok" : " FAIL") << " [diagnostics: fourier " << f.power_ratio() << " (off-peak " << f.max_off_peak()
     << "), j:=" << root.coeff(0) << " " << r.acf[0].real() / h.time.acf[0].real() << "]";
  return {white && power, os.str()};
}

Outcome psd_shape() {
  const Multiplexer mux(SystemParams::make(5, 1, 4));
  statsim::PsdConfig cfg;
  cfg.frames = 1000;
  cfg.realizations = 1000;
  cfg.nfft = 1024;
  cfg.pulse.samples_per_symbol = 16;
  cfg.seed = 0;
  const auto est = statsim::psd_estimate(mux, cfg);
  const bool ok = est.realizations >= 100 && est.frames >= 1000 && est.max_rel_error_fitted < 0.05 &&
                  est.ratio_spread < 0.05;
  std::ostringstream os;
  os.precision(4);
  os << est.realizations << "x" << est.frames << " frames, " << est.main_lobe_bins
     << " main-lobe bins, max rel error (fitted) " << est.max_rel_error_fitted << ", ratio spread " << est.ratio_spread
     << ", fitted scale " << est.fitted_scale;
  return {ok, os.str()};
}

Outcome capacity() {
  const auto h = metrics(3, 26, TransformKind::kHartley);
  const double reference = std::exp(13.0 / 3.0 * std::log(3.0)) - 1.0;
  const double got = min_snr_for(h.gamma_cc, 3);
  const bool close = std::abs(got - reference) / reference < 1e-6;
  const bool flips = capacity_check(h, got).admissible && !capacity_check(h, std::nextafter(got, 0.0)).admissible;
  std::ostringstream os;
  os.precision(12);
  os << "min SNR " << got << " (" << 10 * std::log10(got) << " dB), flips at threshold: " << (flips ? "yes" : "no");
  return {close && flips, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cas table over GI(5)", 1, table_one},
      {2, "Walsh degeneration", 1, walsh},
      {3, "mux example", 1, mux_example},
      {4, "coset tables", 1, coset_tables},
      {5, "counting formulas", 10, counting},
      {6, "efficiency metrics", 0, metrics_check},
      {7, "round-trip exactness", 60, round_trip},
      {8, "zero cross-talk", 0, crosstalk},
      {9, "conjugacy invariant", 0, conjugacy},
      {10, "Galois-domain whiteness and power", 0, galois_whiteness},
      {11, "PSD follows the pulse spectrum", 0, psd_shape},
      {12, "capacity bound", 0, capacity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      out.pass = false;
      out.detail += "; over time budget";
    }
    failures += !out.pass;
    std::printf("criterion %2d: %s  %s: %s (%.2f s)\n", c.id, out.pass ? "PASS" : "FAIL", c.title.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
