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

// gdm: command-line front end for the Galois-division multiplexer.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 selftest failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdm/gdm.hpp"
#include "gdm/statsim.hpp"

namespace {

using namespace gdm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSelftest = 3;

/// Raised for bad flag values; mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t n = 0;
  std::string kind = "hartley";
  std::string poly;
  std::uint64_t seed = 0;
  std::uint64_t frames = 100000;
  std::uint64_t realizations = 100;
  std::size_t nfft = 1024;
  std::uint32_t samples_per_symbol = 16;
  std::string pulse = "rect";
  double beta = 0.35;
  double symbol_duration = 1.0;
  bool acf = false;
  std::size_t lags = 16;
  std::optional<std::uint32_t> user;
  std::uint64_t trials = 1000;
  std::string in;
  std::string out;
};

TransformKind parse_kind(const std::string& s) {
  if (s == "fourier") return TransformKind::kFourier;
  if (s == "hartley") return TransformKind::kHartley;
  throw UsageError("--kind must be fourier or hartley");
}

/// m coefficients, constant term first, separated by commas or spaces. A trailing leading 1
/// (m + 1 values) is accepted and dropped.
std::optional<std::vector<std::uint32_t>> parse_poly(const std::string& s, std::uint32_t m) {
  if (s.empty()) return std::nullopt;
  std::string text = s;
  for (char& c : text)
    if (c == ',') c = ' ';
  std::istringstream is(text);
  std::vector<std::uint32_t> coeffs;
  long long c;
  while (is >> c) {
    if (c < 0) throw UsageError("--poly coefficients must be non-negative");
    coeffs.push_back(static_cast<std::uint32_t>(c));
  }
  if (!is.eof()) throw UsageError("--poly must be a list of integers");
  if (coeffs.size() == m + 1 && coeffs.back() == 1) coeffs.pop_back();
  if (coeffs.size() != m) throw UsageError("--poly needs " + std::to_string(m) + " coefficients, constant term first");
  return coeffs;
}

SystemParams make_params(const RunConfig& cfg) {
  if (cfg.p == 0 || cfg.n == 0) throw UsageError("-p and -N are required");
  try {
    return SystemParams::make(cfg.p, cfg.m, cfg.n, parse_poly(cfg.poly, cfg.m));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::unique_ptr<Multiplexer> make_mux(const RunConfig& cfg) {
  const auto params = make_params(cfg);
  try {
    return std::make_unique<Multiplexer>(params, parse_kind(cfg.kind));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

/// Output stream for --out, or stdout.
class Output {
 public:
  explicit Output(const std::string& path, bool binary = false) {
    if (path.empty() || path == "-") return;
    file_.open(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
    if (!file_) throw Error(Errc::kParseError, "cannot open " + path + " for writing");
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::kParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string rational(const Rational& r) {
  return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
}

int cmd_design(const RunConfig& cfg) {
  const auto mux = make_mux(cfg);
  const auto& params = mux->params();
  const auto mt = metrics(params, mux->kind());
  const auto cap = capacity_check(mt, 0);
  std::cout.setf(std::ios::fixed);
  std::cout.precision(4);
  std::cout << "field            " << params.field().describe() << "\n"
            << "N                " << params.n() << "\n"
            << "kind             " << to_string(mux->kind()) << "\n"
            << "zeta             " << params.zeta().to_string() << "\n"
            << "cosets\n";
  std::istringstream table(mux->cosets().to_string());
  for (std::string line; std::getline(table, line);) std::cout << "  " << line << "\n";
  std::cout << "nu               " << mt.nu << "\n"
            << "gamma_cc         " << rational(mt.gamma_cc) << " (" << boost::rational_cast<double>(mt.gamma_cc) << ")\n"
            << "gain             " << boost::rational_cast<double>(mt.gain_percent) << " %\n"
            << "extra channels   " << rational(mt.extra_channels) << "\n"
            << "B_GDM/B_1        " << rational(mt.bandwidth_ratio) << "\n"
            << "eta one-user     " << mt.eta_single << " bits/s/Hz\n"
            << "eta TDM          " << mt.eta_tdm << " bits/s/Hz\n"
            << "eta GDM          " << mt.eta_gdm << " bits/s/Hz\n"
            << "min SNR          " << cap.min_snr << " (" << 10 * std::log10(cap.min_snr) << " dB)\n";
  if (mt.gamma_cc <= Rational(1))
    std::cout << "note             no gain when the transform is taken without alphabet extension\n";
  return kExitOk;
}

int cmd_cosets(const RunConfig& cfg) {
  if (cfg.p == 0 || cfg.n == 0) throw UsageError("-p and -N are required");
  try {
    validate_prime(cfg.p);
    std::cout << CosetTable(parse_kind(cfg.kind), cfg.n, cfg.p).to_string();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_carriers(const RunConfig& cfg) {
  const auto matrix = carrier_matrix(make_params(cfg));
  for (const auto& row : matrix.rows()) {
    std::cout << "carrier " << row.index << ":";
    for (const auto& z : row.samples) std::cout << ' ' << z;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_mux(const RunConfig& cfg) {
  const auto mux = make_mux(cfg);
  const PrimeField gf = mux->params().prime_field();
  const std::string text = read_input(cfg.in);
  Output out(cfg.out, true);
  std::istringstream lines(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    TimeBlock block;
    try {
      block = parse_symbol_line(line, gf, mux->n());
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
    }
    const auto bytes = serialize(mux->mux(block));
    out.get().write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  out.get().flush();
  return kExitOk;
}

int cmd_demux(const RunConfig& cfg, bool params_given) {
  std::unique_ptr<Multiplexer> expected;
  if (params_given) expected = make_mux(cfg);
  const std::string raw = read_input(cfg.in);
  const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size());
  Output out(cfg.out);
  std::map<std::uint64_t, std::unique_ptr<Multiplexer>> cache;
  std::size_t at = 0, index = 0;
  while (at < bytes.size()) {
    try {
      auto decoded = decode_prefix(bytes.subspan(at));
      const auto& fp = decoded.frame.params;
      const Multiplexer* mux = expected.get();
      if (mux) {
        if (!(fp == mux->fingerprint())) throw Error(Errc::kParamMismatch, "frame header does not match -p/-m/-N/--kind");
      } else {
        auto& slot = cache[fp.hash()];
        if (!slot || !(slot->fingerprint() == fp))
          slot = std::make_unique<Multiplexer>(SystemParams::make(fp.p, fp.m, fp.n, fp.poly), fp.kind);
        mux = slot.get();
      }
      out.get() << format_symbol_line(mux->demux(decoded.frame)) << "\n";
      at += decoded.size;
    } catch (const Error& e) {
      throw Error(e.code(), "frame " + std::to_string(index) + " at byte " + std::to_string(at) + ": " + e.message());
    }
    ++index;
  }
  out.get().flush();
  return kExitOk;
}

int cmd_crosstalk(const RunConfig& cfg) {
  const auto mux = make_mux(cfg);
  if (cfg.user && *cfg.user >= mux->n()) throw UsageError("--user must be below N");
  std::uint64_t total = 0;
  for (std::uint32_t u = 0; u < mux->n(); ++u) {
    if (cfg.user && u != *cfg.user) continue;
    const auto rep = crosstalk_probe(*mux, u, cfg.trials, cfg.seed + u);
    std::uint64_t leaked = 0;
    for (auto c : rep.leaked) leaked += c;
    total += leaked + rep.active_errors;
    std::cout << "user " << u << ": " << rep.trials << " trials, leaked " << leaked << ", active errors "
              << rep.active_errors << "\n";
  }
  std::cout << (total == 0 ? "no cross-talk\n" : "cross-talk detected\n");
  return total == 0 ? kExitOk : kExitData;
}

int cmd_psd(const RunConfig& cfg) {
  const auto mux = make_mux(cfg);
  if (mux->params().m() != 1) throw UsageError("psd needs m = 1 (two-dimensional constellation)");
  Output out(cfg.out);
  auto& os = out.get();
  os.precision(10);
  if (cfg.acf) {
    const auto rep = statsim::galois_acf(*mux, cfg.frames, cfg.seed, cfg.lags);
    os << "lag,acf_re,acf_im,stderr\n";
    for (std::size_t j = 0; j < rep.galois.acf.size(); ++j)
      os << j << ',' << rep.galois.acf[j].real() << ',' << rep.galois.acf[j].imag() << ',' << rep.galois.std_error[j]
         << "\n";
    std::fprintf(stderr, "# frames %llu, R_V(0)/R_v(0) %.4f, max off-peak %.4f\n",
                 static_cast<unsigned long long>(cfg.frames), rep.power_ratio(), rep.max_off_peak());
    return kExitOk;
  }
  statsim::PsdConfig pc;
  pc.frames = cfg.frames;
  pc.realizations = cfg.realizations;
  pc.nfft = cfg.nfft;
  pc.seed = cfg.seed;
  pc.pulse.samples_per_symbol = cfg.samples_per_symbol;
  pc.pulse.symbol_duration = cfg.symbol_duration;
  pc.pulse.beta = cfg.beta;
  if (cfg.pulse == "rc") {
    pc.pulse.kind = statsim::PulseShape::Kind::kRaisedCosine;
  } else if (cfg.pulse != "rect") {
    throw UsageError("--pulse must be rect or rc");
  }
  statsim::PsdEstimate est;
  try {
    est = statsim::psd_estimate(*mux, pc);
  } catch (const Error& e) {
    if (e.code() == Errc::kInvalidParams) throw UsageError(e.what());
    throw;
  }
  os << "freq_hz,psd_est,psd_theory\n";
  for (std::size_t k = 0; k < est.freq.size(); ++k) os << est.freq[k] << ',' << est.power[k] << ',' << est.theory[k] << "\n";
  std::fprintf(stderr,
               "# %llu realizations x %llu frames, %zu main-lobe bins, symbol power %.4f, fitted scale %.4f, "
               "max rel error %.4f (fitted %.4f), ratio spread %.4f\n",
               static_cast<unsigned long long>(est.realizations), static_cast<unsigned long long>(est.frames),
               est.main_lobe_bins, est.symbol_power, est.fitted_scale, est.max_rel_error, est.max_rel_error_fitted,
               est.ratio_spread);
  return kExitOk;
}

struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<PrimeFieldElement> symbols(const PrimeField& gf, std::initializer_list<int> v) {
  std::vector<PrimeFieldElement> out;
  for (int x : v) out.push_back(gf(x));
  return out;
}

std::vector<std::vector<std::uint32_t>> cosets_as_sets(const CosetTable& t) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto c : t.cosets()) {
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

bool has_coset(const CosetTable& t, std::vector<std::uint32_t> c) {
  std::sort(c.begin(), c.end());
  const auto all = cosets_as_sets(t);
  return std::find(all.begin(), all.end(), c) != all.end();
}

int cmd_selftest() {
  const auto p5 = SystemParams::make(5, 1, 4);
  const ExtField& f5 = p5.field();
  const PrimeField gf5(5);
  auto gi = [&](int a, int b) { return GaloisInt::of(f5, a, b); };
  const std::vector<GaloisInt> example{gi(2, 0), gi(3, 4), gi(3, 0), gi(3, 1)};

  const std::vector<Check> checks{
      {"order of 2 in GF(5) is 4", [&] { return mult_order(gf5(2)) == 4; }},
      {"root of order 4 in GF(5) is 2", [&] { return find_root_of_unity(5, 1, 4).coeff(0) == 2; }},
      {"sqrt(-1) in GF(5) is 2", [&] { return sqrt_of_minus_one(5, 1)->coeff(0) == 2; }},
      {"cas_1(1) = 3j", [&] { return cas(1, 1, p5) == gi(0, 3); }},
      {"cas_1(2) = 4, cas_3(3) = 3j", [&] { return cas(1, 2, p5) == gi(4, 0) && cas(3, 3, p5) == gi(0, 3); }},
      {"carrier 1 = {1, 3j, 4, 2j}",
       [&] { return carrier(1, p5).samples == std::vector<GaloisInt>{gi(1, 0), gi(0, 3), gi(4, 0), gi(0, 2)}; }},
      {"carrier 2 = {1, 4, 1, 4}",
       [&] { return carrier(2, p5).samples == std::vector<GaloisInt>{gi(1, 0), gi(4, 0), gi(1, 0), gi(4, 0)}; }},
      {"cas table over GI(5)",
       [&] {
         const auto m = carrier_matrix(p5);
         const std::vector<std::vector<GaloisInt>> t{{gi(1, 0), gi(1, 0), gi(1, 0), gi(1, 0)},
                                                     {gi(1, 0), gi(0, 3), gi(4, 0), gi(0, 2)},
                                                     {gi(1, 0), gi(4, 0), gi(1, 0), gi(4, 0)},
                                                     {gi(1, 0), gi(0, 2), gi(4, 0), gi(0, 3)}};
         for (std::uint32_t i = 0; i < 4; ++i)
           if (m.row(i).samples != t[i]) return false;
         return true;
       }},
      {"Walsh row 1 = {1,1,-1,-1}",
       [&] { return rationalize_walsh(carrier_matrix(p5))[1] == std::vector<int>{1, 1, -1, -1}; }},
      {"Walsh matrix is a row permutation of H4",
       [&] {
         const std::vector<std::vector<int>> h4{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
         const auto w = rationalize_walsh(carrier_matrix(p5));
         return std::is_permutation(w.begin(), w.end(), h4.begin(), h4.end());
       }},
      {"carriers orthogonal with equal energy", [&] { return carrier_matrix(p5).check_orthogonality().ok(); }},
      {"FFHT{4,0,1,2} = (2, 3+4j, 3, 3+j)",
       [&] { return Transformer(p5).ffht_forward(symbols(gf5, {4, 0, 1, 2})).values == example; }},
      {"inverse FFHT of (2, 3+4j, 3, 3+j) = {4,0,1,2}",
       [&] {
         return Transformer(p5).ffht_inverse(SpectrumBlock{example, TransformKind::kHartley}).v ==
                symbols(gf5, {4, 0, 1, 2});
       }},
      {"Fourier cosets of 26 over 3: 10, C1, C2, C13",
       [&] {
         const auto t = fourier_cosets(26, 3);
         return t.nu() == 10 && has_coset(t, {1, 3, 9}) && has_coset(t, {2, 6, 18}) && has_coset(t, {13});
       }},
      {"Hartley cosets of 26 over 3: 6, C1, C4, C13",
       [&] {
         const auto t = hartley_cosets(26, 3);
         return t.nu() == 6 && has_coset(t, {1, 23, 9, 25, 3, 17}) && has_coset(t, {4, 14, 10, 22, 12, 16}) &&
                has_coset(t, {13});
       }},
      {"nu_G(3,3) = 10", [&] { return nu_g_formula(3, 3) == 10; }},
      {"nu_H(10,26) = 6", [&] { return nu_h_formula(10, 26) == 6; }},
      {"(5,1,4) Hartley frame = (2, 3+4j, 3)",
       [&] {
         const Multiplexer mux(p5);
         return mux.mux(symbols(gf5, {4, 0, 1, 2})).leaders == std::vector<GaloisInt>{gi(2, 0), gi(3, 4), gi(3, 0)};
       }},
      {"(3,3,26) Hartley frame length 6",
       [&] {
         const Multiplexer mux(SystemParams::make(3, 3, 26));
         return mux.mux(std::vector<PrimeFieldElement>(26, PrimeField(3)(1))).leaders.size() == 6;
       }},
      {"demux(mux{4,0,1,2}) = {4,0,1,2}",
       [&] {
         const Multiplexer mux(p5);
         const auto v = symbols(gf5, {4, 0, 1, 2});
         return mux.demux(deserialize(serialize(mux.mux(v)), mux)).v == v;
       }},
      {"uniform symbols have zero mean",
       [&] {
         statsim::SymbolSource src(5, 0);
         constexpr int kDraws = 1000000;
         double sum = 0;
         for (int i = 0; i < kDraws; ++i) sum += src.next();
         return std::abs(sum / kDraws) <= 3 * std::sqrt(2.0) / std::sqrt(double{kDraws});
       }},
      {"no gain without alphabet extension",
       [&] { return metrics(5, 4, TransformKind::kFourier).gamma_cc == Rational(1); }},
  };
  int failed = 0;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "  (" << e.what() << ")\n";
    }
    failed += !ok;
    std::cout << (ok ? "ok    " : "FAIL  ") << c.name << "\n";
  }
  std::cout << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois-division multiplexing over finite-field transforms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_system = [&cfg](CLI::App* sub, bool with_m = true) {
    sub->add_option("-p", cfg.p, "odd prime p <= 251")->required();
    if (with_m) sub->add_option("-m", cfg.m, "extension degree")->capture_default_str();
    sub->add_option("-N", cfg.n, "block length, N | p^m - 1")->required();
    sub->add_option("--kind", cfg.kind, "transform kind")
        ->check(CLI::IsMember({"fourier", "hartley"}))
        ->capture_default_str();
    if (with_m) sub->add_option("--poly", cfg.poly, "reduction polynomial, m coefficients, constant term first");
  };

  auto* design = app.add_subcommand("design", "efficiency and capacity figures for one system");
  add_system(design);
  auto* cosets = app.add_subcommand("cosets", "cyclotomic coset table");
  add_system(cosets, false);
  cosets->add_option("-m", cfg.m, "ignored; cosets depend on p and N only");
  auto* carriers = app.add_subcommand("carriers", "cas carrier matrix");
  add_system(carriers);
  carriers->remove_option(carriers->get_option("--kind"));

  auto* mux = app.add_subcommand("mux", "symbol text stream to GDM1 frames");
  add_system(mux);
  auto* demux = app.add_subcommand("demux", "GDM1 frames to symbol text stream");
  demux->add_option("-p", cfg.p, "expected p (default: taken from each frame)");
  demux->add_option("-m", cfg.m, "expected extension degree");
  demux->add_option("-N", cfg.n, "expected block length");
  demux->add_option("--kind", cfg.kind, "expected transform kind")->check(CLI::IsMember({"fourier", "hartley"}));
  demux->add_option("--poly", cfg.poly, "expected reduction polynomial");
  for (auto* sub : {mux, demux}) {
    sub->add_option("--in", cfg.in, "input file (default stdin)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  }

  auto* crosstalk = app.add_subcommand("crosstalk", "probe leakage between channels");
  add_system(crosstalk);
  crosstalk->add_option("--user", cfg.user, "active user (default: every user in turn)");
  crosstalk->add_option("--trials", cfg.trials, "blocks per user")->capture_default_str();
  crosstalk->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

  auto* psd = app.add_subcommand("psd", "averaged periodogram (or Galois-domain ACF) as CSV");
  add_system(psd);
  psd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  psd->add_option("--frames", cfg.frames, "frames per realization")->capture_default_str();
  psd->add_option("--realizations", cfg.realizations, "independent realizations")->capture_default_str();
  psd->add_option("--nfft", cfg.nfft, "Welch segment length")->capture_default_str();
  psd->add_option("--samples-per-symbol", cfg.samples_per_symbol, "oversampling factor")->capture_default_str();
  psd->add_option("--pulse", cfg.pulse, "pulse shape")->check(CLI::IsMember({"rect", "rc"}))->capture_default_str();
  psd->add_option("--beta", cfg.beta, "raised-cosine roll-off")->capture_default_str();
  psd->add_option("--symbol-duration", cfg.symbol_duration, "seconds per transmitted coefficient")
      ->capture_default_str();
  psd->add_flag("--acf", cfg.acf, "emit lag,acf_re,acf_im,stderr of the Galois-domain sequence instead");
  psd->add_option("--lags", cfg.lags, "largest ACF lag")->capture_default_str();
  psd->add_option("--out", cfg.out, "output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "check the published golden values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (design->parsed()) return cmd_design(cfg);
    if (cosets->parsed()) return cmd_cosets(cfg);
    if (carriers->parsed()) return cmd_carriers(cfg);
    if (mux->parsed()) return cmd_mux(cfg);
    if (demux->parsed()) {
      const bool given = demux->count("-p") || demux->count("-N");
      if (given && (cfg.p == 0 || cfg.n == 0)) throw UsageError("demux needs both -p and -N, or neither");
      if (!given && (demux->count("-m") || demux->count("--kind") || demux->count("--poly")))
        throw UsageError("demux -m/--kind/--poly need -p and -N");
      return cmd_demux(cfg, given);
    }
    if (crosstalk->parsed()) return cmd_crosstalk(cfg);
    if (psd->parsed()) return cmd_psd(cfg);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const UsageError& e) {
    std::cerr << "gdm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "gdm: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "gdm: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
