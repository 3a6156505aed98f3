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

#include <gtest/gtest.h>

#include "gdm/pipeline.hpp"
#include "gdm/trig.hpp"
#include "oracle.hpp"

namespace gdm {
namespace {

TEST(TrigTest, CasTableForGf5) {
  const auto params = SystemParams::make(5, 1, 4);
  const TrigTable trig(params);
  const ExtField& f = params.field();
  EXPECT_EQ(trig.cas_exp(0), GaloisInt::of(f, 1));
  EXPECT_EQ(trig.cas_exp(1), GaloisInt::of(f, 0, 3));
  EXPECT_EQ(trig.cas_exp(2), GaloisInt::of(f, 4));
  EXPECT_EQ(trig.cas_exp(3), GaloisInt::of(f, 0, 2));
  EXPECT_EQ(trig.cos(1, 1), GaloisInt::of(f, 0));
  EXPECT_EQ(trig.sin(1, 1), GaloisInt::of(f, 0, 3));
  EXPECT_EQ(cas(3, 3, params), GaloisInt::of(f, 0, 3));
  EXPECT_THROW((void)cas(4, 0, params), Error);
}

TEST(TrigTest, RationalisedMatrixIsWalsh) {
  const auto matrix = carrier_matrix(SystemParams::make(5, 1, 4));
  const std::vector<std::vector<int>> expect{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  EXPECT_EQ(rationalize_walsh(matrix), expect);
}

TEST(TrigTest, RationalisationNeedsSquareRootOfMinusOne) {
  try {
    (void)rationalize_walsh(carrier_matrix(SystemParams::make(7, 1, 6)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoRationalization);
  }
}

TEST(TrigTest, MatchesOracleOnGf27) {
  const auto params = SystemParams::make(3, 3, 26);
  const TrigTable trig(params);
  const oracle::Field o{3, 3, {1, 2, 0}};
  const oracle::Poly zeta{0, 1, 0};
  for (std::uint32_t e = 0; e < 26; ++e) {
    const auto [re, im] = oracle::cas(o, zeta, 26, e);
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(static_cast<int>(trig.cas_exp(e).re().coeff(k)), re[k]);
      EXPECT_EQ(static_cast<int>(trig.cas_exp(e).im().coeff(k)), im[k]);
    }
  }
}

TEST(TrigTest, CarrierIdentities) {
  const auto params = SystemParams::make(7, 2, 48);
  const TrigTable trig(params);
  for (std::uint32_t i = 0; i < 48; ++i)
    for (std::uint32_t k = 0; k < 48; ++k) {
      EXPECT_EQ(trig.cas(i, k), trig.cas(k, i));
      // cas_{-i}(k) = conj(cas_i(k)) and cos^2 + sin^2 = 1
      EXPECT_EQ(trig.cas((48 - i) % 48, k), conj(trig.cas(i, k)));
      const GaloisInt c = trig.cos(i, k), s = trig.sin(i, k);
      EXPECT_EQ(c * c + s * s, GaloisInt::one(params.field()));
    }
}

TEST(TrigTest, BilinearOrthogonalityExhaustive) {
  // Every odd q <= 1000 and every N | q - 1. Small matrices are checked pairwise, larger ones
  // through the inverse transform of each column.
  int checked = 0;
  for (auto [p, m] : oracle::prime_powers(1000)) {
    const ExtField& f = ExtField::get(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    for (int n : oracle::divisors(static_cast<long long>(f.q() - 1))) {
      const auto params = SystemParams::make(f.p(), f.m(), static_cast<std::uint32_t>(n));
      if (n <= 64) {
        const auto rep = carrier_matrix(params).check_orthogonality();
        ASSERT_TRUE(rep.ok()) << f.describe() << " N=" << n;
        EXPECT_EQ(rep.energy, GaloisInt::of(f, n).to_string());
      } else {
        const Transformer t(params);
        std::vector<GaloisInt> col;
        for (std::uint32_t i : {0u, 1u, static_cast<std::uint32_t>(n) / 2, static_cast<std::uint32_t>(n) - 1}) {
          SpectrumBlock s{{}, TransformKind::kHartley};
          for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k) s.values.push_back(t.trig().cas(k, i));
          const auto back = t.fast_inverse_raw(s);
          for (std::uint32_t k = 0; k < static_cast<std::uint32_t>(n); ++k)
            ASSERT_EQ(back[k], k == i ? GaloisInt::one(f) : GaloisInt::zero(f)) << f.describe() << " N=" << n;
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(TrigTest, HermitianPairingPicksTheNegatedIndex) {
  for (auto [p, m, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{{5, 1, 4}, {3, 3, 26}, {7, 2, 16}}) {
    const auto params = SystemParams::make(p, m, n);
    const auto matrix = carrier_matrix(params);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t i2 = 0; i2 < n; ++i2) {
        const GaloisInt h = inner_product(matrix.row(i).samples, matrix.row(i2).samples);
        EXPECT_EQ(h, (i + i2) % n == 0 ? GaloisInt::of(params.field(), n) : GaloisInt::zero(params.field()));
      }
  }
}

TEST(TrigTest, LengthErrors) {
  const auto matrix = carrier_matrix(SystemParams::make(5, 1, 4));
  const std::vector<GaloisInt> short_row(matrix.row(0).samples.begin(), matrix.row(0).samples.begin() + 2);
  try {
    (void)inner_product(matrix.row(0).samples, short_row);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kLengthMismatch);
  }
  EXPECT_THROW((void)dot(std::vector<GaloisInt>{}, std::vector<GaloisInt>{}), Error);
}

}  // namespace
}  // namespace gdm
