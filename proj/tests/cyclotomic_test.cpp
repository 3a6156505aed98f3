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

#include <algorithm>
#include <set>

#include "gdm/cyclotomic.hpp"
#include "oracle.hpp"

namespace gdm {
namespace {

std::set<std::set<int>> as_sets(const CosetTable& t) {
  std::set<std::set<int>> out;
  for (const auto& c : t.cosets()) out.insert(std::set<int>(c.begin(), c.end()));
  return out;
}

TEST(CyclotomicTest, GfFiveLengthFour) {
  EXPECT_EQ(fourier_cosets(4, 5).nu(), 4u);
  const auto h = hartley_cosets(4, 5);
  EXPECT_EQ(h.nu(), 3u);
  EXPECT_EQ(h.cosets(), (std::vector<std::vector<std::uint32_t>>{{0}, {1, 3}, {2}}));
  EXPECT_EQ(h.leaders(), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(CyclotomicTest, FourierCosetsOfTwentySixOverThree) {
  const auto f = fourier_cosets(26, 3);
  const std::vector<std::vector<std::uint32_t>> expect{{0},          {1, 3, 9},    {2, 6, 18},  {4, 12, 10},
                                                       {5, 15, 19},  {7, 21, 11},  {8, 24, 20}, {13},
                                                       {14, 16, 22}, {17, 25, 23}};
  EXPECT_EQ(f.cosets(), expect);
  EXPECT_EQ(f.nu(), 10u);
}

TEST(CyclotomicTest, HartleyCosetsOfTwentySixOverThree) {
  const auto h = hartley_cosets(26, 3);
  const std::vector<std::vector<std::uint32_t>> expect{
      {0}, {1, 23, 9, 25, 3, 17}, {2, 20, 18, 24, 6, 8}, {4, 14, 10, 22, 12, 16}, {5, 11, 19, 21, 15, 7}, {13}};
  EXPECT_EQ(h.cosets(), expect);
  EXPECT_EQ(h.to_string(), "C0=(0)\nC1=(1,23,9,25,3,17)\nC2=(2,20,18,24,6,8)\nC4=(4,14,10,22,12,16)\n"
                           "C5=(5,11,19,21,15,7)\nC13=(13)\n");
  // Same membership regardless of the order the elements are listed in.
  const std::set<int> c2{2, 6, 18, 8, 24, 20};
  EXPECT_TRUE(as_sets(h).count(c2));
  EXPECT_EQ(h.coset_of(24), 2u);
}

TEST(CyclotomicTest, CountsForGf49) {
  EXPECT_EQ(fourier_cosets(48, 7).nu(), 27u);
  EXPECT_EQ(hartley_cosets(48, 7).nu(), 28u);
}

TEST(CyclotomicTest, PartitionMatchesOracle) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t n = 1; n <= 200; ++n) {
      if (n % p == 0) continue;
      const auto f = fourier_cosets(n, p);
      const auto h = hartley_cosets(n, p);
      EXPECT_EQ(as_sets(f), oracle::orbits(static_cast<int>(n), static_cast<int>(p)));
      // The Hartley orbit of k is generated by -p and lies inside the Fourier orbits of k and -k.
      EXPECT_EQ(as_sets(h), oracle::orbits(static_cast<int>(n), static_cast<int>(n - p % n)));
      std::vector<int> hits(n, 0);
      for (const auto& c : h.cosets()) {
        EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
        for (auto k : c) ++hits[k];
        const std::uint32_t k = c.front();
        for (auto x : c) EXPECT_TRUE(f.coset_of(x) == f.coset_of(k) || f.coset_of(x) == f.coset_of((n - k) % n));
      }
      for (int x : hits) EXPECT_EQ(x, 1);
    }
  }
}

TEST(CyclotomicTest, FourierCountFormula) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t m = 1; m <= 4; ++m) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < m; ++i) q *= p;
      if (q > 3000) continue;
      const auto n = static_cast<std::uint32_t>(q - 1);
      EXPECT_EQ(nu_g_formula(p, m), static_cast<std::int64_t>(fourier_cosets(n, p).nu())) << p << "^" << m;
    }
}

TEST(CyclotomicTest, HartleyEstimateMatchesForGf27) {
  EXPECT_EQ(nu_g_formula(3, 3), 10);
  EXPECT_EQ(nu_h_formula(10, 26), 6);
  EXPECT_EQ(approx_nu(26, 3), std::make_pair(std::int64_t{9}, std::int64_t{6}));
}

TEST(CyclotomicTest, IrreducibleCounts) {
  EXPECT_EQ(count_irreducibles(1, 3), 3);
  EXPECT_EQ(count_irreducibles(2, 3), 3);
  EXPECT_EQ(count_irreducibles(3, 3), 8);
  EXPECT_EQ(count_irreducibles(4, 2), 3);
  EXPECT_EQ(count_irreducibles(6, 2), 9);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(moebius(30), -1);
}

TEST(CyclotomicTest, RejectsSharedFactor) {
  try {
    (void)fourier_cosets(6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotCoprime);
  }
}

}  // namespace
}  // namespace gdm
