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
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gdm/error.hpp"
#include "gdm/ext_field.hpp"
#include "gdm/transforms.hpp"

namespace gdm {

/// Partition of {0..N-1} into orbits of k -> pk (Fourier) or k -> -pk (Hartley).
/// Each orbit is stored in walk order starting at its leader (its minimum); orbits are
/// sorted by leader.
class CosetTable {
 public:
  CosetTable(TransformKind kind, std::uint32_t n, std::uint32_t p) : kind_(kind), n_(n), p_(p) {
    if (n == 0) throw Error(Errc::kInvalidParams, "N must be positive");
    if (std::gcd(n, p) != 1)
      throw Error(Errc::kNotCoprime, "gcd(N=" + std::to_string(n) + ", p=" + std::to_string(p) + ") != 1");
    owner_.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::uint32_t leader = 0; leader < n; ++leader) {
      if (seen[leader]) continue;
      std::vector<std::uint32_t> orbit;
      for (std::uint32_t k = leader; !seen[k]; k = conjugate_index(kind, k, p, n)) {
        seen[k] = true;
        owner_[k] = static_cast<std::uint32_t>(cosets_.size());
        orbit.push_back(k);
      }
      leaders_.push_back(leader);
      cosets_.push_back(std::move(orbit));
    }
  }

  TransformKind kind() const { return kind_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  /// Number of orbits; the count of coefficients transmitted per frame.
  std::uint32_t nu() const { return static_cast<std::uint32_t>(cosets_.size()); }
  const std::vector<std::vector<std::uint32_t>>& cosets() const { return cosets_; }
  const std::vector<std::uint32_t>& leaders() const { return leaders_; }
  /// Position (in leader order) of the orbit containing k.
  std::uint32_t coset_of(std::uint32_t k) const { return owner_.at(k); }

  /// One line per coset, e.g. "C1=(1,23,9,25,3,17)".
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& orbit : cosets_) {
      os << 'C' << orbit.front() << "=(";
      for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? "," : "") << orbit[i];
      os << ")\n";
    }
    return os.str();
  }

 private:
  TransformKind kind_;
  std::uint32_t n_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> cosets_;
  std::vector<std::uint32_t> leaders_;
  std::vector<std::uint32_t> owner_;
};

inline CosetTable fourier_cosets(std::uint32_t n, std::uint32_t p) { return CosetTable(TransformKind::kFourier, n, p); }
inline CosetTable hartley_cosets(std::uint32_t n, std::uint32_t p) { return CosetTable(TransformKind::kHartley, n, p); }

/// Moebius function.
inline int moebius(std::uint64_t n) {
  if (n == 0) throw Error(Errc::kInvalidParams, "moebius(0) is undefined");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

/// Number of monic irreducible polynomials of degree k over GF(q):
/// I_k(q) = (1/k) sum_{d | k} mu(d) q^{k/d}.
inline std::int64_t count_irreducibles(std::uint32_t k, std::uint64_t q) {
  if (k == 0) throw Error(Errc::kInvalidParams, "degree must be positive");
  std::int64_t sum = 0;
  for (std::uint32_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    sum += moebius(d) * static_cast<std::int64_t>(detail::checked_pow(q, k / d));
  }
  return sum / k;
}

/// Number of Fourier cosets for N = p^m - 1: sum over d | m of I_d(p), minus one for the
/// polynomial x (whose root 0 is not an N-th root of unity).
inline std::int64_t nu_g_formula(std::uint32_t p, std::uint32_t m) {
  std::int64_t sum = 0;
  for (std::uint32_t d = 1; d <= m; ++d)
    if (m % d == 0) sum += count_irreducibles(d, p);
  return sum - 1;
}

/// Reciprocal-pair clustering estimate of the Hartley count: (nu_G + (N mod 2)) / 2 + 1.
/// Integer division; brute force stays authoritative.
inline std::int64_t nu_h_formula(std::int64_t nu_g, std::uint32_t n) { return (nu_g + n % 2) / 2 + 1; }

/// Rule-of-thumb counts for N = p^m - 1: (ceil(N/m), ceil(ceil(N/m)/2 + 1)).
inline std::pair<std::int64_t, std::int64_t> approx_nu(std::uint32_t n, std::uint32_t m) {
  const std::int64_t g = (n + m - 1) / m;
  // ceil(g/2 + 1) = ceil(g/2) + 1
  return {g, (g + 1) / 2 + 1};
}

}  // namespace gdm
