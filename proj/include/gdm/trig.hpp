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
#include <vector>

#include "gdm/error.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/roots.hpp"

namespace gdm {

/// Finite-field cos, sin and cas built on powers of zeta:
///   cos_i(k) = (zeta^{ik} + zeta^{-ik}) / 2
///   sin_i(k) = (zeta^{ik} - zeta^{-ik}) / (2j)
///   cas_i(k) = cos_i(k) + sin_i(k)
/// All three depend only on e = ik mod N, so they are tabulated by exponent.
class TrigTable {
 public:
  explicit TrigTable(const SystemParams& params) : params_(params) {
    const ExtField& f = params.field();
    const GaloisInt half = GaloisInt(f.constant(2)).inv();
    const GaloisInt inv_2j = GaloisInt(f.zero(), f.constant(2)).inv();
    const std::uint32_t n = params.n();
    cos_.reserve(n);
    sin_.reserve(n);
    cas_.reserve(n);
    for (std::uint32_t e = 0; e < n; ++e) {
      const GaloisInt up(params.zeta_pow(e));
      const GaloisInt down(params.zeta_pow(-static_cast<std::int64_t>(e)));
      cos_.push_back((up + down) * half);
      sin_.push_back((up - down) * inv_2j);
      cas_.push_back(cos_.back() + sin_.back());
    }
  }

  const SystemParams& params() const { return params_; }
  std::uint32_t n() const { return params_.n(); }

  const GaloisInt& cos(std::uint64_t i, std::uint64_t k) const { return cos_[i * k % n()]; }
  const GaloisInt& sin(std::uint64_t i, std::uint64_t k) const { return sin_[i * k % n()]; }
  const GaloisInt& cas(std::uint64_t i, std::uint64_t k) const { return cas_[i * k % n()]; }
  /// cas by exponent e = ik mod N.
  const GaloisInt& cas_exp(std::uint64_t e) const { return cas_[e % n()]; }

 private:
  SystemParams params_;
  std::vector<GaloisInt> cos_;
  std::vector<GaloisInt> sin_;
  std::vector<GaloisInt> cas_;
};

inline GaloisInt cas(std::uint32_t i, std::uint32_t k, const SystemParams& params) {
  if (i >= params.n() || k >= params.n()) throw Error(Errc::kInvalidParams, "cas index out of range");
  return TrigTable(params).cas(i, k);
}

/// Spreading sequence of user i: samples[k] = cas_i(k).
struct Carrier {
  std::uint32_t index;
  std::vector<GaloisInt> samples;
};

inline Carrier carrier(std::uint32_t i, const TrigTable& trig) {
  if (i >= trig.n()) throw Error(Errc::kInvalidParams, "carrier index out of range");
  Carrier c{i, {}};
  c.samples.reserve(trig.n());
  for (std::uint32_t k = 0; k < trig.n(); ++k) c.samples.push_back(trig.cas(i, k));
  return c;
}

inline Carrier carrier(std::uint32_t i, const SystemParams& params) { return carrier(i, TrigTable(params)); }

/// Sum_k x_k * conj(y_k).
inline GaloisInt inner_product(std::span<const GaloisInt> x, std::span<const GaloisInt> y) {
  if (x.size() != y.size()) throw Error(Errc::kLengthMismatch, "inner product of unequal lengths");
  if (x.empty()) throw Error(Errc::kLengthMismatch, "inner product of empty vectors");
  GaloisInt acc = GaloisInt::zero(x.front().field());
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * conj(y[k]);
  return acc;
}

/// Sum_k x_k * y_k. The cas kernel satisfies dot(carrier i, carrier i') = N [i == i'].
inline GaloisInt dot(std::span<const GaloisInt> x, std::span<const GaloisInt> y) {
  if (x.size() != y.size()) throw Error(Errc::kLengthMismatch, "dot product of unequal lengths");
  if (x.empty()) throw Error(Errc::kLengthMismatch, "dot product of empty vectors");
  GaloisInt acc = GaloisInt::zero(x.front().field());
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
  return acc;
}

struct OrthogonalityReport {
  bool rows_orthogonal = true;
  bool columns_orthogonal = true;
  bool equal_energy = true;
  bool symmetric = true;
  /// Common value of dot(row, row); N when the matrix is well formed.
  std::string energy;
  bool ok() const { return rows_orthogonal && columns_orthogonal && equal_energy && symmetric; }
};

class CarrierMatrix {
 public:
  explicit CarrierMatrix(const SystemParams& params) : params_(params) {
    const TrigTable trig(params);
    rows_.reserve(params.n());
    for (std::uint32_t i = 0; i < params.n(); ++i) rows_.push_back(carrier(i, trig));
  }

  const SystemParams& params() const { return params_; }
  std::uint32_t n() const { return params_.n(); }
  const Carrier& row(std::uint32_t i) const { return rows_.at(i); }
  const std::vector<Carrier>& rows() const { return rows_; }
  const GaloisInt& at(std::uint32_t i, std::uint32_t k) const { return rows_.at(i).samples.at(k); }

  std::vector<GaloisInt> column(std::uint32_t k) const {
    std::vector<GaloisInt> col;
    col.reserve(n());
    for (const auto& r : rows_) col.push_back(r.samples.at(k));
    return col;
  }

  /// Orthogonality, equal energy and symmetry under the bilinear pairing.
  OrthogonalityReport check_orthogonality() const {
    OrthogonalityReport rep;
    const GaloisInt zero = GaloisInt::zero(params_.field());
    const GaloisInt energy = dot(rows_[0].samples, rows_[0].samples);
    rep.energy = energy.to_string();
    for (std::uint32_t i = 0; i < n(); ++i) {
      const auto col_i = column(i);
      for (std::uint32_t k = 0; k < n(); ++k) {
        if (at(i, k) != at(k, i)) rep.symmetric = false;
        if (k < i) continue;
        const GaloisInt r = dot(rows_[i].samples, rows_[k].samples);
        const GaloisInt c = dot(col_i, column(k));
        if (k == i) {
          if (r != energy || c != energy) rep.equal_energy = false;
        } else {
          if (r != zero) rep.rows_orthogonal = false;
          if (c != zero) rep.columns_orthogonal = false;
        }
      }
    }
    if (energy.is_zero()) rep.equal_energy = false;
    return rep;
  }

 private:
  SystemParams params_;
  std::vector<Carrier> rows_;
};

inline CarrierMatrix carrier_matrix(const SystemParams& params) { return CarrierMatrix(params); }

/// Substitutes j := sqrt(-1) in GF(q) and maps each entry to its centered GF(p) representative.
/// Only meaningful for m = 1, where every substituted entry lands in GF(p).
inline std::vector<std::vector<int>> rationalize_walsh(const CarrierMatrix& matrix) {
  const ExtField& f = matrix.params().field();
  const auto root = sqrt_of_minus_one(f);
  if (!root) throw Error(Errc::kNoRationalization, "-1 is a non-residue in " + f.describe());
  std::vector<std::vector<int>> out;
  out.reserve(matrix.n());
  for (const auto& row : matrix.rows()) {
    std::vector<int> r;
    r.reserve(row.samples.size());
    for (const auto& z : row.samples) {
      const ExtFieldElement value = z.re() + z.im() * *root;
      if (!value.in_ground_field())
        throw Error(Errc::kNoRationalization, "rationalised entry " + value.to_string() + " is not in GF(p)");
      r.push_back(value.ground_value().centered());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gdm
