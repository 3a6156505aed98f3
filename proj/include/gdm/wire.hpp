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
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdm/error.hpp"
#include "gdm/ext_field.hpp"
#include "gdm/pipeline.hpp"

// Frame wire format, little-endian:
//
//   offset  size  field
//   0       4     magic "GDM1" (47 44 4D 31)
//   4       2     p
//   6       1     m
//   7       2     N
//   9       1     kind (0 = Fourier, 1 = Hartley)
//   10      m     reduction polynomial, constant term first, leading 1 omitted
//   10+m    2     nu
//   12+m    2m*nu leader values: m re coefficients (low first) then m im coefficients

namespace gdm {

inline constexpr std::uint8_t kFrameMagic[4] = {0x47, 0x44, 0x4D, 0x31};

namespace detail {

inline void put_u16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

inline std::uint32_t get_u16(std::span<const std::uint8_t> in, std::size_t at) {
  return std::uint32_t{in[at]} | (std::uint32_t{in[at + 1]} << 8);
}

}  // namespace detail

inline std::size_t frame_size(std::uint32_t m, std::uint32_t nu) { return 12 + m + 2 * std::size_t{m} * nu; }

inline std::vector<std::uint8_t> serialize(const CompressedFrame& frame) {
  const auto& fp = frame.params;
  std::vector<std::uint8_t> out;
  out.reserve(frame_size(fp.m, static_cast<std::uint32_t>(frame.leaders.size())));
  for (std::uint8_t b : kFrameMagic) out.push_back(b);
  detail::put_u16(out, fp.p);
  out.push_back(static_cast<std::uint8_t>(fp.m));
  detail::put_u16(out, fp.n);
  out.push_back(static_cast<std::uint8_t>(fp.kind));
  for (auto c : fp.poly) out.push_back(static_cast<std::uint8_t>(c));
  detail::put_u16(out, static_cast<std::uint32_t>(frame.leaders.size()));
  for (const auto& z : frame.leaders) {
    for (std::uint32_t k = 0; k < fp.m; ++k) out.push_back(static_cast<std::uint8_t>(z.re().coeff(k)));
    for (std::uint32_t k = 0; k < fp.m; ++k) out.push_back(static_cast<std::uint8_t>(z.im().coeff(k)));
  }
  return out;
}

struct DecodedFrame {
  CompressedFrame frame;
  std::size_t size;  // bytes consumed
};

/// Decodes the frame at the start of `bytes`, which may continue with further frames.
inline DecodedFrame decode_prefix(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kFrameMagic), std::end(kFrameMagic), bytes.begin()))
    throw Error(Errc::kBadMagic, "missing GDM1 magic");
  if (bytes.size() < 10) throw Error(Errc::kBadLength, "truncated frame header");
  ParamsFingerprint fp;
  fp.p = detail::get_u16(bytes, 4);
  fp.m = bytes[6];
  fp.n = detail::get_u16(bytes, 7);
  const std::uint8_t kind = bytes[9];
  if (kind > 1) throw Error(Errc::kParamMismatch, "unknown transform kind " + std::to_string(kind));
  fp.kind = static_cast<TransformKind>(kind);
  if (fp.m == 0 || fp.m > kMaxDegree) throw Error(Errc::kParamMismatch, "extension degree out of range");
  if (bytes.size() < 12 + std::size_t{fp.m}) throw Error(Errc::kBadLength, "truncated frame header");
  fp.poly.assign(bytes.begin() + 10, bytes.begin() + 10 + fp.m);
  const std::uint32_t nu = detail::get_u16(bytes, 10 + fp.m);
  if (bytes.size() < frame_size(fp.m, nu)) throw Error(Errc::kBadLength, "truncated frame payload");

  const ExtField* field = nullptr;
  try {
    field = &ExtField::get(fp.p, fp.m, fp.poly);
  } catch (const Error& e) {
    throw Error(Errc::kParamMismatch, e.what());
  }
  if (fp.n == 0 || (field->q() - 1) % fp.n != 0 || nu == 0 || nu > fp.n)
    throw Error(Errc::kParamMismatch, "N or nu inconsistent with GF(p^m)");

  CompressedFrame frame{fp, {}};
  frame.leaders.reserve(nu);
  std::size_t at = 12 + fp.m;
  std::vector<std::uint32_t> re(fp.m), im(fp.m);
  for (std::uint32_t c = 0; c < nu; ++c) {
    for (std::uint32_t k = 0; k < fp.m; ++k) re[k] = bytes[at++];
    for (std::uint32_t k = 0; k < fp.m; ++k) im[k] = bytes[at++];
    for (std::uint32_t k = 0; k < fp.m; ++k)
      if (re[k] >= fp.p || im[k] >= fp.p) throw Error(Errc::kParamMismatch, "coefficient outside GF(p)");
    frame.leaders.emplace_back(field->from_coeffs(re), field->from_coeffs(im));
  }
  return {std::move(frame), at};
}

/// Decodes exactly one frame; trailing bytes are a length error.
inline CompressedFrame deserialize(std::span<const std::uint8_t> bytes) {
  DecodedFrame d = decode_prefix(bytes);
  if (d.size != bytes.size()) throw Error(Errc::kBadLength, "trailing bytes after frame");
  return std::move(d.frame);
}

/// Decodes one frame and checks it belongs to `mux`.
inline CompressedFrame deserialize(std::span<const std::uint8_t> bytes, const Multiplexer& mux) {
  CompressedFrame frame = deserialize(bytes);
  if (!(frame.params == mux.fingerprint())) throw Error(Errc::kParamMismatch, "frame header does not match system");
  if (frame.leaders.size() != mux.nu()) throw Error(Errc::kParamMismatch, "frame nu does not match coset count");
  return frame;
}

/// One line of the symbol stream: N integers in [0, p) separated by spaces.
inline TimeBlock parse_symbol_line(std::string_view line, const PrimeField& gf, std::uint32_t n) {
  TimeBlock block;
  block.v.reserve(n);
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw Error(Errc::kParseError, "not a non-negative integer near column " + std::to_string(pos + 1));
    if (value >= gf.p())
      throw Error(Errc::kParseError, "symbol " + std::to_string(value) + " outside [0, " + std::to_string(gf.p()) + ")");
    block.v.push_back(gf(value));
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (block.v.size() != n)
    throw Error(Errc::kParseError, "expected " + std::to_string(n) + " symbols, got " + std::to_string(block.v.size()));
  return block;
}

inline std::string format_symbol_line(const TimeBlock& block) {
  std::string out;
  for (std::size_t i = 0; i < block.v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(block.v[i].value());
  }
  return out;
}

}  // namespace gdm
