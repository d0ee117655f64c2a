// Copyright 2026 The fastb64 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fastb64/scalar_codec.hpp"

#include <array>
#include <cstring>

#include "detail.hpp"

namespace fastb64 {
namespace {

struct EncodeTables {
  std::array<std::uint8_t, 256> top6{};  // x -> B(x / 4)
  std::array<std::uint8_t, 256> low6{};  // x -> B(x mod 64)
};

constexpr EncodeTables make_encode_tables(Variant variant) {
  const Alphabet a = make_alphabet(variant);
  EncodeTables t;
  for (int x = 0; x < 256; ++x) {
    t.top6[x] = a.forward[x >> 2];
    t.low6[x] = a.forward[x & 0x3F];
  }
  return t;
}

constexpr std::array<EncodeTables, 2> kEncodeTables = {make_encode_tables(Variant::Standard),
                                                       make_encode_tables(Variant::UrlSafe)};

// Decode tables A1..A4: byte 0..2 of the OR are the three output bytes,
// byte 3 is 0xFF if any of the four characters is outside the alphabet.
struct DecodeTables {
  std::array<std::uint32_t, 256> d0{}, d1{}, d2{}, d3{};
};

constexpr std::uint32_t kBadFlag = 0xFF000000u;

constexpr DecodeTables make_decode_tables(Variant variant) {
  const Alphabet a = make_alphabet(variant);
  DecodeTables t;
  for (int c = 0; c < 256; ++c) {
    const std::uint32_t v = a.inverse[c];
    if (v == kInvalid) {
      t.d0[c] = t.d1[c] = t.d2[c] = t.d3[c] = kBadFlag;
      continue;
    }
    t.d0[c] = v << 2;
    t.d1[c] = (v >> 4) | ((v & 0x0F) << 12);
    t.d2[c] = ((v >> 2) << 8) | ((v & 0x03) << 22);
    t.d3[c] = v << 16;
  }
  return t;
}

constexpr std::array<DecodeTables, 2> kDecodeTables = {make_decode_tables(Variant::Standard),
                                                       make_decode_tables(Variant::UrlSafe)};

constexpr std::size_t index_of(Variant v) { return v == Variant::Standard ? 0 : 1; }

DecodeErrorKind classify(std::uint8_t c) {
  return c == kPad ? DecodeErrorKind::InvalidPadding : DecodeErrorKind::InvalidCharacter;
}

}  // namespace

std::size_t encode_scalar(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                          const CodecConfig& config) {
  const std::size_t need = encoded_length(in.size(), config.padding);
  detail::require_capacity(out.size(), need, "encode_scalar");
  const auto& b = alphabet(config.variant).forward;
  const std::size_t n = in.size();
  std::size_t o = 0;
  std::size_t i = 0;
  for (; i + 3 <= n; i += 3) {
    const unsigned s0 = in[i], s1 = in[i + 1], s2 = in[i + 2];
    out[o++] = b[s0 / 4];
    out[o++] = b[((s0 * 16) % 64) + (s1 / 16)];
    out[o++] = b[((s1 * 4) % 64) + (s2 / 64)];
    out[o++] = b[s2 % 64];
  }
  if (i < n) {
    const unsigned s0 = in[i];
    out[o++] = b[s0 / 4];
    if (i == n - 1) {
      out[o++] = b[(s0 * 16) % 64];
      if (config.padding == Padding::Required) out[o++] = kPad;
    } else {
      const unsigned s1 = in[i + 1];
      out[o++] = b[((s0 * 16) % 64) + (s1 / 16)];
      out[o++] = b[(s1 * 4) % 64];
    }
    if (config.padding == Padding::Required) out[o++] = kPad;
  }
  return o;
}

std::size_t encode_scalar_fast(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                               const CodecConfig& config) {
  const std::size_t need = encoded_length(in.size(), config.padding);
  detail::require_capacity(out.size(), need, "encode_scalar_fast");
  const EncodeTables& t = kEncodeTables[index_of(config.variant)];
  const std::uint8_t* src = in.data();
  std::uint8_t* dst = out.data();
  const std::size_t n = in.size();
  std::size_t i = 0;
  for (; i + 3 <= n; i += 3) {
    const std::uint8_t s0 = src[i], s1 = src[i + 1], s2 = src[i + 2];
    const std::uint8_t quad[4] = {t.top6[s0], t.low6[((s0 & 0x03) << 4) | (s1 >> 4)],
                                  t.low6[((s1 & 0x0F) << 2) | (s2 >> 6)], t.low6[s2]};
    std::memcpy(dst, quad, 4);
    dst += 4;
  }
  const std::size_t rest = n - i;
  if (rest != 0) {
    const std::uint8_t s0 = src[i];
    const std::uint8_t s1 = rest == 2 ? src[i + 1] : 0;
    *dst++ = t.top6[s0];
    *dst++ = t.low6[((s0 & 0x03) << 4) | (s1 >> 4)];
    if (rest == 2) *dst++ = t.low6[(s1 & 0x0F) << 2];
    if (config.padding == Padding::Required) {
      *dst++ = kPad;
      if (rest == 1) *dst++ = kPad;
    }
  }
  return static_cast<std::size_t>(dst - out.data());
}

DecodeResult decode_scalar(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                           const CodecConfig& config) {
  const std::size_t n = in.size();
  detail::require_capacity(out.size(), decoded_max_length(n), "decode_scalar");
  const auto& a = alphabet(config.variant).inverse;
  const std::size_t quads_end = n / 4 * 4;
  std::size_t o = 0;

  for (std::size_t i = 0; i < quads_end; i += 4) {
    const bool final_quad = i + 4 == n;
    unsigned v[4];
    int pads = 0;
    for (int j = 0; j < 4; ++j) {
      const std::uint8_t c = in[i + j];
      v[j] = a[c];
      if (v[j] != kInvalid) continue;
      const bool pad_ok =
          c == kPad && final_quad && (j == 3 || (j == 2 && in[i + 3] == kPad));
      if (!pad_ok) return detail::fail(classify(c), i + j, o);
      pads = 4 - j;
      break;
    }
    for (int j = 4 - pads; j < 4; ++j) v[j] = 0;
    out[o++] = static_cast<std::uint8_t>((v[0] * 4) + (v[1] / 16));
    if (pads == 2) break;
    out[o++] = static_cast<std::uint8_t>(((v[1] * 16) % 256) + (v[2] / 4));
    if (pads == 1) break;
    out[o++] = static_cast<std::uint8_t>(((v[2] * 64) % 256) + v[3]);
  }

  const std::size_t rest = n - quads_end;
  if (rest == 0) return DecodeResult{o, std::nullopt};
  if (config.padding == Padding::Required || rest == 1) {
    return detail::fail(DecodeErrorKind::TruncatedInput, quads_end, o);
  }
  unsigned v[3] = {0, 0, 0};
  for (std::size_t j = 0; j < rest; ++j) {
    const std::uint8_t c = in[quads_end + j];
    v[j] = a[c];
    if (v[j] == kInvalid) return detail::fail(classify(c), quads_end + j, o);
  }
  out[o++] = static_cast<std::uint8_t>((v[0] * 4) + (v[1] / 16));
  if (rest == 3) out[o++] = static_cast<std::uint8_t>(((v[1] * 16) % 256) + (v[2] / 4));
  return DecodeResult{o, std::nullopt};
}

DecodeResult decode_scalar_fast(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                                const CodecConfig& config) {
  const std::size_t n = in.size();
  detail::require_capacity(out.size(), decoded_max_length(n), "decode_scalar_fast");
  const DecodeTables& t = kDecodeTables[index_of(config.variant)];
  const auto& a = alphabet(config.variant).inverse;

  // The final quad (possibly padded) and any partial tail are left to the
  // reference decoder.
  const std::size_t quads_end = n / 4 * 4;
  const std::size_t fast_end = (quads_end == n && n != 0) ? n - 4 : quads_end;

  const std::uint8_t* src = in.data();
  std::uint8_t* dst = out.data();
  for (std::size_t i = 0; i < fast_end; i += 4) {
    const std::uint32_t z = t.d0[src[i]] | t.d1[src[i + 1]] | t.d2[src[i + 2]] | t.d3[src[i + 3]];
    if (z & kBadFlag) {
      for (std::size_t j = i;; ++j) {
        if (a[src[j]] == kInvalid) return detail::fail(classify(src[j]), j, i / 4 * 3);
      }
    }
    dst[0] = static_cast<std::uint8_t>(z);
    dst[1] = static_cast<std::uint8_t>(z >> 8);
    dst[2] = static_cast<std::uint8_t>(z >> 16);
    dst += 3;
  }
  const std::size_t o = fast_end / 4 * 3;
  return detail::rebase(decode_scalar(in.subspan(fast_end), out.subspan(o), config), fast_end, o);
}

}  // namespace fastb64
