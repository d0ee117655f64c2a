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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "fastb64/config.hpp"
#include "fastb64/vector_engine.hpp"

namespace fastb64 {

namespace detail {

// Byte selectors of the unpacking shuffle as written for a high-to-low
// (_mm256_set_epi8 style) initializer: byte 31 first, byte 0 last.
inline constexpr std::array<std::uint8_t, 32> kEncodeShuffleHighToLow = {
    10, 11, 9, 10, 7, 8, 6, 7, 4, 5, 3, 4, 1, 2, 0, 1,
    14, 15, 13, 14, 11, 12, 10, 11, 8, 9, 7, 8, 5, 6, 4, 5};

constexpr Block32 reversed(const std::array<std::uint8_t, 32>& high_to_low) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = high_to_low[31 - i];
  return r;
}

}  // namespace detail

/// Constants of the 24-byte -> 32-character kernel.
struct EncodeKernelConstants {
  /// Memory-order selectors. Each lane holds four 3-byte chunks (the block is
  /// loaded 4 bytes before the 24 payload bytes); every chunk [s0 s1 s2] is
  /// spread to the 32-bit word [s1 s0 s2 s1].
  Block32 lane_shuffle = detail::reversed(detail::kEncodeShuffleHighToLow);
  Block32 mask_ac = Block32::splat32(0x0FC0FC00);
  Block32 mulhi_const = Block32::splat32(0x04000040);
  Block32 mask_bd = Block32::splat32(0x003F03F0);
  Block32 mullo_const = Block32::splat32(0x01000010);
  /// Indexed by the reduced code: 0 for 26..51, 1..10 for 52..61, 11 for 62,
  /// 12 for 63, 13 for 0..25. Added (mod 256) to the 6-bit value.
  Block32 offsets;
  Block32 b51 = Block32::splat8(51);
  Block32 b26 = Block32::splat8(26);
  Block32 b13 = Block32::splat8(13);
};

constexpr std::array<std::uint8_t, 16> encode_offsets(Variant variant) {
  const auto neg = [](int v) { return static_cast<std::uint8_t>(v); };
  std::array<std::uint8_t, 16> t{};
  t[0] = 71;  // 'a' - 26
  for (int i = 1; i <= 10; ++i) t[i] = neg(-4);  // '0' - 52
  t[11] = variant == Variant::Standard ? neg(-19) : neg(-17);  // '+' - 62 | '-' - 62
  t[12] = variant == Variant::Standard ? neg(-16) : neg(32);   // '/' - 63 | '_' - 63
  t[13] = 65;  // 'A'
  return t;
}

constexpr EncodeKernelConstants encode_constants(Variant variant) {
  EncodeKernelConstants c;
  c.offsets = Block32::per_lane(encode_offsets(variant));
  return c;
}

/// Spreads the eight 3-byte chunks of a block (loaded with the 4-byte lead-in)
/// into eight words of four 6-bit fields, first field in the lowest byte.
Block32 enc_reshuffle(const Block32& raw, Backend backend = default_backend());

/// Maps each byte in [0,64) to its alphabet character.
Block32 translate_to_ascii(const Block32& sixbit, Variant variant = Variant::Standard,
                           Backend backend = default_backend());

/// Vectorized encoder: 24 input bytes per iteration, scalar head staging and
/// scalar tail once fewer than 28 input bytes remain. Output is identical to
/// encode_scalar.
std::size_t encode_simd(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                        const CodecConfig& config = {}, Backend backend = default_backend());

/// Remaining-input threshold below which the encoder switches to scalar code.
inline constexpr std::size_t kEncodeScalarThreshold = 28;

}  // namespace fastb64
