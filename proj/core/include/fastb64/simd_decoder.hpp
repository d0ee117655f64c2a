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
#include "fastb64/error.hpp"
#include "fastb64/vector_engine.hpp"

namespace fastb64 {

/// Constants of the 32-character -> 24-byte kernel.
///
/// Validation: a byte b is accepted iff
///   lut_lo[b & 15] & lut_hi[b >> 4] == 0
/// (lut_hi maps each high nibble to a one-bit class, lut_lo lists the classes
/// forbidden for each low nibble). Translation adds lut_roll[index], where the
/// index is the high nibble adjusted by `roll_adjust` for the one character
/// that shares its high nibble with a different offset ('/' or '_').
struct DecodeKernelConstants {
  Block32 lut_lo;
  Block32 lut_hi;
  Block32 lut_roll;
  Block32 mask_2F = Block32::splat8(0x2F);
  /// Character whose roll index is adjusted, and the adjustment added to its
  /// high nibble (0xFF = -1 for '/', +8 for '_').
  Block32 roll_char;
  Block32 roll_adjust;
  Block32 pack_maddubs_const = Block32::splat32(0x01400140);
  Block32 pack_madd_const = Block32::splat32(0x00011000);
  Block32 pack_shuffle = Block32::per_lane({2, 1, 0, 6, 5, 4, 10, 9, 8, 14, 13, 12, 0xFF, 0xFF, 0xFF, 0xFF});
  Block32 pack_permute = Block32::from_words32({0, 1, 2, 4, 5, 6, 0xFFFFFFFF, 0xFFFFFFFF});
};

constexpr DecodeKernelConstants decode_constants(Variant variant) {
  const auto b = [](int v) { return static_cast<std::uint8_t>(v); };
  DecodeKernelConstants c;
  if (variant == Variant::Standard) {
    c.lut_lo = Block32::per_lane({0x15, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x13, 0x1A,
                                  0x1B, 0x1B, 0x1B, 0x1A});
    c.lut_hi = Block32::per_lane({0x10, 0x10, 0x01, 0x02, 0x04, 0x08, 0x04, 0x08, 0x10, 0x10, 0x10, 0x10,
                                  0x10, 0x10, 0x10, 0x10});
    c.lut_roll = Block32::per_lane({0, 16, 19, 4, b(-65), b(-65), b(-71), b(-71), 0, 0, 0, 0, 0, 0, 0, 0});
    c.roll_char = Block32::splat8('/');
    c.roll_adjust = Block32::splat8(0xFF);
  } else {
    // High nibble 7 gets its own class (0x20): unlike 5 it does not admit
    // low nibble 15. '-' is the only valid byte with high nibble 2.
    c.lut_lo = Block32::per_lane({0x15, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x13, 0x3B,
                                  0x3B, 0x3A, 0x3B, 0x33});
    c.lut_hi = Block32::per_lane({0x10, 0x10, 0x01, 0x02, 0x04, 0x08, 0x04, 0x20, 0x10, 0x10, 0x10, 0x10,
                                  0x10, 0x10, 0x10, 0x10});
    c.lut_roll = Block32::per_lane({0, 0, 17, 4, b(-65), b(-65), b(-71), b(-71), 0, 0, 0, 0, 0, b(-32), 0, 0});
    c.roll_char = Block32::splat8('_');
    c.roll_adjust = Block32::splat8(0x08);
  }
  return c;
}

struct TranslateOutcome {
  /// False when at least one byte of the block is outside the alphabet.
  bool ok = false;
  /// Valid only when ok.
  Block32 sixbit;
};

struct BlockDecodeOutcome {
  bool ok = false;
  std::array<std::uint8_t, 24> packed24{};
};

TranslateOutcome translate_from_ascii(const Block32& chars, Variant variant = Variant::Standard,
                                      Backend backend = default_backend());

/// Packs 32 six-bit values (each < 64) into 24 bytes, in stream order.
std::array<std::uint8_t, 24> dec_reshuffle(const Block32& sixbit, Backend backend = default_backend());

/// translate_from_ascii followed by dec_reshuffle.
BlockDecodeOutcome decode_block(const Block32& chars, Variant variant = Variant::Standard,
                                Backend backend = default_backend());

/// Vectorized decoder: 32 characters per iteration while at least 45 remain,
/// scalar decoding for the tail (and for any block that fails validation, so
/// error kinds and offsets match decode_scalar exactly).
DecodeResult decode_simd(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                         const CodecConfig& config = {}, Backend backend = default_backend());

/// The vector loop runs while at least this many characters remain.
inline constexpr std::size_t kDecodeVectorThreshold = 45;

}  // namespace fastb64
