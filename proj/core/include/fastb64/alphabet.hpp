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
#include <cstdint>
#include <string_view>

namespace fastb64 {

enum class Variant : std::uint8_t { Standard, UrlSafe };

/// Marker stored in the inverse table for bytes outside the alphabet.
/// Any value >= 64 would do; membership is a single `< 64` comparison.
inline constexpr std::uint8_t kInvalid = 0xFF;

inline constexpr std::uint8_t kPad = '=';

/// Forward (6-bit value -> ASCII) and inverse (byte -> 6-bit value) tables.
///
/// The pad character is deliberately absent from `inverse`: padding is
/// structural and handled by the decoders, never by value lookup.
struct Alphabet {
  std::array<std::uint8_t, 64> forward{};
  std::array<std::uint8_t, 256> inverse{};
  std::uint8_t pad = kPad;
  Variant variant = Variant::Standard;
};

constexpr Alphabet make_alphabet(Variant variant) {
  Alphabet a;
  a.variant = variant;
  for (int v = 0; v < 26; ++v) {
    a.forward[v] = static_cast<std::uint8_t>('A' + v);
    a.forward[26 + v] = static_cast<std::uint8_t>('a' + v);
  }
  for (int v = 0; v < 10; ++v) a.forward[52 + v] = static_cast<std::uint8_t>('0' + v);
  a.forward[62] = variant == Variant::Standard ? '+' : '-';
  a.forward[63] = variant == Variant::Standard ? '/' : '_';

  a.inverse.fill(kInvalid);
  for (int v = 0; v < 64; ++v) a.inverse[a.forward[v]] = static_cast<std::uint8_t>(v);
  return a;
}

inline constexpr Alphabet kStandardAlphabet = make_alphabet(Variant::Standard);
inline constexpr Alphabet kUrlSafeAlphabet = make_alphabet(Variant::UrlSafe);

constexpr const Alphabet& alphabet(Variant variant) noexcept {
  return variant == Variant::Standard ? kStandardAlphabet : kUrlSafeAlphabet;
}

/// Requires value < 64.
constexpr std::uint8_t lookup_forward(std::uint8_t value, Variant variant = Variant::Standard) noexcept {
  return alphabet(variant).forward[value & 0x3F];
}

/// Returns the 6-bit value for `byte`, or kInvalid.
constexpr std::uint8_t lookup_inverse(std::uint8_t byte, Variant variant = Variant::Standard) noexcept {
  return alphabet(variant).inverse[byte];
}

constexpr bool is_alphabet_byte(std::uint8_t byte, Variant variant = Variant::Standard) noexcept {
  return lookup_inverse(byte, variant) != kInvalid;
}

std::string_view variant_name(Variant variant) noexcept;

}  // namespace fastb64
