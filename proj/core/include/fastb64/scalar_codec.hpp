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

#include <cstddef>
#include <cstdint>
#include <span>

#include "fastb64/config.hpp"
#include "fastb64/error.hpp"

namespace fastb64 {

/// Exact encoded size of `n` input bytes.
constexpr std::size_t encoded_length(std::size_t n, Padding padding = Padding::Required) noexcept {
  if (padding == Padding::Required) return (n + 2) / 3 * 4;
  return n / 3 * 4 + (n % 3 == 0 ? 0 : n % 3 + 1);
}

/// Upper bound on the decoded size of `n` characters (exact when the input
/// is valid and unpadded).
constexpr std::size_t decoded_max_length(std::size_t n) noexcept {
  return n / 4 * 3 + (n % 4 <= 1 ? 0 : n % 4 - 1);
}

// All encoders write exactly encoded_length(in.size(), config.padding) bytes
// and return that count. `out` must be at least that large; decoders need
// decoded_max_length(in.size()). Undersized buffers throw std::length_error.
//
// Decoding is a left-to-right scan and reports the first error it reaches:
//   * a byte outside the alphabet is InvalidCharacter;
//   * '=' anywhere but the last one or two slots of the final quad, or a
//     '=' followed by a data character, is InvalidPadding;
//   * a trailing partial quad is TruncatedInput (always under
//     Padding::Required, and for a single leftover character otherwise).
// Whitespace is not skipped; strip it first (see whitespace.hpp).

/// Three bytes to four characters with 64-entry table lookups.
std::size_t encode_scalar(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                          const CodecConfig& config = {});

/// Same contract; indexes two 256-entry tables (x -> B(x / 4), x -> B(x mod 64))
/// directly with the input bytes.
std::size_t encode_scalar_fast(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                               const CodecConfig& config = {});

DecodeResult decode_scalar(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                           const CodecConfig& config = {});

/// Same contract as decode_scalar. Non-final quads go through four 256-entry
/// 32-bit tables whose OR carries the three output bytes plus an error flag in
/// the top byte.
DecodeResult decode_scalar_fast(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                                const CodecConfig& config = {});

}  // namespace fastb64
