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

#include "fastb64/strict_check.hpp"

namespace fastb64 {

std::optional<DecodeError> validate_final_quad(std::span<const std::uint8_t, 4> last4, Variant variant) {
  int pads = 0;
  while (pads < 4 && last4[3 - pads] == kPad) ++pads;
  if (pads > 2) return DecodeError{DecodeErrorKind::InvalidPadding, static_cast<std::size_t>(4 - pads)};
  for (std::size_t j = 0; j < 4 - static_cast<std::size_t>(pads); ++j) {
    if (last4[j] == kPad) return DecodeError{DecodeErrorKind::InvalidPadding, j};
    if (!is_alphabet_byte(last4[j], variant)) return DecodeError{DecodeErrorKind::InvalidCharacter, j};
  }
  if (pads == 2 && (lookup_inverse(last4[1], variant) * 16) % 256 != 0) {
    return DecodeError{DecodeErrorKind::NonCanonicalTrailingBits, 1};
  }
  if (pads == 1 && (lookup_inverse(last4[2], variant) * 64) % 256 != 0) {
    return DecodeError{DecodeErrorKind::NonCanonicalTrailingBits, 2};
  }
  return std::nullopt;
}

std::optional<DecodeError> validate_unpadded_tail(std::span<const std::uint8_t> tail, Variant variant) {
  if (tail.size() < 2 || tail.size() > 3) return DecodeError{DecodeErrorKind::TruncatedInput, 0};
  for (std::size_t j = 0; j < tail.size(); ++j) {
    if (tail[j] == kPad) return DecodeError{DecodeErrorKind::InvalidPadding, j};
    if (!is_alphabet_byte(tail[j], variant)) return DecodeError{DecodeErrorKind::InvalidCharacter, j};
  }
  const std::size_t last = tail.size() - 1;
  const unsigned shift = tail.size() == 2 ? 16 : 64;
  if ((lookup_inverse(tail[last], variant) * shift) % 256 != 0) {
    return DecodeError{DecodeErrorKind::NonCanonicalTrailingBits, last};
  }
  return std::nullopt;
}

std::optional<DecodeError> validate_canonical(std::span<const std::uint8_t> encoded, Variant variant) {
  const std::size_t n = encoded.size();
  if (n == 0) return std::nullopt;
  std::optional<DecodeError> e;
  std::size_t base = 0;
  if (n % 4 == 0) {
    base = n - 4;
    e = validate_final_quad(encoded.subspan(base).first<4>(), variant);
  } else {
    base = n - n % 4;
    e = validate_unpadded_tail(encoded.subspan(base), variant);
  }
  if (e) e->offset += base;
  return e;
}

}  // namespace fastb64
