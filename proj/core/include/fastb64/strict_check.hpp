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
#include <optional>
#include <span>

#include "fastb64/alphabet.hpp"
#include "fastb64/error.hpp"

namespace fastb64 {

/// Checks that the last four characters of a padded encoding could have been
/// produced by an encoder: zero, one or two trailing '=' and zero bits in the
/// positions the padding discards. Offsets are relative to the quad (0..3).
std::optional<DecodeError> validate_final_quad(std::span<const std::uint8_t, 4> last4,
                                               Variant variant = Variant::Standard);

/// Same rule for an unpadded 2- or 3-character tail.
std::optional<DecodeError> validate_unpadded_tail(std::span<const std::uint8_t> tail,
                                                  Variant variant = Variant::Standard);

/// Applies the appropriate check to the end of a whole encoded string that
/// already decoded successfully. Offsets are relative to `encoded`.
std::optional<DecodeError> validate_canonical(std::span<const std::uint8_t> encoded,
                                              Variant variant = Variant::Standard);

}  // namespace fastb64
