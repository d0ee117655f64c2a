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

#include <cstdint>
#include <optional>
#include <string_view>

#include "fastb64/alphabet.hpp"

namespace fastb64 {

/// Encode: `Required` appends '=' so the output length is a multiple of 4,
/// `Omitted` drops it. Decode: `Required` rejects inputs whose length is not a
/// multiple of 4, `Omitted` additionally accepts a 2- or 3-character tail.
enum class Padding : std::uint8_t { Required, Omitted };

struct CodecConfig {
  Variant variant = Variant::Standard;
  Padding padding = Padding::Required;
  /// Strip space, LF and CR before decoding.
  bool ignore_whitespace = false;
  /// Reject non-canonical trailing bits in the final quad.
  bool strict = false;
};

/// Which implementation services a codec call.
///
/// `Auto` picks the hardware vector kernels when the CPU supports them and the
/// table-driven scalar codec otherwise. `Emulated` runs the vector kernels on
/// the portable reference backend.
enum class Engine : std::uint8_t { Auto, Scalar, Simd, Emulated };

std::string_view engine_name(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

}  // namespace fastb64
