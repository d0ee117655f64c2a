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

// One-stop entry points: engine dispatch, whitespace stripping and strict
// canonicality checks layered over the individual codecs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fastb64/config.hpp"
#include "fastb64/error.hpp"
#include "fastb64/scalar_codec.hpp"
#include "fastb64/simd_decoder.hpp"
#include "fastb64/simd_encoder.hpp"
#include "fastb64/strict_check.hpp"
#include "fastb64/whitespace.hpp"

namespace fastb64 {

/// Maps Auto to a concrete engine. Throws UnsupportedBackend for Simd on a
/// CPU without the vector ISA. FASTB64_ENGINE in the environment, when set to
/// a valid engine name, overrides Auto.
Engine resolve_engine(Engine engine);

std::size_t encode(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                   const CodecConfig& config = {}, Engine engine = Engine::Auto);

std::string encode(std::span<const std::uint8_t> in, const CodecConfig& config = {},
                   Engine engine = Engine::Auto);

inline std::string encode(std::string_view in, const CodecConfig& config = {}, Engine engine = Engine::Auto) {
  return encode(std::span(reinterpret_cast<const std::uint8_t*>(in.data()), in.size()), config, engine);
}

/// Decodes a complete encoded buffer. With config.ignore_whitespace the input
/// is despaced into scratch storage first; error offsets always index the
/// original input. With config.strict the final quad must be canonical.
/// `out` needs decoded_max_length(in.size()) bytes.
DecodeResult decode(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                    const CodecConfig& config = {}, Engine engine = Engine::Auto);

struct DecodeOutput {
  std::vector<std::uint8_t> bytes;
  std::optional<DecodeError> error;

  bool ok() const noexcept { return !error.has_value(); }
};

DecodeOutput decode(std::span<const std::uint8_t> in, const CodecConfig& config = {},
                    Engine engine = Engine::Auto);

inline DecodeOutput decode(std::string_view in, const CodecConfig& config = {}, Engine engine = Engine::Auto) {
  return decode(std::span(reinterpret_cast<const std::uint8_t*>(in.data()), in.size()), config, engine);
}

}  // namespace fastb64
