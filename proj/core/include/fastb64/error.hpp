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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fastb64 {

enum class DecodeErrorKind : std::uint8_t {
  InvalidCharacter,
  InvalidPadding,
  NonCanonicalTrailingBits,
  TruncatedInput,
};

std::string_view error_kind_name(DecodeErrorKind kind) noexcept;

/// A decode failure. `offset` indexes the first offending input byte.
struct DecodeError {
  DecodeErrorKind kind = DecodeErrorKind::InvalidCharacter;
  std::size_t offset = 0;

  friend bool operator==(const DecodeError&, const DecodeError&) = default;
};

/// "<kind> at byte <offset>"
std::string to_string(const DecodeError& error);

/// Outcome of a decode into a caller-provided buffer.
struct DecodeResult {
  std::size_t written = 0;
  std::optional<DecodeError> error;

  bool ok() const noexcept { return !error.has_value(); }

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// Thrown when a caller asks for the hardware vector backend on a CPU that
/// lacks it.
class UnsupportedBackend : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fastb64
