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

#include "fastb64/vector_engine.hpp"

namespace fastb64 {

/// 1 for bytes to keep, 0 for space (0x20), line feed (0x0A) and carriage
/// return (0x0D). Nothing else is treated as whitespace; a tab stays in the
/// buffer and is rejected by the decoder.
inline constexpr std::array<std::uint8_t, 256> kKeepFlag = [] {
  std::array<std::uint8_t, 256> t{};
  t.fill(1);
  t[' '] = 0;
  t['\n'] = 0;
  t['\r'] = 0;
  return t;
}();

constexpr bool is_despace_byte(std::uint8_t b) noexcept { return kKeepFlag[b] == 0; }

/// Entry m compacts the bytes at the zero bits of m to the front of a 16-byte
/// vector; unused trailing selectors are 0x80 (yield zero).
using CompactionEntry = std::array<std::uint8_t, 16>;

/// The 65536-entry (1 MiB) compaction table, built on first use.
std::span<const CompactionEntry, 65536> compaction_table();

/// Builds the compaction table now rather than on the first despace_simd call.
void prepare_despace_tables();

/// Removes whitespace in place; returns the new length. Order is preserved.
std::size_t despace_scalar(std::span<std::uint8_t> buffer) noexcept;

/// Same result as despace_scalar, 16 bytes per step.
std::size_t despace_simd(std::span<std::uint8_t> buffer, Backend backend = default_backend());

}  // namespace fastb64
