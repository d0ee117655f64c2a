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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>

#include "backends.hpp"
#include "fastb64/simd_encoder.hpp"

namespace fastb64::detail::emulated {
namespace {

// Reference semantics, one byte at a time.
struct Ops {
  using V32 = Block32;
  using V16 = Block16;

  static V32 constant(const Block32& b) { return b; }
  static Block32 to_block(V32 v) { return v; }
  static V16 constant16(const Block16& b) { return b; }
  static Block16 to_block16(V16 v) { return v; }

  static V32 load32(const std::uint8_t* p) { return Block32::load(p); }
  static V32 load32_partial(const std::uint8_t* p, std::size_t n) { return reference::load32_partial(p, n); }
  static void store32(std::uint8_t* p, V32 v) { std::memcpy(p, v.bytes.data(), 32); }
  static void store24(std::uint8_t* p, V32 v) { reference::store24(p, v); }
  static V16 load16(const std::uint8_t* p) { return Block16::load(p); }
  static void store16(std::uint8_t* p, V16 v) { std::memcpy(p, v.bytes.data(), 16); }

  static V32 shuffle_bytes_in_lanes(V32 v, V32 idx) { return reference::shuffle_bytes_in_lanes(v, idx); }
  static V32 mulhi_u16(V32 a, V32 b) { return reference::mulhi_u16(a, b); }
  static V32 mullo_i16(V32 a, V32 b) { return reference::mullo_i16(a, b); }
  static V32 maddubs(V32 a, V32 b) { return reference::maddubs(a, b); }
  static V32 madd_i16(V32 a, V32 b) { return reference::madd_i16(a, b); }
  static V32 add_i8_wrapping(V32 a, V32 b) { return reference::add_i8_wrapping(a, b); }
  static V32 saturating_sub_u8(V32 a, V32 b) { return reference::saturating_sub_u8(a, b); }
  static V32 bit_and(V32 a, V32 b) { return reference::bit_and(a, b); }
  static V32 bit_or(V32 a, V32 b) { return reference::bit_or(a, b); }
  static V32 cmpeq_i8(V32 a, V32 b) { return reference::cmpeq_i8(a, b); }
  static V32 cmpgt_i8(V32 a, V32 b) { return reference::cmpgt_i8(a, b); }
  static V32 shr32(V32 v, unsigned k) { return reference::shr32(v, k); }
  static V32 permute32_across_lanes(V32 v, V32 idx) { return reference::permute32_across_lanes(v, idx); }
  static bool testz(V32 a, V32 b) { return reference::testz(a, b); }

  static V16 cmpeq16_i8(V16 a, V16 b) { return reference::cmpeq_i8(a, b); }
  static V16 bit_or16(V16 a, V16 b) { return reference::bit_or(a, b); }
  static V16 shuffle16(V16 v, V16 idx) { return reference::shuffle_bytes(v, idx); }
  static unsigned movemask16(V16 v) { return reference::movemask16(v); }
  static unsigned popcount(unsigned m) { return static_cast<unsigned>(std::popcount(m)); }
};

#include "kernels.inl"

constexpr Backend kBackend = Backend::Emulated;

}  // namespace

#include "backend_exports.inl"

}  // namespace fastb64::detail::emulated
