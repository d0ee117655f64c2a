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

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string_view>

namespace fastb64 {

/// 32 byte lanes, viewed as two independent 16-byte lanes by the in-lane ops.
struct Block32 {
  std::array<std::uint8_t, 32> bytes{};

  static constexpr Block32 splat8(std::uint8_t b) {
    Block32 r;
    r.bytes.fill(b);
    return r;
  }
  /// Little-endian 32-bit pattern repeated eight times.
  static constexpr Block32 splat32(std::uint32_t w) {
    Block32 r;
    for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = static_cast<std::uint8_t>(w >> (8 * (i % 4)));
    return r;
  }
  /// The same 16 bytes in both lanes.
  static constexpr Block32 per_lane(const std::array<std::uint8_t, 16>& lane) {
    Block32 r;
    for (std::size_t i = 0; i < 16; ++i) r.bytes[i] = r.bytes[16 + i] = lane[i];
    return r;
  }
  static constexpr Block32 from_words32(const std::array<std::uint32_t, 8>& words) {
    Block32 r;
    for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = static_cast<std::uint8_t>(words[i / 4] >> (8 * (i % 4)));
    return r;
  }
  static Block32 load(const std::uint8_t* p) {
    Block32 r;
    std::memcpy(r.bytes.data(), p, 32);
    return r;
  }

  constexpr std::uint16_t word16(std::size_t i) const {
    return static_cast<std::uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
  }
  constexpr void set_word16(std::size_t i, std::uint16_t w) {
    bytes[2 * i] = static_cast<std::uint8_t>(w);
    bytes[2 * i + 1] = static_cast<std::uint8_t>(w >> 8);
  }
  constexpr std::uint32_t word32(std::size_t i) const {
    return static_cast<std::uint32_t>(bytes[4 * i]) | (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
           (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
           (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
  }
  constexpr void set_word32(std::size_t i, std::uint32_t w) {
    for (std::size_t k = 0; k < 4; ++k) bytes[4 * i + k] = static_cast<std::uint8_t>(w >> (8 * k));
  }

  friend constexpr bool operator==(const Block32&, const Block32&) = default;
};

struct Block16 {
  std::array<std::uint8_t, 16> bytes{};

  static constexpr Block16 splat8(std::uint8_t b) {
    Block16 r;
    r.bytes.fill(b);
    return r;
  }
  static Block16 load(const std::uint8_t* p) {
    Block16 r;
    std::memcpy(r.bytes.data(), p, 16);
    return r;
  }

  friend constexpr bool operator==(const Block16&, const Block16&) = default;
};

/// Bit-exact software semantics of every vector operation the kernels use.
/// These are normative; the hardware backend is tested against them.
namespace reference {

/// Per 16-byte lane: out[i] = idx[i] has its top bit set ? 0 : v[lane + (idx[i] & 15)].
constexpr Block32 shuffle_bytes_in_lanes(const Block32& v, const Block32& idx) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) {
    const std::size_t lane = i & 16;
    r.bytes[i] = (idx.bytes[i] & 0x80) ? 0 : v.bytes[lane + (idx.bytes[i] & 0x0F)];
  }
  return r;
}

constexpr Block32 mulhi_u16(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 16; ++i) {
    const std::uint32_t p = static_cast<std::uint32_t>(a.word16(i)) * b.word16(i);
    r.set_word16(i, static_cast<std::uint16_t>(p >> 16));
  }
  return r;
}

constexpr Block32 mullo_i16(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 16; ++i) {
    const std::uint32_t p = static_cast<std::uint32_t>(a.word16(i)) * b.word16(i);
    r.set_word16(i, static_cast<std::uint16_t>(p));
  }
  return r;
}

/// Unsigned bytes of `a` times signed bytes of `b`; adjacent products summed
/// into 16-bit words with signed saturation.
constexpr Block32 maddubs(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 16; ++i) {
    const int lo = a.bytes[2 * i] * static_cast<std::int8_t>(b.bytes[2 * i]);
    const int hi = a.bytes[2 * i + 1] * static_cast<std::int8_t>(b.bytes[2 * i + 1]);
    const int s = std::clamp(lo + hi, -32768, 32767);
    r.set_word16(i, static_cast<std::uint16_t>(s));
  }
  return r;
}

/// Signed 16-bit products, adjacent pairs summed into 32-bit words (wrapping).
constexpr Block32 madd_i16(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 8; ++i) {
    const std::int64_t lo = std::int64_t{static_cast<std::int16_t>(a.word16(2 * i))} *
                            static_cast<std::int16_t>(b.word16(2 * i));
    const std::int64_t hi = std::int64_t{static_cast<std::int16_t>(a.word16(2 * i + 1))} *
                            static_cast<std::int16_t>(b.word16(2 * i + 1));
    r.set_word32(i, static_cast<std::uint32_t>(lo + hi));
  }
  return r;
}

constexpr Block32 add_i8_wrapping(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = static_cast<std::uint8_t>(a.bytes[i] + b.bytes[i]);
  return r;
}

/// max(a - b, 0) on unsigned bytes.
constexpr Block32 saturating_sub_u8(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = a.bytes[i] > b.bytes[i] ? a.bytes[i] - b.bytes[i] : 0;
  return r;
}

constexpr Block32 bit_and(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = a.bytes[i] & b.bytes[i];
  return r;
}

constexpr Block32 bit_or(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = a.bytes[i] | b.bytes[i];
  return r;
}

constexpr Block32 cmpeq_i8(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) r.bytes[i] = a.bytes[i] == b.bytes[i] ? 0xFF : 0x00;
  return r;
}

/// Signed byte comparison a > b.
constexpr Block32 cmpgt_i8(const Block32& a, const Block32& b) {
  Block32 r;
  for (std::size_t i = 0; i < 32; ++i) {
    r.bytes[i] = static_cast<std::int8_t>(a.bytes[i]) > static_cast<std::int8_t>(b.bytes[i]) ? 0xFF : 0x00;
  }
  return r;
}

/// Logical right shift of each 32-bit word; counts above 31 give zero.
constexpr Block32 shr32(const Block32& v, unsigned k) {
  Block32 r;
  for (std::size_t i = 0; i < 8; ++i) r.set_word32(i, k > 31 ? 0 : v.word32(i) >> k);
  return r;
}

/// Word j of the result is word (idx word j mod 8) of v; crosses lanes.
constexpr Block32 permute32_across_lanes(const Block32& v, const Block32& idx) {
  Block32 r;
  for (std::size_t j = 0; j < 8; ++j) r.set_word32(j, v.word32(idx.word32(j) & 7));
  return r;
}

constexpr bool testz(const Block32& a, const Block32& b) {
  for (std::size_t i = 0; i < 32; ++i) {
    if (a.bytes[i] & b.bytes[i]) return false;
  }
  return true;
}

/// Reads min(available, 32) bytes and zero-fills the rest.
inline Block32 load32_partial(const std::uint8_t* p, std::size_t available) {
  Block32 r;
  if (available != 0) std::memcpy(r.bytes.data(), p, std::min<std::size_t>(available, 32));
  return r;
}

inline void store24(std::uint8_t* p, const Block32& v) { std::memcpy(p, v.bytes.data(), 24); }

constexpr Block16 cmpeq_i8(const Block16& a, const Block16& b) {
  Block16 r;
  for (std::size_t i = 0; i < 16; ++i) r.bytes[i] = a.bytes[i] == b.bytes[i] ? 0xFF : 0x00;
  return r;
}

constexpr Block16 bit_or(const Block16& a, const Block16& b) {
  Block16 r;
  for (std::size_t i = 0; i < 16; ++i) r.bytes[i] = a.bytes[i] | b.bytes[i];
  return r;
}

constexpr Block16 shuffle_bytes(const Block16& v, const Block16& idx) {
  Block16 r;
  for (std::size_t i = 0; i < 16; ++i) r.bytes[i] = (idx.bytes[i] & 0x80) ? 0 : v.bytes[idx.bytes[i] & 0x0F];
  return r;
}

/// Bit i is the top bit of byte i.
constexpr std::uint16_t movemask16(const Block16& v) {
  std::uint16_t m = 0;
  for (std::size_t i = 0; i < 16; ++i) m = static_cast<std::uint16_t>(m | ((v.bytes[i] >> 7) << i));
  return m;
}

}  // namespace reference

enum class Backend : std::uint8_t { Emulated, Hardware };

std::string_view backend_name(Backend backend) noexcept;

/// True when this build carries the AVX2 kernels and the running CPU supports
/// them. Setting FASTB64_DISABLE_HARDWARE=1 in the environment forces false.
bool hardware_available() noexcept;

/// Table of the vector operations for one backend, for differential testing
/// and for callers that want to drive individual operations.
struct VectorOps {
  Backend backend;
  Block32 (*shuffle_bytes_in_lanes)(const Block32&, const Block32&);
  Block32 (*mulhi_u16)(const Block32&, const Block32&);
  Block32 (*mullo_i16)(const Block32&, const Block32&);
  Block32 (*maddubs)(const Block32&, const Block32&);
  Block32 (*madd_i16)(const Block32&, const Block32&);
  Block32 (*add_i8_wrapping)(const Block32&, const Block32&);
  Block32 (*saturating_sub_u8)(const Block32&, const Block32&);
  Block32 (*bit_and)(const Block32&, const Block32&);
  Block32 (*bit_or)(const Block32&, const Block32&);
  Block32 (*cmpeq_i8)(const Block32&, const Block32&);
  Block32 (*cmpgt_i8)(const Block32&, const Block32&);
  Block32 (*shr32)(const Block32&, unsigned);
  Block32 (*permute32_across_lanes)(const Block32&, const Block32&);
  bool (*testz)(const Block32&, const Block32&);
  Block32 (*load32)(const std::uint8_t*);
  Block32 (*load32_partial)(const std::uint8_t*, std::size_t);
  void (*store32)(std::uint8_t*, const Block32&);
  void (*store24)(std::uint8_t*, const Block32&);
  Block16 (*cmpeq16_i8)(const Block16&, const Block16&);
  Block16 (*bit_or16)(const Block16&, const Block16&);
  Block16 (*shuffle16)(const Block16&, const Block16&);
  std::uint16_t (*movemask16)(const Block16&);
};

/// Throws UnsupportedBackend for Backend::Hardware when !hardware_available().
const VectorOps& vector_ops(Backend backend);

/// Hardware when available, Emulated otherwise.
Backend default_backend() noexcept;

}  // namespace fastb64
