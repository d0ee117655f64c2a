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

#include <gtest/gtest.h>

#include <random>

#include "fastb64/scalar_codec.hpp"
#include "fastb64/simd_encoder.hpp"
#include "support/oracle.hpp"

namespace {

using namespace fastb64;
namespace t = fastb64::testing;

std::vector<Backend> backends() {
  std::vector<Backend> b{Backend::Emulated};
  if (hardware_available()) b.push_back(Backend::Hardware);
  return b;
}

// The kernel's view of 24 payload bytes: four bytes of lead-in first.
Block32 staged(std::span<const std::uint8_t, 24> payload) {
  Block32 raw = Block32::splat8(0xCC);
  std::copy(payload.begin(), payload.end(), raw.bytes.begin() + 4);
  return raw;
}

std::string encode_with(Backend backend, std::span<const std::uint8_t> in, const CodecConfig& c = {}) {
  std::string out(encoded_length(in.size(), c.padding), '\0');
  encode_simd(in, {reinterpret_cast<std::uint8_t*>(out.data()), out.size()}, c, backend);
  return out;
}

TEST(EncodeConstants, OffsetsFollowTheAlphabet) {
  for (Variant v : {Variant::Standard, Variant::UrlSafe}) {
    const auto off = encode_offsets(v);
    // Every value class lands on its character under the reduction rule.
    for (unsigned x = 0; x < 64; ++x) {
      const unsigned reduced = x < 26 ? 13 : (x <= 51 ? 0 : x - 51);
      EXPECT_EQ(static_cast<std::uint8_t>(x + off[reduced]), lookup_forward(static_cast<std::uint8_t>(x), v)) << x;
    }
  }
  const auto std_off = encode_offsets(Variant::Standard);
  const auto url_off = encode_offsets(Variant::UrlSafe);
  for (std::size_t i = 0; i < 16; ++i) {
    if (i != 11 && i != 12) EXPECT_EQ(std_off[i], url_off[i]) << i;
  }
  EXPECT_EQ(url_off[11], static_cast<std::uint8_t>(-17));
  EXPECT_EQ(url_off[12], 32);
}

TEST(EncReshuffle, SplitsChunksIntoFields) {
  for (Backend backend : backends()) {
    std::array<std::uint8_t, 24> payload{};
    for (std::size_t i = 0; i < 24; i += 3) {
      payload[i] = 71;
      payload[i + 1] = 73;
      payload[i + 2] = 70;
    }
    EXPECT_EQ(enc_reshuffle(staged(payload), backend), Block32::splat32(0x06253411u));

    payload.fill(0);
    EXPECT_EQ(enc_reshuffle(staged(payload), backend), Block32{});
    payload.fill(0xFF);
    EXPECT_EQ(enc_reshuffle(staged(payload), backend), Block32::splat8(63));
  }
}

TEST(EncReshuffle, MatchesScalarGroupMath) {
  std::mt19937_64 rng(5);
  for (Backend backend : backends()) {
    for (int iter = 0; iter < 2000; ++iter) {
      std::array<std::uint8_t, 24> payload;
      for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
      const Block32 fields = enc_reshuffle(staged(payload), backend);
      for (std::size_t j = 0; j < 8; ++j) {
        const std::uint8_t s0 = payload[3 * j], s1 = payload[3 * j + 1], s2 = payload[3 * j + 2];
        ASSERT_EQ(fields.bytes[4 * j + 0], s0 >> 2);
        ASSERT_EQ(fields.bytes[4 * j + 1], ((s0 << 4) & 63) | (s1 >> 4));
        ASSERT_EQ(fields.bytes[4 * j + 2], ((s1 << 2) & 63) | (s2 >> 6));
        ASSERT_EQ(fields.bytes[4 * j + 3], s2 & 63);
      }
    }
  }
}

TEST(TranslateToAscii, ExhaustiveOverValuesAndPositions) {
  for (Backend backend : backends()) {
    for (Variant v : {Variant::Standard, Variant::UrlSafe}) {
      for (unsigned x = 0; x < 64; ++x) {
        const Block32 out = translate_to_ascii(Block32::splat8(static_cast<std::uint8_t>(x)), v, backend);
        EXPECT_EQ(out, Block32::splat8(lookup_forward(static_cast<std::uint8_t>(x), v))) << x;
      }
      // Distinct values in every position at once.
      for (unsigned rot = 0; rot < 64; ++rot) {
        Block32 in;
        for (std::size_t i = 0; i < 32; ++i) in.bytes[i] = static_cast<std::uint8_t>((i + rot) % 64);
        const Block32 out = translate_to_ascii(in, v, backend);
        for (std::size_t i = 0; i < 32; ++i) ASSERT_EQ(out.bytes[i], lookup_forward(in.bytes[i], v));
      }
    }
    EXPECT_EQ(translate_to_ascii(Block32::splat8(0), Variant::Standard, backend), Block32::splat8('A'));
    EXPECT_EQ(translate_to_ascii(Block32::splat8(62), Variant::Standard, backend), Block32::splat8('+'));
  }
}

TEST(EncodeSimd, Examples) {
  for (Backend backend : backends()) {
    EXPECT_EQ(encode_with(backend, {}), "");
    std::vector<std::uint8_t> gif10;
    std::string expected;
    for (int i = 0; i < 10; ++i) {
      gif10.insert(gif10.end(), {71, 73, 70});
      expected += "R0lG";
    }
    EXPECT_EQ(encode_with(backend, gif10), expected);
  }
}

TEST(EncodeSimd, MatchesScalarAcrossLengths) {
  std::mt19937_64 rng(99);
  for (Backend backend : backends()) {
    for (std::size_t n = 0; n < 300; ++n) {
      const auto data = t::random_bytes(rng, n);
      for (Variant v : {Variant::Standard, Variant::UrlSafe}) {
        for (Padding p : {Padding::Required, Padding::Omitted}) {
          const CodecConfig c{v, p};
          std::string scalar(encoded_length(n, p), '\0');
          encode_scalar(data, {reinterpret_cast<std::uint8_t*>(scalar.data()), scalar.size()}, c);
          ASSERT_EQ(encode_with(backend, data, c), scalar) << "n=" << n;
        }
      }
    }
    const auto big = t::random_bytes(rng, 65536 + 7);
    EXPECT_EQ(encode_with(backend, big), t::oracle_encode(big));
  }
}

TEST(EncodeSimd, StaysInsideInputAndOutput) {
  std::mt19937_64 rng(17);
  for (Backend backend : backends()) {
    for (std::size_t n : {0, 1, 23, 24, 27, 28, 29, 51, 52, 53, 100, 1000, 4097}) {
      const auto data = t::random_bytes(rng, n);
      for (auto guard : {t::GuardedBuffer::Guard::After, t::GuardedBuffer::Guard::Before}) {
        t::GuardedBuffer in(n, guard);
        in.assign(data);
        t::GuardedBuffer out(encoded_length(n), guard);
        encode_simd({in.data(), n}, out.span(), {}, backend);
        EXPECT_EQ(t::string_of(out.span()), t::oracle_encode(data)) << n;
      }
    }
  }
}

}  // namespace
