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

#include "fastb64/whitespace.hpp"
#include "support/oracle.hpp"

namespace {

using namespace fastb64;
namespace t = fastb64::testing;

std::vector<Backend> backends() {
  std::vector<Backend> b{Backend::Emulated};
  if (hardware_available()) b.push_back(Backend::Hardware);
  return b;
}

std::vector<std::uint8_t> filter(std::span<const std::uint8_t> in) {
  std::vector<std::uint8_t> out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), [](std::uint8_t b) { return b != ' ' && b != '\n' && b != '\r'; });
  return out;
}

std::vector<std::uint8_t> with_whitespace(std::mt19937_64& rng, std::size_t n, double density) {
  static constexpr std::uint8_t kSpace[] = {' ', '\n', '\r'};
  std::bernoulli_distribution space(density);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = space(rng) ? kSpace[rng() % 3] : static_cast<std::uint8_t>(t::kStandardChars[rng() % 64]);
  return v;
}

TEST(Despace, Examples) {
  auto buf = t::bytes_of("R0l G\nOD\r");
  const std::size_t n = despace_scalar(buf);
  EXPECT_EQ(t::string_of(std::span(buf).first(n)), "R0lGOD");
  std::vector<std::uint8_t> empty;
  EXPECT_EQ(despace_scalar(empty), 0u);
  for (Backend backend : backends()) {
    auto again = t::bytes_of("R0l G\nOD\r");
    EXPECT_EQ(despace_simd(again, backend), 6u);
    EXPECT_EQ(despace_simd(empty, backend), 0u);

    auto blank = t::bytes_of(" \n\r \n\r \n\r \n\r \n\r ");
    EXPECT_EQ(despace_simd(blank, backend), 0u);
    auto solid = t::bytes_of("ABCDEFGHIJKLMNOP");
    EXPECT_EQ(despace_simd(solid, backend), 16u);
    EXPECT_EQ(t::string_of(solid), "ABCDEFGHIJKLMNOP");
  }
}

TEST(Despace, OnlyThreeBytesAreRemoved) {
  for (int b = 0; b < 256; ++b) {
    std::vector<std::uint8_t> one{static_cast<std::uint8_t>(b)};
    const bool space = b == ' ' || b == '\n' || b == '\r';
    EXPECT_EQ(despace_scalar(one), space ? 0u : 1u) << b;
    EXPECT_EQ(is_despace_byte(static_cast<std::uint8_t>(b)), space);
    for (Backend backend : backends()) {
      std::vector<std::uint8_t> block(40, static_cast<std::uint8_t>(b));
      EXPECT_EQ(despace_simd(block, backend), space ? 0u : 40u) << b;
    }
  }
}

TEST(Despace, CompactionTableEntries) {
  const auto table = compaction_table();
  for (std::uint32_t m : {0u, 1u, 0x8000u, 0xFFFFu, 0x5555u, 0x1234u}) {
    const CompactionEntry& e = table[m];
    std::size_t k = 0;
    for (std::uint8_t i = 0; i < 16; ++i) {
      if (!(m >> i & 1)) EXPECT_EQ(e[k++], i) << m;
    }
    for (; k < 16; ++k) EXPECT_EQ(e[k], 0x80) << m;
  }
}

TEST(Despace, SimdMatchesScalarAndFilter) {
  std::mt19937_64 rng(77);
  for (Backend backend : backends()) {
    for (double density : {0.0, 0.03, 0.5, 1.0}) {
      for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = iter < 400 ? rng() % 100 : rng() % 4097;
        const auto input = with_whitespace(rng, n, density);
        const auto expected = filter(input);
        auto a = input, b = input;
        const std::size_t na = despace_scalar(a);
        const std::size_t nb = despace_simd(b, backend);
        ASSERT_EQ(na, expected.size());
        ASSERT_EQ(nb, expected.size());
        ASSERT_TRUE(std::equal(expected.begin(), expected.end(), a.begin()));
        ASSERT_TRUE(std::equal(expected.begin(), expected.end(), b.begin()));
      }
    }
  }
}

TEST(Despace, SimdStaysInsideBuffer) {
  std::mt19937_64 rng(78);
  for (Backend backend : backends()) {
    for (std::size_t n : {0, 1, 15, 16, 17, 31, 33, 1000}) {
      const auto input = with_whitespace(rng, n, 0.3);
      for (auto guard : {t::GuardedBuffer::Guard::After, t::GuardedBuffer::Guard::Before}) {
        t::GuardedBuffer buf(n, guard);
        buf.assign(input);
        const std::size_t k = despace_simd(buf.span(), backend);
        EXPECT_EQ(std::vector<std::uint8_t>(buf.data(), buf.data() + k), filter(input));
      }
    }
  }
}

}  // namespace
