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
#include "support/oracle.hpp"
#include "support/vectors.hpp"

namespace {

using namespace fastb64;
namespace t = fastb64::testing;

using EncodeFn = std::size_t (*)(std::span<const std::uint8_t>, std::span<std::uint8_t>, const CodecConfig&);
using DecodeFn = DecodeResult (*)(std::span<const std::uint8_t>, std::span<std::uint8_t>, const CodecConfig&);

std::string run_encode(EncodeFn fn, std::span<const std::uint8_t> in, const CodecConfig& c = {}) {
  std::string out(encoded_length(in.size(), c.padding), '\0');
  const std::size_t n = fn(in, {reinterpret_cast<std::uint8_t*>(out.data()), out.size()}, c);
  EXPECT_EQ(n, out.size());
  return out;
}

struct Decoded {
  std::vector<std::uint8_t> bytes;
  std::optional<DecodeError> error;
};

Decoded run_decode(DecodeFn fn, std::string_view text, const CodecConfig& c = {}) {
  std::vector<std::uint8_t> out(decoded_max_length(text.size()));
  const auto r = fn({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, out, c);
  out.resize(r.written);
  return {out, r.error};
}

class ScalarCodecs : public ::testing::TestWithParam<std::pair<EncodeFn, DecodeFn>> {};

TEST_P(ScalarCodecs, EncodeExamples) {
  const auto enc = GetParam().first;
  EXPECT_EQ(run_encode(enc, t::bytes_of("GIF")), "R0lG");
  EXPECT_EQ(run_encode(enc, {}), "");
  const std::uint8_t zero[] = {0};
  EXPECT_EQ(run_encode(enc, zero), "AA==");
  EXPECT_EQ(run_encode(enc, t::kGifBytes), t::kGifText);
}

TEST_P(ScalarCodecs, DecodeExamples) {
  const auto dec = GetParam().second;
  auto gif = run_decode(dec, t::kGifText);
  ASSERT_FALSE(gif.error);
  EXPECT_EQ(gif.bytes, std::vector<std::uint8_t>(t::kGifBytes.begin(), t::kGifBytes.end()));

  auto zeros = run_decode(dec, "AAAA");
  ASSERT_FALSE(zeros.error);
  EXPECT_EQ(zeros.bytes, (std::vector<std::uint8_t>{0, 0, 0}));

  auto bad = run_decode(dec, std::string_view("R0l\x07", 4));
  ASSERT_TRUE(bad.error);
  EXPECT_EQ(*bad.error, (DecodeError{DecodeErrorKind::InvalidCharacter, 3}));

  EXPECT_EQ(t::string_of(run_decode(dec, "Zm9vYmFy").bytes), "foobar");
}

TEST_P(ScalarCodecs, StructuralErrors) {
  const auto dec = GetParam().second;
  const CodecConfig unpadded{Variant::Standard, Padding::Omitted};
  struct Case {
    std::string_view text;
    CodecConfig config;
    DecodeError expected;
  };
  const Case cases[] = {
      {"AAA", {}, {DecodeErrorKind::TruncatedInput, 0}},
      {"AAAAA", {}, {DecodeErrorKind::TruncatedInput, 4}},
      {"AAAAA", unpadded, {DecodeErrorKind::TruncatedInput, 4}},
      {"AA=A", {}, {DecodeErrorKind::InvalidPadding, 2}},
      {"A===", {}, {DecodeErrorKind::InvalidPadding, 1}},
      {"====", {}, {DecodeErrorKind::InvalidPadding, 0}},
      {"AA==AAAA", {}, {DecodeErrorKind::InvalidPadding, 2}},
      {"AA=", unpadded, {DecodeErrorKind::InvalidPadding, 2}},
      {"AAAA*AAA", {}, {DecodeErrorKind::InvalidCharacter, 4}},
      {"AA A", {}, {DecodeErrorKind::InvalidCharacter, 2}},
      {"-AAA", {}, {DecodeErrorKind::InvalidCharacter, 0}},
  };
  for (const Case& c : cases) {
    auto r = run_decode(dec, c.text, c.config);
    ASSERT_TRUE(r.error) << c.text;
    EXPECT_EQ(*r.error, c.expected) << c.text;
  }
}

TEST_P(ScalarCodecs, UnpaddedTails) {
  const auto [enc, dec] = GetParam();
  const CodecConfig unpadded{Variant::Standard, Padding::Omitted};
  EXPECT_EQ(run_encode(enc, t::bytes_of("f"), unpadded), "Zg");
  EXPECT_EQ(run_encode(enc, t::bytes_of("fo"), unpadded), "Zm8");
  EXPECT_EQ(t::string_of(run_decode(dec, "Zg", unpadded).bytes), "f");
  EXPECT_EQ(t::string_of(run_decode(dec, "Zm8", unpadded).bytes), "fo");
  // Padded input stays acceptable when padding is optional.
  EXPECT_EQ(t::string_of(run_decode(dec, "Zm8=", unpadded).bytes), "fo");
  auto strict_len = run_decode(dec, "Zm8", {});
  ASSERT_TRUE(strict_len.error);
  EXPECT_EQ(strict_len.error->kind, DecodeErrorKind::TruncatedInput);
}

TEST_P(ScalarCodecs, RoundTripMatchesBitSerialOracle) {
  const auto [enc, dec] = GetParam();
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto data = t::random_bytes(rng, rng() % 4097);
    for (bool url : {false, true}) {
      for (Padding p : {Padding::Required, Padding::Omitted}) {
        const CodecConfig c{url ? Variant::UrlSafe : Variant::Standard, p};
        const std::string text = run_encode(enc, data, c);
        ASSERT_EQ(text, t::oracle_encode(data, url, p == Padding::Required));
        const auto back = run_decode(dec, text, c);
        ASSERT_FALSE(back.error);
        ASSERT_EQ(back.bytes, data);
      }
    }
    if (iter >= 200) iter += 9;  // long inputs are covered by the first iterations
  }
}

TEST_P(ScalarCodecs, LengthLaw) {
  const auto enc = GetParam().first;
  for (std::size_t n = 0; n < 64; ++n) {
    const std::vector<std::uint8_t> data(n, 0xA5);
    EXPECT_EQ(run_encode(enc, data).size(), 4 * ((n + 2) / 3));
    EXPECT_EQ(run_encode(enc, data, {Variant::Standard, Padding::Omitted}).size(), (4 * n + 2) / 3);
  }
}

TEST_P(ScalarCodecs, ExhaustiveThirdCharacter) {
  const auto dec = GetParam().second;
  for (bool url : {false, true}) {
    const CodecConfig c{url ? Variant::UrlSafe : Variant::Standard};
    for (int b = 0; b < 256; ++b) {
      const char text[] = {'A', 'A', static_cast<char>(b), 'A'};
      const auto r = run_decode(dec, {text, 4}, c);
      const bool valid = t::oracle_index(static_cast<std::uint8_t>(b), url).has_value();
      EXPECT_EQ(!r.error, valid) << "byte " << b;
      if (!valid) {
        const auto kind = b == '=' ? DecodeErrorKind::InvalidPadding : DecodeErrorKind::InvalidCharacter;
        EXPECT_EQ(*r.error, (DecodeError{kind, 2})) << "byte " << b;
      }
    }
  }
}

TEST_P(ScalarCodecs, UndersizedOutputThrows) {
  const auto [enc, dec] = GetParam();
  std::vector<std::uint8_t> small(3);
  EXPECT_THROW(enc(t::bytes_of("abcd"), small, {}), std::length_error);
  std::vector<std::uint8_t> tiny(2);
  EXPECT_THROW(dec(t::bytes_of("AAAA"), tiny, {}), std::length_error);
}

INSTANTIATE_TEST_SUITE_P(Variants, ScalarCodecs,
                         ::testing::Values(std::make_pair(EncodeFn{encode_scalar}, DecodeFn{decode_scalar}),
                                           std::make_pair(EncodeFn{encode_scalar_fast}, DecodeFn{decode_scalar_fast})),
                         [](const auto& info) { return info.index == 0 ? "Plain" : "Fast"; });

TEST(ScalarCodecs, FastMatchesPlainOnMutatedInputs) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20000; ++iter) {
    const auto data = t::random_bytes(rng, rng() % 200);
    const bool url = rng() & 1;
    const CodecConfig c{url ? Variant::UrlSafe : Variant::Standard, (rng() & 1) ? Padding::Omitted : Padding::Required};
    std::string text = t::oracle_encode(data, url, true);
    if (!text.empty() && (rng() & 1)) text[rng() % text.size()] = static_cast<char>(rng());
    if (!text.empty() && rng() % 4 == 0) text.pop_back();
    const auto a = run_decode(decode_scalar, text, c);
    const auto b = run_decode(decode_scalar_fast, text, c);
    ASSERT_EQ(a.error, b.error) << text;
    if (!a.error) ASSERT_EQ(a.bytes, b.bytes);
  }
}

TEST(ScalarCodecs, DecodedMaxLength) {
  EXPECT_EQ(decoded_max_length(0), 0u);
  EXPECT_EQ(decoded_max_length(1), 0u);
  EXPECT_EQ(decoded_max_length(2), 1u);
  EXPECT_EQ(decoded_max_length(3), 2u);
  EXPECT_EQ(decoded_max_length(4), 3u);
  EXPECT_EQ(decoded_max_length(48), 36u);
}

}  // namespace
