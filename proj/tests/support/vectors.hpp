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
#include <string_view>

namespace fastb64::testing {

// A 1x1 GIF and its encoding.
inline constexpr std::array<std::uint8_t, 35> kGifBytes = {
    71, 73, 70, 56, 57, 97, 1, 0, 1, 0, 128, 0, 0, 255, 255, 255, 0, 0,
    0,  44, 0,  0,  0,  0,  1, 0, 1, 0, 0,   2, 2, 68,  1,   0,   59};
inline constexpr std::string_view kGifText = "R0lGODlhAQABAIAAAP///wAAACwAAAAAAQABAAACAkQBADs=";

// Six-bit values of the first 32 characters of kGifText.
inline constexpr std::array<std::uint8_t, 32> kGifSixbit = {17, 52, 37, 6, 14, 3, 37, 33, 0,  16, 0,
                                                            1,  0,  8,  0, 0,  0, 15, 63, 63, 63, 48,
                                                            0,  0,  0,  2, 48, 0, 0,  0,  0,  0};

struct KnownVector {
  std::string_view plain;
  std::string_view encoded;
};

inline constexpr KnownVector kFoobarVectors[] = {
    {"", ""},
    {"f", "Zg=="},
    {"fo", "Zm8="},
    {"foo", "Zm9v"},
    {"foob", "Zm9vYg=="},
    {"fooba", "Zm9vYmE="},
    {"foobar", "Zm9vYmFy"},
};

}  // namespace fastb64::testing
