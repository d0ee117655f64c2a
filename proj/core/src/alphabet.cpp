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

#include "fastb64/alphabet.hpp"

namespace fastb64 {

static_assert(kStandardAlphabet.forward[17] == 'R');
static_assert(kStandardAlphabet.inverse['R'] == 17);
static_assert(kStandardAlphabet.inverse[kPad] == kInvalid);
static_assert(kUrlSafeAlphabet.forward[62] == '-' && kUrlSafeAlphabet.forward[63] == '_');

std::string_view variant_name(Variant variant) noexcept {
  return variant == Variant::Standard ? "standard" : "url-safe";
}

}  // namespace fastb64
