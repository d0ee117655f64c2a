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

#include "fastb64/simd_decoder.hpp"

#include <algorithm>

#include "detail.hpp"
#include "dispatch.hpp"
#include "fastb64/scalar_codec.hpp"

namespace fastb64 {

TranslateOutcome translate_from_ascii(const Block32& chars, Variant variant, Backend backend) {
  return FASTB64_DISPATCH(backend, translate_from_ascii, chars, variant);
}

std::array<std::uint8_t, 24> dec_reshuffle(const Block32& sixbit, Backend backend) {
  const Block32 packed = FASTB64_DISPATCH(backend, dec_reshuffle, sixbit);
  std::array<std::uint8_t, 24> out{};
  std::copy_n(packed.bytes.begin(), 24, out.begin());
  return out;
}

BlockDecodeOutcome decode_block(const Block32& chars, Variant variant, Backend backend) {
  const TranslateOutcome t = translate_from_ascii(chars, variant, backend);
  BlockDecodeOutcome r;
  r.ok = t.ok;
  if (t.ok) r.packed24 = dec_reshuffle(t.sixbit, backend);
  return r;
}

DecodeResult decode_simd(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, const CodecConfig& config,
                         Backend backend) {
  detail::require_capacity(out.size(), decoded_max_length(in.size()), "decode_simd");
  const std::size_t consumed =
      FASTB64_DISPATCH(backend, decode_blocks, in.data(), in.size(), out.data(), out.size(), config.variant);
  const std::size_t written = consumed / 4 * 3;
  // Tail, padding and any block that failed validation: the scalar decoder
  // yields the exact error kind and offset.
  return detail::rebase(decode_scalar_fast(in.subspan(consumed), out.subspan(written), config), consumed, written);
}

}  // namespace fastb64
