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

#include "fastb64/simd_encoder.hpp"

#include "detail.hpp"
#include "dispatch.hpp"
#include "fastb64/scalar_codec.hpp"

namespace fastb64 {

static_assert(encode_offsets(Variant::Standard)[13] == 65);
static_assert(encode_offsets(Variant::Standard)[0] == 71);
static_assert(encode_offsets(Variant::Standard)[11] == static_cast<std::uint8_t>(-19));
static_assert(encode_offsets(Variant::Standard)[12] == static_cast<std::uint8_t>(-16));

Block32 enc_reshuffle(const Block32& raw, Backend backend) {
  return FASTB64_DISPATCH(backend, enc_reshuffle, raw);
}

Block32 translate_to_ascii(const Block32& sixbit, Variant variant, Backend backend) {
  return FASTB64_DISPATCH(backend, translate_to_ascii, sixbit, variant);
}

std::size_t encode_simd(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, const CodecConfig& config,
                        Backend backend) {
  const std::size_t need = encoded_length(in.size(), config.padding);
  detail::require_capacity(out.size(), need, "encode_simd");
  const std::size_t consumed = FASTB64_DISPATCH(backend, encode_blocks, in.data(), in.size(), out.data(), config.variant);
  const std::size_t written = consumed / 3 * 4;
  return written + encode_scalar(in.subspan(consumed), out.subspan(written), config);
}

}  // namespace fastb64
