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

// Entry points each vector backend provides. `emulated` runs the reference
// semantics; `avx2` exists only on x86-64 builds and must only be called when
// hardware_available().

#include <cstddef>
#include <cstdint>

#include "fastb64/alphabet.hpp"
#include "fastb64/simd_decoder.hpp"
#include "fastb64/vector_engine.hpp"
#include "fastb64/whitespace.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define FASTB64_HAVE_AVX2_BACKEND 1
#endif

namespace fastb64::detail {

namespace emulated {

extern const VectorOps kOps;

/// Encodes whole 24-byte groups; returns input bytes consumed (a multiple of 24).
std::size_t encode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, Variant variant);

/// Decodes 32-character blocks while at least 45 characters remain, stopping
/// before the first block that fails validation. Returns characters consumed.
std::size_t decode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, std::size_t out_capacity,
                          Variant variant);

std::size_t despace(std::uint8_t* buf, std::size_t n, const CompactionEntry* table);

Block32 enc_reshuffle(const Block32& raw);
Block32 translate_to_ascii(const Block32& sixbit, Variant variant);
TranslateOutcome translate_from_ascii(const Block32& chars, Variant variant);
Block32 dec_reshuffle(const Block32& sixbit);

}  // namespace emulated

#ifdef FASTB64_HAVE_AVX2_BACKEND
namespace avx2 {

extern const VectorOps kOps;

std::size_t encode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, Variant variant);
std::size_t decode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, std::size_t out_capacity,
                          Variant variant);
std::size_t despace(std::uint8_t* buf, std::size_t n, const CompactionEntry* table);

Block32 enc_reshuffle(const Block32& raw);
Block32 translate_to_ascii(const Block32& sixbit, Variant variant);
TranslateOutcome translate_from_ascii(const Block32& chars, Variant variant);
Block32 dec_reshuffle(const Block32& sixbit);

}  // namespace avx2
#endif

}  // namespace fastb64::detail
