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

// AVX2 backend. Everything below the target pragma is compiled for
// AVX2+POPCNT regardless of the global flags; callers reach it only through
// the dispatch in vector_engine.cpp after a CPU feature check.

#include "backends.hpp"

#ifdef FASTB64_HAVE_AVX2_BACKEND

#include <cstddef>
#include <cstdint>
#include <cstring>

#include <immintrin.h>

#include "fastb64/simd_encoder.hpp"

#if defined(__clang__)
#pragma clang attribute push(__attribute__((target("avx2,popcnt"))), apply_to = function)
#elif defined(__GNUC__)
#pragma GCC push_options
#pragma GCC target("avx2,popcnt")
#endif

namespace fastb64::detail::avx2 {
namespace {

struct Ops {
  using V32 = __m256i;
  using V16 = __m128i;

  static V32 constant(const Block32& b) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.bytes.data())); }
  static Block32 to_block(V32 v) {
    Block32 b;
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(b.bytes.data()), v);
    return b;
  }
  static V16 constant16(const Block16& b) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.bytes.data())); }
  static Block16 to_block16(V16 v) {
    Block16 b;
    _mm_storeu_si128(reinterpret_cast<__m128i*>(b.bytes.data()), v);
    return b;
  }

  static V32 load32(const std::uint8_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
  // Staged through zeroed scratch so nothing past p + n is touched.
  static V32 load32_partial(const std::uint8_t* p, std::size_t n) {
    if (n >= 32) return load32(p);
    alignas(32) std::uint8_t scratch[32] = {};
    if (n != 0) std::memcpy(scratch, p, n);
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(scratch));
  }
  static void store32(std::uint8_t* p, V32 v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
  static void store24(std::uint8_t* p, V32 v) {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_castsi256_si128(v));
    _mm_storel_epi64(reinterpret_cast<__m128i*>(p + 16), _mm256_extracti128_si256(v, 1));
  }
  static V16 load16(const std::uint8_t* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }
  static void store16(std::uint8_t* p, V16 v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }

  static V32 shuffle_bytes_in_lanes(V32 v, V32 idx) { return _mm256_shuffle_epi8(v, idx); }
  static V32 mulhi_u16(V32 a, V32 b) { return _mm256_mulhi_epu16(a, b); }
  static V32 mullo_i16(V32 a, V32 b) { return _mm256_mullo_epi16(a, b); }
  static V32 maddubs(V32 a, V32 b) { return _mm256_maddubs_epi16(a, b); }
  static V32 madd_i16(V32 a, V32 b) { return _mm256_madd_epi16(a, b); }
  static V32 add_i8_wrapping(V32 a, V32 b) { return _mm256_add_epi8(a, b); }
  static V32 saturating_sub_u8(V32 a, V32 b) { return _mm256_subs_epu8(a, b); }
  static V32 bit_and(V32 a, V32 b) { return _mm256_and_si256(a, b); }
  static V32 bit_or(V32 a, V32 b) { return _mm256_or_si256(a, b); }
  static V32 cmpeq_i8(V32 a, V32 b) { return _mm256_cmpeq_epi8(a, b); }
  static V32 cmpgt_i8(V32 a, V32 b) { return _mm256_cmpgt_epi8(a, b); }
  static V32 shr32(V32 v, unsigned k) { return _mm256_srl_epi32(v, _mm_cvtsi32_si128(static_cast<int>(k))); }
  static V32 permute32_across_lanes(V32 v, V32 idx) { return _mm256_permutevar8x32_epi32(v, idx); }
  static bool testz(V32 a, V32 b) { return _mm256_testz_si256(a, b) != 0; }

  static V16 cmpeq16_i8(V16 a, V16 b) { return _mm_cmpeq_epi8(a, b); }
  static V16 bit_or16(V16 a, V16 b) { return _mm_or_si128(a, b); }
  static V16 shuffle16(V16 v, V16 idx) { return _mm_shuffle_epi8(v, idx); }
  static unsigned movemask16(V16 v) { return static_cast<unsigned>(_mm_movemask_epi8(v)); }
  static unsigned popcount(unsigned m) { return static_cast<unsigned>(__builtin_popcount(m)); }
};

#include "kernels.inl"

constexpr Backend kBackend = Backend::Hardware;

}  // namespace

#include "backend_exports.inl"

}  // namespace fastb64::detail::avx2

#if defined(__clang__)
#pragma clang attribute pop
#elif defined(__GNUC__)
#pragma GCC pop_options
#endif

#endif  // FASTB64_HAVE_AVX2_BACKEND
