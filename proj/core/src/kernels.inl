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

// Vector kernels written once against a backend-supplied `Ops` type.
//
// Included inside an anonymous namespace by each backend translation unit
// after it defines `Ops` (types V32/V16 plus the operations used below), so
// every backend gets its own internal-linkage copy.

using V32 = Ops::V32;
using V16 = Ops::V16;

struct EncodeKernel {
  V32 lane_shuffle, mask_ac, mulhi_const, mask_bd, mullo_const, offsets, b51, b26, b13;

  explicit EncodeKernel(const EncodeKernelConstants& c)
      : lane_shuffle(Ops::constant(c.lane_shuffle)),
        mask_ac(Ops::constant(c.mask_ac)),
        mulhi_const(Ops::constant(c.mulhi_const)),
        mask_bd(Ops::constant(c.mask_bd)),
        mullo_const(Ops::constant(c.mullo_const)),
        offsets(Ops::constant(c.offsets)),
        b51(Ops::constant(c.b51)),
        b26(Ops::constant(c.b26)),
        b13(Ops::constant(c.b13)) {}

  // [s1 s0 s2 s1] per word; mulhi moves a and c down, mullo moves b and d up.
  V32 reshuffle(V32 input) const {
    const V32 in = Ops::shuffle_bytes_in_lanes(input, lane_shuffle);
    const V32 t0 = Ops::bit_and(in, mask_ac);
    const V32 t1 = Ops::mulhi_u16(t0, mulhi_const);
    const V32 t2 = Ops::bit_and(in, mask_bd);
    const V32 t3 = Ops::mullo_i16(t2, mullo_const);
    return Ops::bit_or(t1, t3);
  }

  // Inputs are < 64, so the signed compare cannot wrap.
  V32 translate(V32 input) const {
    V32 result = Ops::saturating_sub_u8(input, b51);
    const V32 less = Ops::cmpgt_i8(b26, input);
    result = Ops::bit_or(result, Ops::bit_and(less, b13));
    result = Ops::shuffle_bytes_in_lanes(offsets, result);
    return Ops::add_i8_wrapping(result, input);
  }
};

struct DecodeKernel {
  V32 lut_lo, lut_hi, lut_roll, mask_2F, roll_char, roll_adjust;
  V32 pack_maddubs, pack_madd, pack_shuffle, pack_permute;

  explicit DecodeKernel(const DecodeKernelConstants& c)
      : lut_lo(Ops::constant(c.lut_lo)),
        lut_hi(Ops::constant(c.lut_hi)),
        lut_roll(Ops::constant(c.lut_roll)),
        mask_2F(Ops::constant(c.mask_2F)),
        roll_char(Ops::constant(c.roll_char)),
        roll_adjust(Ops::constant(c.roll_adjust)),
        pack_maddubs(Ops::constant(c.pack_maddubs_const)),
        pack_madd(Ops::constant(c.pack_madd_const)),
        pack_shuffle(Ops::constant(c.pack_shuffle)),
        pack_permute(Ops::constant(c.pack_permute)) {}

  // Returns the validity flag; `sixbit` is meaningful only when it is true.
  // The standard alphabet's roll adjustment is -1, so the AND is skipped.
  template <bool kUrlSafe>
  bool translate(V32 str, V32& sixbit) const {
    V32 hi_nibbles = Ops::shr32(str, 4);
    const V32 lo_nibbles = Ops::bit_and(str, mask_2F);
    const V32 lo = Ops::shuffle_bytes_in_lanes(lut_lo, lo_nibbles);
    V32 eq = Ops::cmpeq_i8(str, roll_char);
    if constexpr (kUrlSafe) eq = Ops::bit_and(eq, roll_adjust);
    hi_nibbles = Ops::bit_and(hi_nibbles, mask_2F);
    const V32 hi = Ops::shuffle_bytes_in_lanes(lut_hi, hi_nibbles);
    const V32 roll = Ops::shuffle_bytes_in_lanes(lut_roll, Ops::add_i8_wrapping(eq, hi_nibbles));
    sixbit = Ops::add_i8_wrapping(str, roll);
    return Ops::testz(lo, hi);
  }

  V32 pack(V32 sixbit) const {
    const V32 merge_ab_and_bc = Ops::maddubs(sixbit, pack_maddubs);
    V32 out = Ops::madd_i16(merge_ab_and_bc, pack_madd);
    out = Ops::shuffle_bytes_in_lanes(out, pack_shuffle);
    return Ops::permute32_across_lanes(out, pack_permute);
  }
};

inline const EncodeKernelConstants kEncodeConstants[2] = {encode_constants(Variant::Standard),
                                                          encode_constants(Variant::UrlSafe)};
inline const DecodeKernelConstants kDecodeConstants[2] = {decode_constants(Variant::Standard),
                                                          decode_constants(Variant::UrlSafe)};

constexpr int variant_index(Variant v) { return v == Variant::Standard ? 0 : 1; }

std::size_t encode_blocks_impl(const std::uint8_t* in, std::size_t n, std::uint8_t* out, const EncodeKernel& k) {
  if (n < kEncodeScalarThreshold) return 0;
  // The first block would start 4 bytes before the buffer; stage it.
  std::uint8_t head[32] = {};
  std::memcpy(head + 4, in, 28);
  Ops::store32(out, k.translate(k.reshuffle(Ops::load32(head))));
  std::size_t i = 24;
  std::uint8_t* dst = out + 32;
  for (; i + kEncodeScalarThreshold <= n; i += 24, dst += 32) {
    Ops::store32(dst, k.translate(k.reshuffle(Ops::load32(in + i - 4))));
  }
  return i;
}

template <bool kUrlSafe>
std::size_t decode_blocks_impl(const std::uint8_t* in, std::size_t n, std::uint8_t* out, std::size_t out_capacity,
                               const DecodeKernel& k) {
  std::size_t i = 0;
  std::size_t o = 0;
  while (n - i >= kDecodeVectorThreshold) {
    V32 sixbit;
    if (!k.template translate<kUrlSafe>(Ops::load32(in + i), sixbit)) break;
    const V32 packed = k.pack(sixbit);
    if (o + 32 <= out_capacity) {
      Ops::store32(out + o, packed);
    } else {
      Ops::store24(out + o, packed);
    }
    i += 32;
    o += 24;
  }
  return i;
}

std::size_t despace_impl(std::uint8_t* buf, std::size_t n, const CompactionEntry* table) {
  const V16 spaces = Ops::constant16(Block16::splat8(' '));
  const V16 newline = Ops::constant16(Block16::splat8('\n'));
  const V16 carriage = Ops::constant16(Block16::splat8('\r'));
  std::size_t i = 0;
  std::size_t w = 0;
  for (; i + 16 <= n; i += 16) {
    V16 v = Ops::load16(buf + i);
    const V16 anywhite =
        Ops::bit_or16(Ops::bit_or16(Ops::cmpeq16_i8(v, spaces), Ops::cmpeq16_i8(v, newline)),
                      Ops::cmpeq16_i8(v, carriage));
    const unsigned mask16 = Ops::movemask16(anywhite);
    v = Ops::shuffle16(v, Ops::load16(table[mask16].data()));
    Ops::store16(buf + w, v);
    w += 16 - Ops::popcount(mask16);
  }
  for (; i < n; ++i) {
    const std::uint8_t c = buf[i];
    buf[w] = c;
    w += kKeepFlag[c];
  }
  return w;
}

template <V32 (*F)(V32, V32)>
Block32 lift2(const Block32& a, const Block32& b) {
  return Ops::to_block(F(Ops::constant(a), Ops::constant(b)));
}

Block32 lift_shr32(const Block32& v, unsigned k) { return Ops::to_block(Ops::shr32(Ops::constant(v), k)); }
bool lift_testz(const Block32& a, const Block32& b) { return Ops::testz(Ops::constant(a), Ops::constant(b)); }
Block32 lift_load32(const std::uint8_t* p) { return Ops::to_block(Ops::load32(p)); }
Block32 lift_load32_partial(const std::uint8_t* p, std::size_t n) { return Ops::to_block(Ops::load32_partial(p, n)); }
void lift_store32(std::uint8_t* p, const Block32& v) { Ops::store32(p, Ops::constant(v)); }
void lift_store24(std::uint8_t* p, const Block32& v) { Ops::store24(p, Ops::constant(v)); }

template <V16 (*F)(V16, V16)>
Block16 lift16(const Block16& a, const Block16& b) {
  return Ops::to_block16(F(Ops::constant16(a), Ops::constant16(b)));
}
std::uint16_t lift_movemask16(const Block16& v) {
  return static_cast<std::uint16_t>(Ops::movemask16(Ops::constant16(v)));
}
