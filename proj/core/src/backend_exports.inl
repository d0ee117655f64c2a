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

// Exported backend entry points. Included inside the backend's namespace,
// after kernels.inl and a `kBackend` constant.

const VectorOps kOps = {
    kBackend,
    &lift2<&Ops::shuffle_bytes_in_lanes>,
    &lift2<&Ops::mulhi_u16>,
    &lift2<&Ops::mullo_i16>,
    &lift2<&Ops::maddubs>,
    &lift2<&Ops::madd_i16>,
    &lift2<&Ops::add_i8_wrapping>,
    &lift2<&Ops::saturating_sub_u8>,
    &lift2<&Ops::bit_and>,
    &lift2<&Ops::bit_or>,
    &lift2<&Ops::cmpeq_i8>,
    &lift2<&Ops::cmpgt_i8>,
    &lift_shr32,
    &lift2<&Ops::permute32_across_lanes>,
    &lift_testz,
    &lift_load32,
    &lift_load32_partial,
    &lift_store32,
    &lift_store24,
    &lift16<&Ops::cmpeq16_i8>,
    &lift16<&Ops::bit_or16>,
    &lift16<&Ops::shuffle16>,
    &lift_movemask16,
};

std::size_t encode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, Variant variant) {
  const EncodeKernel k(kEncodeConstants[variant_index(variant)]);
  return encode_blocks_impl(in, n, out, k);
}

std::size_t decode_blocks(const std::uint8_t* in, std::size_t n, std::uint8_t* out, std::size_t out_capacity,
                          Variant variant) {
  const DecodeKernel k(kDecodeConstants[variant_index(variant)]);
  if (variant == Variant::Standard) return decode_blocks_impl<false>(in, n, out, out_capacity, k);
  return decode_blocks_impl<true>(in, n, out, out_capacity, k);
}

std::size_t despace(std::uint8_t* buf, std::size_t n, const CompactionEntry* table) {
  return despace_impl(buf, n, table);
}

Block32 enc_reshuffle(const Block32& raw) {
  const EncodeKernel k(kEncodeConstants[0]);
  return Ops::to_block(k.reshuffle(Ops::constant(raw)));
}

Block32 translate_to_ascii(const Block32& sixbit, Variant variant) {
  const EncodeKernel k(kEncodeConstants[variant_index(variant)]);
  return Ops::to_block(k.translate(Ops::constant(sixbit)));
}

TranslateOutcome translate_from_ascii(const Block32& chars, Variant variant) {
  const DecodeKernel k(kDecodeConstants[variant_index(variant)]);
  V32 sixbit;
  const bool ok = variant == Variant::Standard ? k.translate<false>(Ops::constant(chars), sixbit)
                                               : k.translate<true>(Ops::constant(chars), sixbit);
  return TranslateOutcome{ok, Ops::to_block(sixbit)};
}

Block32 dec_reshuffle(const Block32& sixbit) {
  const DecodeKernel k(kDecodeConstants[0]);
  return Ops::to_block(k.pack(Ops::constant(sixbit)));
}
