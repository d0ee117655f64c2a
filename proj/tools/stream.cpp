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

#include "stream.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <vector>

namespace fastb64::tools {
namespace {

std::size_t read_full(std::istream& in, std::vector<std::uint8_t>& buf) {
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  return static_cast<std::size_t>(in.gcount());
}

void write_all(std::ostream& out, const std::uint8_t* data, std::size_t n) {
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!out) throw std::ios_base::failure("write failed");
}

std::size_t despace(std::span<std::uint8_t> buf, Engine engine) {
  switch (engine) {
    case Engine::Simd: return despace_simd(buf, Backend::Hardware);
    case Engine::Emulated: return despace_simd(buf, Backend::Emulated);
    default: return despace_scalar(buf);
  }
}

}  // namespace

StreamStatus encode_stream(std::istream& in, std::ostream& out, const StreamOptions& options) {
  const Engine engine = resolve_engine(options.engine);
  std::vector<std::uint8_t> raw(3 * options.chunk_groups);
  std::vector<std::uint8_t> text(4 * options.chunk_groups);
  StreamStatus status;
  // Every chunk but the last is a whole number of 3-byte groups, so padding
  // can only ever be emitted for the final one.
  for (;;) {
    const std::size_t n = read_full(in, raw);
    if (n == 0) break;
    const std::size_t m = encode(std::span(raw.data(), n), text, options.config, engine);
    write_all(out, text.data(), m);
    status.bytes_in += n;
    status.bytes_out += m;
    if (n < raw.size()) break;
  }
  return status;
}

StreamStatus decode_stream(std::istream& in, std::ostream& out, const StreamOptions& options) {
  const Engine engine = resolve_engine(options.engine);
  const bool skip_space = options.config.ignore_whitespace;

  CodecConfig body_config = options.config;
  body_config.ignore_whitespace = false;
  body_config.strict = false;
  CodecConfig final_config = body_config;
  final_config.strict = options.config.strict;

  std::vector<std::uint8_t> raw(4 * options.chunk_groups);
  std::vector<std::uint8_t> scratch;
  std::vector<std::uint8_t> seg;
  std::vector<std::uint64_t> carry_pos;  // stream offsets of the carried characters
  std::vector<std::uint8_t> decoded;
  StreamStatus status;

  std::uint64_t chunk_base = 0;
  std::size_t chunk_len = 0;

  // Stream offset of seg[k]. Characters past the carry come from the raw
  // chunk that was read last.
  const auto position_of = [&](std::size_t k) -> std::uint64_t {
    if (k < carry_pos.size()) return carry_pos[k];
    std::size_t want = k - carry_pos.size();
    if (!skip_space) return chunk_base + want;
    for (std::size_t i = 0; i < chunk_len; ++i) {
      if (is_despace_byte(raw[i])) continue;
      if (want-- == 0) return chunk_base + i;
    }
    return chunk_base + chunk_len;
  };

  const auto fail = [&](DecodeError e) {
    status.error = DecodeError{e.kind, static_cast<std::size_t>(position_of(e.offset))};
    return status;
  };

  for (;;) {
    const std::size_t n = read_full(in, raw);
    if (n == 0) break;
    chunk_len = n;
    status.bytes_in += n;

    if (skip_space) {
      scratch.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n));
      scratch.resize(despace(scratch, engine));
      seg.insert(seg.end(), scratch.begin(), scratch.end());
    } else {
      seg.insert(seg.end(), raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n));
    }

    // Hold back the last (possibly partial) quad: only the end of the stream
    // may carry padding or a short tail.
    const std::size_t tail = seg.size() % 4 == 0 ? std::min<std::size_t>(4, seg.size()) : seg.size() % 4;
    const std::size_t body = seg.size() - tail;
    if (body > 0) {
      decoded.resize(decoded_max_length(body));
      const DecodeResult r = decode(std::span(seg.data(), body), decoded, body_config, engine);
      if (r.error) return fail(*r.error);
      if (r.written != body / 4 * 3) {
        const auto quad = seg.begin() + static_cast<std::ptrdiff_t>(body - 4);
        const auto pad = std::find(quad, quad + 4, kPad);
        return fail({DecodeErrorKind::InvalidPadding, static_cast<std::size_t>(pad - seg.begin())});
      }
      write_all(out, decoded.data(), r.written);
      status.bytes_out += r.written;
    }

    std::vector<std::uint64_t> next_pos(tail);
    for (std::size_t k = 0; k < tail; ++k) next_pos[k] = position_of(body + k);
    carry_pos = std::move(next_pos);
    seg.erase(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(body));
    chunk_base += n;
    chunk_len = 0;
    if (n < raw.size()) break;
  }

  decoded.resize(decoded_max_length(seg.size()));
  const DecodeResult r = decode(seg, decoded, final_config, engine);
  if (r.error) return fail(*r.error);
  write_all(out, decoded.data(), r.written);
  status.bytes_out += r.written;
  return status;
}

}  // namespace fastb64::tools
