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

#include "fastb64/codec.hpp"

#include <cstdlib>
#include <vector>

#include "detail.hpp"

namespace fastb64 {

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::Auto: return "auto";
    case Engine::Scalar: return "scalar";
    case Engine::Simd: return "simd";
    case Engine::Emulated: return "emulated";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  for (Engine e : {Engine::Auto, Engine::Scalar, Engine::Simd, Engine::Emulated}) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

std::string_view error_kind_name(DecodeErrorKind kind) noexcept {
  switch (kind) {
    case DecodeErrorKind::InvalidCharacter: return "InvalidCharacter";
    case DecodeErrorKind::InvalidPadding: return "InvalidPadding";
    case DecodeErrorKind::NonCanonicalTrailingBits: return "NonCanonicalTrailingBits";
    case DecodeErrorKind::TruncatedInput: return "TruncatedInput";
  }
  return "Unknown";
}

std::string to_string(const DecodeError& error) {
  return std::string(error_kind_name(error.kind)) + " at byte " + std::to_string(error.offset);
}

Engine resolve_engine(Engine engine) {
  if (engine == Engine::Auto) {
    if (const char* env = std::getenv("FASTB64_ENGINE")) {
      if (auto parsed = parse_engine(env)) engine = *parsed;
    }
  }
  switch (engine) {
    case Engine::Auto: return hardware_available() ? Engine::Simd : Engine::Scalar;
    case Engine::Simd:
      if (!hardware_available()) {
        throw UnsupportedBackend("engine 'simd' needs AVX2, which this machine does not provide");
      }
      return Engine::Simd;
    default: return engine;
  }
}

std::size_t encode(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, const CodecConfig& config,
                   Engine engine) {
  switch (resolve_engine(engine)) {
    case Engine::Simd: return encode_simd(in, out, config, Backend::Hardware);
    case Engine::Emulated: return encode_simd(in, out, config, Backend::Emulated);
    default: return encode_scalar_fast(in, out, config);
  }
}

std::string encode(std::span<const std::uint8_t> in, const CodecConfig& config, Engine engine) {
  std::string out(encoded_length(in.size(), config.padding), '\0');
  encode(in, std::span(reinterpret_cast<std::uint8_t*>(out.data()), out.size()), config, engine);
  return out;
}

namespace {

// Offset of the `kept`-th non-whitespace byte of `original`.
std::size_t original_offset(std::span<const std::uint8_t> original, std::size_t kept) {
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (is_despace_byte(original[i])) continue;
    if (kept == 0) return i;
    --kept;
  }
  return original.size();
}

DecodeResult run_decoder(Engine engine, std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                         const CodecConfig& config) {
  switch (engine) {
    case Engine::Simd: return decode_simd(in, out, config, Backend::Hardware);
    case Engine::Emulated: return decode_simd(in, out, config, Backend::Emulated);
    default: return decode_scalar_fast(in, out, config);
  }
}

}  // namespace

DecodeResult decode(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, const CodecConfig& config,
                    Engine engine) {
  detail::require_capacity(out.size(), decoded_max_length(in.size()), "decode");
  const Engine resolved = resolve_engine(engine);

  std::vector<std::uint8_t> despaced;
  std::span<const std::uint8_t> text = in;
  if (config.ignore_whitespace) {
    despaced.assign(in.begin(), in.end());
    std::size_t n = 0;
    switch (resolved) {
      case Engine::Simd: n = despace_simd(despaced, Backend::Hardware); break;
      case Engine::Emulated: n = despace_simd(despaced, Backend::Emulated); break;
      default: n = despace_scalar(despaced); break;
    }
    text = std::span<const std::uint8_t>(despaced.data(), n);
  }

  DecodeResult r = run_decoder(resolved, text, out, config);
  if (r.ok() && config.strict) r.error = validate_canonical(text, config.variant);
  if (r.error && config.ignore_whitespace) r.error->offset = original_offset(in, r.error->offset);
  return r;
}

DecodeOutput decode(std::span<const std::uint8_t> in, const CodecConfig& config, Engine engine) {
  DecodeOutput result;
  result.bytes.resize(decoded_max_length(in.size()));
  const DecodeResult r = decode(in, result.bytes, config, engine);
  result.bytes.resize(r.written);
  result.error = r.error;
  return result;
}

}  // namespace fastb64
