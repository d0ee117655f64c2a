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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "fastb64/codec.hpp"

namespace fastb64::tools {

struct StreamOptions {
  CodecConfig config;
  Engine engine = Engine::Auto;
  /// Encode reads 3 * chunk_groups bytes per step, decode 4 * chunk_groups.
  std::size_t chunk_groups = std::size_t{1} << 16;
};

struct StreamStatus {
  std::uint64_t bytes_in = 0;
  std::uint64_t bytes_out = 0;
  /// Offsets index the whole input stream, whitespace included.
  std::optional<DecodeError> error;
};

// Both throw UnsupportedBackend for an engine the CPU cannot run and
// std::ios_base::failure when the output stream goes bad.
StreamStatus encode_stream(std::istream& in, std::ostream& out, const StreamOptions& options);
StreamStatus decode_stream(std::istream& in, std::ostream& out, const StreamOptions& options);

}  // namespace fastb64::tools
