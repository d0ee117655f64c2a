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
#include <stdexcept>
#include <string>

#include "fastb64/error.hpp"

namespace fastb64::detail {

inline void require_capacity(std::size_t have, std::size_t need, const char* what) {
  if (have < need) {
    throw std::length_error(std::string(what) + ": output buffer holds " + std::to_string(have) +
                            " bytes, needs " + std::to_string(need));
  }
}

/// Re-expresses a result computed on a suffix in whole-buffer coordinates.
inline DecodeResult rebase(DecodeResult r, std::size_t in_offset, std::size_t out_offset) {
  r.written += out_offset;
  if (r.error) r.error->offset += in_offset;
  return r;
}

inline DecodeResult fail(DecodeErrorKind kind, std::size_t offset, std::size_t written) {
  return DecodeResult{written, DecodeError{kind, offset}};
}

}  // namespace fastb64::detail
