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

#include "backends.hpp"
#include "fastb64/error.hpp"

namespace fastb64::detail {

inline void require_hardware() {
  if (!hardware_available()) {
    throw UnsupportedBackend("hardware vector backend (AVX2) is not available on this machine");
  }
}

// Calls emulated::name(args...) or avx2::name(args...) for the given backend.
#ifdef FASTB64_HAVE_AVX2_BACKEND
#define FASTB64_DISPATCH(backend, name, ...)                                 \
  ((backend) == ::fastb64::Backend::Hardware                                 \
       ? (::fastb64::detail::require_hardware(), ::fastb64::detail::avx2::name(__VA_ARGS__)) \
       : ::fastb64::detail::emulated::name(__VA_ARGS__))
#else
#define FASTB64_DISPATCH(backend, name, ...)                                 \
  ((backend) == ::fastb64::Backend::Hardware                                 \
       ? (::fastb64::detail::require_hardware(), ::fastb64::detail::emulated::name(__VA_ARGS__)) \
       : ::fastb64::detail::emulated::name(__VA_ARGS__))
#endif

}  // namespace fastb64::detail
