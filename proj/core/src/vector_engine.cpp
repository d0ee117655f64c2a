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

#include "fastb64/vector_engine.hpp"

#include <cstdlib>
#include <string_view>

#include "backends.hpp"
#include "fastb64/error.hpp"

namespace fastb64 {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(FASTB64_HAVE_AVX2_BACKEND) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

bool disabled_by_environment() noexcept {
  const char* v = std::getenv("FASTB64_DISABLE_HARDWARE");
  return v != nullptr && std::string_view(v) != "" && std::string_view(v) != "0";
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::Hardware ? "hardware" : "emulated";
}

bool hardware_available() noexcept {
  static const bool available = cpu_has_avx2() && !disabled_by_environment();
  return available;
}

Backend default_backend() noexcept { return hardware_available() ? Backend::Hardware : Backend::Emulated; }

const VectorOps& vector_ops(Backend backend) {
  if (backend == Backend::Emulated) return detail::emulated::kOps;
#ifdef FASTB64_HAVE_AVX2_BACKEND
  if (hardware_available()) return detail::avx2::kOps;
#endif
  throw UnsupportedBackend("hardware vector backend (AVX2) is not available on this machine");
}

}  // namespace fastb64
