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

// Reference models written without the library's tables, plus helpers shared by
// the test binaries.

#include <sys/mman.h>
#include <unistd.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fastb64::testing {

inline constexpr std::string_view kStandardChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
inline constexpr std::string_view kUrlSafeChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

inline std::string_view oracle_chars(bool url_safe) { return url_safe ? kUrlSafeChars : kStandardChars; }

/// Position of `c` in the alphabet string, by linear search.
inline std::optional<unsigned> oracle_index(std::uint8_t c, bool url_safe = false) {
  const auto pos = oracle_chars(url_safe).find(static_cast<char>(c));
  if (c == 0 || pos == std::string_view::npos) return std::nullopt;
  return static_cast<unsigned>(pos);
}

/// Bit-serial encoder: pushes the input through a bit accumulator six bits at
/// a time, then pads.
inline std::string oracle_encode(std::span<const std::uint8_t> in, bool url_safe = false, bool pad = true) {
  const std::string_view chars = oracle_chars(url_safe);
  std::string out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (std::uint8_t b : in) {
    acc = (acc << 8) | b;
    bits += 8;
    while (bits >= 6) {
      bits -= 6;
      out.push_back(chars[(acc >> bits) & 63]);
    }
  }
  if (bits > 0) out.push_back(chars[(acc << (6 - bits)) & 63]);
  if (pad) {
    while (out.size() % 4 != 0) out.push_back('=');
  }
  return out;
}

inline std::string oracle_encode(std::string_view in, bool url_safe = false, bool pad = true) {
  return oracle_encode(std::span(reinterpret_cast<const std::uint8_t*>(in.data()), in.size()), url_safe, pad);
}

/// Bit-serial decoder for well-formed input (padding optional). Returns
/// nullopt on anything it does not understand; it does not classify errors.
inline std::optional<std::vector<std::uint8_t>> oracle_decode(std::string_view text, bool url_safe = false) {
  while (!text.empty() && text.back() == '=') text.remove_suffix(1);
  std::vector<std::uint8_t> out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (char ch : text) {
    const auto v = oracle_index(static_cast<std::uint8_t>(ch), url_safe);
    if (!v) return std::nullopt;
    acc = (acc << 6) | *v;
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>(acc >> bits));
    }
  }
  return out;
}

/// Packs four 6-bit values into three bytes with plain shifts.
inline void oracle_pack_quad(const std::uint8_t* v, std::uint8_t* out) {
  const std::uint32_t w = (std::uint32_t{v[0]} << 18) | (std::uint32_t{v[1]} << 12) | (std::uint32_t{v[2]} << 6) | v[3];
  out[0] = static_cast<std::uint8_t>(w >> 16);
  out[1] = static_cast<std::uint8_t>(w >> 8);
  out[2] = static_cast<std::uint8_t>(w);
}

inline std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

inline std::string string_of(std::span<const std::uint8_t> b) { return {b.begin(), b.end()}; }

inline std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

/// Lengths 0..200 plus the boundary sizes around 4 KiB and 64 KiB.
inline std::size_t random_length(std::mt19937_64& rng) {
  static constexpr std::size_t kLarge[] = {4095, 4096, 4097, 65536};
  const auto pick = rng() % 220;
  if (pick < 201) return static_cast<std::size_t>(pick);
  if (pick < 219) return kLarge[pick % 3];
  return kLarge[3];
}

/// A readable region whose last byte sits directly before an inaccessible page
/// (or whose first byte sits directly after one), so any stray access faults.
class GuardedBuffer {
 public:
  enum class Guard { After, Before };

  explicit GuardedBuffer(std::size_t size, Guard guard = Guard::After) : size_(size) {
    page_ = static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
    const std::size_t data_pages = (size + page_ - 1) / page_;
    mapped_ = (data_pages + 2) * page_;
    void* p = mmap(nullptr, mapped_, PROT_READ | PROT_WRITE, MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
    if (p == MAP_FAILED) throw std::runtime_error("mmap failed");
    base_ = static_cast<std::uint8_t*>(p);
    mprotect(base_, page_, PROT_NONE);
    mprotect(base_ + (data_pages + 1) * page_, page_, PROT_NONE);
    data_ = guard == Guard::After ? base_ + (data_pages + 1) * page_ - size : base_ + page_;
  }
  GuardedBuffer(const GuardedBuffer&) = delete;
  GuardedBuffer& operator=(const GuardedBuffer&) = delete;
  ~GuardedBuffer() { munmap(base_, mapped_); }

  std::uint8_t* data() { return data_; }
  std::size_t size() const { return size_; }
  std::span<std::uint8_t> span() { return {data_, size_}; }

  void assign(std::span<const std::uint8_t> src) {
    if (src.size() != size_) throw std::length_error("GuardedBuffer::assign size mismatch");
    if (size_ != 0) std::memcpy(data_, src.data(), size_);
  }

 private:
  std::size_t size_;
  std::size_t page_ = 0;
  std::size_t mapped_ = 0;
  std::uint8_t* base_ = nullptr;
  std::uint8_t* data_ = nullptr;
};

}  // namespace fastb64::testing
