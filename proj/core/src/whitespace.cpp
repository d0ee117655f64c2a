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

#include "fastb64/whitespace.hpp"

#include <bit>
#include <memory>
#include <mutex>

#include "dispatch.hpp"

namespace fastb64 {
namespace {

std::once_flag g_table_once;
std::unique_ptr<CompactionEntry[]> g_table;

void build_table() {
  auto table = std::make_unique<CompactionEntry[]>(65536);
  for (std::uint32_t mask = 0; mask < 65536; ++mask) {
    CompactionEntry& e = table[mask];
    e.fill(0x80);
    std::size_t k = 0;
    for (std::uint8_t i = 0; i < 16; ++i) {
      if ((mask & (1u << i)) == 0) e[k++] = i;
    }
  }
  g_table = std::move(table);
}

}  // namespace

std::span<const CompactionEntry, 65536> compaction_table() {
  std::call_once(g_table_once, build_table);
  return std::span<const CompactionEntry, 65536>(g_table.get(), 65536);
}

void prepare_despace_tables() { (void)compaction_table(); }

std::size_t despace_scalar(std::span<std::uint8_t> buffer) noexcept {
  std::uint8_t* a = buffer.data();
  const std::size_t n = buffer.size();
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t v = a[i];
    a[p] = v;
    p += kKeepFlag[v];
  }
  return p;
}

std::size_t despace_simd(std::span<std::uint8_t> buffer, Backend backend) {
  const CompactionEntry* table = compaction_table().data();
  return FASTB64_DISPATCH(backend, despace, buffer.data(), buffer.size(), table);
}

}  // namespace fastb64
