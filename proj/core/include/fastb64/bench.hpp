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
#include <string>
#include <vector>

#include "fastb64/config.hpp"

namespace fastb64 {

enum class BenchDirection : std::uint8_t { Encode, Decode };

/// One timed (codec, direction, size) combination.
///
/// `size` is the binary payload size. Per-byte figures divide by the bytes the
/// direction consumes: the payload for encode, the encoded text for decode.
struct BenchRow {
  std::string codec;
  BenchDirection direction = BenchDirection::Encode;
  std::size_t size = 0;
  std::size_t repetitions = 0;
  double min_ns = 0;
  double mean_ns = 0;
  double ns_per_byte = 0;
  std::optional<double> cycles_per_byte;
  double baseline_ns_per_byte = 0;
  /// mean exceeds min by more than kBenchStabilityTolerance.
  bool unstable = false;
  /// Set (and timings left at zero) when the codec could not run here.
  std::optional<std::string> skipped;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
};

inline constexpr std::size_t kMinBenchRepetitions = 500;
inline constexpr double kBenchStabilityTolerance = 0.05;

struct BenchOptions {
  std::vector<std::size_t> sizes;
  /// Any of "scalar", "scalar-fast", "simd", "emulated".
  std::vector<std::string> codecs = {"scalar", "scalar-fast", "simd", "emulated"};
  std::vector<BenchDirection> directions = {BenchDirection::Encode, BenchDirection::Decode};
  std::uint64_t seed = 42;
  /// Must be at least kMinBenchRepetitions.
  std::size_t repetitions = kMinBenchRepetitions;
  CodecConfig config;
};

/// Sizes 2^lo .. 2^hi inclusive.
std::vector<std::size_t> power_of_two_sizes(unsigned lo, unsigned hi);

/// Generates seeded random payloads, checks that every codec agrees on every
/// payload, then times each codec plus a memcpy baseline (minimum over the
/// repetitions). Throws std::invalid_argument on bad options and
/// std::runtime_error if the correctness precheck fails.
BenchReport run_bench(const BenchOptions& options);

std::string direction_name(BenchDirection direction);

void write_table(std::ostream& os, const BenchReport& report);

/// Header: codec,direction,size,reps,min_ns,mean_ns,ns_per_byte,cycles_per_byte,baseline_ns_per_byte
/// Skipped rows are omitted; cycles_per_byte is empty without a cycle counter.
void write_csv(std::ostream& os, const BenchReport& report);

}  // namespace fastb64
