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

#include "fastb64/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define FASTB64_HAVE_TSC 1
#endif

#include "fastb64/scalar_codec.hpp"
#include "fastb64/simd_decoder.hpp"
#include "fastb64/simd_encoder.hpp"

namespace fastb64 {
namespace {

using Clock = std::chrono::steady_clock;

// Shortest timed batch of calls per repetition, in nanoseconds.
constexpr double kMinBatchNs = 2000.0;

inline void clobber_memory() {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" ::: "memory");
#endif
}

inline std::uint64_t read_cycles() {
#ifdef FASTB64_HAVE_TSC
  return __rdtsc();
#else
  return 0;
#endif
}

struct Timing {
  double min_ns = 0;
  double mean_ns = 0;
  std::optional<double> min_cycles;
};

Timing time_call(const std::function<void()>& fn, std::size_t reps) {
  fn();  // warm caches and lazily built tables
  const auto t0 = Clock::now();
  fn();
  const double one = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
  const auto batch = static_cast<std::size_t>(std::clamp(std::ceil(kMinBatchNs / std::max(one, 1.0)), 1.0, 1e6));

  Timing t;
  t.min_ns = std::numeric_limits<double>::infinity();
  double total = 0;
  double min_cycles = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < reps; ++r) {
    const std::uint64_t c0 = read_cycles();
    const auto start = Clock::now();
    for (std::size_t b = 0; b < batch; ++b) {
      fn();
      clobber_memory();
    }
    const auto stop = Clock::now();
    const std::uint64_t c1 = read_cycles();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(batch);
    t.min_ns = std::min(t.min_ns, ns);
    total += ns;
    min_cycles = std::min(min_cycles, static_cast<double>(c1 - c0) / static_cast<double>(batch));
  }
  t.mean_ns = total / static_cast<double>(reps);
#ifdef FASTB64_HAVE_TSC
  t.min_cycles = min_cycles;
#endif
  return t;
}

struct CodecEntry {
  std::string name;
  std::function<std::size_t(std::span<const std::uint8_t>, std::span<std::uint8_t>, const CodecConfig&)> encode;
  std::function<DecodeResult(std::span<const std::uint8_t>, std::span<std::uint8_t>, const CodecConfig&)> decode;
  bool needs_hardware = false;
};

std::optional<CodecEntry> find_codec(const std::string& name) {
  if (name == "scalar") return CodecEntry{name, encode_scalar, decode_scalar, false};
  if (name == "scalar-fast") return CodecEntry{name, encode_scalar_fast, decode_scalar_fast, false};
  if (name == "simd" || name == "emulated") {
    const Backend backend = name == "simd" ? Backend::Hardware : Backend::Emulated;
    return CodecEntry{
        name,
        [backend](auto in, auto out, const CodecConfig& c) { return encode_simd(in, out, c, backend); },
        [backend](auto in, auto out, const CodecConfig& c) { return decode_simd(in, out, c, backend); },
        backend == Backend::Hardware};
  }
  return std::nullopt;
}

std::vector<std::uint8_t> random_payload(std::uint64_t seed, std::size_t size) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (size + 1)));
  std::vector<std::uint8_t> data(size);
  for (auto& b : data) b = static_cast<std::uint8_t>(rng());
  return data;
}

}  // namespace

std::vector<std::size_t> power_of_two_sizes(unsigned lo, unsigned hi) {
  std::vector<std::size_t> sizes;
  for (unsigned k = lo; k <= hi; ++k) sizes.push_back(std::size_t{1} << k);
  return sizes;
}

std::string direction_name(BenchDirection direction) {
  return direction == BenchDirection::Encode ? "encode" : "decode";
}

BenchReport run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw std::invalid_argument("run_bench: sizes must not be empty");
  if (options.repetitions < kMinBenchRepetitions) {
    throw std::invalid_argument("run_bench: at least " + std::to_string(kMinBenchRepetitions) +
                                " repetitions are required");
  }
  std::vector<CodecEntry> codecs;
  for (const auto& name : options.codecs) {
    auto entry = find_codec(name);
    if (!entry) throw std::invalid_argument("run_bench: unknown codec '" + name + "'");
    codecs.push_back(std::move(*entry));
  }
  const bool hw = hardware_available();
  const CodecConfig& config = options.config;

  BenchReport report;
  report.seed = options.seed;

  for (std::size_t size : options.sizes) {
    const std::vector<std::uint8_t> payload = random_payload(options.seed, size);
    std::vector<std::uint8_t> text(encoded_length(size, config.padding));
    encode_scalar(payload, text, config);
    std::vector<std::uint8_t> enc_out(text.size());
    std::vector<std::uint8_t> dec_out(decoded_max_length(text.size()));

    // Every runnable codec must agree before anything is timed.
    for (const auto& c : codecs) {
      if (c.needs_hardware && !hw) continue;
      std::fill(enc_out.begin(), enc_out.end(), 0);
      c.encode(payload, enc_out, config);
      const DecodeResult r = c.decode(text, dec_out, config);
      if (enc_out != text || !r.ok() || r.written != size ||
          !std::equal(payload.begin(), payload.end(), dec_out.begin())) {
        throw std::runtime_error("run_bench: codec '" + c.name + "' disagrees with the reference at size " +
                                 std::to_string(size));
      }
    }

    for (BenchDirection dir : options.directions) {
      const std::span<const std::uint8_t> source =
          dir == BenchDirection::Encode ? std::span<const std::uint8_t>(payload) : std::span<const std::uint8_t>(text);
      const double bytes = static_cast<double>(std::max<std::size_t>(source.size(), 1));
      std::vector<std::uint8_t> copy_dst(source.size());
      const Timing baseline = time_call(
          [&] {
            if (!source.empty()) std::memcpy(copy_dst.data(), source.data(), source.size());
          },
          options.repetitions);

      for (const auto& c : codecs) {
        BenchRow row;
        row.codec = c.name;
        row.direction = dir;
        row.size = size;
        row.repetitions = options.repetitions;
        row.baseline_ns_per_byte = baseline.min_ns / bytes;
        if (c.needs_hardware && !hw) {
          row.skipped = "skipped: no hardware backend";
          report.rows.push_back(std::move(row));
          continue;
        }
        const Timing t = dir == BenchDirection::Encode
                             ? time_call([&] { c.encode(payload, enc_out, config); }, options.repetitions)
                             : time_call([&] { (void)c.decode(text, dec_out, config); }, options.repetitions);
        row.min_ns = t.min_ns;
        row.mean_ns = t.mean_ns;
        row.ns_per_byte = t.min_ns / bytes;
        if (t.min_cycles) row.cycles_per_byte = *t.min_cycles / bytes;
        row.unstable = t.mean_ns > t.min_ns * (1.0 + kBenchStabilityTolerance);
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

void write_table(std::ostream& os, const BenchReport& report) {
  os << "seed " << report.seed << " (ns/byte: minimum over repetitions; '*' marks mean > min + "
     << static_cast<int>(kBenchStabilityTolerance * 100) << "%)\n";
  os << std::left << std::setw(12) << "codec" << std::setw(8) << "dir" << std::right << std::setw(10) << "size"
     << std::setw(7) << "reps" << std::setw(13) << "min ns" << std::setw(13) << "mean ns" << std::setw(11)
     << "ns/byte" << std::setw(11) << "cyc/byte" << std::setw(11) << "memcpy" << "\n";
  for (const BenchRow& r : report.rows) {
    os << std::left << std::setw(12) << r.codec << std::setw(8) << direction_name(r.direction) << std::right
       << std::setw(10) << r.size;
    if (r.skipped) {
      os << "  " << *r.skipped << "\n";
      continue;
    }
    os << std::setw(7) << r.repetitions << std::fixed << std::setprecision(1) << std::setw(13) << r.min_ns
       << std::setw(13) << r.mean_ns << std::setprecision(3) << std::setw(11) << r.ns_per_byte << std::setw(11);
    if (r.cycles_per_byte) {
      os << *r.cycles_per_byte;
    } else {
      os << "-";
    }
    os << std::setw(11) << r.baseline_ns_per_byte << (r.unstable ? " *" : "") << "\n";
    os.unsetf(std::ios::fixed);
  }
}

void write_csv(std::ostream& os, const BenchReport& report) {
  os << "codec,direction,size,reps,min_ns,mean_ns,ns_per_byte,cycles_per_byte,baseline_ns_per_byte\n";
  for (const BenchRow& r : report.rows) {
    if (r.skipped) continue;
    os << r.codec << ',' << direction_name(r.direction) << ',' << r.size << ',' << r.repetitions << ','
       << r.min_ns << ',' << r.mean_ns << ',' << r.ns_per_byte << ',';
    if (r.cycles_per_byte) os << *r.cycles_per_byte;
    os << ',' << r.baseline_ns_per_byte << '\n';
  }
}

}  // namespace fastb64
