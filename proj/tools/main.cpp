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

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fastb64/bench.hpp"
#include "fastb64/codec.hpp"
#include "stream.hpp"

namespace {

using namespace fastb64;

constexpr int kExitOk = 0;
constexpr int kExitDecodeError = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  bool url_safe = false;
  bool no_pad = false;
  bool ignore_whitespace = false;
  bool strict = false;
  bool bench = false;
  std::string engine = "auto";
  std::string input;
  std::string output;

  CodecConfig config() const {
    CodecConfig c;
    c.variant = url_safe ? Variant::UrlSafe : Variant::Standard;
    c.padding = no_pad ? Padding::Omitted : Padding::Required;
    c.ignore_whitespace = ignore_whitespace;
    c.strict = strict;
    return c;
  }
};

struct BenchFlags {
  std::vector<std::string> sizes;
  std::vector<std::string> codecs;
  std::uint64_t seed = 42;
  std::size_t reps = kMinBenchRepetitions;
  std::string format = "table";
};

void add_codec_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--url-safe", f.url_safe, "Use the URL and filename safe alphabet (- and _)");
  cmd->add_flag("--no-pad", f.no_pad, "encode: omit '='; decode: accept unpadded tails");
  cmd->add_option("--engine", f.engine, "Implementation to use")
      ->check(CLI::IsMember({"auto", "scalar", "simd", "emulated"}))
      ->default_str("auto");
  cmd->add_option("-o,--output", f.output, "Write to FILE instead of standard output");
  cmd->add_option("input", f.input, "Input file (standard input when omitted or '-')");
  cmd->add_flag("--bench", f.bench, "Benchmark this direction instead of transcoding");
}

void add_bench_flags(CLI::App* cmd, BenchFlags& b) {
  cmd->add_option("--sizes", b.sizes, "Payload sizes in bytes (K/M suffixes allowed); default 8 to 64K")
      ->delimiter(',');
  cmd->add_option("--codecs", b.codecs, "Subset of scalar,scalar-fast,simd,emulated")
      ->delimiter(',')
      ->check(CLI::IsMember({"scalar", "scalar-fast", "simd", "emulated"}));
  cmd->add_option("--seed", b.seed, "Seed for the random payloads");
  cmd->add_option("--reps", b.reps, "Repetitions per measurement")->check(CLI::Range(kMinBenchRepetitions, std::size_t{1} << 30));
  cmd->add_option("--format", b.format, "Report format")->check(CLI::IsMember({"table", "csv"}));
}

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(text, &pos);
  std::size_t mult = 1;
  const std::string suffix = text.substr(pos);
  if (suffix == "K" || suffix == "k" || suffix == "KiB") {
    mult = 1024;
  } else if (suffix == "M" || suffix == "m" || suffix == "MiB") {
    mult = 1024 * 1024;
  } else if (!suffix.empty()) {
    throw std::invalid_argument("bad size '" + text + "'");
  }
  return static_cast<std::size_t>(v) * mult;
}

std::vector<std::string> codecs_for(Engine engine) {
  switch (engine) {
    case Engine::Scalar: return {"scalar", "scalar-fast"};
    case Engine::Simd: return {"simd"};
    case Engine::Emulated: return {"emulated"};
    default: return {"scalar", "scalar-fast", "simd", "emulated"};
  }
}

int run_bench_command(const BenchFlags& b, const CodecConfig& config, std::vector<BenchDirection> directions,
                      std::vector<std::string> default_codecs, std::ostream& out) {
  BenchOptions options;
  if (b.sizes.empty()) {
    options.sizes = power_of_two_sizes(3, 16);
  } else {
    for (const auto& s : b.sizes) options.sizes.push_back(parse_size(s));
  }
  options.codecs = b.codecs.empty() ? std::move(default_codecs) : b.codecs;
  options.directions = std::move(directions);
  options.seed = b.seed;
  options.repetitions = b.reps;
  options.config = config;
  options.config.ignore_whitespace = false;
  options.config.strict = false;
  const BenchReport report = run_bench(options);
  if (b.format == "csv") {
    write_csv(out, report);
  } else {
    write_table(out, report);
  }
  return kExitOk;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool is_terminal() const { return !file_ && isatty(STDOUT_FILENO); }
  void discard() {
    if (!file_) return;
    file_->close();
    std::remove(path_.c_str());
  }
  void finish() {
    stream().flush();
    if (!stream()) throw std::ios_base::failure("write failed");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

int run_transcode(bool encoding, const CommonFlags& f) {
  tools::StreamOptions options;
  options.config = f.config();
  options.engine = *parse_engine(f.engine);
  // Fail before touching any file when the engine cannot run here.
  resolve_engine(options.engine);

  std::unique_ptr<std::ifstream> file;
  std::istream* in = &std::cin;
  if (!f.input.empty() && f.input != "-") {
    file = std::make_unique<std::ifstream>(f.input, std::ios::binary);
    if (!*file) throw std::ios_base::failure("cannot open '" + f.input + "'");
    in = file.get();
  }
  Output out(f.output);

  const tools::StreamStatus status =
      encoding ? tools::encode_stream(*in, out.stream(), options) : tools::decode_stream(*in, out.stream(), options);
  if (in->bad()) throw std::ios_base::failure("read failed");
  if (status.error) {
    out.stream().flush();
    out.discard();
    std::cerr << "error: " << to_string(*status.error) << "\n";
    return kExitDecodeError;
  }
  if (encoding && out.is_terminal()) out.stream() << '\n';
  out.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"fastb64: base64 encoder and decoder with vectorized kernels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fastb64 0.1.0");

  CommonFlags enc_flags, dec_flags;
  BenchFlags enc_bench, dec_bench, bench_flags;
  bool bench_url_safe = false, bench_no_pad = false;

  CLI::App* enc = app.add_subcommand("encode", "Binary to base64");
  add_codec_flags(enc, enc_flags);

  CLI::App* dec = app.add_subcommand("decode", "Base64 to binary");
  add_codec_flags(dec, dec_flags);
  dec->add_flag("--ignore-whitespace", dec_flags.ignore_whitespace, "Skip spaces, LF and CR");
  dec->add_flag("--strict", dec_flags.strict, "Reject non-canonical trailing bits");

  for (auto [cmd, flags] : {std::pair{enc, &enc_bench}, std::pair{dec, &dec_bench}}) {
    auto* group = cmd->add_option_group("bench", "Options for --bench");
    add_bench_flags(group, *flags);
  }

  CLI::App* bench = app.add_subcommand("bench", "Time every codec on random payloads");
  add_bench_flags(bench, bench_flags);
  bench->add_flag("--url-safe", bench_url_safe, "Use the URL and filename safe alphabet");
  bench->add_flag("--no-pad", bench_no_pad, "Omit padding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench) {
      CodecConfig config;
      config.variant = bench_url_safe ? Variant::UrlSafe : Variant::Standard;
      config.padding = bench_no_pad ? Padding::Omitted : Padding::Required;
      return run_bench_command(bench_flags, config, {BenchDirection::Encode, BenchDirection::Decode},
                               codecs_for(Engine::Auto), std::cout);
    }
    const bool encoding = enc->parsed();
    const CommonFlags& flags = encoding ? enc_flags : dec_flags;
    if (flags.bench) {
      return run_bench_command(encoding ? enc_bench : dec_bench, flags.config(),
                               {encoding ? BenchDirection::Encode : BenchDirection::Decode},
                               codecs_for(*parse_engine(flags.engine)), std::cout);
    }
    return run_transcode(encoding, flags);
  } catch (const UnsupportedBackend& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
