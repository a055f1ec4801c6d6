// Copyright 2026 The kolmoverify Authors
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

#ifndef KOLMOVERIFY_TOOLS_CLI_HPP_
#define KOLMOVERIFY_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kolmoverify/bittape.hpp"

namespace kolmoverify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitError = 2;

// Samples file: a header line "m=<bits>", then one hex bitstring per line
// (ceil(m/4) digits); blank lines separate tuple blocks.
struct SamplesFile {
  unsigned m = 0;
  std::vector<std::vector<BitTape>> blocks;

  std::vector<BitTape> Flatten() const;
};
SamplesFile ParseSamples(const std::string& text);
SamplesFile ReadSamples(const std::string& path);
std::string FormatSamples(const SamplesFile& f);

// Flat JSON object of option names to values; arrays are not allowed.
std::map<std::string, std::string> ParseConfig(const std::string& json_text);

struct Environment {
  std::optional<std::string> seed;  // KOLMOVERIFY_SEED
  std::string data_dir;             // directory holding goldens.json
};
Environment EnvironmentFromProcess();

// Runs one command line (without argv[0]); returns the exit code.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);

}  // namespace kolmoverify::cli

#endif  // KOLMOVERIFY_TOOLS_CLI_HPP_
