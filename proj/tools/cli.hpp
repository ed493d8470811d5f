// Copyright 2026 The phasespace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace phasespace::cli {

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

enum class Subcommand { wigner, stabilizers, metaplectic, verify };
enum class Format { json, csv };

struct CliConfig {
    Subcommand subcommand = Subcommand::verify;
    std::int64_t d = 0;
    std::optional<std::string> state_input;
    std::optional<std::string> matrix_input;
    int samples = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    Format format = Format::json;
    std::optional<std::string> output_path;
    bool normalize = false;
    bool amplitudes = false;
    unsigned threads = 1;
};

/// Parses and dispatches; machine-readable output goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a failed verification and 2 on a usage or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_wigner(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_stabilizers(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_metaplectic(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace phasespace::cli
