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

#include "cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phasespace/io.hpp"
#include "phasespace/phasespace.hpp"

namespace phasespace::cli {
namespace {

constexpr double kInputNormTolerance = 1e-6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int code(ExitCode c) { return static_cast<int>(c); }

PrimeDim validated_dim(std::int64_t d) {
    if (!PrimeDim::is_odd_prime(d)) {
        throw UsageError("d must be an odd prime (got " + std::to_string(d) + ")");
    }
    return PrimeDim(d);
}

/// Writes `text` to --output when given, else to `out`.
void emit(const CliConfig& config, const std::string& text, std::ostream& out) {
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot open output file '" + *config.output_path + "'");
        }
        file << text;
        return;
    }
    out << text;
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

/// A literal JSON string, or "@path" to read it from a file.
std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) {
            throw UsageError("cannot read state file '" + arg.substr(1) + "'");
        }
        std::stringstream ss;
        ss << file.rdbuf();
        return ss.str();
    }
    return arg;
}

std::vector<std::int64_t> parse_matrix(const std::string& text) {
    std::vector<std::int64_t> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
                ++used;
            }
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError("matrix entry '" + item + "' is not an integer");
        }
    }
    if (entries.size() != 4) {
        throw UsageError("matrix must be four comma-separated integers a,b,c,e");
    }
    return entries;
}

const char* generator_name(Generator::Kind k) {
    switch (k) {
        case Generator::Kind::fourier:
            return "fourier";
        case Generator::Kind::chirp:
            return "chirp";
        case Generator::Kind::scaling:
            return "scaling";
    }
    return "?";
}

}  // namespace

int cmd_wigner(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const PrimeDim dim = validated_dim(config.d);
    if (!config.state_input) {
        throw UsageError("wigner requires --state");
    }
    ComplexVector amp;
    try {
        amp = io::amplitudes_from_string(read_input(*config.state_input));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (amp.size() != dim.value()) {
        throw UsageError("state has " + std::to_string(amp.size()) + " amplitudes, expected " +
                         std::to_string(dim.value()));
    }
    const double norm2 = amp.squaredNorm();
    if (norm2 == 0.0) {
        throw UsageError("state is the zero vector");
    }
    if (!config.normalize && std::abs(norm2 - 1.0) > kInputNormTolerance) {
        throw UsageError("state has squared norm " + std::to_string(norm2) +
                         "; pass --normalize to rescale it");
    }
    const StateVector psi(dim, std::move(amp), true);
    const PhaseGrid w = wigner_pure(psi);
    emit(config, config.format == Format::csv ? io::grid_to_csv(w) : dump(io::grid_to_json(w)), out);
    err << "wigner: d=" << dim.value() << " min=" << w.real().minCoeff() << "\n";
    return code(ExitCode::ok);
}

int cmd_stabilizers(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const PrimeDim dim = validated_dim(config.d);
    if (config.format == Format::csv) {
        if (config.amplitudes) {
            throw UsageError("--amplitudes requires json output");
        }
        emit(config, io::stabilizers_to_csv(dim), out);
    } else {
        emit(config, dump(io::stabilizers_to_json(dim, config.amplitudes)), out);
    }
    err << "stabilizers: " << dim.size() * (dim.size() + 1) << " states\n";
    return code(ExitCode::ok);
}

int cmd_metaplectic(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const PrimeDim dim = validated_dim(config.d);
    if (config.format != Format::json) {
        throw UsageError("metaplectic supports json output only");
    }
    if (!config.matrix_input) {
        throw UsageError("metaplectic requires --matrix a,b,c,e");
    }
    const auto m = parse_matrix(*config.matrix_input);
    if (!SymplecticMatrix::has_unit_determinant(m[0], m[1], m[2], m[3], dim)) {
        throw UsageError("matrix determinant must be 1 mod d");
    }
    const SymplecticMatrix s(m[0], m[1], m[2], m[3], dim);
    const DenseOperator u = metaplectic(s);
    const double error = conjugation_error(u, s);
    const bool unitary = u.is_unitary();
    const bool pass = unitary && error <= 1e-10;

    io::json word = io::json::array();
    for (const auto& g : sl2_decompose(s)) {
        io::json entry = {{"generator", generator_name(g.kind)}};
        if (g.kind != Generator::Kind::fourier) {
            entry["param"] = g.param.value();
        }
        word.push_back(std::move(entry));
    }
    const io::json doc = {
        {"d", dim.value()},
        {"matrix", {s.a().value(), s.b().value(), s.c().value(), s.e().value()}},
        {"word", std::move(word)},
        {"unitary", io::operator_to_json(u)},
        {"self_check", {{"conjugation", pass}, {"is_unitary", unitary}, {"max_error", error}}},
    };
    emit(config, dump(doc), out);
    err << "metaplectic: self-check " << (pass ? "passed" : "FAILED") << " (max error " << error << ")\n";
    return code(pass ? ExitCode::ok : ExitCode::verification_failed);
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const PrimeDim dim = validated_dim(config.d);
    if (config.format != Format::json) {
        throw UsageError("verify supports json output only");
    }
    if (config.samples < 0) {
        throw UsageError("--samples must be non-negative");
    }
    VerifyOptions opts;
    opts.samples = config.samples;
    opts.seed = config.seed;
    opts.tol = config.tol;
    opts.threads = config.threads;
    const VerificationReport report = verify_hudson(dim, opts);
    emit(config, dump(io::report_to_json(report)), out);
    err << "verify: d=" << dim.value() << " " << (report.passed() ? "PASS" : "FAIL") << " in "
        << report.duration_seconds << " s\n";
    for (const auto& f : report.failures) {
        err << "  failure: " << f << "\n";
    }
    return code(report.passed() ? ExitCode::ok : ExitCode::verification_failed);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Discrete phase-space toolkit for a single qudit of odd prime dimension", "phasespace"};
    app.require_subcommand(1);

    std::string format = "json";
    std::optional<std::uint64_t> seed;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", config.d, "Odd prime dimension")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", config.output_path, "Write output to this file");
    };

    auto* wig = app.add_subcommand("wigner", "Wigner function of a pure state");
    add_common(wig);
    wig->add_option("--state", config.state_input, "JSON array of [re, im] pairs, or @file")->required();
    wig->add_flag("--normalize", config.normalize, "Rescale the state to unit norm");

    auto* stab = app.add_subcommand("stabilizers", "List the d(d+1) stabilizer states");
    add_common(stab);
    stab->add_flag("--amplitudes", config.amplitudes, "Include amplitude arrays");

    auto* meta = app.add_subcommand("metaplectic", "Metaplectic unitary of a symplectic matrix");
    add_common(meta);
    meta->add_option("--matrix", config.matrix_input, "Entries a,b,c,e of [[a,b],[c,e]]")->required();

    auto* ver = app.add_subcommand("verify", "Certify the discrete Hudson theorem at dimension d");
    add_common(ver);
    ver->add_option("--samples", config.samples, "Number of Haar-random samples");
    ver->add_option("--seed", seed, "Random seed (default 42, or PHASESPACE_SEED)");
    ver->add_option("--tol", config.tol, "Positivity tolerance");
    ver->add_option("--threads", config.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, err, err);
        return rc == 0 ? code(ExitCode::ok) : code(ExitCode::usage);
    }

    try {
        config.format = format == "csv" ? Format::csv : Format::json;
        if (seed) {
            config.seed = *seed;
        } else if (const char* env = std::getenv("PHASESPACE_SEED"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                config.seed = std::stoull(env, &used);
                if (used != std::string(env).size()) {
                    throw std::invalid_argument(env);
                }
            } catch (const std::exception&) {
                throw UsageError(std::string("PHASESPACE_SEED is not an unsigned integer: ") + env);
            }
        }

        if (wig->parsed()) {
            config.subcommand = Subcommand::wigner;
            return cmd_wigner(config, out, err);
        }
        if (stab->parsed()) {
            config.subcommand = Subcommand::stabilizers;
            return cmd_stabilizers(config, out, err);
        }
        if (meta->parsed()) {
            config.subcommand = Subcommand::metaplectic;
            return cmd_metaplectic(config, out, err);
        }
        config.subcommand = Subcommand::verify;
        return cmd_verify(config, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::usage);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::usage);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return code(ExitCode::verification_failed);
    }
}

}  // namespace phasespace::cli
