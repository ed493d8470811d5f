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

/**
 * @file hudson.hpp
 * @brief Certification that, for a single qudit of odd prime dimension,
 * non-negative Wigner functions occur exactly for stabilizer states.
 *
 * The pieces:
 *  - check_positivity: minimum of the Wigner grid;
 *  - check_modulus_inequality: |psi(q)|^2 >= |psi(q-x)| |psi(q+x)|;
 *  - support / check_support_dichotomy: positive states have support 1 or d;
 *  - check_constant_modulus: positive full-support states have flat modulus;
 *  - verify_hudson: the whole battery at one dimension, as a report.
 *
 * verify_hudson draws sample i from substream(seed, i), so its report does
 * not depend on the number of worker threads.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>

#include "phasespace/clifford.hpp"
#include "phasespace/qudit.hpp"
#include "phasespace/wigner.hpp"
#include "phasespace/zmod.hpp"

namespace phasespace {

/// Random states must dip below this to count as negative.
inline constexpr double kNegativityThreshold = -1e-9;
inline constexpr double kSupportThreshold = 1e-8;
inline constexpr double kModulusTolerance = 1e-12;

struct PositivityResult {
    double min_value;
    PhasePoint argmin;
    bool is_nonnegative;
    double tol;
};

inline PositivityResult check_positivity(const StateVector& psi, double tol) {
    const PhaseGrid w = wigner_pure(psi);
    const PrimeDim dim = psi.dim();
    double best = w(0, 0).real();
    PhasePoint where = PhasePoint::origin(dim);
    for (const auto& v : all_phase_points(dim)) {
        const double value = w(v).real();
        if (value < best) {
            best = value;
            where = v;
        }
    }
    return {best, where, best >= -tol, tol};
}

/// Number of (q, x) with |psi(q)|^2 < |psi(q-x)| |psi(q+x)| - tol.
inline int check_modulus_inequality(const StateVector& psi, double tol) {
    const std::int64_t d = psi.dim().value();
    int violations = 0;
    for (std::int64_t q = 0; q < d; ++q) {
        const double lhs = std::norm(psi(q));
        for (std::int64_t x = 0; x < d; ++x) {
            if (lhs < std::abs(psi(q - x)) * std::abs(psi(q + x)) - tol) {
                ++violations;
            }
        }
    }
    return violations;
}

struct SupportSet {
    std::vector<std::int64_t> points;
    /// False when some |psi(q)| lies within a factor 10 of the threshold.
    bool stable = true;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(std::int64_t q) const { return std::find(points.begin(), points.end(), q) != points.end(); }
};

inline SupportSet support(const StateVector& psi, double threshold = kSupportThreshold) {
    SupportSet out;
    for (std::int64_t q = 0; q < psi.dim().value(); ++q) {
        const double mag = std::abs(psi(q));
        if (mag > threshold) {
            out.points.push_back(q);
        }
        if (mag > threshold / 10.0 && mag <= threshold * 10.0) {
            out.stable = false;
        }
    }
    return out;
}

/// Support size is 1 or d.
inline bool check_support_dichotomy(const StateVector& psi) {
    const std::size_t n = support(psi).size();
    return n == 1 || n == psi.dim().size();
}

/// max_q |psi(q)| - min_q |psi(q)|; requires full support.
inline double check_constant_modulus(const StateVector& psi) {
    if (support(psi).size() != psi.dim().size()) {
        throw std::invalid_argument("constant modulus check requires maximal support");
    }
    const Eigen::VectorXd mags = psi.amplitudes().cwiseAbs();
    return mags.maxCoeff() - mags.minCoeff();
}

/// Uniform random pair of distinct positions with a Haar-random amplitude pair on them.
template <class Engine>
StateVector random_two_point_state(PrimeDim dim, Engine& engine) {
    std::uniform_int_distribution<std::int64_t> first(0, dim.value() - 1);
    std::uniform_int_distribution<std::int64_t> offset(1, dim.value() - 1);
    const std::int64_t a = first(engine);
    const std::int64_t b = dim.reduce(a + offset(engine));
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v = ComplexVector::Zero(dim.value());
    for (const std::int64_t k : {a, b}) {
        const double re = gauss(engine);
        const double im = gauss(engine);
        v(k) = Complex(re, im);
    }
    return {dim, std::move(v), true};
}

/// Operator whose Wigner function is the point mass at the origin.
inline DenseOperator point_mass_operator(PrimeDim dim) {
    PhaseGrid w = PhaseGrid::zeros(dim, GridKind::wigner);
    w.at(0, 0) = 1.0;
    return operator_from_char(char_from_wigner(w));
}

/// Ascending eigenvalues of the point-mass operator.
inline Eigen::VectorXd point_mass_spectrum(PrimeDim dim) {
    const DenseOperator rho = point_mass_operator(dim);
    const Eigen::MatrixXcd m = rho.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// True when the point-mass operator is Hermitian with a negative eigenvalue.
inline bool single_point_infeasibility(PrimeDim dim) {
    if (!point_mass_operator(dim).is_hermitian()) {
        return false;
    }
    return point_mass_spectrum(dim).minCoeff() < kNegativityThreshold;
}

/// Lemma-level checks on one positivity-passing state.
struct LemmaOutcome {
    int modulus_violations = 0;
    std::size_t support_size = 0;
    bool support_stable = true;
    bool full_support = false;
    double modulus_spread = 0.0;
    /// max_q | |psi(q)| - d^{-1/2} |, full-support states only.
    double modulus_deviation = 0.0;
};

inline LemmaOutcome evaluate_lemmas(const StateVector& psi, double tol) {
    LemmaOutcome out;
    out.modulus_violations = check_modulus_inequality(psi, tol);
    const SupportSet supp = support(psi);
    out.support_size = supp.size();
    out.support_stable = supp.stable;
    out.full_support = supp.size() == psi.dim().size();
    if (out.full_support) {
        out.modulus_spread = check_constant_modulus(psi);
        const double expected = 1.0 / std::sqrt(static_cast<double>(psi.dim().value()));
        out.modulus_deviation = (psi.amplitudes().cwiseAbs().array() - expected).abs().maxCoeff();
    }
    return out;
}

struct VerifyOptions {
    int samples = 1000;
    int two_point_samples = 100;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    /// Worker threads for the sampling stages; the report does not depend on it.
    unsigned threads = 1;
};

struct VerificationReport {
    std::int64_t dim = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;

    int stabilizer_count = 0;
    bool stabilizers_all_nonneg = true;
    double stabilizer_min_value = 0.0;

    int random_samples = 0;
    bool random_all_negative = true;
    bool random_all_non_stabilizer = true;
    /// Largest Wigner minimum among random samples; must be below the negativity threshold.
    double random_max_min_value = -1.0;

    int two_point_samples = 0;
    bool two_point_all_negative = true;
    double two_point_max_min_value = -1.0;

    int positive_states_checked = 0;
    int lemma4_violations = 0;
    /// Support size -> number of positivity-passing states with that size.
    std::map<std::size_t, int> lemma5_support_sizes;
    int support_inconclusive = 0;
    double lemma6_max_modulus_spread = 0.0;
    double lemma6_max_modulus_deviation = 0.0;

    bool single_point_infeasible = false;

    std::vector<std::string> failures;

    /// Wall-clock time; not part of the deterministic content.
    double duration_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

namespace detail {

struct SampleOutcome {
    double min_value = 0.0;
    bool nonnegative = false;
    bool stabilizer = false;
    LemmaOutcome lemmas;
};

template <class Fn>
void parallel_for(int count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1))));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < count; i += static_cast<int>(threads)) {
                fn(i);
            }
        });
    }
}

inline void record_lemmas(VerificationReport& report, const LemmaOutcome& lemmas) {
    ++report.positive_states_checked;
    report.lemma4_violations += lemmas.modulus_violations;
    ++report.lemma5_support_sizes[lemmas.support_size];
    if (!lemmas.support_stable) {
        ++report.support_inconclusive;
    }
    report.lemma6_max_modulus_spread = std::max(report.lemma6_max_modulus_spread, lemmas.modulus_spread);
    report.lemma6_max_modulus_deviation = std::max(report.lemma6_max_modulus_deviation, lemmas.modulus_deviation);
}

inline constexpr std::uint64_t kTwoPointStream = 0x8000000000000000ull;

}  // namespace detail

inline VerificationReport verify_hudson(PrimeDim dim, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.dim = dim.value();
    report.seed = opts.seed;
    report.tol = opts.tol;

    // (a) every stabilizer is non-negative
    const std::vector<StateVector> stabilizers = enumerate_stabilizers(dim);
    report.stabilizer_count = static_cast<int>(stabilizers.size());
    report.stabilizer_min_value = 1.0;
    for (const auto& phi : stabilizers) {
        const PositivityResult pos = check_positivity(phi, opts.tol);
        report.stabilizer_min_value = std::min(report.stabilizer_min_value, pos.min_value);
        if (!pos.is_nonnegative) {
            report.stabilizers_all_nonneg = false;
        } else {
            detail::record_lemmas(report, evaluate_lemmas(phi, opts.tol));
        }
    }
    const std::size_t expected_count = dim.size() * (dim.size() + 1);
    if (stabilizers.size() != expected_count) {
        report.failures.push_back("stabilizer count " + std::to_string(stabilizers.size()) + " != d(d+1)");
    }
    if (!report.stabilizers_all_nonneg) {
        report.failures.push_back("a stabilizer state has a negative Wigner value");
    }

    // (b) Haar-random states are non-stabilizer and negative
    auto run_samples = [&](int count, std::uint64_t stream_base, auto&& make_state) {
        std::vector<detail::SampleOutcome> outcomes(static_cast<std::size_t>(count));
        detail::parallel_for(count, opts.threads, [&](int i) {
            auto engine = substream(opts.seed, stream_base + static_cast<std::uint64_t>(i));
            const StateVector psi = make_state(engine);
            auto& out = outcomes[static_cast<std::size_t>(i)];
            const PositivityResult pos = check_positivity(psi, opts.tol);
            out.min_value = pos.min_value;
            out.nonnegative = pos.is_nonnegative;
            out.stabilizer = is_stabilizer(psi, stabilizers);
            if (out.nonnegative) {
                out.lemmas = evaluate_lemmas(psi, opts.tol);
            }
        });
        return outcomes;
    };

    report.random_samples = opts.samples;
    const auto haar = run_samples(opts.samples, 0, [&](auto& engine) { return haar_random_state(dim, engine); });
    for (const auto& s : haar) {
        report.random_max_min_value = std::max(report.random_max_min_value, s.min_value);
        if (!(s.min_value < kNegativityThreshold)) {
            report.random_all_negative = false;
        }
        if (s.stabilizer) {
            report.random_all_non_stabilizer = false;
        }
        if (s.nonnegative) {
            detail::record_lemmas(report, s.lemmas);
        }
    }
    if (!report.random_all_negative) {
        report.failures.push_back("a random state has no Wigner value below the negativity threshold");
    }
    if (!report.random_all_non_stabilizer) {
        report.failures.push_back("a random state coincides with a stabilizer state");
    }

    // (c) two-point-support states are negative
    report.two_point_samples = opts.two_point_samples;
    const auto two_point = run_samples(opts.two_point_samples, detail::kTwoPointStream,
                                       [&](auto& engine) { return random_two_point_state(dim, engine); });
    for (const auto& s : two_point) {
        report.two_point_max_min_value = std::max(report.two_point_max_min_value, s.min_value);
        if (!(s.min_value < kNegativityThreshold)) {
            report.two_point_all_negative = false;
        }
        if (s.nonnegative) {
            detail::record_lemmas(report, s.lemmas);
        }
    }
    if (!report.two_point_all_negative) {
        report.failures.push_back("a two-point-support state has a non-negative Wigner function");
    }

    // (d) lemma checks on every positivity-passing state
    if (report.lemma4_violations != 0) {
        report.failures.push_back("modulus inequality violated " + std::to_string(report.lemma4_violations) +
                                  " times");
    }
    for (const auto& [size, count] : report.lemma5_support_sizes) {
        if (size != 1 && size != dim.size()) {
            report.failures.push_back("positive state with support size " + std::to_string(size));
        }
    }
    if (report.support_inconclusive != 0) {
        report.failures.push_back("support threshold guard tripped " + std::to_string(report.support_inconclusive) +
                                  " times (inconclusive)");
    }
    if (!(report.lemma6_max_modulus_spread < kModulusTolerance)) {
        report.failures.push_back("full-support positive state without constant modulus");
    }
    if (!(report.lemma6_max_modulus_deviation < kModulusTolerance)) {
        report.failures.push_back("full-support positive state modulus differs from d^{-1/2}");
    }

    report.single_point_infeasible = single_point_infeasibility(dim);
    if (!report.single_point_infeasible) {
        report.failures.push_back("point-mass Wigner function reconstructs to a positive operator");
    }

    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline VerificationReport verify_hudson(PrimeDim dim, int samples, std::uint64_t seed, double tol) {
    VerifyOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.tol = tol;
    return verify_hudson(dim, opts);
}

}  // namespace phasespace
