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

// JSON and CSV encodings of states, grids, operators, stabilizer lists and
// verification reports.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "phasespace/clifford.hpp"
#include "phasespace/hudson.hpp"
#include "phasespace/qudit.hpp"
#include "phasespace/version.hpp"
#include "phasespace/wigner.hpp"

namespace phasespace::io {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("amplitude must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

/// [[re, im], ...] of length d.
inline json state_to_json(const StateVector& psi) {
    json out = json::array();
    for (std::int64_t q = 0; q < psi.dim().value(); ++q) {
        out.push_back(complex_to_json(psi(q)));
    }
    return out;
}

/// Raw amplitudes from a JSON array of [re, im] pairs; no normalization check.
inline ComplexVector amplitudes_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("state must be a JSON array of [re, im] pairs");
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

inline ComplexVector amplitudes_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("state is not valid JSON: ") + e.what());
    }
    return amplitudes_from_json(j);
}

inline StateVector state_from_json(const json& j, PrimeDim dim, bool normalize = false) {
    return {dim, amplitudes_from_json(j), normalize};
}

inline const char* kind_name(GridKind kind) { return kind == GridKind::wigner ? "wigner" : "characteristic"; }

/// {"d", "kind", "values"}; Wigner values are reals, characteristic values [re, im] pairs.
inline json grid_to_json(const PhaseGrid& g) {
    json rows = json::array();
    for (std::int64_t p = 0; p < g.dim().value(); ++p) {
        json row = json::array();
        for (std::int64_t q = 0; q < g.dim().value(); ++q) {
            if (g.kind() == GridKind::wigner) {
                row.push_back(g(p, q).real());
            } else {
                row.push_back(complex_to_json(g(p, q)));
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"d", g.dim().value()}, {"kind", kind_name(g.kind())}, {"values", std::move(rows)}};
}

inline PhaseGrid grid_from_json(const json& j) {
    const PrimeDim dim(j.at("d").get<std::int64_t>());
    const std::string kind_str = j.at("kind").get<std::string>();
    GridKind kind;
    if (kind_str == "wigner") {
        kind = GridKind::wigner;
    } else if (kind_str == "characteristic") {
        kind = GridKind::characteristic;
    } else {
        throw std::invalid_argument("unknown grid kind '" + kind_str + "'");
    }
    const json& rows = j.at("values");
    if (!rows.is_array() || rows.size() != dim.size()) {
        throw std::invalid_argument("grid must have d rows");
    }
    PhaseGrid g = PhaseGrid::zeros(dim, kind);
    for (std::int64_t p = 0; p < dim.value(); ++p) {
        const json& row = rows[static_cast<std::size_t>(p)];
        if (!row.is_array() || row.size() != dim.size()) {
            throw std::invalid_argument("grid row must have d entries");
        }
        for (std::int64_t q = 0; q < dim.value(); ++q) {
            const json& cell = row[static_cast<std::size_t>(q)];
            g.at(p, q) = cell.is_number() ? Complex(cell.get<double>(), 0.0) : complex_from_json(cell);
        }
    }
    return g;
}

/// "p,q,value" rows in lexicographic (p, q) order; characteristic grids get "re,im" columns.
inline std::string grid_to_csv(const PhaseGrid& g) {
    std::ostringstream os;
    os.precision(17);
    if (g.kind() == GridKind::wigner) {
        os << "p,q,value\n";
    } else {
        os << "p,q,re,im\n";
    }
    for (std::int64_t p = 0; p < g.dim().value(); ++p) {
        for (std::int64_t q = 0; q < g.dim().value(); ++q) {
            os << p << ',' << q << ',' << g(p, q).real();
            if (g.kind() == GridKind::characteristic) {
                os << ',' << g(p, q).imag();
            }
            os << '\n';
        }
    }
    return os.str();
}

inline json operator_to_json(const DenseOperator& m) {
    json rows = json::array();
    for (std::int64_t r = 0; r < m.dim().value(); ++r) {
        json row = json::array();
        for (std::int64_t c = 0; c < m.dim().value(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// {"kind":"basis","k":int} or {"kind":"quadratic","theta":int,"x":int}, with optional amplitudes.
inline json stabilizer_to_json(const StabilizerDescriptor& s, PrimeDim dim, bool amplitudes) {
    json out;
    if (s.kind == StabilizerDescriptor::Kind::basis) {
        out = {{"kind", "basis"}, {"k", s.k}};
    } else {
        out = {{"kind", "quadratic"}, {"theta", s.theta}, {"x", s.x}};
    }
    if (amplitudes) {
        out["amplitudes"] = state_to_json(s.state(dim));
    }
    return out;
}

inline json stabilizers_to_json(PrimeDim dim, bool amplitudes) {
    json out = json::array();
    for (const auto& s : enumerate_stabilizer_descriptors(dim)) {
        out.push_back(stabilizer_to_json(s, dim, amplitudes));
    }
    return out;
}

inline std::string stabilizers_to_csv(PrimeDim dim) {
    std::ostringstream os;
    os << "index,kind,k,theta,x\n";
    std::size_t i = 0;
    for (const auto& s : enumerate_stabilizer_descriptors(dim)) {
        if (s.kind == StabilizerDescriptor::Kind::basis) {
            os << i++ << ",basis," << s.k << ",,\n";
        } else {
            os << i++ << ",quadratic,," << s.theta << ',' << s.x << '\n';
        }
    }
    return os.str();
}

/// Everything except the wall-clock duration, which lives under "timing" when requested.
inline json report_to_json(const VerificationReport& r, bool include_timing = true) {
    json sizes = json::object();
    for (const auto& [size, count] : r.lemma5_support_sizes) {
        sizes[std::to_string(size)] = count;
    }
    json out = {
        {"version", kVersion},
        {"d", r.dim},
        {"seed", r.seed},
        {"tol", r.tol},
        {"passed", r.passed()},
        {"stabilizer_count", r.stabilizer_count},
        {"stabilizers_all_nonneg", r.stabilizers_all_nonneg},
        {"stabilizer_min_value", r.stabilizer_min_value},
        {"random_samples", r.random_samples},
        {"random_all_negative", r.random_all_negative},
        {"random_all_non_stabilizer", r.random_all_non_stabilizer},
        {"random_max_min_value", r.random_max_min_value},
        {"two_point_samples", r.two_point_samples},
        {"two_point_all_negative", r.two_point_all_negative},
        {"two_point_max_min_value", r.two_point_max_min_value},
        {"positive_states_checked", r.positive_states_checked},
        {"lemma4_violations", r.lemma4_violations},
        {"lemma5_support_sizes", std::move(sizes)},
        {"support_inconclusive", r.support_inconclusive},
        {"lemma6_max_modulus_spread", r.lemma6_max_modulus_spread},
        {"lemma6_max_modulus_deviation", r.lemma6_max_modulus_deviation},
        {"single_point_infeasible", r.single_point_infeasible},
        {"failures", r.failures},
    };
    if (include_timing) {
        out["timing"] = {{"duration_seconds", r.duration_seconds}};
    }
    return out;
}

}  // namespace phasespace::io
