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
 * @file clifford.hpp
 * @brief Metaplectic unitaries, single-qudit Clifford elements and stabilizer states.
 *
 * mu(S) is assembled from a generator word of S. Each generator image
 * satisfies
 *
 *     mu(g) w(v) mu(g)^dagger = w(g v)
 *
 * exactly (no phase), so any product does too:
 *
 *     F    = [[0,-1],[1,0]]    ->  inverse DFT, entries d^{-1/2} omega^{-jk}
 *     U(c) = [[1,c],[0,1]]     ->  diag(omega^{c q^2 / 2})
 *     D(a) = [[a,0],[0,1/a]]   ->  permutation |q> -> |q / a>
 *
 * The product is then multiplied by the unique unimodular scalar that makes
 * its first nonzero entry (row-major) real and positive.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "phasespace/qudit.hpp"
#include "phasespace/zmod.hpp"

namespace phasespace {

inline constexpr double kProjectiveTolerance = 1e-9;

inline DenseOperator generator_image(const Generator& g) {
    const PrimeDim dim = g.param.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    switch (g.kind) {
        case Generator::Kind::fourier: {
            const double scale = 1.0 / std::sqrt(static_cast<double>(d));
            for (std::int64_t j = 0; j < d; ++j) {
                for (std::int64_t k = 0; k < d; ++k) {
                    m(j, k) = scale * omega(-j * k);
                }
            }
            break;
        }
        case Generator::Kind::chirp: {
            const ModScalar h = half(dim);
            for (std::int64_t q = 0; q < d; ++q) {
                m(q, q) = omega((h * g.param * ModScalar(q * q, dim)).value());
            }
            break;
        }
        case Generator::Kind::scaling: {
            const ModScalar inv = mod_inv(g.param);
            for (std::int64_t q = 0; q < d; ++q) {
                m((inv * ModScalar(q, dim)).value(), q) = 1.0;
            }
            break;
        }
    }
    return {dim, std::move(m)};
}

/// Multiply by the unimodular scalar that makes the first nonzero entry real and positive.
inline DenseOperator fix_global_phase(const DenseOperator& u, double zero_tol = 1e-9) {
    const ComplexMatrix& m = u.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double mag = std::abs(m(r, c));
            if (mag > zero_tol) {
                return u * (std::conj(m(r, c)) / mag);
            }
        }
    }
    return u;
}

/// The metaplectic unitary mu(S), with its global phase fixed.
inline DenseOperator metaplectic(const SymplecticMatrix& s) {
    DenseOperator u = DenseOperator::identity(s.dim());
    for (const auto& g : sl2_decompose(s)) {
        u = u * generator_image(g);
    }
    return fix_global_phase(u);
}

/// Equality up to a global phase: |tr(U^dagger V)| = d.
inline bool projective_equal(const DenseOperator& u, const DenseOperator& v, double tol = kProjectiveTolerance) {
    if (!(u.dim() == v.dim())) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    const Complex overlap = (u.matrix().adjoint() * v.matrix()).trace();
    return std::abs(std::abs(overlap) - static_cast<double>(u.dim().value())) <= tol;
}

/// Largest entrywise error of mu w(v) mu^dagger = w(S v) over all v.
inline double conjugation_error(const DenseOperator& u, const SymplecticMatrix& s) {
    double worst = 0.0;
    const DenseOperator u_dag = u.adjoint();
    for (const auto& v : all_phase_points(s.dim())) {
        worst = std::max(worst, (u * weyl(v) * u_dag).max_abs_diff(weyl(sl2_apply(s, v))));
    }
    return worst;
}

/// Clifford unitary w(shift) mu(symp).
class CliffordElement {
  public:
    CliffordElement(PhasePoint shift, SymplecticMatrix symp)
        : shift_(shift), symp_(symp), unitary_(weyl(shift) * metaplectic(symp)) {}

    static CliffordElement identity(PrimeDim dim) {
        return {PhasePoint::origin(dim), SymplecticMatrix::identity(dim)};
    }

    const PhasePoint& shift() const noexcept { return shift_; }
    const SymplecticMatrix& symp() const noexcept { return symp_; }
    const DenseOperator& unitary() const noexcept { return unitary_; }

    /// Element implementing `this` after `inner`, up to global phase:
    /// w(v) mu(S) w(v') mu(S') ~ w(v + S v') mu(S S').
    CliffordElement compose(const CliffordElement& inner) const {
        return {shift_ + sl2_apply(symp_, inner.shift_), symp_ * inner.symp_};
    }

  private:
    PhasePoint shift_;
    SymplecticMatrix symp_;
    DenseOperator unitary_;
};

inline StateVector clifford_apply(const CliffordElement& g, const StateVector& psi) {
    return apply_unitary(g.unitary(), psi);
}

/// psi(q) = d^{-1/2} omega^{theta q^2 + x q}
struct QuadraticStabilizer {
    ModScalar theta;
    ModScalar x;
};

inline StateVector stabilizer_from_quadratic(const QuadraticStabilizer& s) {
    const PrimeDim dim = s.theta.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexVector v(d);
    for (std::int64_t q = 0; q < d; ++q) {
        v(q) = scale * omega(s.theta.value() * q * q + s.x.value() * q);
    }
    return {dim, std::move(v), true};
}

/// Either a computational basis state |k> or a quadratic-phase state.
struct StabilizerDescriptor {
    enum class Kind { basis, quadratic };

    Kind kind;
    std::int64_t k = 0;
    std::int64_t theta = 0;
    std::int64_t x = 0;

    StateVector state(PrimeDim dim) const {
        if (kind == Kind::basis) {
            return StateVector::basis(dim, k);
        }
        return stabilizer_from_quadratic({ModScalar(theta, dim), ModScalar(x, dim)});
    }
};

/// The d basis states followed by the d^2 quadratic states, (theta, x) lexicographic.
inline std::vector<StabilizerDescriptor> enumerate_stabilizer_descriptors(PrimeDim dim) {
    std::vector<StabilizerDescriptor> out;
    out.reserve(dim.size() * (dim.size() + 1));
    for (std::int64_t k = 0; k < dim.value(); ++k) {
        out.push_back({StabilizerDescriptor::Kind::basis, k, 0, 0});
    }
    for (std::int64_t theta = 0; theta < dim.value(); ++theta) {
        for (std::int64_t x = 0; x < dim.value(); ++x) {
            out.push_back({StabilizerDescriptor::Kind::quadratic, 0, theta, x});
        }
    }
    return out;
}

inline std::vector<StateVector> enumerate_stabilizers(PrimeDim dim) {
    std::vector<StateVector> out;
    for (const auto& desc : enumerate_stabilizer_descriptors(dim)) {
        out.push_back(desc.state(dim));
    }
    return out;
}

/// max_phi |<phi|psi>| over the given stabilizer list.
inline double max_stabilizer_overlap(const StateVector& psi, const std::vector<StateVector>& stabilizers) {
    double best = 0.0;
    for (const auto& phi : stabilizers) {
        best = std::max(best, std::abs(phi.inner(psi)));
    }
    return best;
}

/// Index of the stabilizer equal to psi up to phase, if any.
inline std::optional<std::size_t> find_stabilizer(const StateVector& psi, const std::vector<StateVector>& stabilizers,
                                                  double tol = kProjectiveTolerance) {
    for (std::size_t i = 0; i < stabilizers.size(); ++i) {
        if (std::abs(stabilizers[i].inner(psi)) >= 1.0 - tol) {
            return i;
        }
    }
    return std::nullopt;
}

inline bool is_stabilizer(const StateVector& psi, const std::vector<StateVector>& stabilizers,
                          double tol = kProjectiveTolerance) {
    return max_stabilizer_overlap(psi, stabilizers) >= 1.0 - tol;
}

inline bool is_stabilizer(const StateVector& psi, double tol = kProjectiveTolerance) {
    return is_stabilizer(psi, enumerate_stabilizers(psi.dim()), tol);
}

}  // namespace phasespace
