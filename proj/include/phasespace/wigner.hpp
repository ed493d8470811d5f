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
 * @file wigner.hpp
 * @brief Characteristic functions, Wigner functions and their covariance.
 *
 * Conventions (fixed by the exhaustive direction probe in the tests):
 *
 *   Xi(xi, x)  = (1/d) tr(w(xi, x)^dagger rho)
 *   W(p, q)    = (1/d) sum_{xi, x} omega^{q xi - p x} Xi(xi, x)
 *              = (1/d) sum_x omega^{-p x} psi(q + x/2) conj(psi(q - x/2))   (pure states)
 *
 *   W of w(v) rho w(v)^dagger      at u  equals  W of rho at u - v
 *   W of mu(S) rho mu(S)^dagger    at u  equals  W of rho at S^{-1} u
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "phasespace/qudit.hpp"
#include "phasespace/zmod.hpp"

namespace phasespace {

enum class GridKind { characteristic, wigner };

/// d x d values indexed [p][q].
class PhaseGrid {
  public:
    PhaseGrid(PrimeDim dim, GridKind kind, ComplexMatrix values)
        : dim_(dim), kind_(kind), values_(std::move(values)) {
        if (values_.rows() != dim.value() || values_.cols() != dim.value()) {
            throw std::invalid_argument("phase grid must be d x d");
        }
    }

    static PhaseGrid zeros(PrimeDim dim, GridKind kind) {
        return {dim, kind, ComplexMatrix::Zero(dim.value(), dim.value())};
    }

    PrimeDim dim() const noexcept { return dim_; }
    GridKind kind() const noexcept { return kind_; }
    const ComplexMatrix& values() const noexcept { return values_; }

    Complex operator()(std::int64_t p, std::int64_t q) const { return values_(dim_.reduce(p), dim_.reduce(q)); }
    Complex operator()(const PhasePoint& v) const { return values_(v.p.value(), v.q.value()); }
    Complex& at(std::int64_t p, std::int64_t q) { return values_(dim_.reduce(p), dim_.reduce(q)); }

    /// Real parts; Wigner grids of Hermitian operators are real.
    Eigen::MatrixXd real() const { return values_.real(); }
    double max_imag() const { return values_.imag().cwiseAbs().maxCoeff(); }
    Complex sum() const { return values_.sum(); }

    double max_abs_diff(const PhaseGrid& o) const {
        if (!(o.dim_ == dim_)) {
            throw std::invalid_argument("phase grid dimension mismatch");
        }
        return (values_ - o.values_).cwiseAbs().maxCoeff();
    }

  private:
    PrimeDim dim_;
    GridKind kind_;
    ComplexMatrix values_;
};

/// K(q, x) indexed [q][x].
class CorrelationTable {
  public:
    CorrelationTable(PrimeDim dim, ComplexMatrix values) : dim_(dim), values_(std::move(values)) {}

    PrimeDim dim() const noexcept { return dim_; }
    const ComplexMatrix& values() const noexcept { return values_; }
    Complex operator()(std::int64_t q, std::int64_t x) const { return values_(dim_.reduce(q), dim_.reduce(x)); }

  private:
    PrimeDim dim_;
    ComplexMatrix values_;
};

namespace detail {

inline void require_kind(const PhaseGrid& g, GridKind kind) {
    if (g.kind() != kind) {
        throw std::invalid_argument(kind == GridKind::wigner ? "expected a Wigner grid"
                                                             : "expected a characteristic grid");
    }
}

}  // namespace detail

/// Xi(xi, x) = (1/d) tr(w(xi, x)^dagger rho).
inline PhaseGrid characteristic(const DenseOperator& rho) {
    const PrimeDim dim = rho.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    const ModScalar h = half(dim);
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::characteristic);
    // tr(w^dagger rho) = sum_r conj(w(r, r-x)) rho(r, r-x) with w(r, r-x) = omega^{xi r - xi x / 2}.
    for (std::int64_t xi = 0; xi < d; ++xi) {
        for (std::int64_t x = 0; x < d; ++x) {
            const std::int64_t base = (h * ModScalar(xi * x, dim)).value();
            Complex acc = 0.0;
            for (std::int64_t r = 0; r < d; ++r) {
                acc += omega(base - xi * r) * rho(r, dim.reduce(r - x));
            }
            out.at(xi, x) = acc / static_cast<double>(d);
        }
    }
    return out;
}

/// W(p, q) = (1/d) sum_{xi, x} omega^{q xi - p x} Xi(xi, x).
inline PhaseGrid wigner_from_char(const PhaseGrid& chi) {
    detail::require_kind(chi, GridKind::characteristic);
    const PrimeDim dim = chi.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::wigner);
    for (std::int64_t p = 0; p < d; ++p) {
        for (std::int64_t q = 0; q < d; ++q) {
            Complex acc = 0.0;
            for (std::int64_t xi = 0; xi < d; ++xi) {
                for (std::int64_t x = 0; x < d; ++x) {
                    acc += omega(q * xi - p * x) * chi(xi, x);
                }
            }
            out.at(p, q) = acc / static_cast<double>(d);
        }
    }
    return out;
}

/// Inverse of wigner_from_char: Xi(xi, x) = (1/d) sum_{p, q} omega^{p x - q xi} W(p, q).
inline PhaseGrid char_from_wigner(const PhaseGrid& w) {
    detail::require_kind(w, GridKind::wigner);
    const PrimeDim dim = w.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::characteristic);
    for (std::int64_t xi = 0; xi < d; ++xi) {
        for (std::int64_t x = 0; x < d; ++x) {
            Complex acc = 0.0;
            for (std::int64_t p = 0; p < d; ++p) {
                for (std::int64_t q = 0; q < d; ++q) {
                    acc += omega(p * x - q * xi) * w(p, q);
                }
            }
            out.at(xi, x) = acc / static_cast<double>(d);
        }
    }
    return out;
}

/// rho = sum_v Xi(v) w(v), the operator whose characteristic function is `chi`.
inline DenseOperator operator_from_char(const PhaseGrid& chi) {
    detail::require_kind(chi, GridKind::characteristic);
    const PrimeDim dim = chi.dim();
    DenseOperator rho = DenseOperator::zero(dim);
    for (const auto& v : all_phase_points(dim)) {
        rho = rho + chi(v) * weyl(v);
    }
    return rho;
}

/// K(q, x) = psi(q + x/2) conj(psi(q - x/2)).
inline CorrelationTable self_correlation(const StateVector& psi) {
    const PrimeDim dim = psi.dim();
    const std::int64_t d = dim.value();
    const std::int64_t h = half(dim).value();
    ComplexMatrix k(d, d);
    for (std::int64_t q = 0; q < d; ++q) {
        for (std::int64_t x = 0; x < d; ++x) {
            k(q, x) = psi(q + h * x) * std::conj(psi(q - h * x));
        }
    }
    return {dim, std::move(k)};
}

/// W(p, q) = (1/d) sum_xi omega^{-xi p} psi(q + xi/2) conj(psi(q - xi/2)).
inline PhaseGrid wigner_pure(const StateVector& psi) {
    const PrimeDim dim = psi.dim();
    const std::int64_t d = dim.value();
    const RootTable omega(dim);
    const CorrelationTable k = self_correlation(psi);
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::wigner);
    for (std::int64_t p = 0; p < d; ++p) {
        for (std::int64_t q = 0; q < d; ++q) {
            Complex acc = 0.0;
            for (std::int64_t xi = 0; xi < d; ++xi) {
                acc += omega(-xi * p) * k(q, xi);
            }
            out.at(p, q) = acc / static_cast<double>(d);
        }
    }
    return out;
}

inline PhaseGrid wigner(const DenseOperator& rho) { return wigner_from_char(characteristic(rho)); }

/// sum_p W(p, q) for each q.
inline std::vector<double> position_marginal(const PhaseGrid& w) {
    detail::require_kind(w, GridKind::wigner);
    std::vector<double> out(w.dim().size(), 0.0);
    for (std::int64_t q = 0; q < w.dim().value(); ++q) {
        for (std::int64_t p = 0; p < w.dim().value(); ++p) {
            out[static_cast<std::size_t>(q)] += w(p, q).real();
        }
    }
    return out;
}

/// sum_{p, q} W(p, q)^2; equals 1/d for pure states.
inline double wigner_purity(const PhaseGrid& w) {
    detail::require_kind(w, GridKind::wigner);
    return w.values().real().array().square().sum();
}

/// out[p][q] = W[p + p'][q + q'] (cyclic).
inline PhaseGrid translate_grid(const PhaseGrid& w, const PhasePoint& v) {
    detail::require_kind(w, GridKind::wigner);
    const PrimeDim dim = w.dim();
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::wigner);
    for (std::int64_t p = 0; p < dim.value(); ++p) {
        for (std::int64_t q = 0; q < dim.value(); ++q) {
            out.at(p, q) = w(p + v.p.value(), q + v.q.value());
        }
    }
    return out;
}

/// out(u) = W(S u).
inline PhaseGrid symplectic_transform_grid(const PhaseGrid& w, const SymplecticMatrix& s) {
    detail::require_kind(w, GridKind::wigner);
    const PrimeDim dim = w.dim();
    PhaseGrid out = PhaseGrid::zeros(dim, GridKind::wigner);
    for (const auto& u : all_phase_points(dim)) {
        out.at(u.p.value(), u.q.value()) = w(sl2_apply(s, u));
    }
    return out;
}

/// Grid of w(v) rho w(v)^dagger predicted from the grid of rho.
inline PhaseGrid weyl_covariant_grid(const PhaseGrid& w, const PhasePoint& v) { return translate_grid(w, -v); }

/// Grid of mu(S) rho mu(S)^dagger predicted from the grid of rho.
inline PhaseGrid metaplectic_covariant_grid(const PhaseGrid& w, const SymplecticMatrix& s) {
    return symplectic_transform_grid(w, s.inverse());
}

}  // namespace phasespace
