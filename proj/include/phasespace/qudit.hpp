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
 * @file qudit.hpp
 * @brief State vectors and dense operators on C^d, plus the Weyl operators.
 *
 * Matrices are row-major in the sense that mat(row, col) is <row|M|col>;
 * the basis index is the position label q.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "phasespace/zmod.hpp"

namespace phasespace {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr double kNormTolerance = 1e-12;

/// The d distinct powers of omega = exp(2 pi i / d), evaluated once.
class RootTable {
  public:
    explicit RootTable(PrimeDim dim) : dim_(dim), roots_(dim.size()) {
        const double step = 2.0 * std::numbers::pi / static_cast<double>(dim.value());
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            roots_[k] = std::polar(1.0, step * static_cast<double>(k));
        }
    }

    PrimeDim dim() const noexcept { return dim_; }

    /// omega^k for any integer k; the exponent is reduced exactly first.
    Complex operator()(std::int64_t k) const { return roots_[static_cast<std::size_t>(dim_.reduce(k))]; }
    Complex operator()(const ModScalar& k) const { return roots_[static_cast<std::size_t>(k.value())]; }

  private:
    PrimeDim dim_;
    std::vector<Complex> roots_;
};

/// omega^power as a value type.
struct RootOfUnity {
    PrimeDim dim;
    ModScalar power;

    Complex value() const { return RootTable(dim)(power); }
};

class StateVector {
  public:
    /// Throws unless the amplitudes have unit norm, or rescales them when `normalize` is set.
    StateVector(PrimeDim dim, ComplexVector amp, bool normalize = false) : dim_(dim), amp_(std::move(amp)) {
        if (amp_.size() != dim.value()) {
            throw std::invalid_argument("state vector must have exactly d amplitudes");
        }
        const double norm = amp_.norm();
        if (normalize) {
            if (norm == 0.0) {
                throw std::invalid_argument("cannot normalize the zero vector");
            }
            amp_ /= norm;
        } else if (std::abs(norm * norm - 1.0) > kNormTolerance) {
            throw std::invalid_argument("state vector is not normalized");
        }
    }

    StateVector(PrimeDim dim, std::span<const Complex> amp, bool normalize = false)
        : StateVector(dim, Eigen::Map<const ComplexVector>(amp.data(), static_cast<Eigen::Index>(amp.size())),
                      normalize) {}

    static StateVector basis(PrimeDim dim, std::int64_t k) {
        ComplexVector v = ComplexVector::Zero(dim.value());
        v(dim.reduce(k)) = 1.0;
        return {dim, std::move(v)};
    }

    static StateVector uniform(PrimeDim dim) {
        ComplexVector v = ComplexVector::Constant(dim.value(), 1.0 / std::sqrt(static_cast<double>(dim.value())));
        return {dim, std::move(v), true};
    }

    PrimeDim dim() const noexcept { return dim_; }
    const ComplexVector& amplitudes() const noexcept { return amp_; }

    /// psi(q), with q taken mod d.
    Complex operator()(std::int64_t q) const { return amp_(dim_.reduce(q)); }
    Complex operator()(const ModScalar& q) const { return amp_(q.value()); }

    double norm() const { return amp_.norm(); }

    /// <this|other>
    Complex inner(const StateVector& other) const {
        check_dim(other.dim_);
        return amp_.dot(other.amp_);
    }

  private:
    void check_dim(PrimeDim other) const {
        if (!(other == dim_)) {
            throw std::invalid_argument("state dimension mismatch");
        }
    }

    PrimeDim dim_;
    ComplexVector amp_;
};

class DenseOperator {
  public:
    DenseOperator(PrimeDim dim, ComplexMatrix mat) : dim_(dim), mat_(std::move(mat)) {
        if (mat_.rows() != dim.value() || mat_.cols() != dim.value()) {
            throw std::invalid_argument("operator must be d x d");
        }
    }

    static DenseOperator identity(PrimeDim dim) {
        return {dim, ComplexMatrix::Identity(dim.value(), dim.value())};
    }
    static DenseOperator zero(PrimeDim dim) { return {dim, ComplexMatrix::Zero(dim.value(), dim.value())}; }

    PrimeDim dim() const noexcept { return dim_; }
    const ComplexMatrix& matrix() const noexcept { return mat_; }
    Complex operator()(std::int64_t row, std::int64_t col) const { return mat_(row, col); }

    DenseOperator adjoint() const { return {dim_, mat_.adjoint()}; }
    Complex trace() const { return mat_.trace(); }

    DenseOperator operator*(const DenseOperator& o) const {
        check_dim(o.dim_);
        return {dim_, mat_ * o.mat_};
    }
    DenseOperator operator+(const DenseOperator& o) const {
        check_dim(o.dim_);
        return {dim_, mat_ + o.mat_};
    }
    DenseOperator operator-(const DenseOperator& o) const {
        check_dim(o.dim_);
        return {dim_, mat_ - o.mat_};
    }
    DenseOperator operator*(Complex s) const { return {dim_, mat_ * s}; }
    friend DenseOperator operator*(Complex s, const DenseOperator& m) { return m * s; }

    /// M |psi>, without renormalization.
    ComplexVector apply(const StateVector& psi) const {
        check_dim(psi.dim());
        return mat_ * psi.amplitudes();
    }

    DenseOperator power(std::int64_t n) const {
        DenseOperator acc = identity(dim_);
        for (std::int64_t k = 0; k < n; ++k) {
            acc = acc * *this;
        }
        return acc;
    }

    /// Largest entrywise |M - N|.
    double max_abs_diff(const DenseOperator& o) const {
        check_dim(o.dim_);
        return (mat_ - o.mat_).cwiseAbs().maxCoeff();
    }

    bool is_unitary(double tol = kNormTolerance) const {
        return max_abs_diff_to(mat_.adjoint() * mat_, ComplexMatrix::Identity(dim_.value(), dim_.value())) <= tol;
    }

    bool is_hermitian(double tol = kNormTolerance) const { return max_abs_diff_to(mat_, mat_.adjoint()) <= tol; }

  private:
    static double max_abs_diff_to(const ComplexMatrix& x, const ComplexMatrix& y) {
        return (x - y).cwiseAbs().maxCoeff();
    }

    void check_dim(PrimeDim other) const {
        if (!(other == dim_)) {
            throw std::invalid_argument("operator dimension mismatch");
        }
    }

    PrimeDim dim_;
    ComplexMatrix mat_;
};

/// x(q)|k> = |k+q>
inline DenseOperator shift_op(const ModScalar& q) {
    const PrimeDim dim = q.dim();
    ComplexMatrix m = ComplexMatrix::Zero(dim.value(), dim.value());
    for (std::int64_t k = 0; k < dim.value(); ++k) {
        m(dim.reduce(k + q.value()), k) = 1.0;
    }
    return {dim, std::move(m)};
}

/// z(p)|k> = omega^{pk}|k>
inline DenseOperator boost_op(const ModScalar& p) {
    const PrimeDim dim = p.dim();
    const RootTable omega(dim);
    ComplexMatrix m = ComplexMatrix::Zero(dim.value(), dim.value());
    for (std::int64_t k = 0; k < dim.value(); ++k) {
        m(k, k) = omega(p.value() * k);
    }
    return {dim, std::move(m)};
}

/// w(p,q) = omega^{-pq/2} z(p) x(q). Nonzero entries sit at (r, r-q) with value omega^{pr - pq/2}.
inline DenseOperator weyl(const PhasePoint& v) {
    const PrimeDim dim = v.dim();
    const RootTable omega(dim);
    const ModScalar phase0 = -(half(dim) * v.p * v.q);
    ComplexMatrix m = ComplexMatrix::Zero(dim.value(), dim.value());
    for (std::int64_t r = 0; r < dim.value(); ++r) {
        m(r, dim.reduce(r - v.q.value())) = omega(phase0.value() + v.p.value() * r);
    }
    return {dim, std::move(m)};
}

/// w(v)^dagger, which coincides with w(-v) for odd d.
inline DenseOperator weyl_adjoint(const PhasePoint& v) { return weyl(v).adjoint(); }

/// Engine for sample `index` of a run keyed by `seed`; independent of evaluation order.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      0x9e3779b9u};
    return std::mt19937_64(seq);
}

/// Haar-random state: i.i.d. standard complex Gaussians, normalized.
template <class Engine>
StateVector haar_random_state(PrimeDim dim, Engine& engine) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim.value());
    for (auto& z : v) {
        const double re = gauss(engine);
        const double im = gauss(engine);
        z = Complex(re, im);
    }
    return {dim, std::move(v), true};
}

inline StateVector haar_random_state(PrimeDim dim, std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 engine(seq);
    return haar_random_state(dim, engine);
}

/// |psi><psi|
inline DenseOperator projector(const StateVector& psi) {
    const auto& a = psi.amplitudes();
    return {psi.dim(), a * a.adjoint()};
}

/// M|psi> as a state, rescaled to unit norm.
inline StateVector apply_unitary(const DenseOperator& u, const StateVector& psi) {
    return {psi.dim(), u.apply(psi), true};
}

}  // namespace phasespace
