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

// Harmonic analysis on Z_d: the Fourier transform, circulant matrices and
// the two Bochner-type positivity/flatness criteria.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "phasespace/qudit.hpp"
#include "phasespace/zmod.hpp"

namespace phasespace {

inline constexpr double kBochnerTolerance = 1e-9;

/// A function f: Z_d -> C.
class CyclicFunction {
  public:
    CyclicFunction(PrimeDim dim, ComplexVector values) : dim_(dim), values_(std::move(values)) {
        if (values_.size() != dim.value()) {
            throw std::invalid_argument("cyclic function must have exactly d values");
        }
    }

    static CyclicFunction delta(PrimeDim dim, std::int64_t at = 0) {
        ComplexVector v = ComplexVector::Zero(dim.value());
        v(dim.reduce(at)) = 1.0;
        return {dim, std::move(v)};
    }
    static CyclicFunction constant(PrimeDim dim, Complex c) {
        return {dim, ComplexVector::Constant(dim.value(), c)};
    }

    PrimeDim dim() const noexcept { return dim_; }
    const ComplexVector& values() const noexcept { return values_; }
    Complex operator()(std::int64_t q) const { return values_(dim_.reduce(q)); }

    /// The same function rescaled to unit 2-norm; the zero function is returned as is.
    CyclicFunction normalized() const {
        const double n = values_.norm();
        return n > 0.0 ? CyclicFunction(dim_, values_ / n) : *this;
    }

  private:
    PrimeDim dim_;
    ComplexVector values_;
};

/// fhat(x) = (1/d) sum_q omega^{-qx} f(q)
inline CyclicFunction fourier(const CyclicFunction& f) {
    const std::int64_t d = f.dim().value();
    const RootTable omega(f.dim());
    ComplexVector out(d);
    for (std::int64_t x = 0; x < d; ++x) {
        Complex acc = 0.0;
        for (std::int64_t q = 0; q < d; ++q) {
            acc += omega(-q * x) * f(q);
        }
        out(x) = acc / static_cast<double>(d);
    }
    return {f.dim(), std::move(out)};
}

/// f(q) = sum_x omega^{qx} fhat(x)
inline CyclicFunction inverse_fourier(const CyclicFunction& fhat) {
    const std::int64_t d = fhat.dim().value();
    const RootTable omega(fhat.dim());
    ComplexVector out(d);
    for (std::int64_t q = 0; q < d; ++q) {
        Complex acc = 0.0;
        for (std::int64_t x = 0; x < d; ++x) {
            acc += omega(q * x) * fhat(x);
        }
        out(q) = acc;
    }
    return {fhat.dim(), std::move(out)};
}

/// A(x, q) = f(x - q)
inline DenseOperator circulant(const CyclicFunction& f) {
    const std::int64_t d = f.dim().value();
    ComplexMatrix m(d, d);
    for (std::int64_t x = 0; x < d; ++x) {
        for (std::int64_t q = 0; q < d; ++q) {
            m(x, q) = f(x - q);
        }
    }
    return {f.dim(), std::move(m)};
}

/// f(-q) = conj(f(q)) for all q, i.e. fhat is real and circulant(f) Hermitian.
inline bool is_hermitian_symmetric(const CyclicFunction& f, double tol = 1e-12) {
    for (std::int64_t q = 0; q < f.dim().value(); ++q) {
        if (std::abs(f(-q) - std::conj(f(q))) > tol) {
            return false;
        }
    }
    return true;
}

/// Symmetrize: f(q) <- (f(q) + conj(f(-q))) / 2.
inline CyclicFunction hermitian_part(const CyclicFunction& f) {
    ComplexVector v(f.dim().value());
    for (std::int64_t q = 0; q < f.dim().value(); ++q) {
        v(q) = 0.5 * (f(q) + std::conj(f(-q)));
    }
    return {f.dim(), std::move(v)};
}

/// sum_x conj(f(x)) f(x - q), indexed by q.
inline CyclicFunction autocorrelation(const CyclicFunction& f) {
    const std::int64_t d = f.dim().value();
    ComplexVector out(d);
    for (std::int64_t q = 0; q < d; ++q) {
        Complex acc = 0.0;
        for (std::int64_t x = 0; x < d; ++x) {
            acc += std::conj(f(x)) * f(x - q);
        }
        out(q) = acc;
    }
    return {f.dim(), std::move(out)};
}

/// Whether min_x fhat(x) >= -tol, with f scaled to unit norm first.
/// Throws std::domain_error when f is not Hermitian-symmetric.
inline bool has_nonneg_fourier(const CyclicFunction& f, double tol = kBochnerTolerance) {
    const CyclicFunction g = f.normalized();
    if (!is_hermitian_symmetric(g, 1e-10)) {
        throw std::domain_error("transform not real");
    }
    const ComplexVector fhat = fourier(g).values();
    return fhat.real().minCoeff() >= -tol;
}

/// Whether f is orthogonal to all its nonzero translates, with f scaled to unit norm first.
/// Equivalent to |fhat| being constant.
inline bool has_constant_modulus_fourier(const CyclicFunction& f, double tol = kBochnerTolerance) {
    const CyclicFunction ac = autocorrelation(f.normalized());
    for (std::int64_t q = 1; q < f.dim().value(); ++q) {
        if (std::abs(ac(q)) > tol) {
            return false;
        }
    }
    return true;
}

/// Independent complex Gaussian values.
template <class Engine>
CyclicFunction random_cyclic_function(PrimeDim dim, Engine& engine) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim.value());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = gauss(engine);
        const double im = gauss(engine);
        v(i) = Complex(re, im);
    }
    return {dim, std::move(v)};
}

}  // namespace phasespace
