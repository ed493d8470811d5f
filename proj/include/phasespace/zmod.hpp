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
 * @file zmod.hpp
 * @brief Residues modulo an odd prime and the group SL(2, Z_d).
 *
 * Everything here is exact integer arithmetic. Residues are stored in
 * canonical form {0, ..., d-1}, so structural equality is arithmetic
 * equality.
 */

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace phasespace {

/// An odd prime dimension d >= 3.
class PrimeDim {
  public:
    explicit PrimeDim(std::int64_t d) : d_(d) {
        if (!is_odd_prime(d)) {
            throw std::invalid_argument("d must be an odd prime (got " + std::to_string(d) + ")");
        }
    }

    static constexpr bool is_odd_prime(std::int64_t d) noexcept {
        if (d < 3 || d % 2 == 0) {
            return false;
        }
        for (std::int64_t k = 3; k * k <= d; k += 2) {
            if (d % k == 0) {
                return false;
            }
        }
        return true;
    }

    constexpr std::int64_t value() const noexcept { return d_; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(d_); }

    /// Reduce an arbitrary integer into {0, ..., d-1}.
    constexpr std::int64_t reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % d_;
        return r < 0 ? r + d_ : r;
    }

    constexpr bool operator==(const PrimeDim&) const = default;

  private:
    std::int64_t d_;
};

/// Element of Z_d. Carries its modulus so that mixing dimensions is caught.
class ModScalar {
  public:
    ModScalar(std::int64_t value, PrimeDim dim) : value_(dim.reduce(value)), dim_(dim) {}

    std::int64_t value() const noexcept { return value_; }
    PrimeDim dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return value_ == 0; }

    ModScalar operator+(const ModScalar& o) const { return {value_ + checked(o).value_, dim_}; }
    ModScalar operator-(const ModScalar& o) const { return {value_ - checked(o).value_, dim_}; }
    ModScalar operator*(const ModScalar& o) const { return {value_ * checked(o).value_, dim_}; }
    ModScalar operator-() const { return {-value_, dim_}; }

    ModScalar& operator+=(const ModScalar& o) { return *this = *this + o; }
    ModScalar& operator-=(const ModScalar& o) { return *this = *this - o; }
    ModScalar& operator*=(const ModScalar& o) { return *this = *this * o; }

    bool operator==(const ModScalar& o) const noexcept {
        return dim_ == o.dim_ && value_ == o.value_;
    }

  private:
    const ModScalar& checked(const ModScalar& o) const {
        if (!(o.dim_ == dim_)) {
            throw std::invalid_argument("ModScalar dimension mismatch");
        }
        return o;
    }

    std::int64_t value_;
    PrimeDim dim_;
};

inline std::ostream& operator<<(std::ostream& os, const ModScalar& x) {
    return os << x.value() << " (mod " << x.dim().value() << ")";
}

/// Multiplicative inverse by the extended Euclidean algorithm.
inline ModScalar mod_inv(const ModScalar& x) {
    if (x.is_zero()) {
        throw std::domain_error("not invertible");
    }
    std::int64_t r0 = x.dim().value(), r1 = x.value();
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t quot = r0 / r1;
        std::int64_t tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
    }
    return {t0, x.dim()};
}

/// The inverse of 2, which is (d+1)/2.
inline ModScalar half(PrimeDim dim) { return {(dim.value() + 1) / 2, dim}; }

/// A point (p, q) of discrete phase space; p is momentum, q is position.
struct PhasePoint {
    PhasePoint(ModScalar p_, ModScalar q_) : p(p_), q(q_) {
        if (!(p.dim() == q.dim())) {
            throw std::invalid_argument("PhasePoint coordinates must share a dimension");
        }
    }
    PhasePoint(std::int64_t p_, std::int64_t q_, PrimeDim dim) : p(p_, dim), q(q_, dim) {}

    static PhasePoint origin(PrimeDim dim) { return {0, 0, dim}; }

    PrimeDim dim() const noexcept { return p.dim(); }

    PhasePoint operator+(const PhasePoint& o) const { return {p + o.p, q + o.q}; }
    PhasePoint operator-(const PhasePoint& o) const { return {p - o.p, q - o.q}; }
    PhasePoint operator-() const { return {-p, -q}; }
    bool operator==(const PhasePoint&) const = default;

    ModScalar p;
    ModScalar q;
};

inline std::ostream& operator<<(std::ostream& os, const PhasePoint& v) {
    return os << "(" << v.p.value() << "," << v.q.value() << ")";
}

/// Symplectic form [v, v'] = p q' - q p'.
inline ModScalar symplectic_form(const PhasePoint& v, const PhasePoint& w) {
    return v.p * w.q - v.q * w.p;
}

/// Every point of Z_d x Z_d in lexicographic (p, q) order.
inline std::vector<PhasePoint> all_phase_points(PrimeDim dim) {
    std::vector<PhasePoint> out;
    out.reserve(dim.size() * dim.size());
    for (std::int64_t p = 0; p < dim.value(); ++p) {
        for (std::int64_t q = 0; q < dim.value(); ++q) {
            out.emplace_back(p, q, dim);
        }
    }
    return out;
}

/// [[a, b], [c, e]] over Z_d with a e - b c = 1.
class SymplecticMatrix {
  public:
    SymplecticMatrix(ModScalar a, ModScalar b, ModScalar c, ModScalar e)
        : a_(a), b_(b), c_(c), e_(e) {
        if (!((a * e - b * c) == ModScalar(1, a.dim()))) {
            throw std::invalid_argument("determinant must be 1 mod d");
        }
    }
    SymplecticMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, PrimeDim dim)
        : SymplecticMatrix(ModScalar(a, dim), ModScalar(b, dim), ModScalar(c, dim), ModScalar(e, dim)) {}

    static bool has_unit_determinant(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e,
                                     PrimeDim dim) {
        return dim.reduce(dim.reduce(a) * dim.reduce(e) - dim.reduce(b) * dim.reduce(c)) == 1;
    }

    static SymplecticMatrix identity(PrimeDim dim) { return {1, 0, 0, 1, dim}; }
    /// [[0, -1], [1, 0]]
    static SymplecticMatrix fourier(PrimeDim dim) { return {0, -1, 1, 0, dim}; }
    /// [[1, c], [0, 1]]
    static SymplecticMatrix chirp(ModScalar c) {
        return {ModScalar(1, c.dim()), c, ModScalar(0, c.dim()), ModScalar(1, c.dim())};
    }
    /// [[a, 0], [0, a^-1]]
    static SymplecticMatrix scaling(ModScalar a) {
        return {a, ModScalar(0, a.dim()), ModScalar(0, a.dim()), mod_inv(a)};
    }

    const ModScalar& a() const noexcept { return a_; }
    const ModScalar& b() const noexcept { return b_; }
    const ModScalar& c() const noexcept { return c_; }
    const ModScalar& e() const noexcept { return e_; }
    PrimeDim dim() const noexcept { return a_.dim(); }

    bool is_identity() const { return *this == identity(dim()); }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.e_, c_ * o.a_ + e_ * o.c_, c_ * o.b_ + e_ * o.e_};
    }

    SymplecticMatrix inverse() const { return {e_, -b_, -c_, a_}; }

    bool operator==(const SymplecticMatrix&) const = default;

  private:
    ModScalar a_, b_, c_, e_;
};

inline std::ostream& operator<<(std::ostream& os, const SymplecticMatrix& s) {
    return os << "[[" << s.a().value() << "," << s.b().value() << "],[" << s.c().value() << ","
              << s.e().value() << "]]";
}

/// S (p, q) = (a p + b q, c p + e q).
inline PhasePoint sl2_apply(const SymplecticMatrix& s, const PhasePoint& v) {
    return {s.a() * v.p + s.b() * v.q, s.c() * v.p + s.e() * v.q};
}

/// All d (d^2 - 1) elements of SL(2, Z_d), lexicographic in (a, b, c, e).
inline std::vector<SymplecticMatrix> sl2_enumerate(PrimeDim dim) {
    const std::int64_t d = dim.value();
    std::vector<SymplecticMatrix> out;
    out.reserve(static_cast<std::size_t>(d * (d * d - 1)));
    for (std::int64_t a = 0; a < d; ++a) {
        for (std::int64_t b = 0; b < d; ++b) {
            for (std::int64_t c = 0; c < d; ++c) {
                for (std::int64_t e = 0; e < d; ++e) {
                    if (SymplecticMatrix::has_unit_determinant(a, b, c, e, dim)) {
                        out.emplace_back(a, b, c, e, dim);
                    }
                }
            }
        }
    }
    return out;
}

/// One factor of a generator word for SL(2, Z_d).
struct Generator {
    enum class Kind { fourier, chirp, scaling };

    Kind kind;
    /// Chirp strength c or scaling factor a; unused for the Fourier generator.
    ModScalar param;

    static Generator fourier(PrimeDim dim) { return {Kind::fourier, ModScalar(0, dim)}; }
    static Generator chirp(ModScalar c) { return {Kind::chirp, c}; }
    static Generator scaling(ModScalar a) { return {Kind::scaling, a}; }

    SymplecticMatrix matrix() const {
        switch (kind) {
            case Kind::fourier:
                return SymplecticMatrix::fourier(param.dim());
            case Kind::chirp:
                return SymplecticMatrix::chirp(param);
            case Kind::scaling:
                return SymplecticMatrix::scaling(param);
        }
        throw std::logic_error("unknown generator kind");
    }

    bool operator==(const Generator&) const = default;
};

/// Product g_0 g_1 ... g_{n-1} of a generator word.
inline SymplecticMatrix word_product(const std::vector<Generator>& word, PrimeDim dim) {
    SymplecticMatrix acc = SymplecticMatrix::identity(dim);
    for (const auto& g : word) {
        acc = acc * g.matrix();
    }
    return acc;
}

/**
 * Factor S into at most four generators whose ordered product is S.
 *
 * With c != 0:  S = U(a/c) D(1/c) F U(e/c)
 * With c == 0:  S = D(a) U(b/a)
 *
 * where U is the upper chirp, D the scaling and F the Fourier generator.
 * Identity factors (U(0), D(1)) are dropped.
 */
inline std::vector<Generator> sl2_decompose(const SymplecticMatrix& s) {
    const PrimeDim dim = s.dim();
    const ModScalar one(1, dim);
    std::vector<Generator> word;
    auto push_chirp = [&](const ModScalar& c) {
        if (!c.is_zero()) {
            word.push_back(Generator::chirp(c));
        }
    };
    auto push_scaling = [&](const ModScalar& a) {
        if (!(a == one)) {
            word.push_back(Generator::scaling(a));
        }
    };
    if (!s.c().is_zero()) {
        const ModScalar inv_c = mod_inv(s.c());
        push_chirp(s.a() * inv_c);
        push_scaling(inv_c);
        word.push_back(Generator::fourier(dim));
        push_chirp(s.e() * inv_c);
    } else {
        push_scaling(s.a());
        push_chirp(s.b() * mod_inv(s.a()));
    }
    return word;
}

}  // namespace phasespace
