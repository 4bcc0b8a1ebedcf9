#pragma once

#include "ncwell/coefficient.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ncwell {

/// Canonical phase-space generators, in normal-order position.
enum class Gen : int { X = 0, Y = 1, Px = 2, Py = 3 };

inline constexpr int kGenCount = 4;
const char* gen_name(Gen g);

/// Commutation table [a, b] for the four generators, with every commutator
/// a central scalar.  Instances are immutable and shared by the elements
/// built over them.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, ScalarCoefficient xy, ScalarCoefficient pxpy,
                ScalarCoefficient position_momentum);

    /// Canonical pair algebra: [x, p_x] = [y, p_y] = i*hbar, all else zero.
    static std::shared_ptr<const AlgebraSpec> canonical();
    /// Deformed algebra: [x, y] = i*xy_scale, [p_x, p_y] = i*pq_scale,
    /// [x_i, p_j] = i*hbar*delta_ij.  The scales are plain symbols or zero.
    static std::shared_ptr<const AlgebraSpec> deformed(ScalarCoefficient xy_scale,
                                                       ScalarCoefficient pq_scale);

    const std::string& name() const { return name_; }
    /// [a, b]; antisymmetry is applied for a > b.
    ScalarCoefficient commutator(Gen a, Gen b) const;

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
        return a.table_ == b.table_;
    }

private:
    std::string name_;
    // Upper-triangular storage, indexed [a][b] for a < b.
    std::array<std::array<ScalarCoefficient, kGenCount>, kGenCount> table_{};
};

using Mono4 = std::array<int, 4>; ///< exponents of x, y, p_x, p_y in normal order

/// Normal-ordered element of the *-algebra generated by x, y, p_x, p_y over
/// scalar rational functions, with the commutation rules of a fixed
/// AlgebraSpec.  Every product is immediately rewritten into the normal
/// form  sum_t c_t * x^a y^b p_x^c p_y^d  (positions left of momenta).
class WeylElement {
public:
    WeylElement() : alg_(AlgebraSpec::canonical()) {}
    explicit WeylElement(std::shared_ptr<const AlgebraSpec> alg) : alg_(std::move(alg)) {}

    static WeylElement zero(std::shared_ptr<const AlgebraSpec> alg) { return WeylElement(std::move(alg)); }
    static WeylElement scalar(std::shared_ptr<const AlgebraSpec> alg, ScalarCoefficient c);
    static WeylElement generator(std::shared_ptr<const AlgebraSpec> alg, Gen g, int exponent = 1);
    static WeylElement monomial(std::shared_ptr<const AlgebraSpec> alg, ScalarCoefficient c, Mono4 m);

    const std::shared_ptr<const AlgebraSpec>& algebra() const { return alg_; }
    const std::map<Mono4, ScalarCoefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ScalarCoefficient coefficient(const Mono4& m) const;

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement& operator*=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const WeylElement& b) { return a *= b; }
    WeylElement operator*(const ScalarCoefficient& c) const;
    friend WeylElement operator*(const ScalarCoefficient& c, const WeylElement& e) { return e * c; }

    WeylElement pow(int exponent) const;

    /// Same algebra and identical normal-form terms.
    friend bool operator==(const WeylElement& a, const WeylElement& b);
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    /// Formal adjoint: reverses each word and conjugates each coefficient,
    /// then renormal-orders.  Scalars are treated as c -> conj(c).
    WeylElement formal_adjoint() const;
    bool is_formally_hermitian() const { return *this == formal_adjoint(); }

    /// Replaces a scalar parameter inside every coefficient.
    WeylElement substitute_params(SymbolId id, const ScalarCoefficient& value) const;
    /// Affine substitution of a generator by itself: g -> scale*g + offset
    /// (scale, offset central scalars).  No reordering is required because
    /// the image commutes with g.
    WeylElement substitute_generator(Gen g, const ScalarCoefficient& scale,
                                     const ScalarCoefficient& offset) const;
    /// Reinterprets the same normal-form terms over another algebra.
    WeylElement with_algebra(std::shared_ptr<const AlgebraSpec> alg) const;

    std::string to_string() const;

private:
    void add_term(const Mono4& m, const ScalarCoefficient& c);
    std::shared_ptr<const AlgebraSpec> alg_;
    std::map<Mono4, ScalarCoefficient> terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

} // namespace ncwell
