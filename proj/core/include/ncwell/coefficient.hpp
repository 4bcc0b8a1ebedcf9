#pragma once

#include "ncwell/polynomial.hpp"

#include <optional>
#include <string>

namespace ncwell {

/// Ratio of polynomials kept in a unique canonical form: gcd(num, den) = 1
/// and den monic under graded-lex order (zero is 0/1).  Equality of the
/// stored pairs is therefore equality of the rational functions.
class ScalarCoefficient {
public:
    ScalarCoefficient() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
    ScalarCoefficient(long n) : num_(Polynomial::constant(GaussianRational(n))), den_(Polynomial::one()) {}
    ScalarCoefficient(GaussianRational c) : num_(Polynomial::constant(std::move(c))), den_(Polynomial::one()) {}
    ScalarCoefficient(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}
    ScalarCoefficient(Polynomial num, Polynomial den);

    static ScalarCoefficient symbol(SymbolId id, int exponent = 1) {
        return ScalarCoefficient(Polynomial::symbol(id, exponent));
    }
    static ScalarCoefficient rational(long num, long den) {
        return ScalarCoefficient(GaussianRational(num, den));
    }
    static ScalarCoefficient i() { return ScalarCoefficient(GaussianRational::i()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    ScalarCoefficient operator-() const;
    ScalarCoefficient& operator+=(const ScalarCoefficient& o);
    ScalarCoefficient& operator-=(const ScalarCoefficient& o);
    ScalarCoefficient& operator*=(const ScalarCoefficient& o);
    ScalarCoefficient& operator/=(const ScalarCoefficient& o);
    friend ScalarCoefficient operator+(ScalarCoefficient a, const ScalarCoefficient& b) { return a += b; }
    friend ScalarCoefficient operator-(ScalarCoefficient a, const ScalarCoefficient& b) { return a -= b; }
    friend ScalarCoefficient operator*(ScalarCoefficient a, const ScalarCoefficient& b) { return a *= b; }
    friend ScalarCoefficient operator/(ScalarCoefficient a, const ScalarCoefficient& b) { return a /= b; }

    ScalarCoefficient inverse() const;
    /// Integer power; negative exponents invert (zero base then throws).
    ScalarCoefficient pow(int exponent) const;
    ScalarCoefficient conjugate() const;

    friend bool operator==(const ScalarCoefficient& a, const ScalarCoefficient& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ScalarCoefficient& a, const ScalarCoefficient& b) { return !(a == b); }

    ScalarCoefficient substitute(SymbolId id, const ScalarCoefficient& value) const;
    /// Drops numerator terms above `max_degree` in `id`.
    /// Pre: the denominator does not involve `id`.
    ScalarCoefficient truncate_in(SymbolId id, int max_degree) const;

    /// num dimension minus den dimension, or nullopt when either side is
    /// inhomogeneous (advisory lint).
    std::optional<Dimension> dimension() const;

    double evaluate(const std::vector<double>& values_by_symbol) const;

    std::string to_string() const;

private:
    void canonicalize();
    Polynomial num_, den_;
};

} // namespace ncwell
