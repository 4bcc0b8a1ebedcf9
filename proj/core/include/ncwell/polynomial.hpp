#pragma once

#include "ncwell/rational.hpp"
#include "ncwell/symbols.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncwell {

/// Power product of registered symbols.  Factors are kept sorted by symbol
/// id with strictly positive exponents, so equal monomials compare equal.
class Monomial {
public:
    using Factors = std::vector<std::pair<SymbolId, int>>;

    Monomial() = default;
    explicit Monomial(Factors factors);

    static Monomial unit() { return Monomial(); }
    static Monomial symbol(SymbolId id, int exponent = 1);

    const Factors& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int total_degree() const;
    int degree_in(SymbolId id) const;

    Monomial operator*(const Monomial& o) const;
    /// Quotient, or nullopt when `o` does not divide this monomial.
    std::optional<Monomial> divide(const Monomial& o) const;
    Monomial pow(int exponent) const;
    /// This monomial with every factor of `id` removed.
    Monomial without(SymbolId id) const;

    Dimension dimension() const;

    /// Graded lexicographic comparison: total degree first, then exponent
    /// vectors in symbol-id order.  Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string to_string() const;

private:
    Factors factors_;
};

/// Ascending graded-lex order for use as a map comparator.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

/// Multivariate polynomial over GaussianRational in the registered symbols.
/// The term map never stores zero coefficients, so equality of maps is
/// equality of polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(long n) { *this = constant(GaussianRational(n)); }
    explicit Polynomial(GaussianRational c) { *this = constant(std::move(c)); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(GaussianRational(1)); }
    static Polynomial constant(GaussianRational c);
    static Polynomial symbol(SymbolId id, int exponent = 1);
    static Polynomial term(GaussianRational c, Monomial m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero polynomial yields zero).  Pre: is_constant().
    GaussianRational constant_value() const;

    /// Greatest term under graded-lex order.  Pre: !is_zero().
    const std::pair<const Monomial, GaussianRational>& leading() const;

    int total_degree() const;
    int degree_in(SymbolId id) const;
    int min_degree_in(SymbolId id) const;
    /// Largest total degree in the given symbol set over all terms; -1 if zero.
    int degree_in_set(const std::vector<SymbolId>& ids) const;
    /// Smallest total degree in the given symbol set over all terms; -1 if zero.
    int min_degree_in_set(const std::vector<SymbolId>& ids) const;

    GaussianRational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator*(const GaussianRational& c) const;

    Polynomial pow(int exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Replaces every occurrence of `id` by `value`.
    Polynomial substitute(SymbolId id, const Polynomial& value) const;
    /// Drops every term whose degree in `id` exceeds `max_degree`.
    Polynomial truncate_in(SymbolId id, int max_degree) const;
    /// Scales all coefficients by the inverse of the leading coefficient.
    /// Pre: !is_zero().
    Polynomial monic() const;
    Polynomial conjugate() const;

    /// Dimension shared by all terms, or nullopt when the polynomial is
    /// inhomogeneous (advisory lint; zero counts as dimensionless).
    std::optional<Dimension> dimension() const;

    double evaluate(const std::vector<double>& values_by_symbol) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const GaussianRational& c);
    TermMap terms_;
};

/// Greatest common divisor, monic under graded-lex normalization.
/// gcd(0, 0) = 0; nonzero constants behave as units (gcd = 1).
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient, or nullopt when `divisor` does not divide `value`.
std::optional<Polynomial> polynomial_divide_exact(const Polynomial& value, const Polynomial& divisor);

} // namespace ncwell
