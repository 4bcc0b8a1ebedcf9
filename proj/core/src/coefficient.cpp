#include "ncwell/coefficient.hpp"

#include <stdexcept>

namespace ncwell {

ScalarCoefficient::ScalarCoefficient(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("ScalarCoefficient: zero denominator");
    canonicalize();
}

void ScalarCoefficient::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = polynomial_gcd(num_, den_);
    if (g != Polynomial::one()) {
        auto qn = polynomial_divide_exact(num_, g);
        auto qd = polynomial_divide_exact(den_, g);
        if (!qn || !qd) throw std::logic_error("ScalarCoefficient: gcd does not divide its inputs");
        num_ = std::move(*qn);
        den_ = std::move(*qd);
    }
    // Make the denominator monic; fold its leading coefficient into num.
    GaussianRational lc = den_.leading().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ = num_ * Polynomial::constant(inv);
        den_ = den_ * Polynomial::constant(inv);
    }
}

ScalarCoefficient ScalarCoefficient::operator-() const {
    ScalarCoefficient out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

ScalarCoefficient& ScalarCoefficient::operator+=(const ScalarCoefficient& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) {
        den_ = Polynomial::one();
    } else {
        canonicalize();
    }
    return *this;
}

ScalarCoefficient& ScalarCoefficient::operator-=(const ScalarCoefficient& o) { return *this += -o; }

ScalarCoefficient& ScalarCoefficient::operator*=(const ScalarCoefficient& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

ScalarCoefficient& ScalarCoefficient::operator/=(const ScalarCoefficient& o) {
    if (o.is_zero()) throw std::domain_error("ScalarCoefficient: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

ScalarCoefficient ScalarCoefficient::inverse() const {
    if (is_zero()) throw std::domain_error("ScalarCoefficient: inverse of zero");
    ScalarCoefficient out;
    out.num_ = den_;
    out.den_ = num_;
    out.canonicalize();
    return out;
}

ScalarCoefficient ScalarCoefficient::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    ScalarCoefficient out(1);
    ScalarCoefficient base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

ScalarCoefficient ScalarCoefficient::conjugate() const {
    // Conjugation is a field automorphism fixing rationals, so it preserves
    // the canonical form (the monic leading 1 stays 1, the gcd stays 1).
    ScalarCoefficient out;
    out.num_ = num_.conjugate();
    out.den_ = den_.conjugate();
    return out;
}

ScalarCoefficient ScalarCoefficient::substitute(SymbolId id, const ScalarCoefficient& value) const {
    // Substitute into num and den separately over the fraction field:
    // p(x) -> sum c_t * value^e * rest(t), assembled with ScalarCoefficient
    // arithmetic so nested denominators combine correctly.
    auto subst_poly = [&](const Polynomial& p) {
        ScalarCoefficient acc(0);
        for (const auto& [m, c] : p.terms()) {
            int e = m.degree_in(id);
            ScalarCoefficient piece(Polynomial::term(c, m.without(id)));
            if (e > 0) piece *= value.pow(e);
            acc += piece;
        }
        return acc;
    };
    ScalarCoefficient n = subst_poly(num_);
    ScalarCoefficient d = subst_poly(den_);
    if (d.is_zero()) throw std::domain_error("ScalarCoefficient: substitution makes denominator zero");
    return n / d;
}

ScalarCoefficient ScalarCoefficient::truncate_in(SymbolId id, int max_degree) const {
    if (den_.degree_in(id) > 0)
        throw std::domain_error("ScalarCoefficient: truncate_in requires a denominator free of '" +
                                SymbolRegistry::instance().name_of(id) + "'");
    ScalarCoefficient out;
    out.num_ = num_.truncate_in(id, max_degree);
    out.den_ = den_;
    if (out.num_.is_zero()) {
        out.den_ = Polynomial::one();
    } else {
        out.canonicalize();
    }
    return out;
}

std::optional<Dimension> ScalarCoefficient::dimension() const {
    auto dn = num_.dimension();
    auto dd = den_.dimension();
    if (!dn || !dd) return std::nullopt;
    return *dn - *dd;
}

double ScalarCoefficient::evaluate(const std::vector<double>& values_by_symbol) const {
    double d = den_.evaluate(values_by_symbol);
    if (d == 0.0) throw std::domain_error("ScalarCoefficient: evaluate hits zero denominator");
    return num_.evaluate(values_by_symbol) / d;
}

std::string ScalarCoefficient::to_string() const {
    if (den_ == Polynomial::one()) return num_.to_string();
    auto wrap = [](const Polynomial& p) {
        std::string s = p.to_string();
        if (p.terms().size() > 1 || s.find('*') != std::string::npos || s.front() == '-')
            return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace ncwell
