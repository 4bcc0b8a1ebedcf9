#include "ncwell/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncwell {

// --- Monomial -------------------------------------------------------------

Monomial::Monomial(Factors factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    Factors merged;
    for (const auto& [id, exp] : factors_) {
        if (!merged.empty() && merged.back().first == id) {
            merged.back().second += exp;
        } else {
            merged.emplace_back(id, exp);
        }
    }
    std::erase_if(merged, [](const auto& f) { return f.second == 0; });
    for (const auto& [id, exp] : merged)
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    factors_ = std::move(merged);
}

Monomial Monomial::symbol(SymbolId id, int exponent) {
    if (exponent == 0) return unit();
    return Monomial(Factors{{id, exponent}});
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [id, exp] : factors_) d += exp;
    return d;
}

int Monomial::degree_in(SymbolId id) const {
    for (const auto& [fid, exp] : factors_)
        if (fid == id) return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Factors merged = factors_;
    merged.insert(merged.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(merged));
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Factors out;
    auto it = factors_.begin();
    for (const auto& [id, exp] : o.factors_) {
        while (it != factors_.end() && it->first < id) {
            out.push_back(*it);
            ++it;
        }
        if (it == factors_.end() || it->first != id || it->second < exp) return std::nullopt;
        if (it->second > exp) out.emplace_back(id, it->second - exp);
        ++it;
    }
    out.insert(out.end(), it, factors_.end());
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Monomial Monomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("Monomial: negative power");
    if (exponent == 0) return unit();
    Factors out = factors_;
    for (auto& [id, exp] : out) exp *= exponent;
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Monomial Monomial::without(SymbolId id) const {
    Factors out;
    for (const auto& f : factors_)
        if (f.first != id) out.push_back(f);
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Dimension Monomial::dimension() const {
    Dimension d;
    const auto& reg = SymbolRegistry::instance();
    for (const auto& [id, exp] : factors_) d = d + reg.dimension_of(id) * exp;
    return d;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Same total degree: lexicographic on the exponent vector in symbol-id
    // order.  A higher exponent on an earlier symbol ranks higher.
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first != ib->first) {
            // The side whose next factor has the smaller id has positive
            // exponent there while the other side has zero.
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != a.factors_.end()) return 1;
    if (ib != b.factors_.end()) return -1;
    return 0;
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::string out;
    const auto& reg = SymbolRegistry::instance();
    for (const auto& [id, exp] : factors_) {
        if (!out.empty()) out += "*";
        out += reg.name_of(id);
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

// --- Polynomial -----------------------------------------------------------

Polynomial Polynomial::constant(GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), std::move(c));
    return p;
}

Polynomial Polynomial::symbol(SymbolId id, int exponent) {
    return term(GaussianRational(1), Monomial::symbol(id, exponent));
}

Polynomial Polynomial::term(GaussianRational c, Monomial m) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw std::logic_error("Polynomial: constant_value on non-constant");
    return terms_.begin()->second;
}

const std::pair<const Monomial, GaussianRational>& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    return *terms_.rbegin();
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int Polynomial::degree_in(SymbolId id) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(id));
    return d;
}

int Polynomial::min_degree_in(SymbolId id) const {
    if (terms_.empty()) return 0;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(id);
        d = (d < 0) ? e : std::min(d, e);
    }
    return d;
}

int Polynomial::degree_in_set(const std::vector<SymbolId>& ids) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (SymbolId id : ids) e += m.degree_in(id);
        d = std::max(d, e);
    }
    return d;
}

int Polynomial::min_degree_in_set(const std::vector<SymbolId>& ids) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (SymbolId id : ids) e += m.degree_in(id);
        d = (d < 0) ? e : std::min(d, e);
    }
    return d;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial Polynomial::operator*(const GaussianRational& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, tc] : terms_) out.terms_.emplace(m, tc * c);
    return out;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial out = one();
    Polynomial base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Polynomial Polynomial::substitute(SymbolId id, const Polynomial& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.degree_in(id);
        Polynomial piece = term(c, m.without(id));
        if (e > 0) piece *= value.pow(e);
        out += piece;
    }
    return out;
}

Polynomial Polynomial::truncate_in(SymbolId id, int max_degree) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(id) <= max_degree) out.terms_.emplace(m, c);
    return out;
}

Polynomial Polynomial::monic() const {
    const GaussianRational& lc = leading().second;
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / lc);
    return out;
}

Polynomial Polynomial::conjugate() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conjugate());
    return out;
}

std::optional<Dimension> Polynomial::dimension() const {
    if (terms_.empty()) return Dimension{};
    std::optional<Dimension> dim;
    for (const auto& [m, c] : terms_) {
        Dimension d = m.dimension();
        if (!dim) {
            dim = d;
        } else if (!(*dim == d)) {
            return std::nullopt;
        }
    }
    return dim;
}

double Polynomial::evaluate(const std::vector<double>& values_by_symbol) const {
    double out = 0.0;
    for (const auto& [m, c] : terms_) {
        if (!c.is_real()) throw std::domain_error("Polynomial: evaluate on complex coefficient");
        double v = c.to_double();
        for (const auto& [id, exp] : m.factors()) {
            if (id >= values_by_symbol.size())
                throw std::invalid_argument("Polynomial: evaluate missing value for symbol '" +
                                            SymbolRegistry::instance().name_of(id) + "'");
            v *= std::pow(values_by_symbol[id], exp);
        }
        out += v;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Leading (highest graded-lex) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            mpq_class re = c.real();
            negative = re < 0;
            mpq_class mag = negative ? mpq_class(-re) : re;
            if (mag == 1 && !m.is_unit()) {
                coeff.clear();
            } else {
                coeff = rational_string(mag);
            }
        } else {
            coeff = c.to_string();
            if (coeff.front() != '(') coeff = "(" + coeff + ")";
        }
        std::string body = coeff;
        if (!m.is_unit()) {
            if (!body.empty()) body += "*";
            body += m.to_string();
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

// --- Exact division and gcd -------------------------------------------------

std::optional<Polynomial> polynomial_divide_exact(const Polynomial& value, const Polynomial& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    if (divisor.is_constant()) {
        GaussianRational inv = divisor.constant_value().inverse();
        return value * Polynomial::constant(inv);
    }
    Polynomial remainder = value;
    Polynomial quotient;
    const auto& [dm, dc] = divisor.leading();
    // Leading-term cancellation under graded-lex order; each step strictly
    // reduces the leading monomial of the remainder, so the loop terminates.
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = remainder.leading();
        auto q = rm.divide(dm);
        if (!q) return std::nullopt;
        Polynomial step = Polynomial::term(rc / dc, *q);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

namespace {

// Univariate view of a polynomial in one symbol: degree -> coefficient
// polynomial in the remaining symbols.
using UniPoly = std::map<int, Polynomial>;

UniPoly to_uni(const Polynomial& p, SymbolId v) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.degree_in(v);
        out[e] += Polynomial::term(c, m.without(v));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

int uni_degree(const UniPoly& u) { return u.empty() ? -1 : u.rbegin()->first; }

const Polynomial& uni_leading(const UniPoly& u) { return u.rbegin()->second; }

SymbolId lowest_symbol(const Polynomial& a, const Polynomial& b) {
    SymbolId best = static_cast<SymbolId>(-1);
    auto scan = [&best](const Polynomial& p) {
        for (const auto& [m, c] : p.terms())
            for (const auto& [id, exp] : m.factors())
                if (id < best) best = id;
    };
    scan(a);
    scan(b);
    return best;
}

Polynomial content_in(const UniPoly& u) {
    Polynomial c = Polynomial::zero();
    for (const auto& [e, coeff] : u) c = polynomial_gcd(c, coeff);
    return c;
}

Polynomial primitive_part(const Polynomial& p, SymbolId v) {
    UniPoly u = to_uni(p, v);
    Polynomial c = content_in(u);
    auto q = polynomial_divide_exact(p, c);
    if (!q) throw std::logic_error("polynomial_gcd: content does not divide its polynomial");
    return *q;
}

// One pseudo-division pass: returns a remainder r with deg_v(r) < deg_v(b),
// equal to the true pseudo-remainder up to a nonzero rational factor.  Only
// the primitive part of the result is used, so any scalar multiple works;
// renormalizing each elimination step keeps the rational coefficients from
// compounding (an unnormalized sequence squares their bit size per step).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, SymbolId v) {
    UniPoly rb = to_uni(b, v);
    int db = uni_degree(rb);
    const Polynomial& lb = uni_leading(rb);
    Polynomial r = a;
    while (true) {
        UniPoly ru = to_uni(r, v);
        int dr = uni_degree(ru);
        if (dr < db || r.is_zero()) return r;
        const Polynomial& lr = uni_leading(ru);
        // lb*r - lr*v^(dr-db)*b cancels the degree-dr coefficient exactly.
        r = r * lb - lr * Polynomial::symbol(v, dr - db) * b;
        if (!r.is_zero()) r = r.monic();
    }
}

} // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial::zero();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::one();

    SymbolId v = lowest_symbol(a, b);

    // Contents and primitive parts with respect to the main variable; the
    // coefficients live in fewer symbols, so the recursion terminates.
    Polynomial ca = content_in(to_uni(a, v));
    Polynomial cb = content_in(to_uni(b, v));
    Polynomial cd = polynomial_gcd(ca, cb);

    Polynomial pa = *polynomial_divide_exact(a, ca);
    Polynomial pb = *polynomial_divide_exact(b, cb);

    // Primitive polynomial remainder sequence in the main variable.
    if (to_uni(pa, v).rbegin()->first < to_uni(pb, v).rbegin()->first) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? Polynomial::zero() : primitive_part(r, v).monic();
    }
    return (cd * pa).monic();
}

} // namespace ncwell
