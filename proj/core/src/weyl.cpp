#include "ncwell/weyl.hpp"

#include <stdexcept>
#include <utility>

namespace ncwell {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::X: return "x";
        case Gen::Y: return "y";
        case Gen::Px: return "p_x";
        case Gen::Py: return "p_y";
    }
    throw std::logic_error("gen_name: invalid generator");
}

// --- AlgebraSpec ------------------------------------------------------------

AlgebraSpec::AlgebraSpec(std::string name, ScalarCoefficient xy, ScalarCoefficient pxpy,
                         ScalarCoefficient position_momentum)
    : name_(std::move(name)) {
    auto at = [this](Gen a, Gen b) -> ScalarCoefficient& {
        return table_[static_cast<int>(a)][static_cast<int>(b)];
    };
    at(Gen::X, Gen::Y) = std::move(xy);
    at(Gen::Px, Gen::Py) = std::move(pxpy);
    at(Gen::X, Gen::Px) = position_momentum;
    at(Gen::Y, Gen::Py) = std::move(position_momentum);
    // [x, p_y] and [y, p_x] stay zero in every algebra this library uses.
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::canonical() {
    static const auto spec = std::make_shared<const AlgebraSpec>(
        "canonical", ScalarCoefficient(0), ScalarCoefficient(0),
        ScalarCoefficient::i() * ScalarCoefficient::symbol(sym::hbar));
    return spec;
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::deformed(ScalarCoefficient xy_scale,
                                                         ScalarCoefficient pq_scale) {
    return std::make_shared<const AlgebraSpec>(
        "deformed", ScalarCoefficient::i() * std::move(xy_scale),
        ScalarCoefficient::i() * std::move(pq_scale),
        ScalarCoefficient::i() * ScalarCoefficient::symbol(sym::hbar));
}

ScalarCoefficient AlgebraSpec::commutator(Gen a, Gen b) const {
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    if (ia == ib) return ScalarCoefficient(0);
    if (ia < ib) return table_[ia][ib];
    return -table_[ib][ia];
}

// --- WeylElement ------------------------------------------------------------

WeylElement WeylElement::scalar(std::shared_ptr<const AlgebraSpec> alg, ScalarCoefficient c) {
    WeylElement e(std::move(alg));
    e.add_term({0, 0, 0, 0}, c);
    return e;
}

WeylElement WeylElement::generator(std::shared_ptr<const AlgebraSpec> alg, Gen g, int exponent) {
    if (exponent < 0) throw std::invalid_argument("WeylElement: negative generator power");
    Mono4 m{0, 0, 0, 0};
    m[static_cast<int>(g)] = exponent;
    return monomial(std::move(alg), ScalarCoefficient(1), m);
}

WeylElement WeylElement::monomial(std::shared_ptr<const AlgebraSpec> alg, ScalarCoefficient c, Mono4 m) {
    for (int e : m)
        if (e < 0) throw std::invalid_argument("WeylElement: negative exponent");
    WeylElement e(std::move(alg));
    e.add_term(m, c);
    return e;
}

ScalarCoefficient WeylElement::coefficient(const Mono4& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarCoefficient(0) : it->second;
}

void WeylElement::add_term(const Mono4& m, const ScalarCoefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement out(alg_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {
void require_same_algebra(const WeylElement& a, const WeylElement& b, const char* op) {
    if (!(*a.algebra() == *b.algebra()))
        throw std::invalid_argument(std::string("WeylElement: ") + op +
                                    " across different algebras ('" + a.algebra()->name() +
                                    "' vs '" + b.algebra()->name() + "')");
}
} // namespace

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    require_same_algebra(*this, o, "addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    require_same_algebra(*this, o, "subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

// Words are run-length encoded generator strings.
using Word = std::vector<std::pair<Gen, int>>;

void merge_runs(Word& w) {
    Word out;
    for (const auto& [g, e] : w) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == g) {
            out.back().second += e;
        } else {
            out.emplace_back(g, e);
        }
    }
    w = std::move(out);
}

Word word_of(const Mono4& m) {
    Word w;
    for (int i = 0; i < kGenCount; ++i)
        if (m[i] > 0) w.emplace_back(static_cast<Gen>(i), m[i]);
    return w;
}

} // namespace

// Products are rewritten into normal form by a worklist version of the
// rule g*h -> h*g + [g,h], applied to the first adjacent out-of-order pair.
// Every [g,h] is a central scalar, so each rewrite either lowers the word's
// inversion count or shortens it, and the worklist empties in finitely many
// steps.
WeylElement& WeylElement::operator*=(const WeylElement& o) {
    require_same_algebra(*this, o, "multiplication");
    WeylElement out(alg_);
    std::vector<std::pair<ScalarCoefficient, Word>> worklist;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Word w = word_of(ma);
            Word wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            worklist.emplace_back(ca * cb, std::move(w));
        }
    }
    while (!worklist.empty()) {
        auto [c, w] = std::move(worklist.back());
        worklist.pop_back();
        merge_runs(w);
        std::size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i) {
            if (w[i].first > w[i + 1].first) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            Mono4 m{0, 0, 0, 0};
            for (const auto& [g, e] : w) m[static_cast<int>(g)] += e;
            out.add_term(m, c);
            continue;
        }
        // w[i] = g^a, w[i+1] = h^b with g > h: peel one transposition,
        // g^a h^b = g^(a-1) h g h^(b-1) + [g,h] g^(a-1) h^(b-1).
        auto [g, a] = w[i];
        auto [h, b] = w[i + 1];
        ScalarCoefficient comm = alg_->commutator(g, h);

        Word swapped;
        swapped.reserve(w.size() + 2);
        swapped.insert(swapped.end(), w.begin(), w.begin() + i);
        swapped.emplace_back(g, a - 1);
        swapped.emplace_back(h, 1);
        swapped.emplace_back(g, 1);
        swapped.emplace_back(h, b - 1);
        swapped.insert(swapped.end(), w.begin() + i + 2, w.end());
        worklist.emplace_back(c, std::move(swapped));

        if (!comm.is_zero()) {
            Word reduced;
            reduced.reserve(w.size());
            reduced.insert(reduced.end(), w.begin(), w.begin() + i);
            reduced.emplace_back(g, a - 1);
            reduced.emplace_back(h, b - 1);
            reduced.insert(reduced.end(), w.begin() + i + 2, w.end());
            worklist.emplace_back(c * comm, std::move(reduced));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

WeylElement WeylElement::operator*(const ScalarCoefficient& c) const {
    WeylElement out(alg_);
    if (c.is_zero()) return out;
    for (const auto& [m, tc] : terms_) out.add_term(m, tc * c);
    return out;
}

WeylElement WeylElement::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("WeylElement: negative power");
    WeylElement out = scalar(alg_, ScalarCoefficient(1));
    for (int i = 0; i < exponent; ++i) out *= *this;
    return out;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    return *a.alg_ == *b.alg_ && a.terms_ == b.terms_;
}

WeylElement WeylElement::formal_adjoint() const {
    WeylElement out(alg_);
    for (const auto& [m, c] : terms_) {
        // Reverse the word (descending generator order) and renormal-order.
        WeylElement reversed = scalar(alg_, c.conjugate());
        for (int i = kGenCount - 1; i >= 0; --i)
            if (m[i] > 0) reversed *= generator(alg_, static_cast<Gen>(i), m[i]);
        out += reversed;
    }
    return out;
}

WeylElement WeylElement::substitute_params(SymbolId id, const ScalarCoefficient& value) const {
    WeylElement out(alg_);
    for (const auto& [m, c] : terms_) out.add_term(m, c.substitute(id, value));
    return out;
}

WeylElement WeylElement::substitute_generator(Gen g, const ScalarCoefficient& scale,
                                              const ScalarCoefficient& offset) const {
    int gi = static_cast<int>(g);
    WeylElement out(alg_);
    for (const auto& [m, c] : terms_) {
        int e = m[gi];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        // (scale*g + offset)^e expands binomially; scale and offset are
        // central so the terms stay normal-ordered.
        ScalarCoefficient binom(1);
        for (int j = e; j >= 0; --j) {
            // binom holds C(e, j') for the current j' walking down from e.
            Mono4 mm = m;
            mm[gi] = j;
            ScalarCoefficient coeff = c * binom * scale.pow(j) * offset.pow(e - j);
            out.add_term(mm, coeff);
            if (j > 0) binom *= ScalarCoefficient(GaussianRational(j, e - j + 1));
        }
    }
    return out;
}

WeylElement WeylElement::with_algebra(std::shared_ptr<const AlgebraSpec> alg) const {
    WeylElement out(std::move(alg));
    out.terms_ = terms_;
    return out;
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i < kGenCount; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += gen_name(static_cast<Gen>(i));
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coeff = c.to_string();
        bool suppress_one = (coeff == "1" && !mono.empty());
        std::string body;
        if (suppress_one) {
            body = mono;
        } else {
            bool needs_paren = coeff.find(' ') != std::string::npos;
            body = needs_paren ? "(" + coeff + ")" : coeff;
            if (!mono.empty()) body += "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += body;
    }
    return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

} // namespace ncwell
