#include "doctest.h"

#include <ncwell/coefficient.hpp>
#include <ncwell/polynomial.hpp>
#include <ncwell/rational.hpp>
#include <ncwell/symbols.hpp>

#include <stdexcept>
#include <vector>

using namespace ncwell;

namespace {

Polynomial psym(SymbolId id, int e = 1) { return Polynomial::symbol(id, e); }

ScalarCoefficient ssym(SymbolId id) { return ScalarCoefficient::symbol(id); }

} // namespace

TEST_SUITE("gaussian_rational") {
    TEST_CASE("construction_normalizes") {
        CHECK(GaussianRational(2, 4) == GaussianRational(1, 2));
        CHECK(GaussianRational(-3, -6) == GaussianRational(1, 2));
        CHECK(GaussianRational(0, 7).is_zero());
        CHECK(GaussianRational(5, 5).is_one());
    }

    TEST_CASE("field_arithmetic") {
        GaussianRational a(1, 2), b(1, 3);
        CHECK(a + b == GaussianRational(5, 6));
        CHECK(a - b == GaussianRational(1, 6));
        CHECK(a * b == GaussianRational(1, 6));
        CHECK(a / b == GaussianRational(3, 2));
        CHECK(-a == GaussianRational(-1, 2));
    }

    TEST_CASE("imaginary_unit") {
        auto i = GaussianRational::i();
        CHECK(i * i == GaussianRational(-1));
        CHECK(i.inverse() == -i);
        CHECK(i.conjugate() == -i);
        CHECK_FALSE(i.is_real());
        GaussianRational z(mpq_class(3), mpq_class(4));
        CHECK(z.norm() == mpq_class(25));
        CHECK(z * z.conjugate() == GaussianRational(mpq_class(25), mpq_class(0)));
    }

    TEST_CASE("division_by_zero_throws") {
        CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
        CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
    }

    TEST_CASE("rendering") {
        CHECK(GaussianRational(3, 4).to_string() == "3/4");
        CHECK(GaussianRational(-2).to_string() == "-2");
        CHECK(GaussianRational::i().to_string() == "i");
        CHECK((-GaussianRational::i()).to_string() == "-i");
        CHECK((GaussianRational(2) * GaussianRational::i()).to_string() == "2*i");
        GaussianRational mixed(mpq_class(1, 2), mpq_class(-3));
        CHECK(mixed.to_string() == "(1/2-3*i)");
        GaussianRational plus(mpq_class(1), mpq_class(1));
        CHECK(plus.to_string() == "(1+i)");
    }

    TEST_CASE("to_double") {
        CHECK(GaussianRational(1, 4).to_double() == doctest::Approx(0.25));
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("monomial_ordering_is_graded_lex") {
        auto h = Monomial::symbol(sym::hbar);
        auto t = Monomial::symbol(sym::theta);
        // Degree dominates.
        CHECK(Monomial::compare(h, t.pow(2)) < 0);
        // Equal degree: earlier symbol id with the higher exponent wins.
        CHECK(Monomial::compare(h.pow(2), t * Monomial::symbol(sym::eta)) > 0);
        CHECK(Monomial::compare(h, h) == 0);
        CHECK(Monomial::compare(Monomial::unit(), h) < 0);
    }

    TEST_CASE("monomial_divide") {
        auto m = Monomial::symbol(sym::theta, 2) * Monomial::symbol(sym::eta);
        auto d = m.divide(Monomial::symbol(sym::theta));
        REQUIRE(d.has_value());
        CHECK(*d == Monomial::symbol(sym::theta) * Monomial::symbol(sym::eta));
        CHECK_FALSE(m.divide(Monomial::symbol(sym::hbar)).has_value());
        CHECK(m.without(sym::theta) == Monomial::symbol(sym::eta));
        CHECK(m.degree_in(sym::theta) == 2);
        CHECK(m.total_degree() == 3);
    }

    TEST_CASE("ring_arithmetic") {
        auto a = psym(sym::hbar);
        auto b = psym(sym::theta);
        CHECK((a + b) * (a - b) == a * a - b * b);
        auto sq = (a + b).pow(2);
        CHECK(sq == a * a + a * b * Polynomial(2) + b * b);
        CHECK((a - a).is_zero());
        CHECK(Polynomial(3) * Polynomial(4) == Polynomial(12));
    }

    TEST_CASE("leading_term_and_degrees") {
        auto p = psym(sym::hbar, 2) + psym(sym::theta) * psym(sym::eta);
        CHECK(p.leading().first == Monomial::symbol(sym::hbar, 2));
        CHECK(p.total_degree() == 2);
        CHECK(p.degree_in(sym::theta) == 1);
        CHECK(p.min_degree_in(sym::hbar) == 0);
        CHECK(p.degree_in_set({sym::theta, sym::eta}) == 2);
        CHECK(p.min_degree_in_set({sym::theta, sym::eta}) == 0);
    }

    TEST_CASE("substitute_and_truncate") {
        auto p = psym(sym::theta, 2) + psym(sym::theta) + Polynomial(1);
        CHECK(p.substitute(sym::theta, Polynomial::zero()) == Polynomial(1));
        CHECK(p.truncate_in(sym::theta, 1) == psym(sym::theta) + Polynomial(1));
        auto q = p.substitute(sym::theta, psym(sym::eta));
        CHECK(q == psym(sym::eta, 2) + psym(sym::eta) + Polynomial(1));
    }

    TEST_CASE("monic_normalization") {
        auto p = psym(sym::theta) * GaussianRational(3) + Polynomial(6);
        auto m = p.monic();
        CHECK(m.leading().second.is_one());
        CHECK(m == psym(sym::theta) + Polynomial(2));
    }

    TEST_CASE("evaluate") {
        std::vector<double> vals(SymbolRegistry::instance().size(), 0.0);
        vals[sym::theta] = 2.0;
        vals[sym::eta] = 3.0;
        vals[sym::hbar] = 1.0;
        auto p = psym(sym::theta) * psym(sym::eta) + psym(sym::hbar, 2);
        CHECK(p.evaluate(vals) == doctest::Approx(7.0));
    }

    TEST_CASE("gcd_basic") {
        auto a = psym(sym::hbar);
        auto b = psym(sym::theta);
        auto g = polynomial_gcd((a + b) * (a - b), (a + b) * (a + b));
        CHECK(g == a + b);
        CHECK(polynomial_gcd(Polynomial::zero(), Polynomial::zero()).is_zero());
        CHECK(polynomial_gcd(Polynomial(6), Polynomial(4)) == Polynomial::one());
        // gcd with zero returns the other argument, monic.
        auto scaled = (a + b) * GaussianRational(5);
        CHECK(polynomial_gcd(scaled, Polynomial::zero()) == a + b);
    }

    TEST_CASE("gcd_rational_coefficients_stay_small") {
        // Multivariate gcd with many symbols and fractional coefficients: the
        // pseudo-remainder sequence must renormalize per elimination step or
        // the rational bit sizes square at every level and the gcd effectively
        // hangs.  This instance class previously did exactly that.
        auto p = psym(sym::hbar) * GaussianRational(1, 2) + psym(sym::theta) * GaussianRational(1, 3) +
                 psym(sym::eta) * GaussianRational(1, 5) + psym(sym::mass) * GaussianRational(1, 7) +
                 psym(sym::g) * GaussianRational(1, 11) + psym(sym::k) * GaussianRational(1, 13) +
                 Polynomial(GaussianRational(1, 17));
        auto cube = p * p * p;
        auto u = cube * (psym(sym::hbar) - psym(sym::theta) * GaussianRational(1, 2) + Polynomial(3));
        auto v = cube * (psym(sym::eta) + psym(sym::mass) * GaussianRational(1, 4) - Polynomial(1));
        auto g = polynomial_gcd(u, v);
        CHECK(g == (cube).monic());
    }

    TEST_CASE("exact_division") {
        auto a = psym(sym::hbar);
        auto b = psym(sym::theta);
        auto q = polynomial_divide_exact(a * a - b * b, a - b);
        REQUIRE(q.has_value());
        CHECK(*q == a + b);
        CHECK_FALSE(polynomial_divide_exact(a * a + Polynomial(1), a - b).has_value());
        auto z = polynomial_divide_exact(Polynomial::zero(), a - b);
        REQUIRE(z.has_value());
        CHECK(z->is_zero());
    }

    TEST_CASE("dimension_lint") {
        auto homogeneous = psym(sym::theta) * psym(sym::eta);
        REQUIRE(homogeneous.dimension().has_value());
        auto mixed = psym(sym::theta) + psym(sym::hbar);
        CHECK_FALSE(mixed.dimension().has_value());
        CHECK(Polynomial::zero().dimension().has_value());
    }
}

TEST_SUITE("scalar_coefficient") {
    TEST_CASE("canonical_form_reduces_common_factors") {
        auto h = psym(sym::hbar);
        auto t = psym(sym::theta);
        ScalarCoefficient r(h * h - t * t, h - t);
        CHECK(r == ScalarCoefficient(h + t));
        CHECK(r.denominator() == Polynomial::one());
    }

    TEST_CASE("denominator_kept_monic") {
        auto h = psym(sym::hbar);
        auto t = psym(sym::theta);
        ScalarCoefficient r(h * GaussianRational(2), t * GaussianRational(4));
        CHECK(r.denominator() == t);
        CHECK(r.numerator() == h * GaussianRational(1, 2));
    }

    TEST_CASE("zero_denominator_throws") {
        CHECK_THROWS_AS(ScalarCoefficient(psym(sym::hbar), Polynomial::zero()), std::domain_error);
        CHECK_THROWS_AS(ScalarCoefficient(1) / ScalarCoefficient(0), std::domain_error);
        CHECK_THROWS_AS(ScalarCoefficient(0).inverse(), std::domain_error);
    }

    TEST_CASE("field_laws_on_samples") {
        auto a = ssym(sym::hbar) / (ssym(sym::theta) + ScalarCoefficient(1));
        auto b = ssym(sym::eta) * ScalarCoefficient::rational(3, 7);
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * b / b == a);
        CHECK(a * a.inverse() == ScalarCoefficient(1));
        CHECK(a.pow(-2) == (a * a).inverse());
        CHECK(a.pow(0) == ScalarCoefficient(1));
    }

    TEST_CASE("deformation_parameter_strings") {
        auto hb = ssym(sym::hbar);
        auto th = ssym(sym::theta);
        auto et = ssym(sym::eta);
        auto m = ssym(sym::mass);
        auto k = ssym(sym::k);
        auto xi_simple = th * et / (ScalarCoefficient(4) * hb * hb);
        CHECK(xi_simple.to_string() == "(1/4*theta*eta)/hbar^2");
        auto xi_general = m * k * th * th / (ScalarCoefficient(8) * hb * hb) -
                          et * th / (ScalarCoefficient(4) * hb * hb);
        CHECK(xi_general.to_string() == "(1/8*theta^2*m*k - 1/4*theta*eta)/hbar^2");
    }

    TEST_CASE("conjugate_acts_on_numeric_part") {
        auto z = ScalarCoefficient::i() * ssym(sym::theta);
        CHECK(z.conjugate() == -z);
        auto real = ssym(sym::theta) / ssym(sym::hbar);
        CHECK(real.conjugate() == real);
    }

    TEST_CASE("substitute_and_truncate") {
        auto hb = ssym(sym::hbar);
        auto th = ssym(sym::theta);
        auto expr = (ScalarCoefficient(1) + th * th / hb) / hb;
        CHECK(expr.substitute(sym::theta, ScalarCoefficient(0)) == hb.inverse());
        auto truncated = (ScalarCoefficient(1) + th + th * th).truncate_in(sym::theta, 1);
        CHECK(truncated == ScalarCoefficient(1) + th);
    }

    TEST_CASE("dimension_of_ratio") {
        auto xi = ssym(sym::theta) * ssym(sym::eta) /
                  (ScalarCoefficient(4) * ssym(sym::hbar) * ssym(sym::hbar));
        auto dim = xi.dimension();
        REQUIRE(dim.has_value());
        CHECK(dim->is_dimensionless());
        auto mixed = ssym(sym::theta) + ssym(sym::hbar);
        CHECK_FALSE(mixed.dimension().has_value());
    }

    TEST_CASE("evaluate") {
        auto xi = ssym(sym::theta) * ssym(sym::eta) /
                  (ScalarCoefficient(4) * ssym(sym::hbar) * ssym(sym::hbar));
        std::vector<double> vals(SymbolRegistry::instance().size(), 0.0);
        vals[sym::theta] = 2.0;
        vals[sym::eta] = 3.0;
        vals[sym::hbar] = 1.0;
        CHECK(xi.evaluate(vals) == doctest::Approx(1.5));
    }
}

TEST_SUITE("symbol_registry") {
    TEST_CASE("builtin_names_and_dimensions") {
        auto& reg = SymbolRegistry::instance();
        CHECK(reg.name_of(sym::hbar) == "hbar");
        CHECK(reg.name_of(sym::theta) == "theta");
        CHECK(reg.name_of(sym::eta) == "eta");
        CHECK(reg.name_of(sym::mass) == "m");
        CHECK(reg.name_of(sym::omega) == "omega");
        CHECK(reg.find("theta").has_value());
        CHECK(*reg.find("theta") == sym::theta);
        CHECK_FALSE(reg.find("no_such_symbol").has_value());
        // theta is an area; eta is a squared momentum.
        CHECK(reg.dimension_of(sym::theta) == Dimension{0, 2, 0, 0});
        CHECK(reg.dimension_of(sym::eta) == Dimension{2, 2, -2, 0});
    }

    TEST_CASE("reregistration_is_idempotent") {
        auto& reg = SymbolRegistry::instance();
        auto id = reg.register_symbol("theta", Dimension{0, 2, 0, 0});
        CHECK(id == sym::theta);
        CHECK_THROWS_AS(reg.register_symbol("theta", Dimension{1, 0, 0, 0}), std::invalid_argument);
    }
}
