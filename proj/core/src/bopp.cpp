#include "ncwell/bopp.hpp"

#include <stdexcept>

namespace ncwell {

const char* map_mode_name(MapMode m) {
    switch (m) {
        case MapMode::Full: return "full";
        case MapMode::SpaceOnly: return "space-only";
        case MapMode::MomentumOnly: return "momentum-only";
        case MapMode::Commutative: return "commutative";
    }
    throw std::logic_error("map_mode_name: invalid mode");
}

MapMode map_mode_from_name(const std::string& name) {
    if (name == "full") return MapMode::Full;
    if (name == "space-only") return MapMode::SpaceOnly;
    if (name == "momentum-only") return MapMode::MomentumOnly;
    if (name == "commutative") return MapMode::Commutative;
    throw std::invalid_argument("map_mode_from_name: unknown mode '" + name + "'");
}

const char* planck_variant_name(PlanckVariant v) {
    switch (v) {
        case PlanckVariant::Simple: return "simple";
        case PlanckVariant::General: return "general";
    }
    throw std::logic_error("planck_variant_name: invalid variant");
}

PlanckVariant planck_variant_from_name(const std::string& name) {
    if (name == "simple") return PlanckVariant::Simple;
    if (name == "general") return PlanckVariant::General;
    throw std::invalid_argument("planck_variant_from_name: unknown variant '" + name + "'");
}

namespace {

ScalarCoefficient mode_theta(MapMode m) {
    if (m == MapMode::Full || m == MapMode::SpaceOnly) return ScalarCoefficient::symbol(sym::theta);
    return ScalarCoefficient(0);
}

ScalarCoefficient mode_eta(MapMode m) {
    if (m == MapMode::Full || m == MapMode::MomentumOnly) return ScalarCoefficient::symbol(sym::eta);
    return ScalarCoefficient(0);
}

ScalarCoefficient half_over_hbar(const ScalarCoefficient& s) {
    return s / (ScalarCoefficient(2) * ScalarCoefficient::symbol(sym::hbar));
}

} // namespace

ScalarCoefficient BoppMap::theta_scale() const { return mode_theta(mode); }
ScalarCoefficient BoppMap::eta_scale() const { return mode_eta(mode); }

BoppMap BoppMap::nc_to_aux(MapMode mode) {
    BoppMap map;
    map.mode = mode;
    map.direction = MapDirection::NCtoAux;
    map.source = AlgebraSpec::deformed(mode_theta(mode), mode_eta(mode));
    map.target = AlgebraSpec::canonical();
    map.scale = ScalarCoefficient(1);

    ScalarCoefficient th2 = half_over_hbar(mode_theta(mode));
    ScalarCoefficient et2 = half_over_hbar(mode_eta(mode));
    auto gen = [&map](Gen g) { return WeylElement::generator(map.target, g); };

    map.images[static_cast<int>(Gen::X)] = gen(Gen::X) - gen(Gen::Py) * th2;
    map.images[static_cast<int>(Gen::Y)] = gen(Gen::Y) + gen(Gen::Px) * th2;
    map.images[static_cast<int>(Gen::Px)] = gen(Gen::Px) + gen(Gen::Y) * et2;
    map.images[static_cast<int>(Gen::Py)] = gen(Gen::Py) - gen(Gen::X) * et2;
    return map;
}

BoppMap BoppMap::aux_to_nc(MapMode mode) {
    BoppMap map;
    map.mode = mode;
    map.direction = MapDirection::AuxToNC;
    map.source = AlgebraSpec::canonical();
    map.target = AlgebraSpec::deformed(mode_theta(mode), mode_eta(mode));

    ScalarCoefficient th2 = half_over_hbar(mode_theta(mode));
    ScalarCoefficient et2 = half_over_hbar(mode_eta(mode));
    // C = (1 - theta*eta/4hbar^2)^-1; the cross product th2*et2 is
    // theta*eta/4hbar^2 itself.
    map.scale = (ScalarCoefficient(1) - th2 * et2).inverse();
    auto gen = [&map](Gen g) { return WeylElement::generator(map.target, g); };

    map.images[static_cast<int>(Gen::X)] = (gen(Gen::X) + gen(Gen::Py) * th2) * map.scale;
    map.images[static_cast<int>(Gen::Y)] = (gen(Gen::Y) - gen(Gen::Px) * th2) * map.scale;
    map.images[static_cast<int>(Gen::Px)] = (gen(Gen::Px) - gen(Gen::Y) * et2) * map.scale;
    map.images[static_cast<int>(Gen::Py)] = (gen(Gen::Py) + gen(Gen::X) * et2) * map.scale;
    return map;
}

WeylElement apply_map(const BoppMap& map, const WeylElement& e) {
    if (!(*e.algebra() == *map.source))
        throw std::invalid_argument("apply_map: element does not live over the map's source algebra");
    WeylElement out = WeylElement::zero(map.target);
    for (const auto& [m, c] : e.terms()) {
        WeylElement term = WeylElement::scalar(map.target, c);
        for (int i = 0; i < kGenCount; ++i)
            for (int rep = 0; rep < m[i]; ++rep) term *= map.images[i];
        out += term;
    }
    return out;
}

WeylElement verify_effective_commutator(const BoppMap& map) {
    if (map.direction != MapDirection::NCtoAux)
        throw std::invalid_argument("verify_effective_commutator: map must be the NCtoAux direction");
    return commutator(map.images[static_cast<int>(Gen::X)], map.images[static_cast<int>(Gen::Px)]);
}

std::vector<CommutatorCheck> image_commutators(const BoppMap& map) {
    std::vector<CommutatorCheck> out;
    for (int a = 0; a < kGenCount; ++a) {
        for (int b = a + 1; b < kGenCount; ++b) {
            CommutatorCheck check;
            check.a = static_cast<Gen>(a);
            check.b = static_cast<Gen>(b);
            check.value = commutator(map.images[a], map.images[b]);
            out.push_back(std::move(check));
        }
    }
    return out;
}

SymbolId grading_symbol() {
    static const SymbolId id = SymbolRegistry::instance().register_symbol("epsilon", Dimension{});
    return id;
}

namespace {

ScalarCoefficient graded(const ScalarCoefficient& s, SymbolId sym_id, SymbolId eps) {
    // theta -> epsilon*theta inside s (and likewise for eta).
    return s.substitute(sym_id, ScalarCoefficient::symbol(eps) * ScalarCoefficient::symbol(sym_id));
}

} // namespace

ScalarCoefficient expand_C_series(const ScalarCoefficient& k, const ScalarCoefficient& m,
                                  const ScalarCoefficient& theta, const ScalarCoefficient& eta,
                                  int max_order) {
    if (max_order < 0) throw std::invalid_argument("expand_C_series: negative order");
    SymbolId eps = grading_symbol();
    ScalarCoefficient eps_sc = ScalarCoefficient::symbol(eps);
    ScalarCoefficient th = eps_sc * theta;
    ScalarCoefficient et = eps_sc * eta;
    ScalarCoefficient hbar = ScalarCoefficient::symbol(sym::hbar);
    ScalarCoefficient four_h2 = ScalarCoefficient(4) * hbar * hbar;

    // sqrt(1 + x) with x = k*m*theta^2/4hbar^2, via the generalized binomial
    // series; x is second order in the grading, so j <= max_order/2 suffices.
    ScalarCoefficient x = k * m * th * th / four_h2;
    ScalarCoefficient sqrt_series(0);
    GaussianRational binom(1);
    for (int j = 0; 2 * j <= max_order; ++j) {
        sqrt_series += ScalarCoefficient(binom) * x.pow(j);
        binom *= GaussianRational(1 - 2 * j, 2 * (j + 1));
    }
    ScalarCoefficient series = (ScalarCoefficient(1) - th * et / four_h2) * sqrt_series;
    series = series.truncate_in(eps, max_order);
    return series.substitute(eps, ScalarCoefficient(1));
}

bool equal_to_deformation_order(const ScalarCoefficient& a, const ScalarCoefficient& b, int order) {
    ScalarCoefficient diff = a - b;
    if (diff.is_zero()) return true;
    SymbolId eps = grading_symbol();
    ScalarCoefficient graded_diff = graded(graded(diff, sym::theta, eps), sym::eta, eps);
    // The denominator must carry a deformation-free part: otherwise the
    // difference has a pole at the commutative point and no grading applies.
    if (graded_diff.denominator().min_degree_in(eps) > 0)
        throw std::domain_error(
            "equal_to_deformation_order: difference is singular at the commutative point");
    return graded_diff.numerator().min_degree_in(eps) >= order + 1;
}

EffectivePlanck effective_planck(const ScalarCoefficient& theta, const ScalarCoefficient& eta,
                                 const ScalarCoefficient& m, const ScalarCoefficient& k,
                                 PlanckVariant variant) {
    ScalarCoefficient hbar = ScalarCoefficient::symbol(sym::hbar);
    ScalarCoefficient four_h2 = ScalarCoefficient(4) * hbar * hbar;

    EffectivePlanck out;
    out.variant = variant;
    if (variant == PlanckVariant::Simple) {
        out.xi = theta * eta / four_h2;
    } else {
        ScalarCoefficient eight_h2 = ScalarCoefficient(8) * hbar * hbar;
        out.xi = m * k * theta * theta / eight_h2 - eta * theta / four_h2;
    }
    out.hbar_eff = hbar * (ScalarCoefficient(1) + out.xi);
    return out;
}

} // namespace ncwell
