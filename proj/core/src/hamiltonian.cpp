#include "ncwell/hamiltonian.hpp"

#include <stdexcept>
#include <utility>

namespace ncwell {

const char* potential_kind_name(PotentialKind k) {
    switch (k) {
    case PotentialKind::GravityWell: return "gravity";
    case PotentialKind::FreeOscillator: return "oscillator";
    case PotentialKind::GravityOscillator: return "gravity-oscillator";
    }
    throw std::invalid_argument("potential_kind_name: unknown kind");
}

PotentialKind potential_kind_from_name(const std::string& name) {
    if (name == "gravity") return PotentialKind::GravityWell;
    if (name == "oscillator") return PotentialKind::FreeOscillator;
    if (name == "gravity-oscillator") return PotentialKind::GravityOscillator;
    throw std::invalid_argument("potential_kind_from_name: unknown potential '" + name + "'");
}

WeylElement build_hamiltonian(PotentialKind kind) {
    auto alg = AlgebraSpec::canonical();
    const ScalarCoefficient m = ScalarCoefficient::symbol(sym::mass);
    const ScalarCoefficient g = ScalarCoefficient::symbol(sym::g);
    const ScalarCoefficient k = ScalarCoefficient::symbol(sym::k);
    const ScalarCoefficient half(1, 2);

    const ScalarCoefficient inv2m = half / m;

    WeylElement h = WeylElement::zero(alg);
    h = h + inv2m * WeylElement::generator(alg, Gen::Px).pow(2);
    h = h + inv2m * WeylElement::generator(alg, Gen::Py).pow(2);

    if (kind == PotentialKind::GravityWell || kind == PotentialKind::GravityOscillator) {
        h = h + (m * g) * WeylElement::generator(alg, Gen::X);
    }
    if (kind == PotentialKind::FreeOscillator || kind == PotentialKind::GravityOscillator) {
        h = h + (k * half) * WeylElement::generator(alg, Gen::X).pow(2);
        h = h + (k * half) * WeylElement::generator(alg, Gen::Y).pow(2);
    }
    return h;
}

WeylElement HamiltonianForm::reconstruct() const {
    auto alg = raw.algebra();
    WeylElement e = residual;
    e = e + kinetic_x * WeylElement::generator(alg, Gen::Px).pow(2);
    e = e + kinetic_y * WeylElement::generator(alg, Gen::Py).pow(2);
    e = e + confinement * WeylElement::generator(alg, Gen::X).pow(2);
    e = e + confinement * WeylElement::generator(alg, Gen::Y).pow(2);
    e = e + angular_momentum * (WeylElement::generator(alg, Gen::X) * WeylElement::generator(alg, Gen::Py)
                                - WeylElement::generator(alg, Gen::Y) * WeylElement::generator(alg, Gen::Px));
    e = e + gravity_linear * WeylElement::generator(alg, Gen::X);
    e = e + gravity_momentum * WeylElement::generator(alg, Gen::Py);
    e = e + WeylElement::scalar(alg, constant);
    return e;
}

namespace {

Mono4 mono_of(int x, int y, int px, int py) {
    Mono4 m{};
    m[0] = x;
    m[1] = y;
    m[2] = px;
    m[3] = py;
    return m;
}

} // namespace

HamiltonianForm collect(const WeylElement& e) {
    HamiltonianForm f;
    f.raw = e;
    f.kinetic_x = ScalarCoefficient(0);
    f.kinetic_y = ScalarCoefficient(0);
    f.confinement = ScalarCoefficient(0);
    f.angular_momentum = ScalarCoefficient(0);
    f.gravity_linear = ScalarCoefficient(0);
    f.gravity_momentum = ScalarCoefficient(0);
    f.constant = ScalarCoefficient(0);
    f.residual = WeylElement::zero(e.algebra());

    // Single-shape buckets read straight off the normal-ordered terms.
    ScalarCoefficient cx2 = e.coefficient(mono_of(2, 0, 0, 0));
    ScalarCoefficient cy2 = e.coefficient(mono_of(0, 2, 0, 0));
    ScalarCoefficient cxpy = e.coefficient(mono_of(1, 0, 0, 1));
    ScalarCoefficient cypx = e.coefficient(mono_of(0, 1, 1, 0));

    f.kinetic_x = e.coefficient(mono_of(0, 0, 2, 0));
    f.kinetic_y = e.coefficient(mono_of(0, 0, 0, 2));
    f.gravity_linear = e.coefficient(mono_of(1, 0, 0, 0));
    f.gravity_momentum = e.coefficient(mono_of(0, 0, 0, 1));
    f.constant = e.coefficient(mono_of(0, 0, 0, 0));

    // Paired shapes: x^2 and y^2 must share a coefficient; x p_y and y p_x
    // must be exact negatives.  On failure both halves go to the residual.
    bool conf_paired = (cx2 == cy2);
    bool am_paired = (cxpy == (ScalarCoefficient(0) - cypx));
    if (conf_paired) {
        f.confinement = cx2;
    }
    if (am_paired) {
        f.angular_momentum = cxpy;
    }

    // Everything not claimed by a bucket stays in the residual.
    WeylElement claimed = WeylElement::zero(e.algebra());
    auto alg = e.algebra();
    claimed = claimed + f.kinetic_x * WeylElement::generator(alg, Gen::Px).pow(2);
    claimed = claimed + f.kinetic_y * WeylElement::generator(alg, Gen::Py).pow(2);
    claimed = claimed + f.gravity_linear * WeylElement::generator(alg, Gen::X);
    claimed = claimed + f.gravity_momentum * WeylElement::generator(alg, Gen::Py);
    claimed = claimed + WeylElement::scalar(alg, f.constant);
    if (conf_paired) {
        claimed = claimed + f.confinement * WeylElement::generator(alg, Gen::X).pow(2);
        claimed = claimed + f.confinement * WeylElement::generator(alg, Gen::Y).pow(2);
    }
    if (am_paired) {
        claimed = claimed + f.angular_momentum
                    * (WeylElement::generator(alg, Gen::X) * WeylElement::generator(alg, Gen::Py)
                       - WeylElement::generator(alg, Gen::Y) * WeylElement::generator(alg, Gen::Px));
    }
    f.residual = e - claimed;
    return f;
}

HamiltonianForm transform_hamiltonian(const WeylElement& h, const BoppMap& map) {
    if (!(*h.algebra() == *map.source)) {
        throw std::invalid_argument(
            "transform_hamiltonian: element does not live over the map's source algebra");
    }
    WeylElement image = apply_map(map, h);
    HamiltonianForm f = collect(image);
    if (!f.residual_empty()) {
        throw std::domain_error("transform_hamiltonian: image has terms outside the tracked "
                                "shapes; residual = " + f.residual.to_string());
    }
    f.mode = map.mode;
    f.map_scale = map.scale;
    return f;
}

HamiltonianForm momentum_shift(const HamiltonianForm& hf, ShiftKind kind) {
    if (hf.kinetic_y.is_zero()) {
        throw std::domain_error("momentum_shift: form has no p_y^2 term to absorb against");
    }

    ScalarCoefficient scale;
    switch (kind) {
    case ShiftKind::Eq10:
        scale = hf.map_scale;
        break;
    case ShiftKind::Eq17: {
        if (!(hf.kinetic_x == hf.kinetic_y)) {
            throw std::domain_error("momentum_shift: kinetic term is not isotropic");
        }
        const ScalarCoefficient two_m = ScalarCoefficient(2) * ScalarCoefficient::symbol(sym::mass);
        scale = two_m * hf.kinetic_y;
        break;
    }
    }
    if (scale.is_zero()) {
        throw std::domain_error("momentum_shift: shift scale is zero");
    }

    // pbar_y = scale * p_y + offset absorbs the linear p_y term when
    // offset = (coefficient of p_y) * scale / (2 * coefficient of p_y^2):
    // substituting p_y -> (pbar_y - offset)/scale makes the linear part
    // G/scale - 2*K*offset/scale^2 vanish.
    const ScalarCoefficient offset =
        hf.gravity_momentum * scale / (ScalarCoefficient(2) * hf.kinetic_y);

    WeylElement shifted = hf.raw;
    const ScalarCoefficient inv_scale = scale.inverse();
    shifted = shifted.substitute_generator(Gen::Px, inv_scale, ScalarCoefficient(0));
    shifted = shifted.substitute_generator(Gen::Py, inv_scale,
                                           ScalarCoefficient(0) - offset * inv_scale);

    HamiltonianForm out = collect(shifted);
    if (!out.gravity_momentum.is_zero()) {
        throw std::logic_error("momentum_shift: linear momentum term failed to cancel");
    }
    out.mode = hf.mode;
    out.map_scale = hf.map_scale;
    out.shift_source = std::make_shared<HamiltonianForm>(hf);
    out.shift_scale_x = scale;
    out.shift_scale_y = scale;
    out.shift_offset_y = offset;
    return out;
}

HamiltonianForm momentum_shift_inverse(const HamiltonianForm& hf) {
    if (!hf.shift_source) {
        throw std::domain_error("momentum_shift_inverse: form carries no shift provenance");
    }
    WeylElement restored = hf.raw;
    restored = restored.substitute_generator(Gen::Px, hf.shift_scale_x, ScalarCoefficient(0));
    restored = restored.substitute_generator(Gen::Py, hf.shift_scale_y, hf.shift_offset_y);

    HamiltonianForm out = collect(restored);
    out.mode = hf.shift_source->mode;
    out.map_scale = hf.shift_source->map_scale;
    out.shift_source = hf.shift_source->shift_source;
    out.shift_scale_x = hf.shift_source->shift_scale_x;
    out.shift_scale_y = hf.shift_source->shift_scale_y;
    out.shift_offset_y = hf.shift_source->shift_offset_y;
    return out;
}

ScalarCoefficient gravity_collapse_check(const HamiltonianForm& shifted) {
    const ScalarCoefficient mg =
        ScalarCoefficient::symbol(sym::mass) * ScalarCoefficient::symbol(sym::g);
    if (!(shifted.gravity_linear == mg)) {
        throw std::logic_error("gravity_collapse_check: linear coefficient is "
                               + shifted.gravity_linear.to_string() + ", expected m*g");
    }
    return shifted.gravity_linear;
}

CoefficientReport coefficient_report(const HamiltonianForm& hf) {
    if (!(hf.kinetic_x == hf.kinetic_y)) {
        throw std::domain_error("coefficient_report: kinetic term is not isotropic");
    }
    CoefficientReport r;
    r.C_prime = ScalarCoefficient(2) * ScalarCoefficient::symbol(sym::mass) * hf.kinetic_x;
    r.D = hf.confinement;
    r.E = hf.angular_momentum;
    r.gravity_linear = hf.gravity_linear;
    r.gravity_momentum = hf.gravity_momentum;
    return r;
}

} // namespace ncwell
