#include "ncwell/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncwell {

bool valid_circular_state(int n, int m_l) {
    return n >= 0 && std::abs(m_l) <= n && (n - std::abs(m_l)) % 2 == 0;
}

void require_circular_state(int n, int m_l) {
    if (!valid_circular_state(n, m_l))
        throw std::invalid_argument("oscillator state: invalid circular quantum numbers (n="
                                    + std::to_string(n) + ", m_l=" + std::to_string(m_l)
                                    + "); need n >= 0, |m_l| <= n, n - |m_l| even");
}

namespace {

void require_level(int n) {
    if (n < 0)
        throw std::invalid_argument("oscillator state: level n must be >= 0 (got "
                                    + std::to_string(n) + ")");
}

double require_omega(const PhysicalParams& p) {
    p.validate();
    if (!(p.k > 0.0))
        throw std::domain_error("oscillator state: k must be > 0 (no oscillator present)");
    return p.omega();
}

} // namespace

double ho_energy(int n, const PhysicalParams& p) {
    require_level(n);
    return p.hbar * require_omega(p) * (n + 1);
}

double lz_expectation(int n, int m_l, const PhysicalParams& p) {
    require_circular_state(n, m_l);
    p.validate();
    return p.hbar * m_l;
}

double xpy_expectation(int n, int m_l, const PhysicalParams& p) {
    return 0.5 * lz_expectation(n, m_l, p);
}

double x2_expectation(int n, const PhysicalParams& p) {
    require_level(n);
    return p.hbar * (n + 1) / (2.0 * p.m * require_omega(p));
}

double px2_expectation(int n, const PhysicalParams& p) {
    require_level(n);
    return p.m * p.hbar * require_omega(p) * (n + 1) / 2.0;
}

} // namespace ncwell
