#include "ncwell/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncwell {

namespace {

// Ai(0) and -Ai'(0): 3^{-2/3}/Gamma(2/3) and 3^{-1/3}/Gamma(1/3).
constexpr long double kAi0 = 0.35502805388781723926L;
constexpr long double kAiPrime0 = 0.25881940379280679841L;

constexpr long double kPi = 3.14159265358979323846264338328L;

// Maclaurin evaluation Ai(x) = Ai(0) f(x) + Ai'(0) g(x); both component
// series stay oscillatory-bounded on the negative axis, so the
// cancellation loss is mild for |x| <= 8.25 in extended precision.
long double ai_maclaurin(long double x) {
    const long double x3 = x * x * x;
    long double f_term = 1.0L, f_sum = 1.0L;
    long double g_term = x, g_sum = x;
    for (int k = 0; k < 64; ++k) {
        f_term *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
        g_term *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
        f_sum += f_term;
        g_sum += g_term;
        if (std::fabs(f_term) < 1e-24L && std::fabs(g_term) < 1e-24L) break;
    }
    return kAi0 * f_sum - kAiPrime0 * g_sum;
}

// Poincare coefficients u_k of the Airy asymptotic expansions:
// u_0 = 1, u_{k+1} = u_k (6k+1)(6k+5) / (72 (k+1)).
// Oscillatory form on the negative axis (x = -z, z large):
//   Ai(-z) = pi^{-1/2} z^{-1/4} [ cos(zeta - pi/4) * S_even
//                               + sin(zeta - pi/4) * S_odd ]
// with zeta = (2/3) z^{3/2}, S_even = sum (-1)^k u_{2k} zeta^{-2k},
// S_odd = sum (-1)^k u_{2k+1} zeta^{-2k-1}; summed to the smallest term.
long double ai_negative_asymptotic(long double z) {
    const long double zeta = (2.0L / 3.0L) * z * std::sqrt(z);
    long double u = 1.0L, pw = 1.0L;
    long double s_even = 0.0L, s_odd = 0.0L;
    long double prev_mag = 1e30L;
    for (int k = 0; k < 80; ++k) {
        const long double term = u * pw;
        const long double mag = std::fabs(term);
        if (mag > prev_mag) break; // divergent tail reached
        prev_mag = mag;
        const int sign = (k / 2) % 2 == 0 ? 1 : -1;
        if (k % 2 == 0)
            s_even += sign * term;
        else
            s_odd += sign * term;
        u *= (6.0L * k + 1.0L) * (6.0L * k + 5.0L) / (72.0L * (k + 1.0L));
        pw /= zeta;
    }
    const long double phase = zeta - kPi / 4.0L;
    return (std::cos(phase) * s_even + std::sin(phase) * s_odd)
           / (std::sqrt(kPi) * std::pow(z, 0.25L));
}

// Decaying form on the positive axis:
//   Ai(z) = e^{-zeta} / (2 sqrt(pi) z^{1/4}) * sum (-1)^k u_k zeta^{-k}.
long double ai_positive_asymptotic(long double z) {
    const long double zeta = (2.0L / 3.0L) * z * std::sqrt(z);
    long double u = 1.0L, pw = 1.0L, sum = 0.0L;
    long double prev_mag = 1e30L;
    for (int k = 0; k < 80; ++k) {
        const long double term = u * pw;
        if (std::fabs(term) > prev_mag) break;
        prev_mag = std::fabs(term);
        sum += (k % 2 == 0 ? 1.0L : -1.0L) * term;
        u *= (6.0L * k + 1.0L) * (6.0L * k + 5.0L) / (72.0L * (k + 1.0L));
        pw /= zeta;
    }
    return std::exp(-zeta) * sum / (2.0L * std::sqrt(kPi) * std::pow(z, 0.25L));
}

// The series/asymptotic switchover: at |x| = 8.25 the asymptotic
// truncation floor (~e^{-(4/3)|x|^{3/2}}) is below 2e-14 while the series
// still has headroom in extended precision.
constexpr long double kSwitchover = 8.25L;

} // namespace

double airy_ai(double x) {
    const long double z = x;
    if (std::fabs(z) <= kSwitchover) return static_cast<double>(ai_maclaurin(z));
    if (z > 0) return static_cast<double>(ai_positive_asymptotic(z));
    return static_cast<double>(ai_negative_asymptotic(-z));
}

double wkb_level(int n) {
    if (n < 1)
        throw std::invalid_argument("wkb_level: n must be >= 1 (got " + std::to_string(n) + ")");
    const double t = 1.5 * static_cast<double>(kPi) * (n - 0.25);
    return std::cbrt(t * t);
}

double airy_zero(int n) {
    if (n < 1)
        throw std::invalid_argument("airy_zero: n must be >= 1 (got " + std::to_string(n) + ")");
    auto f = [](double z) { return airy_ai(-z); };

    // The semiclassical level is within 1% of the true zero and the zeros
    // are separated by more than 0.65 over the usable range, so a modest
    // symmetric bracket suffices; widen it defensively if the sign
    // condition is not met.
    const double guess = wkb_level(n);
    double delta = 0.25;
    double lo = guess - delta, hi = guess + delta;
    for (int tries = 0; f(lo) * f(hi) > 0.0; ++tries) {
        if (tries >= 8)
            throw std::runtime_error("airy_zero: failed to bracket zero " + std::to_string(n));
        delta *= 1.5;
        lo = std::max(guess - delta, 1e-8);
        hi = guess + delta;
    }
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (flo * fmid <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace ncwell
