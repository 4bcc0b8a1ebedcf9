#pragma once

namespace ncwell {

/// Airy function Ai at a real argument, accurate to ~1e-12 absolute over
/// the range needed for the well spectrum (|x| up to a few tens).
double airy_ai(double x);

/// n-th zero alpha_n of Ai(-z) (n >= 1), located by bracketing and
/// bisection; |Ai(-alpha_n)| < 1e-10.  Throws std::invalid_argument for
/// n < 1.
double airy_zero(int n);

/// Semiclassical level [3 pi/2 (n - 1/4)]^{2/3}, the closed-form
/// approximation to alpha_n.  Throws std::invalid_argument for n < 1.
double wkb_level(int n);

} // namespace ncwell
