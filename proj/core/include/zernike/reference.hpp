#ifndef ZERNIKE_REFERENCE_HPP
#define ZERNIKE_REFERENCE_HPP

#include "zernike/radial_index.hpp"

#include <string>
#include <vector>

namespace zernike {

// Exact signed 128-bit integer.  Wide enough for every coefficient of
// R_n^m up to n = 100; all arithmetic on coefficients is overflow-checked.
using int128 = __int128;

std::string to_string(int128 v);

/// Exact binomial coefficient C(a, i), multiplicative form
/// (multiply-then-divide per factor, always integral).
/// Requires 0 <= i <= a; throws OverflowError past the 128-bit range.
int128 binomial(int a, int i);

/// Exact coefficient expansion of R_n^m:
///   R_n^m(rho) = sum_s coeffs[s] * rho^{n - 2s},  s = 0..k,
/// with coeffs[s] = (-1)^s C(k, s) C(n - s, k).
struct CoefficientPoly {
    RadialIndex index;
    std::vector<int128> coeffs;
};

CoefficientPoly coefficients(const RadialIndex& idx);

/// Ground-truth evaluation: Horner in rho^2 over the exact coefficients,
/// then one multiplication by rho^|m|.
double eval_reference(const RadialIndex& idx, double rho);

} // namespace zernike

#endif
