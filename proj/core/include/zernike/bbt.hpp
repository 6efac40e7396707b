#ifndef ZERNIKE_BBT_HPP
#define ZERNIKE_BBT_HPP

#include "zernike/radial_index.hpp"

#include <vector>

namespace zernike {

/// Coefficients of the balanced recursion
///   R_n^m = rho F1 R_{n-1}^{m+1} + F2 R_{n-2}^m,
/// defined for n > m >= 0.  F1 + F2 == 1.
struct FCoeffs {
    double F1, F2;
};

/// Throws SingularIndex when n == m.
FCoeffs f_coeffs(int n, int m);

/// Result of the iterative evaluation.  byproduct holds the final buffer
/// contents [R_n^m, R_{n-2}^m, ..., R_{m+2}^m]; for n - |m| <= 2 it holds
/// the single computed value.
struct EvalResult {
    double value;
    std::vector<double> byproduct;
};

/// Balanced-binary-tree recursive evaluation.  Cost is exponential in
/// (n - |m|)/2; prefer eval_bbtia for large differences.
double eval_bbtra(const RadialIndex& idx, double rho);

/// Balanced-binary-tree iterative evaluation: seeds one buffer of
/// k = (n - |m|)/2 leaf values and sweeps it level by level up to the
/// root.  Quadratic cost, linear storage.
EvalResult eval_bbtia(const RadialIndex& idx, double rho);

} // namespace zernike

#endif
