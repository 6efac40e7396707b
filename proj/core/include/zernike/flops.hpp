#ifndef ZERNIKE_FLOPS_HPP
#define ZERNIKE_FLOPS_HPP

#include "zernike/radial_index.hpp"

#include <cstdint>

namespace zernike {

/// Operation-count pair under the fixed accounting model below.
///
/// Model rules, applied uniformly:
///  - every scalar +/- in an evaluated formula counts one add, including
///    the index additions inside (m+2), (m+1), n-m and 1-F1;
///  - every * and / counts one mult;
///  - a power rho^m is charged ceil(log2 m) mults for m >= 2 and 0 for
///    m in {0, 1}, i.e. the cost of repeated squaring, not the literal
///    loop of pow_by_squaring (which performs up to 2 floor(log2 m) + 1
///    multiplications; see FlopProfile::actual_pow_mults).
///
/// Under these rules a type-A leaf costs (0 adds, ceil(log2 m) mults)
/// and a type-B leaf costs (3 adds, 3 + ceil(log2 m) mults).
///
/// Inside a recursive tree walk the power charge at every leaf uses the
/// azimuthal order of the *root* index.  The per-level cost of the
/// balanced tree is invariant under that convention, which is what makes
/// the closed-form totals exact integers; the iterative algorithm
/// touches each distinct leaf once and is charged per actual exponent.
struct FlopVector {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;

    std::uint64_t total() const { return mults + adds; }
    bool operator==(const FlopVector&) const = default;
};

/// ceil(log2 m) for m >= 1 (0 for m <= 1).
int ceil_log2(int m);

enum class FlopAlgorithm { BBTRA, BBTIA };

/// Linear two-step difference equation G_p = alpha G_{p-2} + beta with an
/// explicit base pair (base_p, base_value); alpha != 1.
struct DifferenceEq {
    double alpha;
    double beta;
    double base_value;
    int base_p;
};

/// Closed-form solution at even p >= base_p:
///   G_p = alpha^e base_value + beta (alpha^e - 1)/(alpha - 1),
/// where e = (p - base_p)/2.  Throws InvalidParameter for alpha == 1 or
/// odd p / base_p.
double solve_difference(const DifferenceEq& eq, int p);

/// Model counts plus structural data from one instrumented recursive walk.
struct FlopProfile {
    FlopVector model;
    std::uint64_t nodes = 0;            // tree nodes visited
    std::uint64_t actual_pow_mults = 0; // literal pow_by_squaring loop mults
};

/// Recursive-tree walk with counters attached.  Guarded: the walk visits
/// 2^{(n-|m|)/2} - 1 nodes, so n - |m| > 30 throws CostGuardExceeded.
FlopVector count_flops_bbtra(const RadialIndex& idx);
FlopProfile profile_bbtra(const RadialIndex& idx);

/// Iterative algorithm with counters attached; no guard needed.
FlopVector count_flops_bbtia(const RadialIndex& idx);

/// Closed-form operation counts, computed without running the algorithm.
/// Exactly equal (as integers) to the instrumented counts above.
FlopVector predict_flops(FlopAlgorithm algorithm, const RadialIndex& idx);

} // namespace zernike

#endif
