#ifndef ZERNIKE_RADIAL_INDEX_HPP
#define ZERNIKE_RADIAL_INDEX_HPP

#include "zernike/errors.hpp"

namespace zernike {

/// Validated double index (n, m) of a radial polynomial R_n^m.
///
/// m keeps the caller's sign; every evaluator works on m_abs, which is
/// legal because R_n^m == R_n^{-m}.  k = (n - |m|)/2 is the number of
/// coefficient terms minus one and the depth of the balanced tree.
struct RadialIndex {
    int n;
    int m;
    int m_abs;
    int k;
};

/// Builds a RadialIndex, throwing InvalidIndex when n < 0, |m| > n or
/// n - |m| is odd.  The message names the violated constraint.
RadialIndex make_index(int n, int m);

} // namespace zernike

#endif
