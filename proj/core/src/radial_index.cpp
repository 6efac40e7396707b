#include "zernike/radial_index.hpp"

#include <cstdlib>
#include <string>

namespace zernike {

RadialIndex make_index(int n, int m)
{
    if (n < 0) {
        throw InvalidIndex("radial degree must be non-negative: n = " + std::to_string(n));
    }
    const int m_abs = std::abs(m);
    if (m_abs > n) {
        throw InvalidIndex("azimuthal order exceeds radial degree: |m| = " +
                           std::to_string(m_abs) + " > n = " + std::to_string(n));
    }
    if ((n - m_abs) % 2 != 0) {
        throw InvalidIndex("parity violation: n - |m| = " + std::to_string(n - m_abs) +
                           " is odd");
    }
    return RadialIndex{n, m, m_abs, (n - m_abs) / 2};
}

} // namespace zernike
