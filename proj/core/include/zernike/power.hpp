#ifndef ZERNIKE_POWER_HPP
#define ZERNIKE_POWER_HPP

namespace zernike {

/// x^n by iterative square-and-multiply, least-significant bit first.
/// pow_by_squaring(x, 0) == 1 for every x, including 0.
template <class T>
inline T pow_by_squaring(T x, unsigned n)
{
    T prod = T(1);
    while (n >= 1) {
        if (n % 2 != 0) {
            prod *= x;
        }
        x *= x;
        n /= 2;
    }
    return prod;
}

/// R_m^m(rho) = rho^m.
template <class T>
inline T leaf_type_a(T rho, unsigned m)
{
    return pow_by_squaring(rho, m);
}

/// R_{m+2}^m(rho) = rho^m * ((m+2) rho^2 - (m+1)).
template <class T>
inline T leaf_type_b(T rho, unsigned m)
{
    const T md = static_cast<T>(m);
    return pow_by_squaring(rho, m) * ((md + T(2)) * (rho * rho) - (md + T(1)));
}

} // namespace zernike

#endif
