#include "zernike/reference.hpp"

#include "zernike/power.hpp"

#include <cassert>

namespace zernike {

std::string to_string(int128 v)
{
    if (v == 0) {
        return "0";
    }
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    std::string out;
    while (u > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) {
        out.insert(out.begin(), '-');
    }
    return out;
}

namespace {

int128 checked_mul(int128 a, int128 b)
{
    int128 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("128-bit overflow in coefficient arithmetic");
    }
    return out;
}

} // namespace

int128 binomial(int a, int i)
{
    if (i < 0 || a < 0 || i > a) {
        throw InvalidParameter("binomial requires 0 <= i <= a");
    }
    // C(a, i) = prod_{t=0}^{i-1} (a - t)/(t + 1), integral after each step.
    int128 result = 1;
    for (int t = 0; t < i; ++t) {
        result = checked_mul(result, a - t);
        assert(result % (t + 1) == 0);
        result /= (t + 1);
    }
    return result;
}

CoefficientPoly coefficients(const RadialIndex& idx)
{
    CoefficientPoly poly{idx, {}};
    poly.coeffs.reserve(static_cast<size_t>(idx.k) + 1);
    for (int s = 0; s <= idx.k; ++s) {
        int128 c = checked_mul(binomial(idx.k, s), binomial(idx.n - s, idx.k));
        if (s % 2 != 0) {
            c = -c;
        }
        poly.coeffs.push_back(c);
    }
    return poly;
}

double eval_reference(const RadialIndex& idx, double rho)
{
    // Adjacent coefficients are huge and alternate in sign, so the Horner
    // sweep cancels many leading digits; extended precision keeps the
    // double-rounded result well inside the library's accuracy contract.
    const CoefficientPoly poly = coefficients(idx);
    const long double rho_l = static_cast<long double>(rho);
    const long double rho2 = rho_l * rho_l;
    long double acc = static_cast<long double>(poly.coeffs[0]);
    for (int s = 1; s <= idx.k; ++s) {
        acc = acc * rho2 + static_cast<long double>(poly.coeffs[s]);
    }
    return static_cast<double>(acc * pow_by_squaring(rho_l, static_cast<unsigned>(idx.m_abs)));
}

} // namespace zernike
