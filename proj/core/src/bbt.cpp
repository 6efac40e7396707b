#include "zernike/bbt.hpp"

#include "zernike/power.hpp"

#include <string>

namespace zernike {

FCoeffs f_coeffs(int n, int m)
{
    if (n == m) {
        throw SingularIndex("F-coefficients undefined at n = m = " + std::to_string(n));
    }
    const double F1 = 2.0 * n / (n - m);
    return FCoeffs{F1, 1.0 - F1};
}

namespace {

// The recursion mixes values with coefficients that grow like 2n/(n-m), so
// rounding errors amplify along the k levels.  Evaluating in extended
// precision keeps the double-rounded result well inside the library's
// 1e-9 accuracy contract; the recurrence itself is unchanged.
struct FCoeffsL {
    long double F1;
    long double F2;
};

FCoeffsL f_coeffs_l(int n, int m)
{
    if (n == m) {
        throw SingularIndex("F-coefficients undefined at n = m = " + std::to_string(n));
    }
    const long double F1 = 2.0L * n / (n - m);
    return FCoeffsL{F1, 1.0L - F1};
}

long double bbtra_node(int n, int m, long double rho)
{
    const int p = n - m;
    if (p == 0) {
        return leaf_type_a(rho, static_cast<unsigned>(m));
    }
    if (p == 2) {
        return leaf_type_b(rho, static_cast<unsigned>(m));
    }
    const FCoeffsL f = f_coeffs_l(n, m);
    return rho * f.F1 * bbtra_node(n - 1, m + 1, rho) + f.F2 * bbtra_node(n - 2, m, rho);
}

} // namespace

double eval_bbtra(const RadialIndex& idx, double rho)
{
    return static_cast<double>(bbtra_node(idx.n, idx.m_abs, static_cast<long double>(rho)));
}

EvalResult eval_bbtia(const RadialIndex& idx, double rho_in)
{
    const long double rho = static_cast<long double>(rho_in);
    const int m = idx.m_abs;
    const int p = idx.n - m;
    if (p == 0) {
        const double v = static_cast<double>(leaf_type_a(rho, static_cast<unsigned>(m)));
        return EvalResult{v, {v}};
    }
    if (p == 2) {
        const double v = static_cast<double>(leaf_type_b(rho, static_cast<unsigned>(m)));
        return EvalResult{v, {v}};
    }
    const int k = p / 2;
    std::vector<long double> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        v[static_cast<size_t>(i)] = leaf_type_b(rho, static_cast<unsigned>(m + k - 1 - i));
    }
    for (int level = k - 1; level >= 1; --level) {
        const int n_start = idx.n - (level - 1);
        const int m_start = m + (level - 1);
        for (int i = 0; i < level; ++i) {
            const int n_pos = n_start - i;
            const int m_pos = m_start - i;
            const FCoeffsL f = f_coeffs_l(n_pos, m_pos);
            // In-place sweep: v[i+1] is read before any later write touches it.
            v[static_cast<size_t>(i)] = (rho * f.F1) * v[static_cast<size_t>(i)] +
                                        f.F2 * v[static_cast<size_t>(i) + 1];
        }
    }
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = static_cast<double>(v[i]);
    }
    return EvalResult{out[0], std::move(out)};
}

} // namespace zernike
