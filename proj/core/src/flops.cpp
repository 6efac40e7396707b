#include "zernike/flops.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace zernike {

int ceil_log2(int m)
{
    if (m <= 1) {
        return 0;
    }
    return std::bit_width(static_cast<unsigned>(m) - 1u);
}

double solve_difference(const DifferenceEq& eq, int p)
{
    if (eq.alpha == 1.0) {
        throw InvalidParameter("difference equation requires alpha != 1");
    }
    if (eq.base_p % 2 != 0 || p % 2 != 0) {
        throw InvalidParameter("difference equation indices must be even");
    }
    if (p < eq.base_p) {
        throw InvalidParameter("p must not precede the base index");
    }
    const int steps = (p - eq.base_p) / 2;
    const double a_pow = std::pow(eq.alpha, steps);
    return a_pow * eq.base_value + eq.beta * (a_pow - 1.0) / (eq.alpha - 1.0);
}

namespace {

// Literal multiplication count of the square-and-multiply loop:
// one squaring per examined bit plus one product per set bit.
std::uint64_t literal_pow_mults(int exponent)
{
    if (exponent <= 0) {
        return 0;
    }
    const auto e = static_cast<unsigned>(exponent);
    return std::bit_width(e) + static_cast<unsigned>(std::popcount(e));
}

// root_log2m: power charge applied at every leaf of this walk (see the
// FlopVector model notes).
void bbtra_walk(int n, int m, int root_log2m, FlopProfile& out)
{
    ++out.nodes;
    const int p = n - m;
    if (p == 0) {
        out.model.mults += static_cast<std::uint64_t>(root_log2m);
        out.actual_pow_mults += literal_pow_mults(m);
        return;
    }
    if (p == 2) {
        out.model.adds += 3;
        out.model.mults += 3 + static_cast<std::uint64_t>(root_log2m);
        out.actual_pow_mults += literal_pow_mults(m);
        return;
    }
    // interior node: F1, F2 and the two-term combination
    out.model.adds += 3;
    out.model.mults += 5;
    bbtra_walk(n - 1, m + 1, root_log2m, out);
    bbtra_walk(n - 2, m, root_log2m, out);
}

} // namespace

FlopProfile profile_bbtra(const RadialIndex& idx)
{
    if (idx.n - idx.m_abs > 30) {
        throw CostGuardExceeded("recursive flop walk refused for n - |m| = " +
                                std::to_string(idx.n - idx.m_abs) + " > 30");
    }
    FlopProfile out;
    bbtra_walk(idx.n, idx.m_abs, ceil_log2(idx.m_abs), out);
    return out;
}

FlopVector count_flops_bbtra(const RadialIndex& idx)
{
    return profile_bbtra(idx).model;
}

FlopVector count_flops_bbtia(const RadialIndex& idx)
{
    const int m = idx.m_abs;
    const int p = idx.n - m;
    FlopVector out;
    if (p == 0) {
        out.mults += static_cast<std::uint64_t>(ceil_log2(m));
        return out;
    }
    if (p == 2) {
        out.adds += 3;
        out.mults += 3 + static_cast<std::uint64_t>(ceil_log2(m));
        return out;
    }
    const int k = p / 2;
    out.mults += 1; // k = p/2
    for (int i = 0; i < k; ++i) {
        out.adds += 3;
        out.mults += 3 + static_cast<std::uint64_t>(ceil_log2(m + k - 1 - i));
    }
    for (int level = k - 1; level >= 1; --level) {
        out.adds += 4; // n_start, m_start
        for (int i = 0; i < level; ++i) {
            out.adds += 2;  // n_pos, m_pos
            out.adds += 2;  // n - m, 1 - F1
            out.mults += 2; // 2n, division
            out.adds += 1;  // update sum
            out.mults += 3; // rho*F1, *v_i, F2*v_{i+1}
        }
    }
    return out;
}

FlopVector predict_flops(FlopAlgorithm algorithm, const RadialIndex& idx)
{
    const int m = idx.m_abs;
    const int p = idx.n - m;
    const auto L = static_cast<std::uint64_t>(ceil_log2(m));
    if (algorithm == FlopAlgorithm::BBTRA) {
        if (p == 0) {
            return FlopVector{L, 0};
        }
        const int k = p / 2;
        const std::uint64_t pow2k = std::uint64_t{1} << k;
        return FlopVector{(L + 8) * (pow2k / 2) - 5, 3 * (pow2k - 1)};
    }
    if (p == 0) {
        return FlopVector{L, 0};
    }
    if (p == 2) {
        return FlopVector{3 + L, 3};
    }
    const std::uint64_t k = static_cast<std::uint64_t>(p) / 2;
    std::uint64_t log_sum = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        log_sum += static_cast<std::uint64_t>(
            ceil_log2(m + static_cast<int>(k - 1 - i)));
    }
    return FlopVector{k * (5 * k + 1) / 2 + 1 + log_sum,
                      k * (5 * k + 9) / 2 - 4};
}

} // namespace zernike
