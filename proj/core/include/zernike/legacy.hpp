#ifndef ZERNIKE_LEGACY_HPP
#define ZERNIKE_LEGACY_HPP

#include "zernike/radial_index.hpp"

#include <cstdint>

namespace zernike {

/// Base cases used by the prior-art tree recursions.  Original is each
/// scheme's published stopping rule; Beta grafts the R_m^m / R_{m+2}^m
/// leaf evaluations on top of it.
enum class Stopping { Original, Beta };

/// Default cap on node expansions for the tree recursions; exceeded
/// expansions throw RecursionBudgetExceeded instead of hanging.
inline constexpr std::uint64_t kDefaultRecursionBudget = std::uint64_t{1} << 28;

struct KintnerCoeffs {
    double k1, k2, k3, k4;
};

/// Coefficients of the Kintner n-recurrence at (n, m).
KintnerCoeffs kintner_coeffs(int n, int m);

struct PrataRuschCoeffs {
    double L1, L2; // L1 = 2n/(m+n), L2 = 1 - L1
};

PrataRuschCoeffs prata_rusch_coeffs(int n, int m);

/// Kintner's recurrence run as an upward iteration in n at fixed m.
/// steps_out, when given, receives the number of recurrence applications
/// (max(0, k - 1)).
double eval_kintner(const RadialIndex& idx, double rho, int* steps_out = nullptr);

/// Prata-Rusch tree recursion R_n^m = rho L1 R_{n-1}^{|m-1|} + L2 R_{n-2}^m.
double eval_prata_rusch(const RadialIndex& idx, double rho, Stopping stopping,
                        std::uint64_t budget = kDefaultRecursionBudget);

/// Shakibaei-Paramesran three-child tree recursion
/// R_n^m = rho [R_{n-1}^{|m-1|} + R_{n-1}^{m+1}] - R_{n-2}^m.
double eval_shakibaei(const RadialIndex& idx, double rho, Stopping stopping,
                      std::uint64_t budget = kDefaultRecursionBudget);

} // namespace zernike

#endif
