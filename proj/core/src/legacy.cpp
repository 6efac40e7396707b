#include "zernike/legacy.hpp"

#include "zernike/power.hpp"

#include <cstdlib>
#include <string>

namespace zernike {

KintnerCoeffs kintner_coeffs(int n, int m)
{
    const double nd = n;
    const double md = m;
    return KintnerCoeffs{
        (nd + md) * (nd - md) * (nd - 2.0) / 2.0,
        2.0 * nd * (nd - 1.0) * (nd - 2.0),
        -md * md * (nd - 1.0) - nd * (nd - 1.0) * (nd - 2.0),
        -nd * (nd + md - 2.0) * (nd - md - 2.0) / 2.0,
    };
}

PrataRuschCoeffs prata_rusch_coeffs(int n, int m)
{
    const double L1 = 2.0 * n / (m + n);
    return PrataRuschCoeffs{L1, 1.0 - L1};
}

double eval_kintner(const RadialIndex& idx, double rho, int* steps_out)
{
    const int m = idx.m_abs;
    if (steps_out != nullptr) {
        *steps_out = 0;
    }
    if (idx.n - m == 0) {
        return leaf_type_a(rho, static_cast<unsigned>(m));
    }
    double below = leaf_type_a(rho, static_cast<unsigned>(m));   // R_{nn-4}^m
    double prev = leaf_type_b(rho, static_cast<unsigned>(m));    // R_{nn-2}^m
    const double rho2 = rho * rho;
    for (int nn = m + 4; nn <= idx.n; nn += 2) {
        const KintnerCoeffs c = kintner_coeffs(nn, m);
        if (c.k1 == 0.0) {
            throw SingularCoefficient("Kintner k1 = 0 at n = " + std::to_string(nn) +
                                      ", m = " + std::to_string(m));
        }
        const double next = ((c.k2 * rho2 + c.k3) * prev + c.k4 * below) / c.k1;
        below = prev;
        prev = next;
        if (steps_out != nullptr) {
            ++*steps_out;
        }
    }
    return prev;
}

namespace {

struct NodeBudget {
    std::uint64_t used = 0;
    std::uint64_t cap;

    void charge(const char* scheme)
    {
        if (++used > cap) {
            throw RecursionBudgetExceeded(std::string(scheme) +
                                          " recursion exceeded node budget " +
                                          std::to_string(cap));
        }
    }
};

double prata_rusch_node(int n, int m, double rho, Stopping stopping, NodeBudget& budget)
{
    budget.charge("Prata-Rusch");
    if (stopping == Stopping::Beta) {
        if (n == m) {
            return leaf_type_a(rho, static_cast<unsigned>(m));
        }
        if (n == m + 2) {
            return leaf_type_b(rho, static_cast<unsigned>(m));
        }
    } else {
        if (n == 0) {
            return 1.0;
        }
        if (n == 1) {
            return rho;
        }
    }
    const PrataRuschCoeffs c = prata_rusch_coeffs(n, m);
    return rho * c.L1 * prata_rusch_node(n - 1, std::abs(m - 1), rho, stopping, budget) +
           c.L2 * prata_rusch_node(n - 2, m, rho, stopping, budget);
}

double shakibaei_node(int n, int m, double rho, Stopping stopping, NodeBudget& budget)
{
    budget.charge("Shakibaei-Paramesran");
    if (n < m) {
        return 0.0;
    }
    if (stopping == Stopping::Beta) {
        if (n == m) {
            return leaf_type_a(rho, static_cast<unsigned>(m));
        }
        if (n == m + 2) {
            return leaf_type_b(rho, static_cast<unsigned>(m));
        }
    } else {
        if (n == 0) {
            return 1.0;
        }
        if (n == 1) {
            return rho;
        }
    }
    return rho * (shakibaei_node(n - 1, std::abs(m - 1), rho, stopping, budget) +
                  shakibaei_node(n - 1, m + 1, rho, stopping, budget)) -
           shakibaei_node(n - 2, m, rho, stopping, budget);
}

} // namespace

double eval_prata_rusch(const RadialIndex& idx, double rho, Stopping stopping,
                        std::uint64_t budget)
{
    NodeBudget nodes{0, budget};
    return prata_rusch_node(idx.n, idx.m_abs, rho, stopping, nodes);
}

double eval_shakibaei(const RadialIndex& idx, double rho, Stopping stopping,
                      std::uint64_t budget)
{
    NodeBudget nodes{0, budget};
    return shakibaei_node(idx.n, idx.m_abs, rho, stopping, nodes);
}

} // namespace zernike
