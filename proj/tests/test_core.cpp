#include "zernike/power.hpp"
#include "zernike/radial_index.hpp"
#include "zernike/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace zernike;

TEST_CASE("make_index validates and derives the term count")
{
    const RadialIndex a = make_index(4, 2);
    CHECK(a.n == 4);
    CHECK(a.m == 2);
    CHECK(a.m_abs == 2);
    CHECK(a.k == 1);

    const RadialIndex b = make_index(9, -1);
    CHECK(b.m == -1);
    CHECK(b.m_abs == 1);
    CHECK(b.k == 4);

    CHECK_THROWS_AS(make_index(3, 0), InvalidIndex);  // parity
    CHECK_THROWS_AS(make_index(2, 4), InvalidIndex);  // |m| > n
    CHECK_THROWS_AS(make_index(-2, 0), InvalidIndex); // negative degree
}

TEST_CASE("make_index is symmetric in the sign of m")
{
    for (int n = 0; n <= 20; ++n) {
        for (int m = n % 2; m <= n; m += 2) {
            const RadialIndex pos = make_index(n, m);
            const RadialIndex neg = make_index(n, -m);
            CHECK(pos.m_abs == neg.m_abs);
            CHECK(pos.k == neg.k);
        }
    }
}

TEST_CASE("pow_by_squaring basics")
{
    CHECK(pow_by_squaring(2.0, 10) == 1024.0);
    CHECK(pow_by_squaring(0.5, 3) == 0.125);
    CHECK(pow_by_squaring(7.3, 0) == 1.0);
    CHECK(pow_by_squaring(0.0, 0) == 1.0);
}

TEST_CASE("pow_by_squaring matches the naive product bit-exactly for integer bases")
{
    for (int base = -5; base <= 5; ++base) {
        for (unsigned e = 0; e <= 20; ++e) {
            double naive = 1.0;
            for (unsigned i = 0; i < e; ++i) {
                naive *= base;
            }
            if (std::abs(naive) >= 9007199254740992.0) { // 2^53
                continue;
            }
            CHECK(pow_by_squaring(static_cast<double>(base), e) == naive);
        }
    }
}

TEST_CASE("leaf type A is a power")
{
    CHECK(leaf_type_a(0.5, 2) == 0.25);
    CHECK(leaf_type_a(0.123, 0) == 1.0);
    CHECK(leaf_type_a(0.987, 0) == 1.0);
    CHECK(leaf_type_a(1.0, 13) == 1.0);
    for (int m = 0; m <= 40; ++m) {
        for (int r = 0; r <= 10; ++r) {
            const double rho = 0.1 * r;
            CHECK(leaf_type_a(rho, static_cast<unsigned>(m)) ==
                  pow_by_squaring(rho, static_cast<unsigned>(m)));
        }
    }
}

TEST_CASE("leaf type B evaluates R_{m+2}^m")
{
    CHECK(leaf_type_b(0.5, 0) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(leaf_type_b(0.5, 1) == doctest::Approx(-0.625).epsilon(1e-13));
    for (int m = 0; m <= 50; ++m) {
        const RadialIndex idx = make_index(m + 2, m);
        for (int r = 0; r <= 10; ++r) {
            const double rho = 0.1 * r;
            CHECK(std::abs(leaf_type_b(rho, static_cast<unsigned>(m)) -
                           eval_reference(idx, rho)) <= 1e-12);
        }
        CHECK(std::abs(leaf_type_b(1.0, static_cast<unsigned>(m)) - 1.0) <= 1e-12);
    }
}
