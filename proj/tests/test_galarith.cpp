#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "charfield/galarith.hpp"

using namespace charfield;

namespace {

std::vector<i64> odd_primes_below(i64 bound) {
    std::vector<i64> out;
    for (i64 p = 3; p < bound; ++p) {
        bool prime = true;
        for (i64 d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

// sigma applied to sqrt(p), evaluated numerically: sqrt(p) = g / sqrt(omega) with
// g = sum (n/p) zeta_p^n and sqrt(-1) = i; sigma raises every root of unity to the k-th power.
double sigma_of_sqrt_p(i64 p, i64 k) {
    using C = std::complex<double>;
    const double tau = 2 * std::numbers::pi;
    C g = 0, g_sigma = 0;
    for (i64 n = 1; n < p; ++n) {
        const double chi = legendre(n, p);
        g += chi * std::polar(1.0, tau * n / p);
        g_sigma += chi * std::polar(1.0, tau * static_cast<double>(mod(k * n, p)) / p);
    }
    const bool omega_minus = p % 4 == 3;
    const C i_sigma = mod(k, 4) == 1 ? C(0, 1) : C(0, -1);
    const C value = omega_minus ? g_sigma / i_sigma : g_sigma;
    const C reference = omega_minus ? g / C(0, 1) : g;
    CHECK(std::abs(reference.imag()) < 1e-9);
    CHECK(std::abs(reference.real() - std::sqrt(static_cast<double>(p))) < 1e-9);
    return value.real();
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(mod(-7, 5) == 3);
    CHECK(gcd(12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
    CHECK(powmod(3, 4, 7) == 4);
    CHECK(euler_phi(36) == 12);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(15));
    CHECK(prime_power(27).p == 3);
    CHECK(prime_power(27).a == 3);
    CHECK_THROWS_AS(prime_power(12), std::invalid_argument);
}

TEST_CASE("legendre agrees with enumeration of squares") {
    for (i64 p : odd_primes_below(60)) {
        std::set<i64> squares;
        for (i64 x = 1; x < p; ++x) squares.insert(x * x % p);
        CHECK(legendre(0, p) == 0);
        for (i64 a = -p; a < 2 * p; ++a) {
            if (mod(a, p) == 0) continue;
            CHECK(legendre(a, p) == (squares.count(mod(a, p)) ? 1 : -1));
        }
    }
}

TEST_CASE("omega") {
    CHECK(omega_of(3).omega == -1);
    CHECK(omega_of(5).omega == 1);
    CHECK(omega_of(7).omega == -1);
    CHECK(omega_of(13).omega == 1);
}

TEST_CASE("squares of F_p inside F_q by the power test") {
    for (i64 q : {3, 5, 7, 9, 11, 25, 27, 49, 125}) {
        const auto [p, a] = prime_power(q);
        for (i64 k = 1; k < p; ++k) {
            // k lies in F_p, so k^((q-1)/2) can be computed modulo p.
            const bool expected = powmod(k, (q - 1) / 2, p) == 1;
            CHECK(is_square_in_Fq(k, q) == expected);
        }
    }
    CHECK_THROWS(is_square_in_Fq(3, 9));
}

TEST_CASE("gauss sums: small cases") {
    CHECK(gauss_sum_exact(3, 1) == GaussSum{-3, 1});
    CHECK(gauss_sum_exact(3, 2) == GaussSum{-3, -1});
    CHECK(gauss_sum_exact(5, 2) == GaussSum{5, -1});
    CHECK(gauss_sum_exact(5, 4) == GaussSum{5, 1});
    CHECK(gauss_sum_exact(7, 3) == GaussSum{-7, -1});
    CHECK_THROWS(gauss_sum_exact(7, 14));
    CHECK_THROWS(gauss_sum_exact(103, 1));
}

TEST_CASE("sign on sqrt(omega p) is the gauss sum substitution sign") {
    for (i64 p : odd_primes_below(30))
        for (i64 k = 1; k < 4 * p; ++k) {
            if (gcd(k, 4 * p) != 1) continue;
            CHECK(sqrt_omega_p_sign(SigmaData(k, 4 * p), p) == gauss_sum_exact(p, k).sign);
        }
}

TEST_CASE("sign on sqrt(p) matches a numerical evaluation") {
    for (i64 p : odd_primes_below(30))
        for (i64 k = 1; k < 4 * p; ++k) {
            if (gcd(k, 4 * p) != 1) continue;
            const double image = sigma_of_sqrt_p(p, k);
            const double root = std::sqrt(static_cast<double>(p));
            const int expected = std::abs(image - root) < 1e-6 ? 1 : (std::abs(image + root) < 1e-6 ? -1 : 0);
            REQUIRE(expected != 0);
            CHECK(sqrt_p_sign(SigmaData(k, 4 * p), p) == expected);
        }
}

TEST_CASE("sigma data validation and composition") {
    CHECK_THROWS(SigmaData(3, 12));
    CHECK_THROWS(SigmaData(1, 6));
    const SigmaData a(5, 12), b(7, 12);
    CHECK(a.compose(b) == SigmaData(11, 12));
    CHECK(SigmaData(-1, 8).k == 7);
}

TEST_CASE("H_ell elements map to the expected residues") {
    for (i64 m : {24, 48, 120, 360, 840})
        for (i64 ell : {2, 3, 5, 7}) {
            if (m % ell != 0) continue;
            for (int r = 0; r <= 3; ++r) {
                std::vector<HElement> hs;
                if (ell == 2) hs = {HElement(2, r, 1), HElement(2, r, -1)};
                else hs = {HElement::odd(ell, r)};
                for (const auto& h : hs) {
                    const SigmaData s = h_to_sigma(h, m);
                    i64 ell_part = 1, rest = m;
                    while (rest % ell == 0) {
                        rest /= ell;
                        ell_part *= ell;
                    }
                    CHECK(mod(s.k, rest) == powmod(ell, r, rest));
                    if (ell == 2) CHECK(mod(s.k, ell_part) == (h.i_sign == 1 ? 1 : ell_part - 1));
                    // The action on i is read from k mod 4 in every case.
                    CHECK((mod(s.k, 4) == 1 ? 1 : -1) == h.i_sign);
                }
            }
        }
    CHECK_THROWS(HElement(3, 1, 1));
    CHECK_NOTHROW(HElement(3, 1, -1));
    CHECK_THROWS(HElement(4, 1, 1));
}
