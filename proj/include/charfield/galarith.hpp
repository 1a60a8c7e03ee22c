#pragma once

#include <cstdint>
#include <utility>

namespace charfield {

using i64 = std::int64_t;

// Small integer helpers shared by every module.
i64 mod(i64 a, i64 m);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 powmod(i64 base, i64 exp, i64 m);
i64 euler_phi(i64 n);
bool is_prime(i64 n);

// q = p^a with p prime; throws if q is not a prime power.
struct PrimePower {
    i64 p = 0;
    int a = 0;
};
PrimePower prime_power(i64 q);

int legendre(i64 a, i64 p);

struct OmegaP {
    i64 p = 0;
    int omega = 1;
};
OmegaP omega_of(i64 p);

bool is_square_in_Fq(i64 k, i64 q);

// A Galois element seen through its action zeta -> zeta^k on the m-th roots of unity.
struct SigmaData {
    i64 k = 1;
    i64 m = 4;

    SigmaData() = default;
    SigmaData(i64 k, i64 m);

    SigmaData compose(const SigmaData& other) const;
    friend bool operator==(const SigmaData&, const SigmaData&) = default;
};

int sqrt_omega_p_sign(const SigmaData& sigma, i64 p);
int sqrt_p_sign(const SigmaData& sigma, i64 p);

// Element of H_ell: acts as zeta -> zeta^(ell^r) on roots of unity of order prime to ell.
// For ell = 2 the action on i is free and recorded in i_sign.
struct HElement {
    i64 ell = 2;
    int r = 0;
    int i_sign = 1;

    HElement() = default;
    HElement(i64 ell, int r, int i_sign);
    // Odd ell: the sign on i is determined by ell^r mod 4.
    static HElement odd(i64 ell, int r);
};

SigmaData h_to_sigma(const HElement& h, i64 m);

struct GaussSum {
    i64 square = 0;
    int sign = 0;
    friend bool operator==(const GaussSum&, const GaussSum&) = default;
};

// Exact evaluation in Z[x]/(Phi_p) of g = sum (n/p) x^n.
GaussSum gauss_sum_exact(i64 p, i64 k, i64 bound = 101);

}  // namespace charfield
