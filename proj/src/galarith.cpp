#include "charfield/galarith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace charfield {

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

i64 powmod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = static_cast<i64>((__int128)result * base % m);
        base = static_cast<i64>((__int128)base * base % m);
        exp >>= 1;
    }
    return result;
}

i64 euler_phi(i64 n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    i64 result = n;
    for (i64 f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            while (n % f == 0) n /= f;
            result -= result / f;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

PrimePower prime_power(i64 q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    i64 p = 2;
    while (q % p != 0) ++p;
    int a = 0;
    i64 rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {p, a};
}

static void require_odd_prime(i64 p) {
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

int legendre(i64 a, i64 p) {
    require_odd_prime(p);
    i64 r = mod(a, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

OmegaP omega_of(i64 p) {
    require_odd_prime(p);
    return {p, p % 4 == 1 ? 1 : -1};
}

bool is_square_in_Fq(i64 k, i64 q) {
    auto [p, a] = prime_power(q);
    require_odd_prime(p);
    if (mod(k, p) == 0) throw std::invalid_argument("k must be coprime to p");
    return a % 2 == 0 || legendre(k, p) == 1;
}

SigmaData::SigmaData(i64 k_, i64 m_) {
    if (m_ <= 0 || m_ % 4 != 0) throw std::invalid_argument("sigma modulus must be a positive multiple of 4");
    if (gcd(k_, m_) != 1) throw std::invalid_argument("sigma exponent must be coprime to its modulus");
    k = mod(k_, m_);
    m = m_;
}

SigmaData SigmaData::compose(const SigmaData& other) const {
    if (other.m != m) throw std::invalid_argument("compose: moduli differ");
    return SigmaData(static_cast<i64>((__int128)k * other.k % m), m);
}

int sqrt_omega_p_sign(const SigmaData& sigma, i64 p) {
    require_odd_prime(p);
    if (sigma.m % p != 0) throw std::invalid_argument("modulus must be divisible by p");
    return legendre(sigma.k, p);
}

int sqrt_p_sign(const SigmaData& sigma, i64 p) {
    require_odd_prime(p);
    if (sigma.m % (4 * p) != 0) throw std::invalid_argument("modulus must be divisible by 4p");
    int alpha = legendre(sigma.k, p);
    if (omega_of(p).omega == 1) return alpha;
    // sqrt(p) = sqrt(-p)/i, and i^sigma = i^k.
    int c = (sigma.k % 4 == 1) ? 1 : -1;
    return alpha * c;
}

HElement::HElement(i64 ell_, int r_, int i_sign_) : ell(ell_), r(r_), i_sign(i_sign_) {
    if (!is_prime(ell)) throw std::invalid_argument("H element: ell must be prime");
    if (r < 0) throw std::invalid_argument("H element: r must be non-negative");
    if (i_sign != 1 && i_sign != -1) throw std::invalid_argument("H element: i_sign must be +1 or -1");
    if (ell != 2) {
        int forced = powmod(ell, r, 4) == 1 ? 1 : -1;
        if (forced != i_sign) throw std::invalid_argument("H element: i_sign is forced by ell^r mod 4 for odd ell");
    }
}

HElement HElement::odd(i64 ell, int r) {
    if (ell == 2) throw std::invalid_argument("HElement::odd needs odd ell");
    return HElement(ell, r, powmod(ell, r, 4) == 1 ? 1 : -1);
}

SigmaData h_to_sigma(const HElement& h, i64 m) {
    if (m <= 0 || m % 4 != 0) throw std::invalid_argument("h_to_sigma: modulus must be a positive multiple of 4");
    i64 ell_part = 1;
    i64 rest = m;
    while (rest % h.ell == 0) {
        rest /= h.ell;
        ell_part *= h.ell;
    }
    i64 k_rest = powmod(h.ell, h.r, rest);
    i64 k_ell = 1;
    if (h.ell == 2) k_ell = h.i_sign == 1 ? 1 : ell_part - 1;
    // CRT: k = k_rest mod rest, k = k_ell mod ell_part.
    i64 k = k_ell;
    while (mod(k, rest) != mod(k_rest, rest)) k += ell_part;
    return SigmaData(k, m);
}

namespace {

// Elements of Z[x]/(Phi_p), stored as p coefficients modulo x^p - 1 and
// normalised so that the coefficient of x^(p-1) is zero.
using Cyc = std::vector<i64>;

Cyc normalise(Cyc v) {
    i64 top = v.back();
    for (auto& c : v) c -= top;
    return v;
}

Cyc multiply(const Cyc& a, const Cyc& b) {
    const std::size_t p = a.size();
    Cyc out(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < p; ++j) out[(i + j) % p] += a[i] * b[j];
    }
    return normalise(out);
}

}  // namespace

GaussSum gauss_sum_exact(i64 p, i64 k, i64 bound) {
    require_odd_prime(p);
    if (p > bound) throw std::invalid_argument("gauss_sum_exact: p exceeds bound " + std::to_string(bound));
    if (mod(k, p) == 0) throw std::invalid_argument("gauss_sum_exact: k must be coprime to p");

    Cyc g(p, 0), gk(p, 0);
    for (i64 n = 1; n < p; ++n) {
        g[n] = legendre(n, p);
        gk[mod(k * n, p)] += legendre(n, p);
    }
    g = normalise(g);
    gk = normalise(gk);

    Cyc sq = multiply(g, g);
    for (i64 i = 1; i < p; ++i)
        if (sq[i] != 0) throw std::logic_error("gauss_sum_exact: square is not a constant");

    Cyc neg = g;
    for (auto& c : neg) c = -c;
    int sign = 0;
    if (gk == g) sign = 1;
    else if (gk == neg) sign = -1;
    else throw std::logic_error("gauss_sum_exact: substituted sum is not +-g");
    return {sq[0], sign};
}

}  // namespace charfield
