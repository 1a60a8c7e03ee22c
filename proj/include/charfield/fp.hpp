#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>

#include <Eigen/Core>

namespace charfield {

// Residue class modulo the odd prime P.
template <int P>
class Fp {
    static_assert(P > 2 && P < 46341, "P must be an odd prime whose square fits in int");

public:
    constexpr Fp() = default;
    template <std::integral T>
    constexpr Fp(T x) : v_(static_cast<int>(((static_cast<long long>(x) % P) + P) % P)) {}

    static constexpr int modulus() { return P; }
    constexpr int value() const { return v_; }

    friend constexpr Fp operator+(Fp a, Fp b) { return raw(a.v_ + b.v_ >= P ? a.v_ + b.v_ - P : a.v_ + b.v_); }
    friend constexpr Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ - b.v_ + P); }
    friend constexpr Fp operator*(Fp a, Fp b) { return raw(a.v_ * b.v_ % P); }
    friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    constexpr Fp& operator+=(Fp b) { return *this = *this + b; }
    constexpr Fp& operator-=(Fp b) { return *this = *this - b; }
    constexpr Fp& operator*=(Fp b) { return *this = *this * b; }
    constexpr Fp& operator/=(Fp b) { return *this = *this / b; }
    friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend constexpr bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

    constexpr Fp pow(long long e) const {
        Fp base = *this, out = raw(1);
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }
    constexpr Fp inverse() const { return pow(P - 2); }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    static constexpr Fp raw(int v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    int v_ = 0;
};

// Largest natural-module dimension the oracle handles (Sp_6 and SO_7 at rank 3).
inline constexpr int kMaxDim = 8;

template <int P>
using FpMatrix = Eigen::Matrix<Fp<P>, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;
template <int P>
using FpVector = Eigen::Matrix<Fp<P>, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

}  // namespace charfield

namespace Eigen {

template <int P>
struct NumTraits<charfield::Fp<P>> : GenericNumTraits<charfield::Fp<P>> {
    using Real = charfield::Fp<P>;
    using NonInteger = charfield::Fp<P>;
    using Literal = charfield::Fp<P>;
    using Nested = charfield::Fp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline Real highest() { return Real(P - 1); }
    static inline Real lowest() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
