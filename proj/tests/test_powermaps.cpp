#include <doctest.h>

#include <numeric>

#include "charfield/powermaps.hpp"

using namespace charfield;

namespace {

struct Rational {
    long long num = 0, den = 1;
    Rational(long long n = 0, long long d = 1) : num(n), den(d) {
        if (den < 0) num = -num, den = -den;
        const long long g = std::gcd(num, den);
        if (g > 1) num /= g, den /= g;
    }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
    bool integral() const { return den == 1; }
};

using Matrix = std::vector<std::vector<int>>;

// a_ij = <coroot_i, root_j> in Bourbaki numbering.
Matrix cartan(RootType t, int n) {
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    switch (t) {
        case RootType::A:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case RootType::B:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case RootType::C:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case RootType::D:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case RootType::E6:
        case RootType::E7:
        case RootType::E8:
            link(1, 3);
            link(2, 4);
            for (int i = 3; i < n; ++i) link(i, i + 1);
            break;
        case RootType::F4:
            link(1, 2);
            link(2, 3);
            link(3, 4);
            a[2][1] = -2;
            break;
        case RootType::G2:
            link(1, 2);
            a[0][1] = -3;
            break;
    }
    return a;
}

// x is given in fundamental coweight coordinates; it lies in the coroot lattice iff
// the solution c of sum_i c_i coroot_i = x, i.e. A^T c = x, is integral.
bool in_coroot_lattice(const Matrix& a, const std::vector<Rational>& x) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[j][i];
        m[i][n] = x[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col].num == 0) ++piv;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].num == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    for (int i = 0; i < n; ++i)
        if (!(m[i][n] / m[i][i]).integral()) return false;
    return true;
}

}  // namespace

TEST_CASE("image of rho-check agrees with the coweight lattice") {
    std::vector<std::pair<RootType, int>> cases;
    for (int n = 1; n <= 9; ++n) cases.push_back({RootType::A, n});
    for (int n = 2; n <= 9; ++n) cases.push_back({RootType::B, n});
    for (int n = 2; n <= 9; ++n) cases.push_back({RootType::C, n});
    for (int n = 3; n <= 9; ++n) cases.push_back({RootType::D, n});
    cases.push_back({RootType::E6, 6});
    cases.push_back({RootType::E7, 7});
    cases.push_back({RootType::E8, 8});
    cases.push_back({RootType::F4, 4});
    cases.push_back({RootType::G2, 2});
    for (auto [t, n] : cases) {
        CAPTURE(static_cast<int>(t));
        CAPTURE(n);
        const Matrix a = cartan(t, n);
        const FundImage img = rho_fundamental_image(t, n);
        // rho-check pairs to 1 with every simple root.
        std::vector<Rational> diff(n, Rational(1));
        if (!img.is_zero()) {
            REQUIRE(img.index >= 1);
            REQUIRE(img.index <= n);
            diff[img.index - 1] = diff[img.index - 1] - img.coefficient;
        }
        CHECK(in_coroot_lattice(a, diff));
        // A nonzero image may still lie in the coroot lattice (even coefficients), so only the
        // difference is tested.
    }
}

TEST_CASE("rank limits") {
    CHECK_THROWS(rho_fundamental_image(RootType::D, 2));
    CHECK_THROWS(rho_fundamental_image(RootType::B, 1));
    CHECK_THROWS(parse_root_type("H3"));
    CHECK(parse_root_type("E7") == RootType::E7);
}

TEST_CASE("regular unipotent rationality") {
    CHECK(regular_rational(GroupSpec(Family::Sp, 1, 7), 2));
    CHECK_FALSE(regular_rational(GroupSpec(Family::Sp, 1, 7), 3));
    CHECK(regular_rational(GroupSpec(Family::Sp, 2, 49), 3));
    CHECK(regular_rational(GroupSpec(Family::SOodd, 2, 7), 3));
    CHECK_THROWS(regular_rational(GroupSpec(Family::Sp, 1, 7), 14));
}

TEST_CASE("unipotent rationality") {
    const GroupSpec sp4(Family::Sp, 2, 7);
    CHECK(unipotent_rational(sp4, EpsPartition(Partition({2, 2}), 1), 3));
    CHECK(unipotent_rational(sp4, EpsPartition(Partition({1, 1, 1, 1}), 1), 3));
    CHECK_FALSE(unipotent_rational(sp4, EpsPartition(Partition({2, 1, 1}), 1), 3));
    CHECK_FALSE(unipotent_rational(sp4, EpsPartition(Partition({4}), 1), 5));
    CHECK(unipotent_rational(sp4, EpsPartition(Partition({4}), 1), 2));
    CHECK(unipotent_rational(GroupSpec(Family::Sp, 2, 9), EpsPartition(Partition({4}), 1), 2));
    const GroupSpec so5(Family::SOodd, 2, 7);
    for (const auto& mu : eps_partitions_of(5, 0))
        for (i64 k = 1; k < 7; ++k) CHECK(unipotent_rational(so5, mu, k));
    CHECK_THROWS(unipotent_rational(sp4, EpsPartition(Partition({3, 3}), 0), 3));
    CHECK_THROWS(unipotent_rational(sp4, EpsPartition(Partition({2, 2, 2}), 1), 3));
    CHECK(unipotent_rational_criterion(sp4, EpsPartition(Partition({2, 1, 1}), 1), 3) ==
          "symplectic: k mod p is a square in F_q iff rational");
}
