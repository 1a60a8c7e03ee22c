#include <doctest.h>

#include <set>

#include "charfield/unicombinat.hpp"

using namespace charfield;

namespace {

// The list mu from the multiplicity-one argument, written out literally:
//   delta = 1, k = f - e >= 1: (k+2e, ..., k+1, k, k-1, k-1, ..., 1, 1, 0, 0)
//   delta = 0, k = f - e:      (0, 0, 1, 1, ..., k-1, k-1, k, k+1, ..., k+2e-1)
// and lambda = 2 mu + 1.
std::vector<int> wavefront_oracle(int e, int f, int delta) {
    if (e > f) std::swap(e, f);
    const int k = f - e;
    std::vector<int> mu;
    if (delta == 1) {
        for (int x = k + 2 * e; x >= k + 1; --x) mu.push_back(x);
        mu.push_back(k);
        for (int x = k - 1; x >= 1; --x) mu.insert(mu.end(), {x, x});
        mu.insert(mu.end(), {0, 0});
    } else {
        for (int x = 0; x < k; ++x) mu.insert(mu.end(), {x, x});
        for (int x = k; x <= k + 2 * e - 1; ++x) mu.push_back(x);
    }
    std::vector<int> lambda;
    for (int x : mu) lambda.push_back(2 * x + 1);
    return Partition(lambda).parts();
}

// a(mu, eps) and delta(mu, eps) straight from their definitions.
EpsStats stats_by_definition(const std::vector<int>& parts, int eps) {
    std::map<int, int> r;
    int total = 0;
    for (int x : parts) {
        if (x > 0) ++r[x];
        total += x;
    }
    EpsStats st;
    for (auto [m, count] : r) {
        if (m % 2 == (1 + eps) % 2) ++st.a;
        if (total % 2 == 0 && m % 2 == (1 + eps) % 2 && count % 2 == 1) st.delta = 1;
    }
    return st;
}

}  // namespace

TEST_CASE("partitions") {
    const Partition p({1, 3, 0, 3});
    CHECK(p.parts() == std::vector<int>{3, 3, 1});
    CHECK(p.n_total() == 7);
    CHECK(p.r(3) == 2);
    CHECK(p.r(2) == 0);
    CHECK_THROWS(Partition({-1}));
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
}

TEST_CASE("eps partitions") {
    CHECK(EpsPartition::admissible(Partition({2, 2}), 1));
    CHECK_FALSE(EpsPartition::admissible(Partition({2, 1}), 0));
    CHECK_THROWS(EpsPartition(Partition({3}), 1));
    // Unipotent classes of Sp_2n over the algebraic closure: 2, 4, 8, 14 for n = 1..4.
    CHECK(eps_partitions_of(2, 1).size() == 2);
    CHECK(eps_partitions_of(4, 1).size() == 4);
    CHECK(eps_partitions_of(6, 1).size() == 8);
    CHECK(eps_partitions_of(8, 1).size() == 14);
    CHECK(eps_partitions_of(5, 0).size() == 4);
    for (int n = 1; n <= 12; ++n)
        for (int eps : {0, 1}) {
            std::size_t brute = 0;
            for (const auto& p : partitions_of(n)) brute += EpsPartition::admissible(p, eps);
            CHECK(eps_partitions_of(n, eps).size() == brute);
        }
}

TEST_CASE("eps stats and component orders") {
    CHECK(eps_stats(EpsPartition(Partition({3, 1, 1, 1}), 0)) == EpsStats{2, 1});
    CHECK(eps_stats(EpsPartition(Partition({2, 2}), 1)) == EpsStats{1, 0});
    CHECK(eps_stats(EpsPartition(Partition({1, 1}), 1)) == EpsStats{0, 0});
    CHECK(component_orders(EpsPartition(Partition({3, 1, 1, 1}), 0)) == ComponentOrders{4, 2, 1});
    CHECK(component_orders(EpsPartition(Partition({2}), 1)) == ComponentOrders{2, 1, 1});
    CHECK(component_orders(EpsPartition(Partition({1, 1}), 1)) == ComponentOrders{1, 1, 1});
    for (int n = 1; n <= 20; ++n)
        for (int eps : {0, 1})
            for (const auto& mu : eps_partitions_of(n, eps)) {
                CHECK(eps_stats(mu) == stats_by_definition(mu.base().parts(), eps));
                const auto o = component_orders(mu);
                CHECK(o.aG0 % o.aGad == 0);
                CHECK(o.aG % o.aG0 == 0);
            }
}

TEST_CASE("symbols") {
    CHECK(special_symbol(1, 1) == LSymbol({0, 1}, {1}));
    CHECK(special_symbol(2, 0) == LSymbol({1, 2}, {0, 1}));
    CHECK(special_symbol(0, 1) == LSymbol({0}, {}));
    for (int e = 0; e <= 10; ++e) CHECK(special_symbol(e, 1).rank() == e * (e + 1));
    for (int e = 1; e <= 10; ++e) CHECK(special_symbol(e, 0).rank() == e * e);
    CHECK_THROWS(LSymbol({1, 1}, {}));
    const LSymbol s({0, 1}, {1});
    // Gap 0 shifts only prepend zeros, so the shifted rows need not be strict.
    CHECK(s.shifted(1).top == std::vector<int>{0, 0, 1});
    CHECK(s.shifted(1).bottom == std::vector<int>{0, 1});
    CHECK(zero_gap2_symbol(1, 0).shifted(1) == zero_gap2_symbol(2, 0));
    CHECK(s.shifted(2).rank() == s.rank());
    for (int rows = 0; rows <= 5; ++rows)
        for (int delta : {0, 1}) {
            const LSymbol z = zero_gap2_symbol(rows, delta);
            CHECK(z.rank() == 0);
            CHECK(z.defect() == delta);
        }
    // Ranks add under the sum.
    for (int e = 0; e <= 4; ++e)
        for (int f = 0; f <= 4; ++f) {
            const LSymbol x = special_symbol(e, 1), y = special_symbol(f, 1);
            CHECK((x + y).rank() == x.rank() + y.rank());
        }
}

TEST_CASE("wave-front partitions: frozen values") {
    CHECK(wavefront_partition(0, 1, 1).base().parts() == std::vector<int>{3, 1, 1});
    CHECK(wavefront_partition(1, 1, 1).base().parts() == std::vector<int>{5, 3, 1});
    CHECK(wavefront_partition(0, 2, 0).base().parts() == std::vector<int>{3, 3, 1, 1});
    CHECK(wavefront_partition(2, 0, 0).base().parts() == std::vector<int>{3, 3, 1, 1});
    CHECK_THROWS(wavefront_partition(1, 1, 0));
    CHECK_THROWS(wavefront_partition(0, 1, 0));
}

TEST_CASE("wave-front partitions agree with the explicit lists") {
    for (int delta : {0, 1})
        for (int e = 0; e <= 6; ++e)
            for (int f = 0; f <= 6; ++f) {
                if (!cuspidal_admissible(e, f, delta)) continue;
                if (delta == 1 && e == f) continue;  // the literal list needs k >= 1
                CAPTURE(e);
                CAPTURE(f);
                CAPTURE(delta);
                CHECK(wavefront_partition(e, f, delta).base().parts() == wavefront_oracle(e, f, delta));
            }
}

TEST_CASE("wave-front partition properties") {
    for (int delta : {0, 1})
        for (int e = 0; e <= 6; ++e)
            for (int f = 0; f <= 6; ++f) {
                if (!cuspidal_admissible(e, f, delta)) continue;
                const auto mu = wavefront_partition(e, f, delta);
                CHECK(mu.eps() == 0);
                CHECK(mu.base().n_total() == 2 * (e * (e + delta) + f * (f + delta)) + delta);
                std::set<int> distinct;
                for (int x : mu.base().parts()) {
                    CHECK(x % 2 == 1);
                    distinct.insert(x);
                }
                if (delta == 0) CHECK(static_cast<int>(distinct.size()) == e + f);
                CHECK(n_cuspidal(e, f, delta) == component_orders(mu).aGad);
            }
}

TEST_CASE("cuspidal multiplicities") {
    CHECK(n_cuspidal(0, 1, 1) == 2);
    CHECK(n_cuspidal(2, 1, 0) == 2);
    CHECK(n_cuspidal(0, 2, 0) == 2);
    CHECK_THROWS(n_cuspidal(1, 1, 0));
}
