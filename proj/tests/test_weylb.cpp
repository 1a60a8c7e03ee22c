#include <doctest.h>

#include <deque>
#include <map>
#include <random>

#include "charfield/weylb.hpp"

using namespace charfield;

namespace {

std::map<SignedPerm, int> bfs_lengths(int n) {
    std::map<SignedPerm, int> dist{{SignedPerm::identity(n), 0}};
    std::deque<SignedPerm> queue{SignedPerm::identity(n)};
    while (!queue.empty()) {
        const SignedPerm w = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            const SignedPerm x = w * generator(n, i);
            if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
        }
    }
    return dist;
}

SignedPerm random_element(int n, std::mt19937& rng) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    for (auto& x : images)
        if (rng() % 2) x = -x;
    return SignedPerm(images);
}

}  // namespace

TEST_CASE("group sizes and BFS lengths") {
    for (int n = 1; n <= 4; ++n) {
        const auto dist = bfs_lengths(n);
        long order = 1;
        for (int i = 1; i <= n; ++i) order *= 2 * i;
        CHECK(static_cast<long>(dist.size()) == order);
        int longest = 0;
        for (const auto& [w, d] : dist) {
            CHECK(length(w) == d);
            longest = std::max(longest, d);
        }
        CHECK(longest == n * n);
    }
}

TEST_CASE("generators") {
    const int n = 3;
    CHECK(generator(n, 1).images() == std::vector<int>{2, 1, 3});
    CHECK(generator(n, 3).images() == std::vector<int>{1, 2, -3});
    for (int i = 1; i <= n; ++i) {
        CHECK((generator(n, i) * generator(n, i)).is_identity());
        CHECK(length(generator(n, i)) == 1);
    }
    CHECK_THROWS(generator(3, 4));
    CHECK_THROWS(SignedPerm({1, 1}));
}

TEST_CASE("special elements") {
    CHECK(special_element(3, SpecialKind::t, 1).images() == std::vector<int>{-1, 2, 3});
    CHECK(special_element(3, SpecialKind::u, 1).images() == std::vector<int>{-1, 2, -3});
    CHECK(length(special_element(2, SpecialKind::t, 2)) == 1);
    CHECK(length(special_element(2, SpecialKind::t, 1)) == 3);
    CHECK(length(special_element(2, SpecialKind::u, 1)) == 4);
    CHECK_THROWS(special_element(3, SpecialKind::u, 3));
}

TEST_CASE("length properties on random elements") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const SignedPerm w = random_element(n, rng);
        CHECK(length(w) == length(w.inverse()));
        CHECK((w * w.inverse()).is_identity());
        for (int i = 1; i <= n; ++i) {
            const int diff = length(w * generator(n, i)) - length(w);
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("relative Weyl groups") {
    using K = CoxeterFactor::Kind;
    SUBCASE("sp principal") {
        const auto d = relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::Sp, 3, 7), 1, 2));
        CHECK(d.c_order == 2);
        CHECK(*d.c_generator == generator(3, 3));
        CHECK(d.c_generator_length_parity == Parity::odd);
        CHECK(to_string(d.w_type) == "B1 x B2");
        CHECK(to_string(d.r_type) == "B1 x D2");
        CHECK_FALSE(d.externally_sourced);
        CHECK_THROWS(relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::Sp, 2, 7), 2, 0)));
    }
    SUBCASE("so-even principal") {
        const auto d = relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::SOeven, 3, 7), 1, 2));
        CHECK(d.c_order == 2);
        CHECK(*d.c_generator == special_element(3, SpecialKind::u, 1));
        CHECK(d.c_generator_length_parity == Parity::even);
        CHECK(d.r_type == CoxeterType{{K::D, 1}, {K::D, 2}});
        // With a = 0 the element u_1 already lies in the reflection part.
        const auto full = relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::SOeven, 3, 7), 0, 3));
        CHECK(full.c_order == 1);
        const auto twisted =
            relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::SOeven, 3, 7, -1), 1, 2));
        CHECK(twisted.w_type == CoxeterType{{K::B, 1}, {K::Bpp, 2}});
        CHECK(twisted.c_order == 2);
    }
    SUBCASE("so-odd") {
        const auto d = relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::SOodd, 3, 7), 1, 2));
        CHECK(d.c_order == 1);
        CHECK(d.w_type == d.r_type);
    }
    SUBCASE("non-principal") {
        const auto sp = relative_weyl(SeriesDescriptor::levi(GroupSpec(Family::Sp, 4, 7), 2, 1, 1));
        CHECK(sp.externally_sourced);
        CHECK(sp.c_order == 2);
        CHECK(*sp.c_generator == special_element(4, SpecialKind::t, 2));
        const auto so = relative_weyl(SeriesDescriptor::levi(GroupSpec(Family::SOeven, 4, 7), 2, 1, 1));
        CHECK(*so.c_generator == special_element(4, SpecialKind::u, 2));
        CHECK(relative_weyl(SeriesDescriptor::levi(GroupSpec(Family::SOeven, 4, 7), 2, 2, 0)).c_order == 1);
    }
    SUBCASE("sp C generator lies outside the type D factor") {
        // It changes an odd number of signs on the last b coordinates.
        for (int n = 2; n <= 6; ++n)
            for (int b = 1; b <= n; ++b) {
                const auto d = relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::Sp, n, 5), n - b, b));
                int negated = 0;
                for (int i = n - b + 1; i <= n; ++i) negated += (*d.c_generator)(i) < 0;
                CHECK(negated % 2 == 1);
            }
    }
    CHECK_THROWS(relative_weyl(SeriesDescriptor::principal_series(GroupSpec(Family::GL, 2, 7), 1, 1)));
    CHECK_THROWS(SeriesDescriptor::levi(GroupSpec(Family::Sp, 3, 7), 2, 1, 1));
}
