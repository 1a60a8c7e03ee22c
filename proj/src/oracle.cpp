#include "charfield/oracle.hpp"

#include <cstdlib>
#include <string>

namespace charfield::oracle {

i64 default_budget() {
    if (const char* env = std::getenv("CHARFIELD_BUDGET")) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("CHARFIELD_BUDGET must be a positive integer");
    }
    return 10'000'000;
}

bool power_conjugate(const GroupSpec& g, const EpsPartition& mu, i64 k, i64 budget, int workers, SearchStats* stats) {
    return with_prime(g.q, [&]<int P>() {
        const FpMatrix<P> u = unipotent_rep<P>(g, mu);
        return power_conjugacy_search<P>(g, u, k, budget, workers, stats).has_value();
    });
}

namespace {

struct Sl2Data {
    i64 order = 0;
    std::vector<int> class_of;
    std::vector<std::vector<int>> powers;
};

template <int P>
Sl2Data sl2_classes() {
    using M2 = Eigen::Matrix<Fp<P>, 2, 2>;
    auto encode = [](const M2& m) {
        return ((m(0, 0).value() * P + m(0, 1).value()) * P + m(1, 0).value()) * P + m(1, 1).value();
    };
    std::vector<M2> elements;
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b)
            for (int c = 0; c < P; ++c)
                for (int d = 0; d < P; ++d) {
                    M2 m;
                    m << Fp<P>(a), Fp<P>(b), Fp<P>(c), Fp<P>(d);
                    if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == Fp<P>(1)) elements.push_back(m);
                }

    Sl2Data out;
    out.order = static_cast<i64>(elements.size());
    out.class_of.assign(P * P * P * P, -1);
    std::vector<M2> reps;
    for (const M2& x : elements) {
        if (out.class_of[encode(x)] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (const M2& g : elements) {
            // g^-1 for det 1 is the adjugate.
            M2 gi;
            gi << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
            out.class_of[encode(g * x * gi)] = id;
        }
    }
    for (const M2& x : reps) {
        std::vector<int> pw;
        M2 y = M2::Identity();
        do {
            pw.push_back(out.class_of[encode(y)]);
            y = y * x;
        } while (!(y == M2::Identity()));
        out.powers.push_back(std::move(pw));
    }
    return out;
}

}  // namespace

Sl2Classes::Sl2Classes(i64 q) : q_(q) {
    if (!is_prime(q) || q == 2) throw std::invalid_argument("Sl2Classes needs an odd prime q");
    Sl2Data data = with_prime(q, []<int P>() { return sl2_classes<P>(); });
    order_ = data.order;
    class_of_ = std::move(data.class_of);
    powers_ = std::move(data.powers);
}

int Sl2Classes::fixed_by_power(i64 k) const {
    if (gcd(k, order_) != 1) throw std::invalid_argument("k must be coprime to the group order");
    int fixed = 0;
    for (std::size_t c = 0; c < powers_.size(); ++c) {
        const auto& pw = powers_[c];
        const i64 e = mod(k, static_cast<i64>(pw.size()));
        if (pw[e] == static_cast<int>(c)) ++fixed;
    }
    return fixed;
}

i64 brauer_fixed_classes_sl2(i64 q, i64 k) {
    return Sl2Classes(q).fixed_by_power(k);
}

}  // namespace charfield::oracle
