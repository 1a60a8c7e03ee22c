#include "charfield/unicombinat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace charfield {

Partition::Partition(std::vector<int> parts) {
    for (int x : parts) {
        if (x < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (x > 0) parts_.push_back(x);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int x : parts_) total_ += x;
}

int Partition::r(int m) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), m));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> out;
    for (int x : parts_) ++out[x];
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int x = std::min(left, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool EpsPartition::admissible(const Partition& p, int eps) {
    for (auto [m, r] : p.multiplicities())
        if (m % 2 == eps % 2 && r % 2 != 0) return false;
    return true;
}

EpsPartition::EpsPartition(Partition base, int eps) : base_(std::move(base)), eps_(eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
    if (!admissible(base_, eps))
        throw std::invalid_argument("partition " + to_string(base_) + " is not in P_" + std::to_string(eps));
}

std::vector<EpsPartition> eps_partitions_of(int n, int eps) {
    std::vector<EpsPartition> out;
    for (auto& p : partitions_of(n))
        if (EpsPartition::admissible(p, eps)) out.emplace_back(p, eps);
    return out;
}

EpsStats eps_stats(const EpsPartition& mu) {
    EpsStats st;
    const bool n_even = mu.base().n_total() % 2 == 0;
    for (auto [m, r] : mu.base().multiplicities()) {
        if (m % 2 != (1 + mu.eps()) % 2) continue;
        ++st.a;
        if (n_even && r % 2 == 1) st.delta = 1;
    }
    return st;
}

static long pow2_at_least_one(int e) { return e <= 0 ? 1 : (1L << e); }

ComponentOrders component_orders(const EpsPartition& mu) {
    auto st = eps_stats(mu);
    return {pow2_at_least_one(st.a), pow2_at_least_one(st.a - 1), pow2_at_least_one(st.a - 1 - st.delta)};
}

LSymbol::LSymbol(std::vector<int> top_, std::vector<int> bottom_, int gap_)
    : top(std::move(top_)), bottom(std::move(bottom_)), gap(gap_) {
    auto check = [](const std::vector<int>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0) throw std::invalid_argument("symbol entries must be non-negative");
            if (i && row[i] <= row[i - 1]) throw std::invalid_argument("symbol rows must be strictly increasing");
        }
    };
    check(top);
    check(bottom);
    if (gap < 0) throw std::invalid_argument("symbol gap must be non-negative");
}

int LSymbol::rank() const {
    auto tri = [](int t) { return t * (t - 1) / 2; };
    int sum = 0;
    for (int x : top) sum += x;
    for (int x : bottom) sum += x;
    return sum - gap * (tri(static_cast<int>(top.size())) + tri(static_cast<int>(bottom.size())));
}

LSymbol LSymbol::shifted(int count) const {
    LSymbol s = *this;
    for (int c = 0; c < count; ++c) {
        for (auto* row : {&s.top, &s.bottom}) {
            for (auto& x : *row) x += gap;
            row->insert(row->begin(), 0);
        }
    }
    return s;
}

std::string to_string(const LSymbol& s) {
    auto row = [](const std::vector<int>& r) {
        std::string out;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(r[i]);
        }
        return out;
    };
    return "(" + row(s.top) + " / " + row(s.bottom) + ")";
}

LSymbol operator+(const LSymbol& x, const LSymbol& y) {
    if (x.defect() != y.defect()) throw std::invalid_argument("symbol sum needs equal defects");
    const int len = static_cast<int>(std::max(x.bottom.size(), y.bottom.size()));
    LSymbol xs = x.shifted(len - static_cast<int>(x.bottom.size()));
    LSymbol ys = y.shifted(len - static_cast<int>(y.bottom.size()));
    LSymbol out;
    out.gap = std::max(x.gap, y.gap);
    out.top.resize(xs.top.size());
    out.bottom.resize(xs.bottom.size());
    for (std::size_t i = 0; i < xs.top.size(); ++i) out.top[i] = xs.top[i] + ys.top[i];
    for (std::size_t i = 0; i < xs.bottom.size(); ++i) out.bottom[i] = xs.bottom[i] + ys.bottom[i];
    return LSymbol(out.top, out.bottom, out.gap);
}

LSymbol special_symbol(int e, int delta) {
    if (e < 0) throw std::invalid_argument("special_symbol: e must be non-negative");
    std::vector<int> top, bottom;
    if (delta == 1) {
        for (int i = 0; i <= e; ++i) top.push_back(i);
        for (int i = 1; i <= e; ++i) bottom.push_back(i);
    } else if (delta == 0) {
        for (int i = 1; i <= e; ++i) top.push_back(i);
        for (int i = 0; i < e; ++i) bottom.push_back(i);
    } else {
        throw std::invalid_argument("special_symbol: delta must be 0 or 1");
    }
    return LSymbol(top, bottom, 0);
}

LSymbol zero_gap2_symbol(int rows, int delta) {
    std::vector<int> top, bottom;
    for (int i = 0; i < rows + delta; ++i) top.push_back(2 * i);
    for (int i = 0; i < rows; ++i) bottom.push_back(2 * i);
    return LSymbol(top, bottom, 2);
}

std::vector<int> symbol_to_mu(const LSymbol& s) {
    std::vector<int> all = s.top;
    all.insert(all.end(), s.bottom.begin(), s.bottom.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] -= static_cast<int>(i);
        if (all[i] < 0) throw std::invalid_argument("symbol_to_mu: symbol is not reduced");
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

bool cuspidal_admissible(int e, int f, int delta) {
    if (e < 0 || f < 0 || (delta != 0 && delta != 1)) return false;
    return e + delta >= 2 || f + delta >= 2;
}

static void require_admissible(int e, int f, int delta) {
    if (!cuspidal_admissible(e, f, delta))
        throw std::invalid_argument("(e, f, delta) = (" + std::to_string(e) + ", " + std::to_string(f) + ", " +
                                    std::to_string(delta) + ") admits no cuspidal unipotent character");
}

LSymbol springer_symbol(int e, int f, int delta) {
    require_admissible(e, f, delta);
    if (e > f) std::swap(e, f);
    return special_symbol(e, delta) + special_symbol(f, delta) + zero_gap2_symbol(f, delta);
}

EpsPartition wavefront_partition(int e, int f, int delta) {
    auto mu = symbol_to_mu(springer_symbol(e, f, delta));
    std::vector<int> lambda;
    for (int x : mu) lambda.push_back(2 * x + 1);
    EpsPartition out(Partition(lambda), 0);
    const int dim = 2 * (e * (e + delta) + f * (f + delta)) + delta;
    if (out.base().n_total() != dim) throw std::logic_error("wavefront_partition: dimension mismatch");
    return out;
}

long n_cuspidal(int e, int f, int delta) {
    require_admissible(e, f, delta);
    auto big_delta = [delta](int m) { return delta == 0 && m != 0 ? 1 : 0; };
    return 1L << (e + f - big_delta(e) - big_delta(f));
}

}  // namespace charfield
