#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "charfield/errors.hpp"
#include "charfield/fp.hpp"
#include "charfield/fp_linalg.hpp"
#include "charfield/group.hpp"
#include "charfield/unicombinat.hpp"

// Brute-force matrix models of Sp_2n(p), SO_2n+1(p) and split SO_2n(p) on the
// basis v_1, ..., v_n, (v_0), v_-n, ..., v_-1 with B(v_i, v_j) = sgn(i)^eps delta_{i,-j}.
namespace charfield::oracle {

// Position of v_i in the ordered basis.
inline int basis_position(int i, int n, int dim) {
    if (i > 0) return i - 1;
    if (i == 0) return n;
    return dim + i;
}

inline int form_eps(Family f) { return f == Family::Sp ? 1 : 0; }

inline int oracle_dim(Family f, int n) {
    switch (f) {
        case Family::Sp:
        case Family::SOeven: return 2 * n;
        case Family::SOodd: return 2 * n + 1;
        case Family::GL: break;
    }
    throw std::invalid_argument("no bilinear form for gl");
}

template <int P>
FpMatrix<P> form_matrix(Family family, int n) {
    const int dim = oracle_dim(family, n);
    const int eps = form_eps(family);
    FpMatrix<P> j = FpMatrix<P>::Zero(dim, dim);
    for (int i = 1; i <= n; ++i) {
        j(basis_position(i, n, dim), basis_position(-i, n, dim)) = Fp<P>(1);
        j(basis_position(-i, n, dim), basis_position(i, n, dim)) = Fp<P>(eps ? -1 : 1);
    }
    if (dim % 2) j(n, n) = Fp<P>(1);
    return j;
}

template <int P>
bool is_isometry(const FpMatrix<P>& m, const FpMatrix<P>& form, bool special) {
    if (m.rows() != form.rows() || m.cols() != form.cols()) throw std::invalid_argument("dimension mismatch");
    if (!(m.transpose() * form * m == form)) return false;
    return !special || linalg::determinant(m) == Fp<P>(1);
}

inline bool needs_det_one(Family f) { return f == Family::SOodd || f == Family::SOeven; }

// Jordan type of a unipotent matrix from the ranks of (u - 1)^j.
template <int P>
Partition jordan_type(const FpMatrix<P>& u) {
    const int dim = static_cast<int>(u.rows());
    const linalg::DenseMatrix<Fp<P>> nil = u - FpMatrix<P>::Identity(dim, dim);
    std::vector<int> ranks{dim};
    linalg::DenseMatrix<Fp<P>> power = linalg::DenseMatrix<Fp<P>>::Identity(dim, dim);
    for (int j = 1; j <= dim; ++j) {
        power = power * nil;
        ranks.push_back(linalg::rank(power));
    }
    if (ranks[dim] != 0) throw std::invalid_argument("matrix is not unipotent");
    // Blocks of size >= j: ranks[j-1] - ranks[j].
    std::vector<int> parts;
    for (int j = 1; j <= dim; ++j) {
        const int at_least_j = ranks[j - 1] - ranks[j];
        const int at_least_next = j < dim ? ranks[j] - ranks[j + 1] : 0;
        for (int c = 0; c < at_least_j - at_least_next; ++c) parts.push_back(j);
    }
    return Partition(parts);
}

// Product of the simple root elements x_alpha(1): a regular unipotent element of
// Sp_2c (symplectic) or SO_2c+1 in the standard basis.
template <int P>
FpMatrix<P> standard_regular_unipotent(bool symplectic, int c) {
    const Family fam = symplectic ? Family::Sp : Family::SOodd;
    const int dim = oracle_dim(fam, c);
    auto pos = [&](int i) { return basis_position(i, c, dim); };
    FpMatrix<P> u = FpMatrix<P>::Identity(dim, dim);
    for (int i = 1; i < c; ++i) {
        FpMatrix<P> x = FpMatrix<P>::Identity(dim, dim);
        x(pos(i), pos(i + 1)) = Fp<P>(1);
        x(pos(-(i + 1)), pos(-i)) = Fp<P>(-1);
        u = u * x;
    }
    if (c >= 1) {
        FpMatrix<P> x = FpMatrix<P>::Identity(dim, dim);
        if (symplectic) {
            x(pos(c), pos(-c)) = Fp<P>(1);
        } else {
            x(pos(c), pos(0)) = Fp<P>(1);
            x(pos(0), pos(-c)) = Fp<P>(-1);
            x(pos(c), pos(-c)) = -Fp<P>(2).inverse();
        }
        u = u * x;
    }
    return u;
}

template <int P>
void require_oracle_group(const GroupSpec& g) {
    if (g.p() != P || g.q != P) throw std::invalid_argument("the matrix oracle works over the prime field only");
    if (g.family == Family::GL) throw std::invalid_argument("the matrix oracle has no gl model");
    if (g.family == Family::SOeven && g.eps_twist != 1)
        throw std::invalid_argument("the matrix oracle models split so-even only");
    if (oracle_dim(g.family, g.n) > kMaxDim) throw std::invalid_argument("dimension exceeds the oracle limit");
}

template <int P>
FpMatrix<P> unipotent_rep(const GroupSpec& g, const EpsPartition& mu) {
    require_oracle_group<P>(g);
    const int n = g.n;
    const int dim = oracle_dim(g.family, n);
    const int eps = form_eps(g.family);
    if (mu.base().n_total() != dim || mu.eps() != eps)
        throw std::invalid_argument("partition does not parametrise a unipotent class of this group");

    // Parts of parity eps come in hyperbolic pairs; the other parts are paired
    // while possible and a leftover single part becomes a distinguished piece.
    std::vector<int> paired, single;
    for (auto [m, r] : mu.base().multiplicities()) {
        for (int c = 0; c < r / 2; ++c) paired.push_back(m);
        if (r % 2) single.push_back(m);
    }
    std::sort(paired.begin(), paired.end(), std::greater<>());
    std::sort(single.begin(), single.end(), std::greater<>());

    std::vector<FpVector<P>> columns;
    std::vector<FpMatrix<P>> locals;
    int next = 1;
    auto basis_vec = [&](int i) {
        FpVector<P> v = FpVector<P>::Zero(dim);
        v(basis_position(i, n, dim)) = Fp<P>(1);
        return v;
    };

    for (int m : paired) {
        FpMatrix<P> a = FpMatrix<P>::Identity(m, m);
        for (int j = 1; j < m; ++j) a(j - 1, j) = Fp<P>(1);
        const FpMatrix<P> a_dual = linalg::inverse(a).transpose();
        FpMatrix<P> local = FpMatrix<P>::Zero(2 * m, 2 * m);
        local.topLeftCorner(m, m) = a;
        local.bottomRightCorner(m, m) = a_dual;
        for (int j = 0; j < m; ++j) columns.push_back(basis_vec(next + j));
        for (int j = 0; j < m; ++j) columns.push_back(basis_vec(-(next + j)));
        locals.push_back(local);
        next += m;
    }

    if (eps == 1) {
        for (int m : single) {
            const int c = m / 2;
            for (int j = 0; j < c; ++j) columns.push_back(basis_vec(next + j));
            for (int j = c - 1; j >= 0; --j) columns.push_back(basis_vec(-(next + j)));
            locals.push_back(standard_regular_unipotent<P>(true, c));
            next += c;
        }
    } else {
        // Each odd piece needs an anisotropic vector: v_0 when dim V is odd, and
        // v_j + v_-j/2 (norm 1), v_j - v_-j/2 (norm -1) from split hyperbolic planes.
        const int t = static_cast<int>(single.size());
        int hyper = 0;
        for (int m : single) hyper += m / 2;
        const int planes = (t - (dim % 2)) / 2;
        int plane_index = next + hyper;
        std::vector<std::pair<FpVector<P>, int>> aniso;
        if (dim % 2) aniso.push_back({basis_vec(0), 1});
        const Fp<P> half = Fp<P>(2).inverse();
        for (int c = 0; c < planes; ++c) {
            const int j = plane_index++;
            aniso.push_back({basis_vec(j) + half * basis_vec(-j), 1});
            aniso.push_back({basis_vec(j) - half * basis_vec(-j), -1});
        }
        if (static_cast<int>(aniso.size()) != t) throw std::logic_error("unipotent_rep: anisotropic vector count");
        for (int s = 0; s < t; ++s) {
            const int c = single[s] / 2;
            const auto& [w, norm] = aniso[s];
            for (int j = 0; j < c; ++j) columns.push_back(basis_vec(next + j));
            columns.push_back(w);
            for (int j = c - 1; j >= 0; --j) columns.push_back(Fp<P>(norm) * basis_vec(-(next + j)));
            locals.push_back(standard_regular_unipotent<P>(false, c));
            next += c;
        }
        next = plane_index;
    }
    if (next != n + 1 || static_cast<int>(columns.size()) != dim)
        throw std::logic_error("unipotent_rep: basis bookkeeping failed");

    FpMatrix<P> change(dim, dim), block = FpMatrix<P>::Zero(dim, dim);
    for (int c = 0; c < dim; ++c) change.col(c) = columns[c];
    int offset = 0;
    for (const auto& l : locals) {
        block.block(offset, offset, l.rows(), l.cols()) = l;
        offset += static_cast<int>(l.rows());
    }
    const FpMatrix<P> u = change * block * linalg::inverse(change);
    if (!is_isometry<P>(u, form_matrix<P>(g.family, n), needs_det_one(g.family)))
        throw std::logic_error("unipotent_rep: result is not an isometry");
    if (!(jordan_type<P>(u) == mu.base())) throw std::logic_error("unipotent_rep: wrong Jordan type");
    return u;
}

// Cyclic generators w of nilpotent `nil`, with block sizes; the vectors
// nil^i w (0 <= i < size) form a basis.
template <int P>
std::vector<std::pair<FpVector<P>, int>> jordan_generators(const FpMatrix<P>& nil) {
    using Dense = linalg::DenseMatrix<Fp<P>>;
    const int dim = static_cast<int>(nil.rows());
    std::vector<Dense> kernels{Dense::Zero(dim, 0)};
    Dense power = Dense::Identity(dim, dim);
    int height = 0;
    while (static_cast<int>(kernels.back().cols()) < dim) {
        power = power * nil;
        kernels.push_back(linalg::kernel_basis(power));
        if (++height > dim) throw std::invalid_argument("matrix is not nilpotent");
    }
    kernels.push_back(kernels.back());

    std::vector<std::pair<FpVector<P>, int>> out;
    for (int j = height; j >= 1; --j) {
        const Dense image = nil * kernels[j + 1];
        Dense span(dim, kernels[j - 1].cols() + image.cols());
        span << kernels[j - 1], image;
        int r = linalg::rank(span);
        for (Eigen::Index c = 0; c < kernels[j].cols(); ++c) {
            Dense wider(dim, span.cols() + 1);
            wider << span, kernels[j].col(c);
            const int r2 = linalg::rank(wider);
            if (r2 > r) {
                span = wider;
                r = r2;
                out.push_back({FpVector<P>(kernels[j].col(c)), j});
            }
        }
    }
    return out;
}

struct SearchStats {
    i64 nodes = 0;
};

namespace detail {

// Depth-first search for X with X u = u^k X and X an isometry. X is fixed by the
// images y_j of the Jordan generators w_j of u: X(N^i w_j) = N_k^i y_j where
// N = u - 1, N_k = u^k - 1, and y_j ranges over ker N_k^(size_j). Candidates
// are scanned in lexicographic order of their coefficient vectors, and a
// partial choice is abandoned as soon as a form value or linear independence fails.
template <int P>
class PowerSearch {
public:
    PowerSearch(const FpMatrix<P>& form, bool special, const FpMatrix<P>& u, const FpMatrix<P>& uk)
        : form_(form), special_(special) {
        dim_ = static_cast<int>(u.rows());
        const FpMatrix<P> id = FpMatrix<P>::Identity(dim_, dim_);
        nk_ = uk - id;
        const FpMatrix<P> nil = u - id;
        const auto gens = jordan_generators<P>(nil);
        e_.resize(dim_, dim_);
        int col = 0;
        for (const auto& [w, size] : gens) {
            Level lvl;
            lvl.size = size;
            lvl.base = col;
            FpVector<P> v = w;
            for (int i = 0; i < size; ++i) {
                e_.col(col++) = v;
                v = nil * v;
            }
            linalg::DenseMatrix<Fp<P>> nk_pow = linalg::matrix_power(nk_, size);
            lvl.kernel = linalg::kernel_basis(nk_pow);
            lvl.count = 1;
            for (Eigen::Index c = 0; c < lvl.kernel.cols(); ++c) lvl.count *= P;
            levels_.push_back(lvl);
        }
        if (col != dim_) throw std::logic_error("jordan generators do not span");
        e_inv_ = linalg::inverse(e_);
        gram_ = e_.transpose() * form_ * e_;
    }

    i64 top_count() const { return levels_.empty() ? 0 : levels_[0].count; }

    struct Outcome {
        bool found = false;
        bool aborted = false;
        i64 nodes = 0;
        FpMatrix<P> witness;
    };

    // Explores the subtree whose first-level candidate has index `top`, visiting at most `cap` nodes.
    Outcome run_subtree(i64 top, i64 cap) const {
        State st;
        st.y.resize(dim_, dim_);
        st.jy.resize(dim_, dim_);
        Outcome out;
        st.cap = cap;
        out.found = try_candidate(st, 0, top);
        out.aborted = st.aborted;
        out.nodes = st.nodes;
        if (out.found) out.witness = st.witness;
        return out;
    }

private:
    struct Level {
        int size = 0;
        int base = 0;
        linalg::DenseMatrix<Fp<P>> kernel;
        i64 count = 1;
    };
    struct State {
        FpMatrix<P> y, jy;
        std::vector<std::pair<int, FpVector<P>>> echelon;
        i64 nodes = 0;
        i64 cap = 0;
        bool aborted = false;
        FpMatrix<P> witness;
    };

    FpVector<P> candidate(const Level& lvl, i64 index) const {
        FpVector<P> y = FpVector<P>::Zero(dim_);
        const auto d = lvl.kernel.cols();
        for (Eigen::Index c = d - 1; c >= 0; --c) {
            const Fp<P> coeff(static_cast<int>(index % P));
            index /= P;
            if (!(coeff == Fp<P>(0))) y += coeff * FpVector<P>(lvl.kernel.col(c));
        }
        return y;
    }

    bool independent(State& st, FpVector<P> v) const {
        for (const auto& [piv, e] : st.echelon) {
            const Fp<P> f = v(piv);
            if (!(f == Fp<P>(0))) v -= f * e;
        }
        for (int i = 0; i < dim_; ++i) {
            if (!(v(i) == Fp<P>(0))) {
                v *= v(i).inverse();
                st.echelon.push_back({i, v});
                return true;
            }
        }
        return false;
    }

    bool try_candidate(State& st, std::size_t level, i64 index) const {
        if (++st.nodes > st.cap) {
            st.aborted = true;
            return false;
        }
        const Level& lvl = levels_[level];
        const std::size_t echelon_mark = st.echelon.size();
        FpVector<P> v = candidate(lvl, index);
        bool ok = true;
        for (int i = 0; i < lvl.size && ok; ++i) {
            const int c = lvl.base + i;
            st.y.col(c) = v;
            st.jy.col(c) = form_ * v;
            for (int t = 0; t <= c && ok; ++t)
                ok = v.dot(st.jy.col(t)) == gram_(c, t);
            ok = ok && independent(st, v);
            v = nk_ * v;
        }
        if (ok) {
            if (level + 1 == levels_.size()) {
                ok = accept_leaf(st);
            } else {
                ok = false;
                const Level& next = levels_[level + 1];
                for (i64 j = 0; j < next.count && !st.aborted; ++j)
                    if (try_candidate(st, level + 1, j)) {
                        ok = true;
                        break;
                    }
            }
        }
        if (!ok) st.echelon.resize(echelon_mark);
        return ok;
    }

    bool accept_leaf(State& st) const {
        const FpMatrix<P> x = st.y * e_inv_;
        if (special_ && !(linalg::determinant(x) == Fp<P>(1))) return false;
        st.witness = x;
        return true;
    }

    FpMatrix<P> form_;
    bool special_;
    int dim_ = 0;
    FpMatrix<P> nk_, e_, e_inv_, gram_;
    std::vector<Level> levels_;
};

}  // namespace detail

// Searches for X in the isometry group (det 1 for SO) with X u X^-1 = u^k. Returns
// the first witness in a fixed lexicographic order, independent of `workers`.
// Throws BudgetExceeded if a sequential scan would visit more than `budget` nodes.
template <int P>
std::optional<FpMatrix<P>> power_conjugacy_search(const GroupSpec& g, const FpMatrix<P>& u, i64 k, i64 budget,
                                                  int workers = 1, SearchStats* stats = nullptr) {
    require_oracle_group<P>(g);
    const int dim = oracle_dim(g.family, g.n);
    if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("matrix size does not match the group");
    const FpMatrix<P> form = form_matrix<P>(g.family, g.n);
    const bool special = needs_det_one(g.family);
    if (!is_isometry<P>(u, form, special)) throw std::invalid_argument("u is not in the group");
    if (mod(k, P) == 0) throw std::invalid_argument("k must be coprime to p");
    const FpMatrix<P> uk = linalg::matrix_power(u, mod(k, static_cast<i64>(P) * P * P));
    jordan_type<P>(u);

    const detail::PowerSearch<P> search(form, special, u, uk);
    const i64 total = search.top_count();
    i64 acc = 0;
    auto finish = [&](std::optional<FpMatrix<P>> w) {
        if (stats) stats->nodes = acc;
        return w;
    };
    auto consume = [&](const typename detail::PowerSearch<P>::Outcome& o) {
        acc += o.nodes;
        if (o.aborted || acc > budget) {
            if (stats) stats->nodes = acc;
            throw BudgetExceeded("power conjugacy search exceeded budget of " + std::to_string(budget) + " nodes");
        }
    };

    if (workers <= 1) {
        for (i64 top = 0; top < total; ++top) {
            auto o = search.run_subtree(top, budget - acc);
            consume(o);
            if (o.found) return finish(o.witness);
        }
        return finish(std::nullopt);
    }

    // Chunks of first-level candidates are explored in parallel, then scanned in
    // order so that the result and the node count match the sequential scan.
    const i64 chunk = 1024;
    for (i64 start = 0; start < total; start += chunk) {
        const i64 stop = std::min(total, start + chunk);
        std::vector<std::optional<typename detail::PowerSearch<P>::Outcome>> results(stop - start);
        std::atomic<i64> next{start};
        std::atomic<i64> best{stop};
        const i64 cap = budget - acc;
        auto worker = [&] {
            for (;;) {
                const i64 top = next.fetch_add(1);
                if (top >= stop || top > best.load()) return;
                auto o = search.run_subtree(top, cap);
                if (o.found) {
                    i64 cur = best.load();
                    while (top < cur && !best.compare_exchange_weak(cur, top)) {
                    }
                }
                results[top - start] = std::move(o);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (i64 top = start; top < stop; ++top) {
            auto& slot = results[top - start];
            if (!slot) slot = search.run_subtree(top, budget - acc);
            consume(*slot);
            if (slot->found) return finish(slot->witness);
        }
    }
    return finish(std::nullopt);
}

// Calls f.template operator()<P>() for the supported oracle primes.
template <class F>
decltype(auto) with_prime(i64 p, F&& f) {
    switch (p) {
        case 3: return f.template operator()<3>();
        case 5: return f.template operator()<5>();
        case 7: return f.template operator()<7>();
        case 11: return f.template operator()<11>();
        case 13: return f.template operator()<13>();
        default: break;
    }
    throw std::invalid_argument("the matrix oracle supports p in {3, 5, 7, 11, 13}, got " + std::to_string(p));
}

// Budget from CHARFIELD_BUDGET, default 10^7.
i64 default_budget();

// Runtime entry point: builds the unipotent representative for mu and reports
// whether it is conjugate to its k-th power.
bool power_conjugate(const GroupSpec& g, const EpsPartition& mu, i64 k, i64 budget, int workers = 1,
                     SearchStats* stats = nullptr);

// Conjugacy classes of SL_2(q) = Sp_2(q) by brute force.
class Sl2Classes {
public:
    explicit Sl2Classes(i64 q);
    i64 group_order() const { return order_; }
    int class_count() const { return static_cast<int>(powers_.size()); }
    // Number of classes C with C^k = C.
    int fixed_by_power(i64 k) const;

private:
    i64 q_;
    i64 order_ = 0;
    std::vector<int> class_of_;
    // For each class, the class indices of rep^0, rep^1, ..., rep^(ord-1).
    std::vector<std::vector<int>> powers_;
};

i64 brauer_fixed_classes_sl2(i64 q, i64 k);

}  // namespace charfield::oracle
