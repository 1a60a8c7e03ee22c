#include "charfield/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "charfield/errors.hpp"

namespace charfield {

Frac::Frac(i64 a_, i64 d_) {
    if (d_ <= 0) throw std::invalid_argument("fraction denominator must be positive");
    a_ = mod(a_, d_);
    i64 g = gcd(a_, d_);
    if (a_ == 0) g = d_;
    a = a_ / g;
    d = d_ / g;
}

std::string to_string(const Frac& f) { return std::to_string(f.a) + "/" + std::to_string(f.d); }

Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("fraction must look like a/d: " + s);
    std::size_t used_a = 0, used_d = 0;
    i64 a = std::stoll(s.substr(0, slash), &used_a);
    i64 d = std::stoll(s.substr(slash + 1), &used_d);
    if (used_a != slash || used_d != s.size() - slash - 1) throw std::invalid_argument("malformed fraction: " + s);
    return Frac(a, d);
}

std::vector<Frac> frobenius_orbit(const Frac& f, i64 q) {
    std::vector<Frac> out{f};
    Frac cur = f.times(q);
    while (!(cur == f)) {
        out.push_back(cur);
        cur = cur.times(q);
    }
    return out;
}

Frac canonical_rep(const Frac& f, i64 q) {
    auto orb = frobenius_orbit(f, q);
    return *std::min_element(orb.begin(), orb.end());
}

static int orbit_size(const Frac& f, i64 q) { return static_cast<int>(frobenius_orbit(f, q).size()); }

SemisimpleClass::SemisimpleClass(GroupSpec group, std::vector<EigOrbit> orbits, std::optional<int> minus_type,
                                 std::optional<int> plus_type)
    : group_(group), minus_type_(minus_type), plus_type_(plus_type) {
    if (group_.family == Family::GL) throw std::invalid_argument("semisimple classes are only modelled for sp and so");
    const i64 q = group_.q;
    for (const auto& o : orbits) {
        if (o.mult < 1) throw std::invalid_argument("orbit multiplicity must be positive");
        if (o.frac.d % group_.p() == 0) throw std::invalid_argument("eigenvalue order must be prime to p");
        Frac rep = canonical_rep(o.frac, q);
        for (const auto& seen : orbits_)
            if (seen.frac == rep) throw std::invalid_argument("orbit " + to_string(rep) + " listed twice");
        orbits_.push_back({rep, o.mult});
    }
    std::sort(orbits_.begin(), orbits_.end(), [](const EigOrbit& x, const EigOrbit& y) { return x.frac < y.frac; });

    int dim = 0;
    for (const auto& o : orbits_) dim += orbit_size(o.frac, q) * o.mult;
    if (dim != group_.dim_v_dual())
        throw std::invalid_argument("spectrum has dimension " + std::to_string(dim) + ", dual group needs " +
                                    std::to_string(group_.dim_v_dual()));

    for (const auto& o : orbits_)
        if (mult_of(o.frac.negated()) != o.mult) throw std::invalid_argument("spectrum is not closed under inversion");

    const int mp = mult_plus(), mm = mult_minus();
    const Family dual = group_.dual_family();
    if (dual == Family::Sp && (mp % 2 || mm % 2))
        throw std::invalid_argument("symplectic dual needs even multiplicities of +1 and -1");
    if (dual == Family::SOodd && (mp % 2 == 0 || mm % 2))
        throw std::invalid_argument("odd orthogonal dual needs odd multiplicity of +1 and even of -1");
    if (dual == Family::SOeven && (mp % 2 || mm % 2))
        throw std::invalid_argument("even orthogonal dual needs even multiplicities of +1 and -1");

    auto check_label = [](std::optional<int> label, bool wanted, const char* name) {
        if (wanted && !label) throw std::invalid_argument(std::string(name) + " is required for this spectrum");
        if (!wanted && label) throw std::invalid_argument(std::string(name) + " is not meaningful for this spectrum");
        if (label && *label != 1 && *label != -1) throw std::invalid_argument(std::string(name) + " must be +1 or -1");
    };
    const bool orthogonal = dual != Family::Sp;
    check_label(minus_type_, orthogonal && mm > 0, "minus_type");
    check_label(plus_type_, dual == Family::SOeven && mp > 0, "plus_type");

    if (dual == Family::SOeven) {
        // Self-inverse orbits span spaces of minus type; pairs O, O^-1 are hyperbolic.
        int type = minus_type_.value_or(1) * plus_type_.value_or(1);
        for (const auto& o : orbits_)
            if (o.frac.d > 2 && canonical_rep(o.frac.negated(), q) == o.frac && o.mult % 2) type = -type;
        if (type != group_.eps_twist)
            throw std::invalid_argument("eigenspace types are incompatible with the form of the dual group");
    }
}

int SemisimpleClass::mult_of(const Frac& f) const {
    Frac rep = canonical_rep(f, group_.q);
    for (const auto& o : orbits_)
        if (o.frac == rep) return o.mult;
    return 0;
}

bool SemisimpleClass::is_involution() const {
    for (const auto& o : orbits_)
        if (o.frac.d > 2) return false;
    return true;
}

std::string to_string(const SemisimpleClass& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.orbits().size(); ++i) {
        if (i) out += ", ";
        out += to_string(s.orbits()[i].frac) + "^" + std::to_string(s.orbits()[i].mult);
    }
    out += "}";
    if (s.minus_type()) out += " minus_type=" + std::to_string(*s.minus_type());
    if (s.plus_type()) out += " plus_type=" + std::to_string(*s.plus_type());
    return out;
}

i64 CycSubfield::degree() const { return euler_phi(d) / static_cast<i64>(stab.size()); }

bool CycSubfield::contains(i64 k) const {
    return std::binary_search(stab.begin(), stab.end(), mod(k, d));
}

i64 order_of(const SemisimpleClass& s) {
    i64 d = 1;
    for (const auto& o : s.orbits()) d = lcm(d, o.frac.d);
    return d;
}

SemisimpleClass power_class(const SemisimpleClass& s, i64 k) {
    if (gcd(k, order_of(s)) != 1) throw std::invalid_argument("power must be coprime to the order of s");
    std::vector<EigOrbit> orbits;
    for (const auto& o : s.orbits()) orbits.push_back({o.frac.times(k), o.mult});
    // k is odd whenever -1 occurs, so the +-1 eigenspaces and their labels are unchanged.
    return SemisimpleClass(s.group(), orbits, s.minus_type(), s.plus_type());
}

CycSubfield galois_stabilizer(const SemisimpleClass& s) {
    CycSubfield out;
    out.d = order_of(s);
    if (out.d == 1) {
        out.stab = {0};
        return out;
    }
    for (i64 k = 1; k < out.d; ++k) {
        if (gcd(k, out.d) != 1) continue;
        if (power_class(s, k) == s) out.stab.push_back(k);
    }
    return out;
}

SemisimpleClass sigma_image(const SemisimpleClass& s, const SigmaData& sigma) {
    if (sigma.m % order_of(s) != 0) throw std::invalid_argument("sigma modulus is not a multiple of the order of s");
    return power_class(s, sigma.k);
}

bool o_pprime_member(const GroupSpec& g, int b, bool central) {
    if (g.family != Family::SOeven) throw std::invalid_argument("O^{p'} membership is modelled for so-even only");
    if (b < 0 || b > g.n) throw std::invalid_argument("b out of range");
    if (b == 0) return true;
    const int e = central ? g.n : b;
    return mod(powmod(g.q, e, 4), 4) == mod(g.eps_twist, 4);
}

bool o_pprime_member(const SemisimpleClass& s) {
    const GroupSpec& g = s.group();
    if (!s.is_involution()) throw std::invalid_argument("O^{p'} membership needs s^2 = 1");
    const int b = s.mult_minus() / 2;
    if (b == 0) return true;
    const bool central = s.mult_plus() == 0;
    const bool standard = central || s.minus_type() == g.eps_twist;
    // Exactly one of the two rational classes in the geometric class lies in O^{p'}.
    return o_pprime_member(g, b, central) == standard;
}

bool k_group_nontrivial(const GroupSpec& g) {
    return g.family == Family::SOeven && mod(powmod(g.q, g.n, 4), 4) == mod(g.eps_twist, 4);
}

std::string to_string(KGAction a) {
    switch (a) {
        case KGAction::invariant: return "invariant";
        case KGAction::moved: return "moved";
        case KGAction::series_moved: return "series-moved";
    }
    return "?";
}

static void require_kg(const GroupSpec& g, const SemisimpleClass& s) {
    if (!(s.group() == g)) throw std::invalid_argument("class belongs to a different group");
    if (!k_group_nontrivial(g)) throw std::invalid_argument("K(G^F) is trivial for this group");
    if (!s.is_involution()) throw std::invalid_argument("s must satisfy s^2 = 1");
}

KGAction kg_invariance(const GroupSpec& g, const SemisimpleClass& s) {
    require_kg(g, s);
    if (o_pprime_member(s) || s.mult_plus() == s.mult_minus()) return KGAction::invariant;
    return KGAction::series_moved;
}

KGAction kg_invariance_torus(const GroupSpec& g, const SemisimpleClass& s, bool principal, bool trivial_on_last_torus) {
    require_kg(g, s);
    const bool member = o_pprime_member(s);
    if (!member && s.mult_plus() != s.mult_minus()) return KGAction::series_moved;
    if (g.eps_twist == 1 || !principal) return member ? KGAction::invariant : KGAction::moved;
    if (member || (mod(g.q, 4) == 1 && trivial_on_last_torus)) return KGAction::invariant;
    return KGAction::moved;
}

std::vector<SemisimpleClass> enumerate_classes(const GroupSpec& g, i64 max_d) {
    if (g.n > 3 || g.q > 13) throw BudgetExceeded("enumerate_classes is limited to n <= 3 and q <= 13");
    if (g.family == Family::GL) throw std::invalid_argument("enumerate_classes: family not modelled");
    if (max_d < 1) throw std::invalid_argument("max_d must be positive");

    // Inversion-closed building blocks: an orbit equal to its inverse, or an orbit with its inverse.
    struct Block {
        std::vector<Frac> reps;
        int dim;
    };
    std::vector<Block> blocks;
    for (i64 d = 1; d <= max_d; ++d) {
        if (d % g.p() == 0) continue;
        for (i64 a = 0; a < d; ++a) {
            if (gcd(a, d) != 1 && !(a == 0 && d == 1)) continue;
            Frac f(a, d);
            if (!(canonical_rep(f, g.q) == f)) continue;
            Frac inv = canonical_rep(f.negated(), g.q);
            int size = orbit_size(f, g.q);
            if (inv == f) blocks.push_back({{f}, size});
            else if (f < inv) blocks.push_back({{f, inv}, 2 * size});
        }
    }

    const int dim = g.dim_v_dual();
    std::vector<SemisimpleClass> out;
    std::vector<int> mults(blocks.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == blocks.size()) {
            if (left != 0) return;
            std::vector<EigOrbit> orbits;
            i64 order = 1;
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                if (!mults[j]) continue;
                for (const auto& f : blocks[j].reps) {
                    orbits.push_back({f, mults[j]});
                    order = lcm(order, f.d);
                }
            }
            if (order > max_d) return;
            std::vector<std::optional<int>> labels{std::nullopt, 1, -1};
            for (auto minus : labels)
                for (auto plus : labels) {
                    try {
                        out.emplace_back(g, orbits, minus, plus);
                    } catch (const std::invalid_argument&) {
                    }
                }
            return;
        }
        for (int mlt = left / blocks[i].dim; mlt >= 0; --mlt) {
            mults[i] = mlt;
            rec(i + 1, left - mlt * blocks[i].dim);
        }
        mults[i] = 0;
    };
    rec(0, dim);

    auto key = [](const SemisimpleClass& s) {
        std::vector<i64> k{order_of(s)};
        for (const auto& o : s.orbits()) {
            k.push_back(o.frac.d);
            k.push_back(o.frac.a);
            k.push_back(o.mult);
        }
        k.push_back(s.minus_type().value_or(0));
        k.push_back(s.plus_type().value_or(0));
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

}  // namespace charfield
