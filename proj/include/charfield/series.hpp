#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charfield/galarith.hpp"
#include "charfield/group.hpp"

namespace charfield {

// Element a/d of Q/Z, reduced, 0 <= a < d; the eigenvalue 1 is 0/1.
struct Frac {
    i64 a = 0;
    i64 d = 1;

    Frac() = default;
    Frac(i64 a, i64 d);

    Frac times(i64 k) const { return Frac(a * k, d); }
    Frac negated() const { return Frac(-a, d); }

    friend bool operator==(const Frac&, const Frac&) = default;
    friend auto operator<=>(const Frac& x, const Frac& y) {
        if (x.d != y.d) return x.d <=> y.d;
        return x.a <=> y.a;
    }
};

std::string to_string(const Frac& f);
Frac parse_frac(const std::string& s);

// Frobenius orbit {a q^i / d} of the eigenvalue.
std::vector<Frac> frobenius_orbit(const Frac& f, i64 q);
Frac canonical_rep(const Frac& f, i64 q);

struct EigOrbit {
    Frac frac;
    int mult = 1;
    friend bool operator==(const EigOrbit&, const EigOrbit&) = default;
};

// Semisimple class of the dual group G*, given by its eigenvalue spectrum on the
// natural module of G* and the orthogonal types of the +-1 eigenspaces.
class SemisimpleClass {
public:
    SemisimpleClass(GroupSpec group, std::vector<EigOrbit> orbits, std::optional<int> minus_type = std::nullopt,
                    std::optional<int> plus_type = std::nullopt);

    const GroupSpec& group() const { return group_; }
    const std::vector<EigOrbit>& orbits() const { return orbits_; }
    std::optional<int> minus_type() const { return minus_type_; }
    std::optional<int> plus_type() const { return plus_type_; }

    // Multiplicity of a single eigenvalue (each member of an orbit has the orbit's multiplicity).
    int mult_of(const Frac& f) const;
    int mult_plus() const { return mult_of(Frac(0, 1)); }
    int mult_minus() const { return mult_of(Frac(1, 2)); }
    bool is_involution() const;
    bool is_identity() const { return mult_plus() == group_.dim_v_dual(); }

    friend bool operator==(const SemisimpleClass&, const SemisimpleClass&) = default;

private:
    GroupSpec group_;
    std::vector<EigOrbit> orbits_;
    std::optional<int> minus_type_;
    std::optional<int> plus_type_;
};

std::string to_string(const SemisimpleClass& s);

struct CycSubfield {
    i64 d = 1;
    std::vector<i64> stab;

    i64 degree() const;
    bool contains(i64 k) const;
    bool contains_minus_one() const { return contains(d - 1); }
    friend bool operator==(const CycSubfield&, const CycSubfield&) = default;
};

i64 order_of(const SemisimpleClass& s);
CycSubfield galois_stabilizer(const SemisimpleClass& s);
SemisimpleClass sigma_image(const SemisimpleClass& s, const SigmaData& sigma);
// The class of s^k for k coprime to the order of s.
SemisimpleClass power_class(const SemisimpleClass& s, i64 k);

// Membership of the involution with (-1)-eigenspace of dimension 2b in O^{p'}(G^F),
// for the representative d_{a+1}(-1) ... d_n(-1) of the standard torus.
bool o_pprime_member(const GroupSpec& g, int b, bool central);
// Same, for a labelled class of G* = SO_2n; the label of the (-1)-eigenspace
// selects which of the two rational classes is meant.
bool o_pprime_member(const SemisimpleClass& s);

bool k_group_nontrivial(const GroupSpec& g);

enum class KGAction { invariant, moved, series_moved };
std::string to_string(KGAction a);

KGAction kg_invariance(const GroupSpec& g, const SemisimpleClass& s);
// Principal-series refinement: whether lambda in Irr(T^F) with lambda^2 = 1 is
// invariant under the nontrivial element of K(G^F).
KGAction kg_invariance_torus(const GroupSpec& g, const SemisimpleClass& s, bool principal, bool trivial_on_last_torus);

std::vector<SemisimpleClass> enumerate_classes(const GroupSpec& g, i64 max_d);

}  // namespace charfield
