#include "charfield/powermaps.hpp"

#include <stdexcept>

namespace charfield {

RootType parse_root_type(const std::string& s) {
    if (s == "A") return RootType::A;
    if (s == "B") return RootType::B;
    if (s == "C") return RootType::C;
    if (s == "D") return RootType::D;
    if (s == "E6") return RootType::E6;
    if (s == "E7") return RootType::E7;
    if (s == "E8") return RootType::E8;
    if (s == "F4") return RootType::F4;
    if (s == "G2") return RootType::G2;
    throw std::invalid_argument("unsupported root system type: " + s);
}

FundImage rho_fundamental_image(RootType type, int n) {
    FundImage out{type, 0, 0};
    const int m = n / 2, eps = n % 2;
    switch (type) {
        case RootType::A:
            if (n < 1) break;
            // A_{2m+1}: the class of rho is the middle coweight, number m+1.
            out.coefficient = eps;
            out.index = eps ? m + 1 : 0;
            return out;
        case RootType::B:
            if (n < 2) break;
            out.coefficient = m + eps;
            out.index = 1;
            return out;
        case RootType::C:
            if (n < 2) break;
            out.coefficient = 1;
            out.index = n;
            return out;
        case RootType::D:
            if (n < 3) break;
            // rho = (n-1, ..., 1, 0) has coordinate sum n(n-1)/2, of the parity of m.
            out.coefficient = m;
            out.index = 1;
            return out;
        case RootType::E7:
            out.coefficient = 1;
            out.index = 7;
            return out;
        case RootType::E6:
        case RootType::E8:
        case RootType::F4:
        case RootType::G2:
            return out;
    }
    throw std::invalid_argument("rank out of range for root system type");
}

static void require_coprime(const GroupSpec& g, i64 k) {
    if (mod(k, g.p()) == 0) throw std::invalid_argument("k must be coprime to p");
}

bool regular_rational(const GroupSpec& g, i64 k) {
    require_coprime(g, k);
    if (g.family != Family::Sp) return true;
    return is_square_in_Fq(mod(k, g.p()), g.q);
}

static int family_eps(Family f) {
    switch (f) {
        case Family::Sp: return 1;
        case Family::SOodd:
        case Family::SOeven: return 0;
        case Family::GL: return -1;
    }
    return -1;
}

static void require_matching(const GroupSpec& g, const EpsPartition& mu) {
    if (mu.base().n_total() != g.dim_v())
        throw std::invalid_argument("partition size does not match dim V");
    int eps = family_eps(g.family);
    if (eps >= 0 && mu.eps() != eps) throw std::invalid_argument("partition parity does not match the family");
}

static bool even_parts_even_multiplicity(const Partition& p) {
    for (auto [m, r] : p.multiplicities())
        if (m % 2 == 0 && r % 2 != 0) return false;
    return true;
}

bool unipotent_rational(const GroupSpec& g, const EpsPartition& mu, i64 k) {
    require_coprime(g, k);
    require_matching(g, mu);
    if (g.family != Family::Sp) return true;
    return even_parts_even_multiplicity(mu.base()) || is_square_in_Fq(mod(k, g.p()), g.q);
}

std::string unipotent_rational_criterion(const GroupSpec& g, const EpsPartition& mu, i64 k) {
    require_coprime(g, k);
    require_matching(g, mu);
    if (g.family == Family::GL) return "general linear: component groups trivial";
    if (g.family != Family::Sp) return "special orthogonal: every unipotent element is rational";
    if (even_parts_even_multiplicity(mu.base())) return "symplectic: every even part has even multiplicity";
    if (g.q_square()) return "symplectic: q is a square";
    return "symplectic: k mod p is a square in F_q iff rational";
}

}  // namespace charfield
