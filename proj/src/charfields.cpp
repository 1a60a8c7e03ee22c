#include "charfield/charfields.hpp"

#include <stdexcept>

namespace charfield {

bool CharField::real() const {
    return base.contains_minus_one() && (!adjoin_sqrt_omega_p || omega_of(p).omega == 1);
}

bool CharField::fixed_by(const SigmaData& sigma) const {
    if (sigma.m % base.d != 0) throw std::invalid_argument("sigma modulus is not a multiple of d");
    if (!base.contains(sigma.k)) return false;
    return !adjoin_sqrt_omega_p || sqrt_omega_p_sign(sigma, p) == 1;
}

static void require_same_group(const GroupSpec& g, const SemisimpleClass& s) {
    if (g.family == Family::GL) throw std::invalid_argument("character fields are not modelled for gl");
    if (!(s.group() == g)) throw std::invalid_argument("class belongs to a different group");
}

CharField char_field(const GroupSpec& g, const SemisimpleClass& s) {
    require_same_group(g, s);
    CharField out;
    out.base = galois_stabilizer(s);
    out.p = g.p();
    out.adjoin_sqrt_omega_p = g.family == Family::Sp && !g.q_square() && s.mult_minus() > 0;
    return out;
}

bool is_real_series(const GroupSpec& g, const SemisimpleClass& s) {
    require_same_group(g, s);
    const bool inverse_conjugate = galois_stabilizer(s).contains_minus_one();
    if (g.family != Family::Sp) return inverse_conjugate;
    return inverse_conjugate && (s.mult_minus() == 0 || mod(g.q, 4) == 1);
}

bool cuspidal_sp_fixed(const GroupSpec& g, const SemisimpleClass& s, const SigmaData& sigma) {
    require_same_group(g, s);
    if (g.family != Family::Sp) throw std::invalid_argument("cuspidal_sp_fixed needs the symplectic family");
    if (!s.is_involution()) throw std::invalid_argument("cuspidal_sp_fixed needs s^2 = 1");
    return s.is_identity() || is_square_in_Fq(sigma.k, g.q);
}

int rank1_series_size(const SemisimpleClass& s) {
    const GroupSpec& g = s.group();
    if (g.family != Family::Sp || g.n != 1) throw std::invalid_argument("series sizes are only known for SL_2");
    // s = 1: trivial and Steinberg; s an involution: two characters per rational class;
    // otherwise C(s) is a torus and the series is a single character.
    if (s.is_identity()) return 2;
    if (s.is_involution()) return 2;
    return 1;
}

i64 predicted_fixed_count_rank1(i64 q, i64 k) {
    const GroupSpec g(Family::Sp, 1, q);
    if (gcd(k, q * (q * q - 1)) != 1) throw std::invalid_argument("k must be coprime to |SL_2(q)|");
    const auto classes = enumerate_classes(g, q + 1);
    i64 m = 4 * g.p();
    for (const auto& s : classes) m = lcm(m, order_of(s));
    const SigmaData sigma(mod(k, m), m);
    i64 count = 0;
    for (const auto& s : classes) {
        const CharField field = char_field(g, s);
        if (field.fixed_by(sigma)) count += rank1_series_size(s);
    }
    return count;
}

bool diagonal_stabilizer_full(const SeriesDescriptor& desc) {
    if (desc.group.family != Family::SOeven || !desc.principal)
        throw std::invalid_argument("defined for so-even principal series only");
    return desc.a == 0 || desc.a == desc.group.n;
}

}  // namespace charfield
