#include "charfield/heckegal.hpp"

#include <stdexcept>

namespace charfield {

namespace {

bool odd_generator(const RelWeylData& rel) {
    return rel.c_order == 2 && rel.c_generator_length_parity == Parity::odd;
}

bool is_orthogonal(const SeriesDescriptor& desc) {
    return desc.group.family == Family::SOodd || desc.group.family == Family::SOeven;
}

}  // namespace

CSign gamma(const SeriesDescriptor& desc, const SigmaData& sigma) {
    const auto rel = relative_weyl(desc);
    if (rel.c_order == 1) return {1, 1};
    const GroupSpec& g = desc.group;
    if (g.q_square() || !odd_generator(rel)) return {2, 1};
    return {2, sqrt_p_sign(sigma, g.p())};
}

CSign delta_prime(const SeriesDescriptor& desc, const SigmaData& sigma) {
    const auto rel = relative_weyl(desc);
    if (rel.c_order == 1) return {1, 1};
    if (is_orthogonal(desc)) return {2, 1};
    // Sp: the extension value on the generator squares to (-1)^((q-1)/2).
    if (mod(desc.group.q, 4) == 1) return {2, 1};
    return {2, mod(sigma.k, 4) == 1 ? 1 : -1};
}

CSign gamma_delta(const SeriesDescriptor& desc, const SigmaData& sigma) {
    const CSign g = gamma(desc, sigma);
    const CSign d = delta_prime(desc, sigma);
    CSign out{g.c_order, g.value * d.value};
    if (desc.group.family == Family::Sp && out.c_order == 2) {
        const int alpha = desc.group.q_square() ? 1 : sqrt_omega_p_sign(sigma, desc.group.p());
        if (alpha != out.value) throw std::logic_error("gamma_delta disagrees with the sign on sqrt(omega p)");
    }
    return out;
}

CSign gamma_H(const SeriesDescriptor& desc, const HElement& h) {
    const auto rel = relative_weyl(desc);
    if (rel.c_order == 1) return {1, 1};
    const GroupSpec& g = desc.group;
    const i64 p = g.p();
    if (h.ell == p) throw std::invalid_argument("H_ell closed forms need ell != p");
    if (g.q_square() || !odd_generator(rel)) return {2, 1};
    if (h.ell != 2) return {2, h.r % 2 == 0 ? 1 : legendre(p, h.ell)};
    const int sign_r = h.r % 2 == 0 ? 1 : -1;
    switch (mod(g.q, 8)) {
        case 1: return {2, 1};
        case 7: return {2, h.i_sign == 1 ? 1 : -1};
        case 3: return {2, h.i_sign == sign_r ? 1 : -1};
        case 5: return {2, sign_r};
    }
    throw std::logic_error("q is odd");
}

CSign gamma_delta_H(const SeriesDescriptor& desc, const HElement& h) {
    if (is_orthogonal(desc)) return gamma_H(desc, h);
    const auto rel = relative_weyl(desc);
    if (rel.c_order == 1) return {1, 1};
    const GroupSpec& g = desc.group;
    const i64 p = g.p();
    if (h.ell == p) throw std::invalid_argument("H_ell closed forms need ell != p");
    if (g.q_square()) return {2, 1};
    if (h.ell != 2) return {2, h.r % 2 == 0 ? 1 : legendre(h.ell, p)};
    const i64 q8 = mod(g.q, 8);
    if (q8 == 1 || q8 == 7) return {2, 1};
    return {2, h.r % 2 == 0 ? 1 : -1};
}

std::string to_string(HCAction a) { return a == HCAction::identity ? "identity" : "twist"; }

HCAction hc_series_action(const SeriesDescriptor& desc, const SigmaData& sigma) {
    if (desc.group.family == Family::SOodd) return HCAction::identity;
    return gamma_delta(desc, sigma).value == 1 ? HCAction::identity : HCAction::twist;
}

}  // namespace charfield
