#include "charfield/group.hpp"

#include <stdexcept>

namespace charfield {

std::string family_name(Family f) {
    switch (f) {
        case Family::Sp: return "sp";
        case Family::SOodd: return "so-odd";
        case Family::SOeven: return "so-even";
        case Family::GL: return "gl";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "sp") return Family::Sp;
    if (s == "so-odd" || s == "soodd") return Family::SOodd;
    if (s == "so-even" || s == "soeven") return Family::SOeven;
    if (s == "gl") return Family::GL;
    throw std::invalid_argument("unknown family: " + s);
}

GroupSpec::GroupSpec(Family family_, int n_, i64 q_, int eps_twist_)
    : family(family_), n(n_), q(q_), eps_twist(eps_twist_) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    auto pp = prime_power(q);
    if (pp.p == 2) throw std::invalid_argument("q must be odd");
    p_ = pp.p;
    a_ = pp.a;
    if (eps_twist != 1 && eps_twist != -1) throw std::invalid_argument("twist must be +1 or -1");
    if (family != Family::SOeven && eps_twist != 1)
        throw std::invalid_argument("twist is only meaningful for so-even");
}

int GroupSpec::dim_v() const {
    switch (family) {
        case Family::Sp: return 2 * n;
        case Family::SOodd: return 2 * n + 1;
        case Family::SOeven: return 2 * n;
        case Family::GL: return n;
    }
    return 0;
}

Family GroupSpec::dual_family() const {
    switch (family) {
        case Family::Sp: return Family::SOodd;
        case Family::SOodd: return Family::Sp;
        case Family::SOeven: return Family::SOeven;
        case Family::GL: return Family::GL;
    }
    return family;
}

int GroupSpec::dim_v_dual() const {
    switch (family) {
        case Family::Sp: return 2 * n + 1;
        case Family::SOodd: return 2 * n;
        case Family::SOeven: return 2 * n;
        case Family::GL: return n;
    }
    return 0;
}

}  // namespace charfield
