#pragma once

#include <string>

#include "charfield/group.hpp"
#include "charfield/unicombinat.hpp"

namespace charfield {

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

RootType parse_root_type(const std::string& s);

// Image of half the sum of positive coroots in the fundamental group, written as
// coefficient * (fundamental coweight number `index`); coefficient 0 means trivial.
struct FundImage {
    RootType type = RootType::A;
    int coefficient = 0;
    int index = 0;
    bool is_zero() const { return coefficient == 0; }
};

FundImage rho_fundamental_image(RootType type, int n);

bool regular_rational(const GroupSpec& g, i64 k);
bool unipotent_rational(const GroupSpec& g, const EpsPartition& mu, i64 k);

// Which statement decided unipotent_rational; used for reporting.
std::string unipotent_rational_criterion(const GroupSpec& g, const EpsPartition& mu, i64 k);

}  // namespace charfield
