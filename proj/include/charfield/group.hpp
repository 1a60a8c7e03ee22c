#pragma once

#include <string>

#include "charfield/galarith.hpp"

namespace charfield {

enum class Family { Sp, SOodd, SOeven, GL };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// A finite classical group G^F: family, rank n, q = p^a, and the twist of SO-even.
struct GroupSpec {
    Family family = Family::Sp;
    int n = 1;
    i64 q = 3;
    int eps_twist = 1;

    GroupSpec() = default;
    GroupSpec(Family family, int n, i64 q, int eps_twist = 1);

    i64 p() const { return p_; }
    int a() const { return a_; }
    bool q_square() const { return a_ % 2 == 0; }
    int dim_v() const;
    // Dimension of the natural module of the dual group.
    int dim_v_dual() const;
    // Family of the dual group (Sp <-> SOodd, SOeven self-dual).
    Family dual_family() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    i64 p_ = 3;
    int a_ = 1;
};

}  // namespace charfield
