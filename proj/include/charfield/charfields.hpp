#pragma once

#include "charfield/galarith.hpp"
#include "charfield/series.hpp"
#include "charfield/weylb.hpp"

namespace charfield {

// Q_s, possibly with sqrt(omega p) adjoined.
struct CharField {
    CycSubfield base;
    bool adjoin_sqrt_omega_p = false;
    i64 p = 3;

    i64 degree() const { return base.degree() * (adjoin_sqrt_omega_p ? 2 : 1); }
    bool real() const;
    // Whether zeta -> zeta^k fixes the field pointwise.
    bool fixed_by(const SigmaData& sigma) const;
};

CharField char_field(const GroupSpec& g, const SemisimpleClass& s);
bool is_real_series(const GroupSpec& g, const SemisimpleClass& s);
bool cuspidal_sp_fixed(const GroupSpec& g, const SemisimpleClass& s, const SigmaData& sigma);

// Number of irreducible characters of the Lusztig series E(SL_2(q), s).
int rank1_series_size(const SemisimpleClass& s);
i64 predicted_fixed_count_rank1(i64 q, i64 k);

// For so-even principal series: whether W(lambda) is the full Weyl group W_n.
bool diagonal_stabilizer_full(const SeriesDescriptor& desc);

}  // namespace charfield
