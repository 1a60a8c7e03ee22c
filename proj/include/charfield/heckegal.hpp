#pragma once

#include <string>

#include "charfield/galarith.hpp"
#include "charfield/weylb.hpp"

namespace charfield {

// A linear character of C(lambda), of order at most 2, given by its value on the generator.
struct CSign {
    int c_order = 1;
    int value = 1;
    friend bool operator==(const CSign&, const CSign&) = default;
};

CSign gamma(const SeriesDescriptor& desc, const SigmaData& sigma);
CSign delta_prime(const SeriesDescriptor& desc, const SigmaData& sigma);
CSign gamma_delta(const SeriesDescriptor& desc, const SigmaData& sigma);

// Closed forms for sigma in H_ell, computed without passing through h_to_sigma.
CSign gamma_delta_H(const SeriesDescriptor& desc, const HElement& h);
CSign gamma_H(const SeriesDescriptor& desc, const HElement& h);

enum class HCAction { identity, twist };
std::string to_string(HCAction a);

HCAction hc_series_action(const SeriesDescriptor& desc, const SigmaData& sigma);

}  // namespace charfield
