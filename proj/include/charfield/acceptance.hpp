#pragma once

#include <string>
#include <vector>

namespace charfield::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    int workers = 1;
    long long budget = 10'000'000;
};

CriterionResult gauss_suite(const Options& opt);
CriterionResult weyl_length_suite(const Options& opt);
CriterionResult power_map_oracle_suite(const Options& opt);
CriterionResult wavefront_suite(const Options& opt);
CriterionResult gamma_delta_grid(const Options& opt);
CriterionResult brauer_suite(const Options& opt);
CriterionResult sl2_field_suite(const Options& opt);

// Suite names: gauss, weyl (alias relweyl), powmap, wavefront, gammadelta, brauer, fields, all.
std::vector<CriterionResult> run_suite(const std::string& name, const Options& opt);
std::vector<std::string> suite_names();

}  // namespace charfield::acceptance
