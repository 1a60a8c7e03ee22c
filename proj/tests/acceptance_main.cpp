// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <thread>

#include "charfield/acceptance.hpp"
#include "charfield/oracle.hpp"

int main() {
    charfield::acceptance::Options opt;
    opt.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    opt.budget = charfield::oracle::default_budget();
    int failed = 0;
    for (const auto& r : charfield::acceptance::run_suite("all", opt)) {
        std::printf("%s criterion %d (%s) [%.2f s]: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
