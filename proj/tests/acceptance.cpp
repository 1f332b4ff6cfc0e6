#include "tpos/verify.hpp"

#include <cstdio>

// Prints one PASS/FAIL line per battery criterion; nonzero exit on failure.
int main() {
    int failed = 0;
    for (const auto& row : tpos::run_verification()) {
        if (row.pass) {
            std::printf("PASS %-22s (%zu checks) %s\n", row.name.c_str(), row.checks,
                        row.detail.c_str());
        } else {
            ++failed;
            std::printf("FAIL %-22s %s\n", row.name.c_str(), row.detail.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
