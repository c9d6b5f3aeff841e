// Acceptance suite driver: runs the verification criteria at full scale and
// prints one PASS/FAIL line per criterion. Exit code is nonzero when any
// non-soft criterion fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "psilcm/suite.hpp"

int main(int argc, char** argv) {
    int only = 0;
    psilcm::SuiteScale scale = psilcm::SuiteScale::full;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--quick") == 0) {
            scale = psilcm::SuiteScale::quick;
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--quick]\n");
            return 2;
        }
    }
    const auto results = psilcm::run_acceptance(scale, only);
    for (const auto& c : results) {
        std::printf("%s criterion %2d: %s  [%s]\n",
                    c.pass ? "PASS" : (c.soft ? "WARN" : "FAIL"), c.id, c.name.c_str(),
                    c.detail.c_str());
    }
    return psilcm::suite_passed(results) ? 0 : 1;
}
