// Acceptance suite: worked-example reproduction, property suites and the
// quadrature criteria, each at its pinned tolerance. Prints one line per
// criterion and exits non-zero if anything failed.

#include <cstdio>

#include "slicealg/verify.hpp"

int main() {
    slicealg::verify::Options opts;
    const auto suite = slicealg::verify::run_acceptance(opts);
    size_t failed = 0;
    for (const auto& r : suite) {
        std::printf("%-4s %-42s checked=%-6zu failures=%-4zu max_err=%.3e%s%s\n",
                    r.ok() ? "PASS" : "FAIL", r.name.c_str(), r.checked, r.failures, r.max_err,
                    r.note.empty() ? "" : "  note: ", r.note.c_str());
        if (!r.ok()) ++failed;
    }
    std::printf("%zu/%zu acceptance properties passed\n", suite.size() - failed, suite.size());
    return failed == 0 ? 0 : 1;
}
