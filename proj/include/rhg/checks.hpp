#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rhg {

struct VerifyOptions {
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string out_dir = ".";
};

// runs the deterministic self-check suite, printing one PASS/FAIL line per
// check to `out` and timing diagnostics to `diag`; writes the canonical
// artifact files into out_dir; returns true iff every check passed.
// Everything printed to `out` and every file written is identical across
// worker counts and repeated runs with the same seed.
bool run_verify_suite(const VerifyOptions& opts, std::ostream& out, std::ostream& diag);

} // namespace rhg
