// Randomized self-checks: seeded property suites over small random biwords
// (at most 10 columns, alphabets bounded by 5).  Each suite exercises one
// slice of the library against independent computations of the same values;
// on the first failure the instance is shrunk column by column and a
// reproducer is printed.
//
// Suites: "rsk", "duality", "crystal", "lusztig", or "all".

#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ptabkit/word.hpp"

namespace ptab {

struct CheckOptions {
    std::uint64_t seed = 1;
    long long count = 500;       // random instances per suite
    std::string suite = "all";
    bool verbose = false;
};

struct CheckReport {
    long long instances = 0;
    long long assertions = 0;
    bool ok = true;
    std::string failed_suite;
    std::string failed_property;
    std::string reproducer;  // minimized biword text ("top/bottom")
};

// Runs the requested suites, logging progress to `out`.  Returns a report;
// report.ok == false carries the minimized counterexample.  Throws
// ptab::error(check_failure) only for an unknown suite name.
CheckReport run_checks(const CheckOptions& opts, std::ostream& out);

// Deterministic random biword: k <= 10 columns, top letters in {1..m<=5},
// bottom letters in {1..n<=5}, standardized.  Used by the suites and by
// property tests.
Biword random_biword(std::uint64_t& state);

// xorshift-style step shared by the random generators (stable across
// platforms, unlike the standard distributions).
std::uint64_t rng_next(std::uint64_t& state);

}  // namespace ptab
