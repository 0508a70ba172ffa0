#pragma once

#include <cstdint>
#include <string>

#include "polygeo/json_io.hpp"

namespace polygeo {

struct SuiteResult {
    Json summary;
    bool all_passed = false;
};

/// Seeded property suites. Every failure entry carries the CLI command that
/// reproduces the case. Summaries are deterministic byte-for-byte given the
/// same seed.
SuiteResult suite_gauss_lucas(std::uint64_t seed, long trials = 10000);
SuiteResult suite_roundtrip(std::uint64_t seed, int per_form = 1000);
SuiteResult suite_claim(std::uint64_t seed, int betas_per_l = 20);
SuiteResult suite_dnk_dichotomy(std::uint64_t seed, int starts = 500, long random_evals = 10000);
SuiteResult suite_adversarial(std::uint64_t seed);

/// Dispatch by name: gauss-lucas | roundtrip | claim | dnk-dichotomy |
/// adversarial. Throws DomainError for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace polygeo
