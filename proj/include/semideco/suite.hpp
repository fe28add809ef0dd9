#ifndef SEMIDECO_SUITE_HPP
#define SEMIDECO_SUITE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semideco/json_io.hpp"
#include "semideco/semidecomp.hpp"

namespace semideco {

/// Seeded configuration of the randomized lemma suites; the seed fully
/// determines every generated instance.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int count = 500;
    int max_points = 8;
};

/// Per-property tally. Asserted properties must end with fail == 0;
/// reported properties only record how often the monitored statement held.
struct PropertyResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    int skipped = 0;  // instances the property does not apply to
};

/// A replayable instance behind a failing or monitored-false property.
struct SuiteFinding {
    std::string property;
    int instance_index = 0;
    Json instance;  // accepted verbatim by the analyze command
    std::string detail;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<PropertyResult> asserted;
    std::vector<PropertyResult> reported;
    std::vector<SuiteFinding> findings;

    bool ok() const;
    Json to_json() const;
};

/// Deterministic generators used by the suite; draws use plain modulo so one
/// seed yields one instance stream everywhere.
RelMatrix random_preorder(std::mt19937_64& rng, int n);
FiniteSpace random_space(std::mt19937_64& rng, int max_points);

/// The instance mix: independent random pre-order as F, random equivalence
/// (a decomposition), the space's own down-sets, or singletons.
SemiDecomposition random_semidecomposition(std::mt19937_64& rng, int max_points);

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace semideco

#endif
