#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithsite/topology.hpp"

namespace arithsite {

enum class SuiteId {
    Heyting,
    Oracle,
    Action,
    Grothendieck,
    Topologies,
    Sheaves,
    SkewFrame,
    SkewHeyting,
    Bigcell,
    All,
};

std::optional<SuiteId> suite_from_name(std::string_view name);
std::string suite_name(SuiteId id);
std::vector<std::string> suite_names();

// Sampling parameters. An unset case count (and zero generator/value
// bounds) mean "use the suite's default"; an explicit zero case count is a
// vacuous run.
struct SuiteBudget {
    std::optional<std::uint64_t> cases;
    std::uint64_t seed = 42;
    unsigned max_generators = 0;
    std::uint64_t max_value = 0;
    unsigned prime_budget = kDefaultPrimeBudget;
};

struct LawResult {
    std::string law;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> counterexamples; // first few, as CLI literals
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;

    std::uint64_t total_cases() const;
    std::uint64_t total_violations() const;
    bool ok() const { return total_violations() == 0; }
    // Deterministic rendering: same seed and budget give identical bytes.
    std::string to_string() const;
};

// Runs the named suite of executable laws. Deterministic for a fixed budget;
// a violation-free report certifies the sampled instances only.
SuiteReport run_suite(SuiteId id, const SuiteBudget& budget);

} // namespace arithsite
