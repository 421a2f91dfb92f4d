#pragma once

#include <cstdint>

#include "cremona/scenario.hpp"

namespace cremona {

struct StepRecord {
    std::string id;
    std::string op;
    std::string display;
    bool pass = false;
    std::string detail; // witness or summary, truncated for large objects
    long duration_ms = 0;
};

struct VerificationReport {
    std::string id;
    bool pass = false;
    long duration_ms = 0;
    std::vector<StepRecord> steps;
};

/* One internal-inconsistency determination: which of several variants of a
 * displayed formula is the consistent one, with the evidence retained. */
struct ErrataFinding {
    std::string id;
    bool conclusive = false;
    std::string verdict;
    std::vector<std::string> evidence;
};

struct ErrataReport {
    bool pass = false; // every finding conclusive
    long duration_ms = 0;
    std::vector<StepRecord> steps;
    std::vector<ErrataFinding> findings;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    bool all_pass = false;
    long duration_ms = 0;
    std::vector<VerificationReport> sections;
    ErrataReport errata;
    VerificationReport properties;
    std::vector<std::string> missing_displays;
};

/* Run every step of a scenario; steps never abort the run and a thrown
 * error inside a step records a failing step instead of propagating.
 * Verdicts are deterministic: every check is exact. */
VerificationReport run_scenario(const Scenario& sc);

/* Load and run one named section from `dir`. */
VerificationReport run_section(const std::string& dir, const std::string& section);

/* Compare the variant readings of formulas the source displays
 * inconsistently and determine which variant is the internally consistent
 * one.  The determination is computed, not assumed. */
ErrataReport detect_errata(const std::string& dir);

/* Randomized self-checks of the algebra kernel: ring axioms, gcd laws,
 * substitution homomorphism, resultants against the Sylvester determinant,
 * screen-vs-exact equality agreement, text round-trips, and mutation
 * sensitivity of the scenario data in `dir`.  Verdicts do not depend on
 * the seed; the seed only varies the sampled cases. */
VerificationReport run_properties(const std::string& dir, std::uint64_t seed);

/* Full suite: all sections, errata, properties, display coverage. */
SuiteReport run_all(const std::string& dir, std::uint64_t seed);

/* Display tags that must be covered by the scenario steps plus the errata
 * evidence, one per formula the source displays. */
const std::vector<std::string>& required_display_tags();

} // namespace cremona
