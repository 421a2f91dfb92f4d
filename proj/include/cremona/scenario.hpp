#pragma once

#include <map>
#include <string>
#include <vector>

#include "cremona/towers.hpp"

namespace cremona {

/* One verification step: an operation name plus string arguments that the
 * runner resolves against the scenario's named entities.  `display` ties
 * the step to a displayed formula for coverage accounting. */
struct ScenarioStep {
    std::string id;
    std::string op;
    std::string display;
    std::map<std::string, std::string> args;
    int line = 0;
};

/* A scenario file: rings, named expressions, maps, changes of variables,
 * rewrites, and the steps to run.  All formulas live here as text in the
 * file; the loader parses them once into exact objects. */
struct Scenario {
    std::string id;
    std::string path;
    mpz_class characteristic;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, RationalFunction> exprs;
    std::map<std::string, CremonaMap> maps;
    std::map<std::string, ChangeOfVariables> covs;
    std::map<std::string, Substitution> rewrites;
    std::vector<ScenarioStep> steps;

    const RingPtr& ring(const std::string& name) const;
    const RationalFunction& expr(const std::string& name) const;
    const CremonaMap& map(const std::string& name) const;
    const ChangeOfVariables& cov(const std::string& name) const;
    const Substitution& rewrite(const std::string& name) const;
};

Scenario load_scenario(const std::string& path);

/* Directory that verify-paper reads scenario files from: the environment
 * variable CREMONA_SCENARIO_DIR when set, otherwise ./scenarios when it
 * exists, otherwise the source tree's scenario directory. */
std::string default_scenario_dir();

/* The five scenario files every full run loads, in order. */
const std::vector<std::string>& scenario_sections();

} // namespace cremona
