#pragma once

/* Shared glue between the command-line tool and the python bindings: both
 * speak text in, text out, on top of the exact kernel. */

#include <string>

#include "cremona/scenario.hpp"
#include "cremona/textio.hpp"

namespace cremona {

/* A map file is a scenario-format file defining exactly one map; rings and
 * named expressions are allowed and resolvable from expression arguments. */
Scenario load_single_map_file(const std::string& path);

const CremonaMap& only_map(const Scenario& sc);

/* Resolver that looks expression names up in a loaded scenario, accepting
 * only values living in `ring`. */
NameResolver scenario_resolver(const Scenario& sc, const RingPtr& ring);

/* Resultant of two polynomials given as text, eliminating `var`.  The
 * ambient ring over the rationals is inferred from the identifiers
 * appearing in the two polynomials (plus `var` itself). */
Polynomial resultant_from_texts(const std::string& var, const std::string& a,
                                const std::string& b);

} // namespace cremona
