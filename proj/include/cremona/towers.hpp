#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/map.hpp"

namespace cremona {

/* A change of generators between two function fields over the same
 * coefficient field: `forward` gives each new generator in terms of the old
 * ring's variables; `backward` (optional, empty when unknown) gives each
 * old variable in terms of the new ones. */
struct ChangeOfVariables {
    RingPtr old_ring;
    RingPtr new_ring;
    std::vector<RationalFunction> forward;
    std::vector<RationalFunction> backward;
};

void validate(const ChangeOfVariables& cov);

/* Do the new generators generate: substituting forward images into each
 * backward expression must return the corresponding old variable. */
struct GenerationCheck {
    bool pass = true;
    std::vector<RationalFunction> roundtrips; // one per old variable
};
GenerationCheck verify_generation(const ChangeOfVariables& cov);

/* Does the relation (a polynomial in the new generators) vanish identically
 * once the forward images are substituted in. */
struct RelationCheck {
    bool pass = false;
    Polynomial residue; // numerator of the substituted relation; zero on pass
};
RelationCheck verify_relation(const Polynomial& relation, const ChangeOfVariables& cov);

/* Adjoined square root t with t^2 = linear*t + constant (both polynomials
 * in the ring without t). */
struct QuadraticModulus {
    std::string symbol;
    Polynomial linear;
    Polynomial constant;
};

/* Replace t^2 by linear*t + constant until the polynomial is t-linear. */
Polynomial quadratic_reduce(const Polynomial& p, std::size_t t_index,
                            const Polynomial& linear, const Polynomial& constant);

/* Certify that a relation follows another through a rewrite of generators:
 * substituting `rewrite` into old_relation, reducing by the optional
 * quadratic modulus, and clearing denominators must leave exactly
 * unit * monomial * new_relation.  On failure `residue` is the nonzero
 * obstruction (the surviving root-linear part, or the cleared numerator
 * that failed to match). */
struct TransportResult {
    bool pass = false;
    mpq_class unit;
    std::vector<long> monomial; // exponents over new_ring's variables
    Polynomial residue;
    std::string note;
};
TransportResult transport_relation(const Polynomial& old_relation,
                                   const Substitution& rewrite,
                                   const Polynomial& new_relation,
                                   const std::optional<QuadraticModulus>& root);

/* Implicit relation among the new generators of a parametrized tower: from
 * the forward images g_j = F_j(x), eliminate the old variables (last one
 * first) by iterated resultants.  Requires exactly one more generator than
 * old variables; extraneous factors from resultants are possible, so
 * callers check divisibility by an expected relation rather than equality. */
Polynomial eliminate(const ChangeOfVariables& cov);

/* Solve a relation of degree exactly one in `var` for that variable.
 * The result lives in the same ring but does not use `var`. */
RationalFunction solve_linear_variable(const Polynomial& relation,
                                       const std::string& var);

/* Is the expression fixed by the map's pullback. */
struct InvarianceCheck {
    bool pass = false;
    RationalFunction pulled; // canonical pullback; equals the input iff pass
};
InvarianceCheck verify_invariance(const CremonaMap& m, const RationalFunction& e);

/* Data exhibiting a degree-2 descent: sigma moves t, sigma is involutive
 * on t, every named invariant is fixed, and t's trace and norm equal the
 * given expressions in the invariants.  `trace` and `norm` live in
 * `invariant_ring`, whose variables name the invariants in order. */
struct QuadraticDescent {
    RationalFunction t;
    std::vector<std::pair<std::string, RationalFunction>> invariants;
    RingPtr invariant_ring;
    RationalFunction trace;
    RationalFunction norm;
};

struct DescentCheck {
    bool t_moved = false;
    bool t_involutive = false;
    bool invariants_fixed = false;
    bool trace_matches = false;
    bool norm_matches = false;
    RationalFunction sigma_t;
    bool pass() const {
        return t_moved && t_involutive && invariants_fixed && trace_matches &&
               norm_matches;
    }
};
DescentCheck verify_quadratic_descent(const QuadraticDescent& d, const CremonaMap& m);

/* Substitute a partial assignment (a locus) into a relation and its chosen
 * partial derivatives; unassigned variables stay themselves. */
struct SingularLocusCheck {
    bool relation_vanishes = false;
    std::vector<std::pair<std::string, bool>> zero_partials;
    std::vector<std::pair<std::string, RationalFunction>> other_partials;
    bool pass() const {
        if (!relation_vanishes) return false;
        for (const auto& [name, ok] : zero_partials)
            if (!ok) return false;
        return true;
    }
};
SingularLocusCheck
verify_singular_substitution(const Polynomial& relation, const Substitution& locus,
                             const std::vector<std::string>& require_zero_partials);

} // namespace cremona
