#include <algorithm>

#include "cremona/towers.hpp"

namespace cremona {

void validate(const ChangeOfVariables& cov) {
    if (cov.old_ring->field != cov.new_ring->field)
        throw ring_mismatch("both sides of a change of variables share the field");
    if (cov.forward.size() != cov.new_ring->arity())
        throw error("need one forward image per new generator");
    for (const auto& f : cov.forward)
        if (!(*f.ring() == *cov.old_ring))
            throw ring_mismatch("forward image lives in the wrong ring");
    if (!cov.backward.empty()) {
        if (cov.backward.size() != cov.old_ring->arity())
            throw error("need one backward image per old variable");
        for (const auto& b : cov.backward)
            if (!(*b.ring() == *cov.new_ring))
                throw ring_mismatch("backward image lives in the wrong ring");
    }
}

GenerationCheck verify_generation(const ChangeOfVariables& cov) {
    validate(cov);
    if (cov.backward.empty())
        throw error("generation check needs backward images");
    Substitution s(cov.new_ring, cov.old_ring);
    for (std::size_t i = 0; i < cov.forward.size(); ++i) s.set(i, cov.forward[i]);
    GenerationCheck out;
    out.roundtrips = substitute_many(cov.backward, s);
    for (std::size_t i = 0; i < out.roundtrips.size(); ++i) {
        RationalFunction xi =
            RationalFunction::from_poly(Polynomial::variable(cov.old_ring, i));
        if (!rf_equal(out.roundtrips[i], xi)) out.pass = false;
    }
    return out;
}

RelationCheck verify_relation(const Polynomial& relation, const ChangeOfVariables& cov) {
    validate(cov);
    if (!(*relation.ring() == *cov.new_ring))
        throw ring_mismatch("relation must live in the new generators' ring");
    Substitution s(cov.new_ring, cov.old_ring);
    for (std::size_t i = 0; i < cov.forward.size(); ++i) s.set(i, cov.forward[i]);
    // The image's numerator over its (nonzero) cleared denominator decides
    // vanishing on its own, so the gcd reduction of the full image is never
    // needed; this matters when the relation does NOT vanish.
    auto [num, den] = substitute_fraction(RationalFunction::from_poly(relation), s);
    RelationCheck out;
    out.residue = num.unit_normal();
    out.pass = out.residue.is_zero();
    return out;
}

Polynomial quadratic_reduce(const Polynomial& p, std::size_t t_index,
                            const Polynomial& linear, const Polynomial& constant) {
    Polynomial r = p;
    while (r.degree_in(t_index) >= 2) {
        auto coeffs = r.coefficients_in(t_index);
        Polynomial t = Polynomial::variable(p.ring(), t_index);
        Polynomial reduced = coeffs[0];
        if (coeffs.size() > 1) reduced += coeffs[1] * t;
        Polynomial high = Polynomial::zero(p.ring());
        for (std::size_t d = 2; d < coeffs.size(); ++d)
            high += coeffs[d] * t.pow(static_cast<unsigned long>(d - 2));
        r = reduced + high * (linear * t + constant);
    }
    return r;
}

TransportResult transport_relation(const Polynomial& old_relation,
                                   const Substitution& rewrite,
                                   const Polynomial& new_relation,
                                   const std::optional<QuadraticModulus>& root) {
    TransportResult out;
    const RingPtr& work_ring = rewrite.target;
    RationalFunction image = substitute(old_relation, rewrite);

    int t_index = -1;
    Polynomial lin, cst;
    if (root) {
        t_index = work_ring->index_of(root->symbol);
        if (t_index < 0)
            throw error("rewrite target ring lacks the root symbol " + root->symbol);
        std::vector<int> embed(root->linear.ring()->arity());
        for (std::size_t i = 0; i < embed.size(); ++i)
            embed[i] = work_ring->index_of(root->linear.ring()->vars[i]);
        lin = root->linear.rename_variables(work_ring, embed);
        cst = root->constant.rename_variables(work_ring, embed);
        if (lin.uses_variable(static_cast<std::size_t>(t_index)) ||
            cst.uses_variable(static_cast<std::size_t>(t_index)))
            throw error("quadratic modulus must not use the root symbol");
    }

    Polynomial num = image.num();
    if (root) {
        num = quadratic_reduce(num, static_cast<std::size_t>(t_index), lin, cst);
        Polynomial den =
            quadratic_reduce(image.den(), static_cast<std::size_t>(t_index), lin, cst);
        if (den.is_zero())
            throw undefined_substitution(
                "cleared denominator vanishes modulo the quadratic relation");
        auto tc = num.coefficients_in(static_cast<std::size_t>(t_index));
        if (tc.size() > 1 && !tc[1].is_zero()) {
            out.residue = tc[1];
            out.note = "root-linear part survives";
            return out;
        }
        if (!tc.empty()) num = tc[0];
    }

    // compare against the expected relation inside the working ring
    std::vector<int> embed(new_relation.ring()->arity());
    for (std::size_t i = 0; i < embed.size(); ++i) {
        embed[i] = work_ring->index_of(new_relation.ring()->vars[i]);
        if (embed[i] < 0)
            throw ring_mismatch("expected relation uses a variable absent from "
                                "the rewrite target");
    }
    Polynomial expected = new_relation.rename_variables(work_ring, embed);
    if (expected.is_zero() || num.is_zero()) {
        out.residue = num;
        out.note = "degenerate comparison";
        return out;
    }
    auto match = equal_up_to_unit_monomial(num, expected);
    if (!match) {
        out.residue = num;
        out.note = "cleared numerator does not match the expected relation";
        return out;
    }
    out.pass = true;
    out.unit = match->first;
    out.monomial.assign(new_relation.ring()->arity(), 0);
    for (std::size_t i = 0; i < match->second.size(); ++i) {
        if (match->second[i] == 0) continue;
        // locate this working-ring variable among the new ring's variables
        int idx = new_relation.ring()->index_of(work_ring->vars[i]);
        if (idx < 0) {
            out.pass = false;
            out.residue = num;
            out.note = "monomial cofactor uses the root symbol";
            return out;
        }
        out.monomial[static_cast<std::size_t>(idx)] = match->second[i];
    }
    return out;
}

Polynomial eliminate(const ChangeOfVariables& cov) {
    validate(cov);
    const std::size_t n_old = cov.old_ring->arity();
    const std::size_t n_new = cov.new_ring->arity();
    if (n_new != n_old + 1)
        throw error("elimination expects exactly one relation among the generators");

    std::vector<std::string> all_vars = cov.old_ring->vars;
    for (const auto& v : cov.new_ring->vars) all_vars.push_back(v);
    RingPtr big = make_ring(cov.old_ring->field, all_vars);

    std::vector<int> embed_old(n_old);
    for (std::size_t i = 0; i < n_old; ++i) embed_old[i] = static_cast<int>(i);

    std::vector<Polynomial> polys;
    for (std::size_t j = 0; j < n_new; ++j) {
        Polynomial num = cov.forward[j].num().rename_variables(big, embed_old);
        Polynomial den = cov.forward[j].den().rename_variables(big, embed_old);
        Polynomial gj = Polynomial::variable(big, n_old + j);
        polys.push_back(num - gj * den);
    }

    for (std::size_t vi = n_old; vi-- > 0;) {
        std::vector<Polynomial> involved, untouched;
        for (auto& p : polys)
            (p.uses_variable(vi) ? involved : untouched).push_back(p);
        if (involved.size() < 2)
            throw error("degenerate elimination: variable " + big->vars[vi] +
                        " cannot be cancelled between two equations");
        std::sort(involved.begin(), involved.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      return a.degree_in(vi) < b.degree_in(vi);
                  });
        bool done = false;
        for (std::size_t pick = 0; pick < involved.size() && !done; ++pick) {
            std::vector<Polynomial> next = untouched;
            bool ok = true;
            for (std::size_t q = 0; q < involved.size(); ++q) {
                if (q == pick) continue;
                Polynomial r = resultant(involved[pick], involved[q], vi);
                if (r.is_zero()) {
                    ok = false;
                    break;
                }
                next.push_back(r.unit_normal());
            }
            if (ok) {
                polys = std::move(next);
                done = true;
            }
        }
        if (!done)
            throw error("degenerate elimination: all pivots for " + big->vars[vi] +
                        " give a vanishing resultant");
    }

    if (polys.size() != 1)
        throw error("elimination did not reduce to a single relation");
    std::vector<int> project(big->arity(), -1);
    for (std::size_t j = 0; j < n_new; ++j)
        project[n_old + j] = static_cast<int>(j);
    return polys[0].rename_variables(cov.new_ring, project).unit_normal();
}

RationalFunction solve_linear_variable(const Polynomial& relation,
                                       const std::string& var) {
    int idx = relation.ring()->index_of(var);
    if (idx < 0) throw error("no variable named " + var);
    if (relation.degree_in(static_cast<std::size_t>(idx)) != 1)
        throw error("relation is not linear in " + var);
    auto coeffs = relation.coefficients_in(static_cast<std::size_t>(idx));
    return RationalFunction(-coeffs[0], coeffs[1]);
}

InvarianceCheck verify_invariance(const CremonaMap& m, const RationalFunction& e) {
    InvarianceCheck out;
    auto [num, den] = substitute_fraction(e, m.as_substitution());
    out.pass = fraction_equal(num, den, e);
    // The canonical pullback (a gcd reduction of a large fraction) is only
    // worth computing when it differs from e and serves as a witness.
    out.pulled = out.pass ? e : RationalFunction(std::move(num), std::move(den));
    return out;
}

DescentCheck verify_quadratic_descent(const QuadraticDescent& d, const CremonaMap& m) {
    if (d.invariants.size() != d.invariant_ring->arity())
        throw error("descent needs one invariant definition per invariant name");
    DescentCheck out;
    Substitution pull = m.as_substitution();
    out.sigma_t = m.pullback(d.t);
    out.t_moved = !rf_equal(out.sigma_t, d.t);
    {
        auto [num, den] = substitute_fraction(out.sigma_t, pull);
        out.t_involutive = fraction_equal(num, den, d.t);
    }
    out.invariants_fixed = true;
    for (const auto& [name, def] : d.invariants) {
        auto [num, den] = substitute_fraction(def, pull);
        if (!fraction_equal(num, den, def)) {
            out.invariants_fixed = false;
            break;
        }
    }
    Substitution names(d.invariant_ring, m.ring());
    for (std::size_t i = 0; i < d.invariants.size(); ++i)
        names.set(i, d.invariants[i].second);
    out.trace_matches = rf_equal(d.t + out.sigma_t, substitute(d.trace, names));
    out.norm_matches = rf_equal(d.t * out.sigma_t, substitute(d.norm, names));
    return out;
}

SingularLocusCheck
verify_singular_substitution(const Polynomial& relation, const Substitution& locus,
                             const std::vector<std::string>& require_zero_partials) {
    if (!(*relation.ring() == *locus.source) || !(*locus.source == *locus.target))
        throw ring_mismatch("locus substitution must stay inside the relation's ring");
    Substitution full = locus;
    std::vector<bool> assigned(locus.source->arity(), false);
    for (std::size_t i = 0; i < full.images.size(); ++i) {
        assigned[i] = full.images[i].has_value();
        if (!assigned[i])
            full.set(i, RationalFunction::from_poly(
                            Polynomial::variable(locus.source, i)));
    }
    SingularLocusCheck out;
    out.relation_vanishes = substitute(relation, full).is_zero();
    for (std::size_t i = 0; i < locus.source->arity(); ++i) {
        RationalFunction value = substitute(relation.derivative(i), full);
        const std::string& name = locus.source->vars[i];
        bool required =
            std::find(require_zero_partials.begin(), require_zero_partials.end(),
                      name) != require_zero_partials.end();
        if (required)
            out.zero_partials.emplace_back(name, value.is_zero());
        else
            out.other_partials.emplace_back(name, value);
    }
    return out;
}

} // namespace cremona
