#include <chrono>
#include <set>
#include <stdexcept>

#include "cremona/runner.hpp"
#include "cremona/sylvester.hpp"
#include "cremona/textio.hpp"

namespace cremona {

namespace {

constexpr std::size_t kWitnessTerms = 40;

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 Clock::now() - t0)
                                 .count());
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw error("expected an integer for " + what + ", got '" + s + "'");
    }
}

mpq_class parse_mpq(const std::string& s, const std::string& what) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw error("expected a rational for " + what + ", got '" + s + "'");
    }
}

struct StepContext {
    const Scenario& sc;
    const ScenarioStep& st;

    const std::string& need(const std::string& key) const {
        auto it = st.args.find(key);
        if (it == st.args.end())
            throw schema_error(sc.id + ".step." + st.id, "missing argument " + key);
        return it->second;
    }

    const std::string* get(const std::string& key) const {
        auto it = st.args.find(key);
        return it == st.args.end() ? nullptr : &it->second;
    }

    /* Parse an expression argument; scenario expressions over the same ring
     * are visible by name. */
    RationalFunction expr_in(const RingPtr& ring, const std::string& text) const {
        NameResolver resolver = [&](const std::string& name)
            -> std::optional<RationalFunction> {
            auto it = sc.exprs.find(name);
            if (it != sc.exprs.end() && *it->second.ring() == *ring)
                return it->second;
            return std::nullopt;
        };
        return parse_expression(text, ring, resolver);
    }

    Polynomial poly_in(const RingPtr& ring, const std::string& text) const {
        RationalFunction f = expr_in(ring, text);
        if (!f.is_polynomial())
            throw error("expected a polynomial, got denominator " +
                        to_string_truncated(f.den(), kWitnessTerms));
        return f.num();
    }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string monomial_text(const RingPtr& ring, const std::vector<long>& exps) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        std::string p = ring->vars[i];
        if (exps[i] != 1) p += "^" + std::to_string(exps[i]);
        parts.push_back(p);
    }
    return parts.empty() ? "1" : join(parts, "*");
}

bool step_involution(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    if (verify_involution(m)) {
        rec.detail = "composes with itself to the identity and is not the identity";
        return true;
    }
    if (is_identity(m)) {
        rec.detail = "map is the identity";
        return false;
    }
    CremonaMap twice = compose(m, m);
    for (std::size_t i = 0; i < twice.images().size(); ++i) {
        RationalFunction xi =
            RationalFunction::from_poly(Polynomial::variable(m.ring(), i));
        if (!rf_equal(twice.image(i), xi)) {
            rec.detail = "composed square sends " + m.ring()->vars[i] + " to " +
                         to_string_truncated(twice.image(i), kWitnessTerms);
            return false;
        }
    }
    rec.detail = "map is the identity";
    return false;
}

bool step_pullback_equals(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    RationalFunction e = c.expr_in(m.ring(), c.need("of"));
    RationalFunction want = c.expr_in(m.ring(), c.need("equals"));
    RationalFunction got = m.pullback(e);
    if (rf_equal(got, want)) {
        rec.detail = "pullback of " + c.need("of") + " equals " + c.need("equals");
        return true;
    }
    rec.detail = "pullback is " + to_string_truncated(got, kWitnessTerms);
    return false;
}

bool step_invariance(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    RationalFunction e = c.expr_in(m.ring(), c.need("expr"));
    InvarianceCheck chk = verify_invariance(m, e);
    if (chk.pass) {
        rec.detail = c.need("expr") + " is fixed by the pullback";
        return true;
    }
    rec.detail = "pullback is " + to_string_truncated(chk.pulled, kWitnessTerms);
    return false;
}

bool step_profile(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    std::vector<std::string> gen_names = split(c.need("gens"), ',');
    std::vector<RationalFunction> gens;
    for (const auto& g : gen_names) gens.push_back(c.expr_in(m.ring(), g));

    auto prof = monomial_profile(m, gens);
    if (!prof) {
        rec.detail = "some pullback is not a unit constant times a monomial "
                     "in the generators";
        return false;
    }

    std::vector<std::string> row_texts, unit_texts;
    for (const auto& row : prof->exponents) {
        std::vector<std::string> cells;
        for (long e : row) cells.push_back(std::to_string(e));
        row_texts.push_back(join(cells, ","));
    }
    for (const auto& u : prof->constants) unit_texts.push_back(u.get_str());
    rec.detail = "exponent rows " + join(row_texts, ";") + "; det " +
                 prof->determinant.get_str() + "; units " + join(unit_texts, ",");

    bool ok = true;
    if (const std::string* want = c.get("matrix")) {
        std::vector<std::vector<long>> rows;
        for (const auto& row : split(*want, ';')) {
            rows.emplace_back();
            for (const auto& cell : split(row, ','))
                rows.back().push_back(parse_long(cell, "matrix entry"));
        }
        ok = ok && rows == prof->exponents;
    }
    if (const std::string* want = c.get("det"))
        ok = ok && mpz_class(*want) == prof->determinant;
    if (const std::string* want = c.get("consts")) {
        std::vector<mpq_class> units;
        for (const auto& u : split(*want, ','))
            units.push_back(parse_mpq(u, "unit constant"));
        ok = ok && units == prof->constants;
    }
    if (!ok) rec.detail = "computed action differs: " + rec.detail;
    return ok;
}

bool step_generation(const StepContext& c, StepRecord& rec) {
    const ChangeOfVariables& cov = c.sc.cov(c.need("cov"));
    GenerationCheck chk = verify_generation(cov);
    if (chk.pass) {
        rec.detail = "backward images recover all " +
                     std::to_string(cov.old_ring->arity()) + " old variables";
        return true;
    }
    for (std::size_t i = 0; i < chk.roundtrips.size(); ++i) {
        RationalFunction xi =
            RationalFunction::from_poly(Polynomial::variable(cov.old_ring, i));
        if (!rf_equal(chk.roundtrips[i], xi)) {
            rec.detail = "roundtrip of " + cov.old_ring->vars[i] + " gives " +
                         to_string_truncated(chk.roundtrips[i], kWitnessTerms);
            break;
        }
    }
    return false;
}

bool step_relation(const StepContext& c, StepRecord& rec) {
    const ChangeOfVariables& cov = c.sc.cov(c.need("cov"));
    Polynomial rel = c.poly_in(cov.new_ring, c.need("rel"));
    RelationCheck chk = verify_relation(rel, cov);
    if (chk.pass) {
        rec.detail = "relation vanishes identically under the forward images";
        return true;
    }
    rec.detail = "residue " + to_string_truncated(chk.residue, kWitnessTerms);
    return false;
}

bool step_eliminate_divides(const StepContext& c, StepRecord& rec) {
    const ChangeOfVariables& cov = c.sc.cov(c.need("cov"));
    Polynomial rel = c.poly_in(cov.new_ring, c.need("rel"));
    Polynomial elim = eliminate(cov);
    auto quotient = elim.try_divexact(rel);
    if (!quotient) {
        rec.detail = "relation does not divide the eliminant (" +
                     std::to_string(elim.terms().size()) + " terms, total degree " +
                     std::to_string(elim.total_degree()) + ")";
        return false;
    }
    if (quotient->is_constant()) {
        rec.detail = "eliminant equals the relation up to the constant " +
                     quotient->constant_value().get_str();
    } else {
        rec.detail = "eliminant = relation * cofactor (" +
                     std::to_string(quotient->terms().size()) +
                     " terms, total degree " +
                     std::to_string(quotient->total_degree()) + ")";
    }
    return true;
}

bool step_transport(const StepContext& c, StepRecord& rec) {
    const Substitution& rw = c.sc.rewrite(c.need("rewrite"));
    Polynomial oldp = c.poly_in(rw.source, c.need("old"));
    const RingPtr& new_ring = c.sc.ring(c.need("newring"));
    Polynomial newp = c.poly_in(new_ring, c.need("new"));

    std::optional<QuadraticModulus> root;
    if (const std::string* sym = c.get("root")) {
        root = QuadraticModulus{*sym, c.poly_in(new_ring, c.need("lin")),
                                c.poly_in(new_ring, c.need("cst"))};
    }

    TransportResult tr = transport_relation(oldp, rw, newp, root);
    if (!tr.pass) {
        rec.detail = tr.note + "; residue " +
                     to_string_truncated(tr.residue, kWitnessTerms);
        return false;
    }

    bool ok = true;
    if (const std::string* want = c.get("unit"))
        ok = ok && parse_mpq(*want, "unit") == tr.unit;
    if (const std::string* want = c.get("monomial")) {
        std::vector<long> exps(new_ring->arity(), 0);
        if (*want != "1") {
            for (const auto& part : split(*want, ',')) {
                auto nv = split(part, ':');
                if (nv.size() != 2)
                    throw error("monomial parts look like name:exponent, got '" +
                                part + "'");
                int idx = new_ring->index_of(nv[0]);
                if (idx < 0) throw error("no variable named " + nv[0]);
                exps[static_cast<std::size_t>(idx)] =
                    parse_long(nv[1], "monomial exponent");
            }
        }
        ok = ok && exps == tr.monomial;
    }
    rec.detail = "cleared image = " + tr.unit.get_str() + " * " +
                 monomial_text(new_ring, tr.monomial) + " * relation";
    if (!ok) rec.detail = "unexpected cofactor: " + rec.detail;
    return ok;
}

bool step_solve_linear(const StepContext& c, StepRecord& rec) {
    const RingPtr& ring = c.sc.ring(c.need("ring"));
    Polynomial rel = c.poly_in(ring, c.need("rel"));
    const std::string& var = c.need("var");
    RationalFunction solved = solve_linear_variable(rel, var);
    RationalFunction want = c.expr_in(ring, c.need("equals"));
    bool matches = rf_equal(solved, want);

    Substitution back(ring, ring);
    for (std::size_t i = 0; i < ring->arity(); ++i)
        back.set(i, RationalFunction::from_poly(Polynomial::variable(ring, i)));
    back.set(var, solved);
    bool vanishes = substitute(rel, back).is_zero();

    if (matches && vanishes) {
        rec.detail = var + " solves to the expected value and resubstitutes "
                           "to zero";
        return true;
    }
    rec.detail = "solved " + var + " = " + to_string_truncated(solved, kWitnessTerms);
    if (!vanishes) rec.detail += " (resubstitution does not vanish)";
    return false;
}

bool step_singular(const StepContext& c, StepRecord& rec) {
    const RingPtr& ring = c.sc.ring(c.need("ring"));
    Polynomial rel = c.poly_in(ring, c.need("rel"));

    Substitution locus(ring, ring);
    for (const auto& part : split(c.need("assign"), ',')) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw error("assignments look like name:expression, got '" + part + "'");
        std::string name = part.substr(0, colon);
        if (ring->index_of(name) < 0) throw error("no variable named " + name);
        locus.set(name, c.expr_in(ring, part.substr(colon + 1)));
    }

    std::vector<std::string> zeros = split(c.need("zero"), ',');
    for (const auto& z : zeros)
        if (ring->index_of(z) < 0) throw error("no variable named " + z);

    SingularLocusCheck chk = verify_singular_substitution(rel, locus, zeros);

    std::vector<std::string> parts;
    if (!chk.relation_vanishes) parts.push_back("relation does not vanish");
    for (const auto& [name, ok] : chk.zero_partials)
        if (!ok) parts.push_back("d/d" + name + " does not vanish");
    if (chk.pass()) {
        std::string others;
        for (const auto& [name, value] : chk.other_partials) {
            if (!others.empty()) others += ", ";
            others += "d/d" + name + " = " + to_string_truncated(value, 8);
        }
        rec.detail = "relation and required partials vanish on the locus";
        if (!others.empty()) rec.detail += "; remaining partials: " + others;
        return true;
    }
    rec.detail = join(parts, "; ");
    return false;
}

bool step_descent(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    QuadraticDescent d;
    d.t = c.expr_in(m.ring(), c.need("t"));
    d.invariant_ring = c.sc.ring(c.need("ring"));
    std::vector<std::string> inv_parts = split(c.need("invariants"), ',');
    if (inv_parts.size() != d.invariant_ring->arity())
        throw error("need one invariant definition per invariant-ring variable");
    for (std::size_t i = 0; i < inv_parts.size(); ++i) {
        std::size_t colon = inv_parts[i].find(':');
        if (colon == std::string::npos)
            throw error("invariants look like name:expression, got '" +
                        inv_parts[i] + "'");
        std::string name = inv_parts[i].substr(0, colon);
        if (name != d.invariant_ring->vars[i])
            throw error("invariant " + name + " out of order; expected " +
                        d.invariant_ring->vars[i]);
        d.invariants.emplace_back(name,
                                  c.expr_in(m.ring(), inv_parts[i].substr(colon + 1)));
    }
    d.trace = c.expr_in(d.invariant_ring, c.need("trace"));
    d.norm = c.expr_in(d.invariant_ring, c.need("norm"));

    DescentCheck chk = verify_quadratic_descent(d, m);
    if (chk.pass()) {
        rec.detail = "pullback moves t, is involutive on it, fixes the "
                     "invariants, and realizes trace and norm over k(" +
                     join(d.invariant_ring->vars, ",") + ")";
        return true;
    }
    std::vector<std::string> parts;
    if (!chk.t_moved) parts.push_back("t is fixed");
    if (!chk.t_involutive) parts.push_back("t is not restored on the second pullback");
    if (!chk.invariants_fixed) parts.push_back("an invariant moves");
    if (!chk.trace_matches) parts.push_back("trace mismatch");
    if (!chk.norm_matches) parts.push_back("norm mismatch");
    rec.detail = join(parts, "; ") + "; pullback of t is " +
                 to_string_truncated(chk.sigma_t, kWitnessTerms);
    return false;
}

bool step_reduce(const StepContext& c, StepRecord& rec) {
    const CremonaMap& m = c.sc.map(c.need("map"));
    mpz_class p(c.need("p"));
    const CremonaMap& want = c.sc.map(c.need("equals"));
    CremonaMap red = reduce_map_mod_p(m, p);
    if (red.ring()->vars != want.ring()->vars ||
        !(red.ring()->field == want.ring()->field)) {
        rec.detail = "reduction lands in a different ring";
        return false;
    }
    for (std::size_t i = 0; i < red.images().size(); ++i) {
        if (red.image(i) != want.image(i)) {
            rec.detail = "image of " + red.ring()->vars[i] + " reduces to " +
                         to_string_truncated(red.image(i), kWitnessTerms) +
                         " but the recorded map has " +
                         to_string_truncated(want.image(i), kWitnessTerms);
            return false;
        }
    }
    rec.detail = "coefficient-wise reduction mod " + p.get_str() +
                 " agrees with the recorded map";
    return true;
}

bool step_expr_equals(const StepContext& c, StepRecord& rec) {
    const RingPtr& ring = c.sc.ring(c.need("ring"));
    RationalFunction a = c.expr_in(ring, c.need("a"));
    RationalFunction b = c.expr_in(ring, c.need("b"));
    if (rf_equal(a, b)) {
        rec.detail = c.need("a") + " equals " + c.need("b");
        return true;
    }
    rec.detail = "values differ: " + to_string_truncated(a, kWitnessTerms) +
                 " vs " + to_string_truncated(b, kWitnessTerms);
    return false;
}

bool run_step(const Scenario& sc, const ScenarioStep& st, StepRecord& rec) {
    StepContext c{sc, st};
    if (st.op == "involution") return step_involution(c, rec);
    if (st.op == "pullback-equals") return step_pullback_equals(c, rec);
    if (st.op == "invariance") return step_invariance(c, rec);
    if (st.op == "profile") return step_profile(c, rec);
    if (st.op == "generation") return step_generation(c, rec);
    if (st.op == "relation") return step_relation(c, rec);
    if (st.op == "eliminate-divides") return step_eliminate_divides(c, rec);
    if (st.op == "transport") return step_transport(c, rec);
    if (st.op == "solve-linear") return step_solve_linear(c, rec);
    if (st.op == "singular") return step_singular(c, rec);
    if (st.op == "descent") return step_descent(c, rec);
    if (st.op == "reduce") return step_reduce(c, rec);
    if (st.op == "expr-equals") return step_expr_equals(c, rec);
    throw schema_error(sc.id + ".step." + st.id, "unknown operation " + st.op);
}

} // namespace

VerificationReport run_scenario(const Scenario& sc) {
    VerificationReport rep;
    rep.id = sc.id;
    rep.pass = true;
    auto t0 = Clock::now();
    for (const auto& st : sc.steps) {
        StepRecord rec;
        rec.id = st.id;
        rec.op = st.op;
        rec.display = st.display;
        auto s0 = Clock::now();
        try {
            rec.pass = run_step(sc, st, rec);
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.detail = std::string("error: ") + e.what();
        }
        rec.duration_ms = ms_since(s0);
        rep.pass = rep.pass && rec.pass;
        rep.steps.push_back(std::move(rec));
    }
    rep.duration_ms = ms_since(t0);
    return rep;
}

VerificationReport run_section(const std::string& dir, const std::string& section) {
    return run_scenario(load_scenario(dir + "/" + section + ".scn"));
}

SuiteReport run_all(const std::string& dir, std::uint64_t seed) {
    SuiteReport out;
    out.seed = seed;
    out.all_pass = true;
    auto t0 = Clock::now();

    for (const auto& name : scenario_sections()) {
        VerificationReport rep = run_section(dir, name);
        out.all_pass = out.all_pass && rep.pass;
        out.sections.push_back(std::move(rep));
    }

    out.errata = detect_errata(dir);
    out.all_pass = out.all_pass && out.errata.pass;

    out.properties = run_properties(dir, seed);
    out.all_pass = out.all_pass && out.properties.pass;

    std::set<std::string> covered;
    auto note_tags = [&covered](const StepRecord& st) {
        for (const std::string& tag : split(st.display, ','))
            if (!tag.empty()) covered.insert(tag);
    };
    for (const auto& sec : out.sections)
        for (const auto& st : sec.steps) note_tags(st);
    for (const auto& st : out.errata.steps) note_tags(st);
    for (const auto& tag : required_display_tags())
        if (!covered.count(tag)) out.missing_displays.push_back(tag);
    out.all_pass = out.all_pass && out.missing_displays.empty();

    out.duration_ms = ms_since(t0);
    return out;
}

const std::vector<std::string>& required_display_tags() {
    static const std::vector<std::string> tags = {
        // involution and first tower
        "d0-sigma", "d2-y", "d2-acty", "d2-det", "d2-xy", "d2-f", "d2-z",
        "d2-actz", "d2-g", "d2-actu", "d2-u", "d2-urel", "d2-v", "d2-h",
        "d2-sing", "d2-w", "d2-wrel", "d2-wx", "d2-wratio", "d2-final",
        // characteristic-2 short proof
        "d3a-sigma", "d3a-y", "d3a-acty", "d3a-z", "d3a-actz", "d3a-fixed",
        // characteristic-3 short proof
        "d3b-sigma", "d3b-y", "d3b-acty", "d3b-fixed",
        // characteristic-2 quartic tower
        "d4-sigma", "d4-y", "d4-acty", "d4-x2", "d4-f", "d4-z", "d4-actz",
        "d4-g", "d4-u", "d4-urel", "d4-ux",
        // characteristic-3 quintic tower
        "d5-y", "d5-acty", "d5-z", "d5-actz", "d5-g", "d5-u", "d5-urel",
        "d5-ux",
    };
    return tags;
}

} // namespace cremona
