/* Acceptance gate: one pass/fail line per criterion, exit 0 only when every
 * criterion holds.  Run from anywhere; scenario data resolves through
 * CREMONA_SCENARIO_DIR, ./scenarios, or the built-in source path. */

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/map.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/report.hpp"
#include "cremona/runner.hpp"
#include "cremona/scenario.hpp"

using namespace cremona;

namespace {

int g_failures = 0;

void line(int number, bool ok, const std::string& label) {
    std::printf("%s: %2d. %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
    if (!ok) ++g_failures;
}

const StepRecord* find_step(const SuiteReport& rep, const std::string& section,
                            const std::string& id) {
    for (const auto& sec : rep.sections) {
        if (sec.id != section) continue;
        for (const auto& st : sec.steps)
            if (st.id == id) return &st;
    }
    if (section == "properties")
        for (const auto& st : rep.properties.steps)
            if (st.id == id) return &st;
    return nullptr;
}

bool step_passes(const SuiteReport& rep, const std::string& section,
                 const std::string& id) {
    const StepRecord* st = find_step(rep, section, id);
    return st != nullptr && st->pass;
}

bool property_count(const SuiteReport& rep, const std::string& id,
                    const std::string& count) {
    const StepRecord* st = find_step(rep, "properties", id);
    return st != nullptr && st->pass &&
           st->detail.rfind(count + " ", 0) == 0;
}

/* Everything that constitutes a verdict, with no timing data: used to compare
 * full runs under different seeds. */
std::string verdict_signature(const SuiteReport& rep) {
    std::ostringstream out;
    out << "all_pass=" << rep.all_pass << "\n";
    for (const auto& sec : rep.sections) {
        out << "section " << sec.id << " pass=" << sec.pass << "\n";
        for (const auto& st : sec.steps)
            out << "  " << st.id << " pass=" << st.pass << " detail=" << st.detail
                << "\n";
    }
    out << "errata pass=" << rep.errata.pass << "\n";
    for (const auto& st : rep.errata.steps)
        out << "  " << st.id << " pass=" << st.pass << "\n";
    for (const auto& f : rep.errata.findings)
        out << "  finding " << f.id << " conclusive=" << f.conclusive
            << " verdict=" << f.verdict << "\n";
    out << "properties pass=" << rep.properties.pass << "\n";
    for (const auto& st : rep.properties.steps)
        out << "  " << st.id << " pass=" << st.pass << "\n";
    for (const auto& d : rep.missing_displays) out << "missing " << d << "\n";
    return out.str();
}

} // namespace

int main() {
    const std::string dir = default_scenario_dir();
    const Scenario sec2 = load_scenario(dir + "/sec2.scn");
    const CremonaMap& sigma = sec2.map("sigma");

    // 1. The displayed birational self-map composed with itself is the
    //    identity, exactly, over the rationals.
    line(1, verify_involution(sigma) && is_identity(compose(sigma, sigma)),
         "the displayed self-map is an involution over the rationals");

    // 2. The pullbacks of the three invariant-candidate generators are the
    //    stated unit monomials in the generators themselves.
    {
        const RationalFunction& y1 = sec2.expr("y1x");
        const RationalFunction& y2 = sec2.expr("y2x");
        const RationalFunction& y3 = sec2.expr("y3x");
        bool ok = rf_equal(sigma.pullback(y1), y1 * y2 * y2 / (y3 * y3)) &&
                  rf_equal(sigma.pullback(y2), y1.pow(3) * y2 * y2 / y3.pow(3)) &&
                  rf_equal(sigma.pullback(y3), y1.pow(3) * y2.pow(3) / y3.pow(4));
        line(2, ok, "generator pullbacks equal y1*y2^2/y3^2, y1^3*y2^2/y3^3, "
                    "y1^3*y2^3/y3^4");
    }

    // 3. The exponent matrix of that action has the stated columns and
    //    integer determinant exactly 1.
    {
        auto prof = monomial_profile(
            sigma, {sec2.expr("y1x"), sec2.expr("y2x"), sec2.expr("y3x")});
        bool ok = prof.has_value();
        if (ok) {
            const std::vector<std::vector<long>> expected = {
                {1, 3, 3}, {2, 2, 3}, {-2, -3, -4}}; // columns (1,2,-2) etc.
            ok = prof->exponents == expected && prof->determinant == 1;
            for (const auto& c : prof->constants) ok = ok && c == 1;
        }
        line(3, ok, "monomial action profile: columns (1,2,-2), (3,2,-3), "
                    "(3,3,-4), determinant 1");
    }

    SuiteReport run1 = run_all(dir, 1);

    // 4. The displayed inverse expressions regenerate the coordinates, and
    //    the sextic relation vanishes under the generator parametrization.
    line(4, step_passes(run1, "sec2", "s6") && step_passes(run1, "sec2", "s7"),
         "coordinates recovered from the generators; the sextic relation "
         "vanishes");

    // 5. Every rewrite of the relation chain transports with a nonzero
    //    unit-times-monomial cofactor (asserted per step in the data).
    {
        bool ok = true;
        for (const char* id : {"s13", "s20", "s22", "s25", "s26"}) {
            const StepRecord* st = find_step(run1, "sec2", id);
            ok = ok && st && st->pass &&
                 st->detail.find("cleared image = ") != std::string::npos;
        }
        line(5, ok, "relation transports succeed with unit-monomial cofactors");
    }

    // 6. The relation and its first partials vanish on the singular locus.
    line(6, step_passes(run1, "sec2", "s23"),
         "the cubic relation is singular along the stated locus");

    // 7. Linear solves resubstitute to zero: w3 in the quadric-cone chart,
    //    and the last generator of the quartic and quintic towers.
    line(7,
         step_passes(run1, "sec2", "s27") && step_passes(run1, "sec4", "q17") &&
             step_passes(run1, "sec5", "p15"),
         "linear eliminations solve and resubstitute to zero");

    // 8. The pullback fixes w1, w2, and w1/w2, and the ratio equals the
    //    displayed rational function of the coordinates.
    line(8,
         step_passes(run1, "sec2", "s31") && step_passes(run1, "sec2", "s32") &&
             step_passes(run1, "sec2", "s33") && step_passes(run1, "sec2", "s30"),
         "final invariants fixed; their ratio matches the displayed formula");

    // 9. Reductions mod 3 and mod 2 are computed, and the denominator
    //    inconsistency in characteristic 2 is decided by computation.
    {
        bool ok = step_passes(run1, "sec3-char3", "t2") &&
                  step_passes(run1, "sec3-char2", "c2");
        const ErrataFinding* denom = nullptr;
        for (const auto& f : run1.errata.findings)
            if (f.id == "char2-denominator") denom = &f;
        ok = ok && denom && denom->conclusive &&
             denom->verdict.find("x1+x1*x2+x2^3") != std::string::npos;
        bool losing_steps_listed = false;
        if (denom)
            for (const auto& e : denom->evidence)
                if (e.find("variantA") != std::string::npos &&
                    e.find("steps pass") != std::string::npos)
                    losing_steps_listed = true;
        line(9, ok && losing_steps_listed,
             "mod-p reductions match the consistent displayed maps; the "
             "characteristic-2 denominator variant is decided by computation");
    }

    // 10. Both positive-characteristic descents verify, and the final
    //     displayed generators are pullback-fixed.
    line(10,
         step_passes(run1, "sec3-char2", "c9") &&
             step_passes(run1, "sec3-char2", "c10") &&
             step_passes(run1, "sec3-char2", "c11") &&
             step_passes(run1, "sec3-char3", "t6") &&
             step_passes(run1, "sec3-char3", "t7") &&
             step_passes(run1, "sec3-char3", "t8"),
         "quadratic descents verify in characteristic 2 and 3 with fixed "
         "displayed generators");

    // 11. The randomized property suites pass at their stated sizes.
    line(11,
         property_count(run1, "substitution-homomorphism", "100") &&
             property_count(run1, "gcd-laws", "100") &&
             property_count(run1, "resultant-sylvester", "50") &&
             property_count(run1, "screen-agreement-equal", "100") &&
             property_count(run1, "screen-agreement-unequal", "100") &&
             property_count(run1, "mutation-sensitivity", "10"),
         "property suites pass at the required case counts");

    // 12. Verdicts are identical across three distinct seeds.
    {
        SuiteReport run2 = run_all(dir, 2);
        SuiteReport run3 = run_all(dir, 3);
        std::string s1 = verdict_signature(run1);
        bool ok = run1.all_pass && s1 == verdict_signature(run2) &&
                  s1 == verdict_signature(run3);
        line(12, ok, "full-suite verdicts identical across seeds 1, 2, 3");
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria satisfied\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
