#include <chrono>
#include <functional>
#include <sstream>

#include "cremona/runner.hpp"
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

/* Runs one guarded check, records it as a step, and returns its verdict. */
struct CheckRunner {
    std::vector<StepRecord>& steps;

    bool run(const std::string& id, const std::string& display,
             const std::function<std::pair<bool, std::string>()>& body) {
        StepRecord rec;
        rec.id = id;
        rec.op = "errata-check";
        rec.display = display;
        auto t0 = Clock::now();
        try {
            auto [pass, detail] = body();
            rec.pass = pass;
            rec.detail = detail;
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.detail = std::string("error: ") + e.what();
        }
        rec.duration_ms = ms_since(t0);
        steps.push_back(rec);
        return rec.pass;
    }
};

std::string first_moved_generator(const CremonaMap& square) {
    const RingPtr& ring = square.ring();
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        RationalFunction v = RationalFunction::variable(ring, ring->vars[i]);
        if (!rf_equal(square.image(i), v))
            return "(m o m)(" + ring->vars[i] + ") = " +
                   to_string_truncated(square.image(i), kWitnessTerms);
    }
    return "(m o m) is the identity";
}

std::string chain_tally(const VerificationReport& rep) {
    std::size_t passed = 0;
    for (const auto& st : rep.steps)
        if (st.pass) ++passed;
    std::ostringstream out;
    out << rep.id << ": " << passed << "/" << rep.steps.size()
        << " steps pass";
    return out.str();
}

void append_failing_steps(std::vector<std::string>& evidence,
                          const VerificationReport& rep) {
    for (const auto& st : rep.steps)
        if (!st.pass)
            evidence.push_back("  " + rep.id + "." + st.id + " (" + st.op +
                               "): " + st.detail);
}

} // namespace

ErrataReport detect_errata(const std::string& dir) {
    ErrataReport out;
    auto t0 = Clock::now();
    CheckRunner check{out.steps};

    Scenario c2 = load_scenario(dir + "/sec3-char2.scn");
    Scenario c2a = load_scenario(dir + "/sec3-char2-variantA.scn");
    Scenario c4 = load_scenario(dir + "/sec4.scn");
    Scenario c4a = load_scenario(dir + "/sec4-variantA.scn");
    Scenario c3 = load_scenario(dir + "/sec3-char3.scn");

    /* ---- Finding 1: the characteristic-2 denominator. --------------------
     * The displayed map uses denominators x1^2+x1*x2+x2^3; the corrected
     * variant uses x1+x1*x2+x2^3.  Decide which is consistent by involution
     * status, by reduction of the characteristic-zero map, by the quartic
     * tower's own displayed y3, and by running the full chains under both
     * variants. */
    {
        ErrataFinding f;
        f.id = "char2-denominator";
        bool ok = true;

        const CremonaMap& sigma_b = c2.map("sigma");
        const CremonaMap& sigma_a = c2.map("sigmaA");
        const CremonaMap& sigma_0 = c2.map("sigma0");

        ok &= check.run("b-involution", "", [&] {
            bool pass = verify_involution(sigma_b);
            return std::make_pair(pass,
                                  std::string("corrected variant composes to the "
                                              "identity and is not the identity"));
        });
        f.evidence.push_back(
            "corrected variant (denominators x1+x1*x2+x2^3): involution");

        ok &= check.run("a-not-involution", "", [&] {
            CremonaMap square = compose(sigma_a, sigma_a);
            bool moved = !is_identity(square);
            return std::make_pair(moved, first_moved_generator(square));
        });
        f.evidence.push_back(
            "displayed variant (denominators x1^2+x1*x2+x2^3): composed with "
            "itself it is not the identity");

        ok &= check.run("reduction-is-b", "d3a-sigma,d4-sigma", [&] {
            CremonaMap red = reduce_map_mod_p(sigma_0, 2);
            bool eq_b = red == sigma_b;
            bool ne_a = !(red == sigma_a);
            std::string detail =
                "mod-2 reduction of the characteristic-zero map: image of x1 = " +
                to_string_truncated(red.image(0), kWitnessTerms);
            return std::make_pair(eq_b && ne_a, detail);
        });
        f.evidence.push_back(
            "the mod-2 reduction of the characteristic-zero map equals the "
            "corrected variant exactly and differs from the displayed one; the "
            "direct-reduction chains therefore coincide with the corrected "
            "variant's");

        ok &= check.run("b-denominators-match-y3", "", [&] {
            const Polynomial y3 = c4.expr("y3x").num();
            const CremonaMap& qb = c4.map("sigma");
            const CremonaMap& qa = c4.map("sigmaA");
            bool b_ok = qb.image(0).den() == y3 * y3 && qb.image(1).den() == y3;
            bool a_differs =
                !(qa.image(0).den() == y3 * y3) && !(qa.image(1).den() == y3);
            std::string detail =
                "tower generator y3 = " + to_string(y3) +
                "; corrected denominators are y3^2 and y3, displayed ones are not";
            return std::make_pair(b_ok && a_differs, detail);
        });
        f.evidence.push_back(
            "the quartic tower's displayed generator y3 = x1+x1*x2+x2^3 equals "
            "the corrected denominator, not the displayed one");

        VerificationReport chain_b2 = run_scenario(c2);
        ok &= check.run("chain-b-char2", "", [&] {
            return std::make_pair(chain_b2.pass, chain_tally(chain_b2));
        });
        VerificationReport chain_a2 = run_scenario(c2a);
        ok &= check.run("chain-a-char2", "", [&] {
            return std::make_pair(!chain_a2.pass, chain_tally(chain_a2));
        });
        VerificationReport chain_b4 = run_scenario(c4);
        ok &= check.run("chain-b-quartic", "", [&] {
            return std::make_pair(chain_b4.pass, chain_tally(chain_b4));
        });
        VerificationReport chain_a4 = run_scenario(c4a);
        ok &= check.run("chain-a-quartic", "", [&] {
            return std::make_pair(!chain_a4.pass, chain_tally(chain_a4));
        });

        f.evidence.push_back("full chains: " + chain_tally(chain_b2) + "; " +
                             chain_tally(chain_a2) + "; " +
                             chain_tally(chain_b4) + "; " +
                             chain_tally(chain_a4));
        f.evidence.push_back("failing steps of the displayed variant:");
        append_failing_steps(f.evidence, chain_a2);
        append_failing_steps(f.evidence, chain_a4);

        f.conclusive = ok;
        f.verdict =
            "the characteristic-2 involution's denominators are x1+x1*x2+x2^3 "
            "and its square (the mod-2 reduction of the characteristic-zero "
            "map); the displayed x1^2+x1*x2+x2^3 is inconsistent";
        out.findings.push_back(std::move(f));
    }

    /* ---- Finding 2: the characteristic-3 map. ----------------------------
     * Unlike the characteristic-2 display, the displayed mod-3 map is
     * exactly the reduction of the characteristic-zero map and everything
     * built on it checks out. */
    {
        ErrataFinding f;
        f.id = "char3-map";
        bool ok = true;

        ok &= check.run("char3-involution", "", [&] {
            bool pass = verify_involution(c3.map("sigma"));
            return std::make_pair(pass, std::string("displayed mod-3 map is an "
                                                    "involution"));
        });
        ok &= check.run("char3-reduction-matches", "d3b-sigma", [&] {
            CremonaMap red = reduce_map_mod_p(c3.map("sigma0"), 3);
            bool pass = red == c3.map("sigma");
            return std::make_pair(pass,
                                  std::string("mod-3 reduction equals the "
                                              "displayed map image by image"));
        });
        VerificationReport chain3 = run_scenario(c3);
        ok &= check.run("chain-char3", "", [&] {
            return std::make_pair(chain3.pass, chain_tally(chain3));
        });

        f.evidence.push_back(
            "the displayed characteristic-3 map is an involution, equals the "
            "mod-3 reduction of the characteristic-zero map exactly, and its "
            "full chain passes");
        f.conclusive = ok;
        f.verdict = "the displayed characteristic-3 map is consistent";
        out.findings.push_back(std::move(f));
    }

    /* ---- Finding 3: the quartic tower's z1. ------------------------------
     * The tower display defines z1 = y3/y1, but the displayed relation
     * among z1,z2,z3 and the closing generator display both require the
     * inverse, z1 = y1/y3.  Decide by checking the displayed relation, the
     * transported quartic, and the closing display under both readings. */
    {
        ErrataFinding f;
        f.id = "quartic-z1-direction";
        bool ok = true;

        const Polynomial f4 = c4.expr("f4").num();
        const Polynomial g4 = c4.expr("g4").num();

        ok &= check.run("z1-relation", "", [&] {
            RelationCheck used = verify_relation(g4, c4.cov("c4xz"));
            RelationCheck disp = verify_relation(g4, c4.cov("c4xzdisp"));
            std::string detail =
                "residue under the displayed reading = " +
                to_string_truncated(disp.residue, kWitnessTerms);
            return std::make_pair(used.pass && !disp.pass, detail);
        });
        f.evidence.push_back(
            "the displayed relation among z1,z2,z3 vanishes under z1 = y1/y3 "
            "and not under the displayed z1 = y3/y1");

        ok &= check.run("z1-transport", "d4-z", [&] {
            TransportResult used =
                transport_relation(f4, c4.rewrite("yz4"), g4, std::nullopt);
            TransportResult disp =
                transport_relation(f4, c4.rewrite("yz4disp"), g4, std::nullopt);
            std::string detail = "displayed reading: " + disp.note;
            if (!disp.residue.is_zero())
                detail += "; residue = " +
                          to_string_truncated(disp.residue, kWitnessTerms);
            return std::make_pair(used.pass && !disp.pass, detail);
        });
        f.evidence.push_back(
            "the quartic relation transports onto the displayed relation only "
            "under z1 = y1/y3");

        ok &= check.run("z1-final-generator", "", [&] {
            bool used = rf_equal(c4.expr("z1x"), c4.expr("u1fin"));
            bool disp = rf_equal(c4.expr("z1disp"), c4.expr("u1fin"));
            std::string detail =
                "closing display x1/(x1+x1*x2+x2^3) equals z1 = y1/y3 and not "
                "its inverse";
            return std::make_pair(used && !disp, detail);
        });
        f.evidence.push_back(
            "the closing generator display u1 = x1/(x1+x1*x2+x2^3) equals "
            "y1/y3, the inverse of the displayed z1");

        f.conclusive = ok;
        f.verdict =
            "in the quartic tower z1 = y1/y3; the displayed z1 = y1^-1*y3 is "
            "inverted";
        out.findings.push_back(std::move(f));
    }

    out.pass = true;
    for (const auto& f : out.findings) out.pass = out.pass && f.conclusive;
    for (const auto& st : out.steps) out.pass = out.pass && st.pass;
    out.duration_ms = ms_since(t0);
    return out;
}

} // namespace cremona
