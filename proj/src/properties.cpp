#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cremona/report.hpp"
#include "cremona/runner.hpp"
#include "cremona/sylvester.hpp"
#include "cremona/textio.hpp"

namespace cremona {

namespace {

constexpr std::size_t kWitnessTerms = 40;

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

long ms_since(Clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 Clock::now() - t0)
                                 .count());
}

long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

mpq_class random_coefficient(Rng& rng, const Field& f) {
    if (f.is_rationals()) {
        long num = uniform(rng, -9, 9);
        if (num == 0) num = 1;
        long den = uniform(rng, 1, 3);
        return f.reduce(mpq_class(num, den));
    }
    long p = f.characteristic().get_si();
    return f.reduce(mpq_class(uniform(rng, 1, p - 1)));
}

Monomial random_monomial(Rng& rng, std::size_t arity, long max_deg) {
    Monomial m(arity);
    for (auto& e : m)
        e = static_cast<std::uint32_t>(uniform(rng, 0, max_deg));
    return m;
}

Polynomial random_poly(Rng& rng, const RingPtr& ring, long max_terms,
                       long max_deg, bool nonzero) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial::TermMap terms;
        long n = uniform(rng, 1, max_terms);
        for (long i = 0; i < n; ++i)
            terms[random_monomial(rng, ring->arity(), max_deg)] +=
                random_coefficient(rng, ring->field);
        Polynomial p = Polynomial::from_terms(ring, std::move(terms));
        if (!nonzero || !p.is_zero()) return p;
    }
    return Polynomial::constant(ring, 1);
}

RationalFunction random_rf(Rng& rng, const RingPtr& ring) {
    Polynomial num = random_poly(rng, ring, 3, 2, false);
    Polynomial den = random_poly(rng, ring, 2, 2, true);
    return RationalFunction(std::move(num), std::move(den));
}

struct PropertyRunner {
    VerificationReport& rep;

    void run(const std::string& id,
             const std::function<std::pair<bool, std::string>()>& body) {
        StepRecord rec;
        rec.id = id;
        rec.op = "property";
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
        rep.steps.push_back(rec);
        rep.pass = rep.pass && rec.pass;
    }
};

std::string case_summary(int n, const std::string& what) {
    std::ostringstream out;
    out << n << " " << what;
    return out.str();
}

} // namespace

VerificationReport run_properties(const std::string& dir, std::uint64_t seed) {
    VerificationReport rep;
    rep.id = "properties";
    rep.pass = true;
    auto t0 = Clock::now();
    Rng rng(seed);

    RingPtr q3 = make_ring(Field::rationals(), {"a", "b", "c"});
    RingPtr f5 = make_ring(Field::prime(5), {"a", "b", "c"});
    RingPtr q2 = make_ring(Field::rationals(), {"v", "w"});
    RingPtr f7 = make_ring(Field::prime(7), {"v", "w"});

    PropertyRunner props{rep};

    props.run("ring-axioms", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 100; ++i) {
            const RingPtr& ring = (i % 5 < 3) ? q3 : f5;
            Polynomial a = random_poly(rng, ring, 4, 2, false);
            Polynomial b = random_poly(rng, ring, 4, 2, false);
            Polynomial c = random_poly(rng, ring, 4, 2, false);
            Polynomial one = Polynomial::constant(ring, 1);
            bool ok = (a + b) + c == a + (b + c) && a + b == b + a &&
                      a * b == b * a && (a * b) * c == a * (b * c) &&
                      a * (b + c) == a * b + a * c && (a - a).is_zero() &&
                      a * one == a && (a * Polynomial::zero(ring)).is_zero();
            if (!ok)
                return {false, "axiom violated; a = " +
                                   to_string_truncated(a, kWitnessTerms)};
        }
        return {true, case_summary(100, "random triples over the rationals "
                                        "and over F_5")};
    });

    props.run("substitution-homomorphism", [&]() -> std::pair<bool, std::string> {
        RingPtr qa = make_ring(Field::rationals(), {"a", "b"});
        RingPtr fa = make_ring(Field::prime(7), {"a", "b"});
        for (int i = 0; i < 100; ++i) {
            const RingPtr& src = (i % 2 == 0) ? q2 : f7;
            const RingPtr& tgt = (i % 2 == 0) ? qa : fa;
            // Degrees stay small: image denominators pile up under powers,
            // and the canonical forms here exist only to be compared.
            Polynomial p = random_poly(rng, src, 3, 1, false);
            Polynomial q = random_poly(rng, src, 3, 1, false);
            Substitution s(src, tgt);
            for (const auto& var : src->vars)
                s.set(var, RationalFunction(random_poly(rng, tgt, 2, 1, false),
                                            random_poly(rng, tgt, 2, 1, true)));
            RationalFunction sum = substitute(p + q, s);
            RationalFunction prod = substitute(p * q, s);
            bool ok = sum == substitute(p, s) + substitute(q, s) &&
                      prod == substitute(p, s) * substitute(q, s);
            if (!ok)
                return {false, "homomorphism violated; p = " +
                                   to_string_truncated(p, kWitnessTerms)};
        }
        return {true, case_summary(100, "random substitutions: images of sums "
                                        "and products match")};
    });

    props.run("gcd-laws", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 100; ++i) {
            const RingPtr& ring = (i % 2 == 0) ? q2 : f7;
            Polynomial a = random_poly(rng, ring, 3, 2, true);
            Polynomial b = random_poly(rng, ring, 3, 2, true);
            Polynomial c = random_poly(rng, ring, 2, 2, true);
            Polynomial g = gcd(a * c, b * c);
            auto qa = (a * c).try_divexact(g);
            auto qb = (b * c).try_divexact(g);
            bool ok = qa.has_value() && qb.has_value() &&
                      gcd(*qa, *qb).total_degree() == 0 &&
                      g == (gcd(a, b) * c).unit_normal() &&
                      gcd(a, b) == gcd(b, a) &&
                      gcd(a, Polynomial::zero(ring)) == a.unit_normal();
            if (!ok)
                return {false, "gcd law violated; a = " +
                                   to_string_truncated(a, kWitnessTerms) +
                                   ", b = " +
                                   to_string_truncated(b, kWitnessTerms) +
                                   ", c = " +
                                   to_string_truncated(c, kWitnessTerms)};
        }
        return {true, case_summary(100, "random (a,b,c): gcd(ac,bc) divides "
                                        "both with coprime quotients and "
                                        "equals normalized gcd(a,b)*c")};
    });

    props.run("resultant-sylvester", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 50; ++i) {
            const RingPtr& ring = (i % 2 == 0) ? q2 : f7;
            Polynomial a = random_poly(rng, ring, 3, 3, true);
            Polynomial b = random_poly(rng, ring, 3, 3, true);
            if (a.degree_in(0) < 1) a = a + Polynomial::variable(ring, 0);
            if (b.degree_in(0) < 1)
                b = b + Polynomial::variable(ring, 0) *
                            Polynomial::variable(ring, 0);
            if (a.is_zero() || b.is_zero()) continue;
            Polynomial fast = resultant(a, b, 0);
            Polynomial slow = sylvester_resultant(a, b, 0);
            if (fast != slow)
                return {false, "disagreement; a = " +
                                   to_string_truncated(a, kWitnessTerms) +
                                   ", b = " +
                                   to_string_truncated(b, kWitnessTerms)};
        }
        return {true, case_summary(50, "random pairs of degree <= 3: resultant "
                                       "equals the Sylvester determinant")};
    });

    props.run("screen-agreement-equal", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 100; ++i) {
            const RingPtr& ring = (i % 2 == 0) ? q2 : f5;
            RationalFunction a = random_rf(rng, ring);
            RationalFunction c =
                RationalFunction::from_poly(random_poly(rng, ring, 2, 2, true));
            RationalFunction b = (a * c) / c;
            bool exact = rf_equal(a, b);
            bool screen = rf_probably_equal(a, b, seed + i, 3);
            if (!exact || !screen)
                return {false, "equal pair disagreed; a = " +
                                   to_string_truncated(a, kWitnessTerms)};
        }
        return {true, case_summary(100, "equal pairs: screen and exact "
                                        "comparison both accept")};
    });

    props.run("screen-agreement-unequal", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 100; ++i) {
            // rationals only: the screen samples mod 2^61 - 1, where a
            // nonzero low-degree difference vanishing at every trial point is
            // impossible in practice.  Over a tiny prime field a nonzero
            // polynomial (e.g. a^5 - a over F_5) can vanish as a function, so
            // no point screen can promise to reject unequal pairs there.
            const RingPtr& ring = (i % 2 == 0) ? q2 : q3;
            RationalFunction a = random_rf(rng, ring);
            RationalFunction r = random_rf(rng, ring);
            while (r.is_zero()) r = random_rf(rng, ring);
            RationalFunction b = a + r;
            bool exact = rf_equal(a, b);
            bool screen = rf_probably_equal(a, b, seed + i, 3);
            if (exact || screen)
                return {false, "unequal pair disagreed; a = " +
                                   to_string_truncated(a, kWitnessTerms) +
                                   ", difference = " +
                                   to_string_truncated(r, kWitnessTerms)};
        }
        return {true, case_summary(100, "unequal pairs: screen and exact "
                                        "comparison both reject")};
    });

    props.run("text-roundtrip", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < 200; ++i) {
            const RingPtr& ring = (i % 3 == 0) ? q3 : (i % 3 == 1) ? f5 : q2;
            RationalFunction f = random_rf(rng, ring);
            RationalFunction g = random_rf(rng, ring);
            RationalFunction back = parse_expression(to_string(f), ring);
            if (back != f)
                return {false,
                        "round-trip changed the value; text = " + to_string(f)};
            if (f != g && to_string(f) == to_string(g))
                return {false, "distinct values printed identically: " +
                                   to_string(f)};
        }
        return {true, case_summary(200, "random expressions: parse(print(e)) "
                                        "== e and distinct values print "
                                        "distinctly")};
    });

    props.run("mutation-sensitivity", [&]() -> std::pair<bool, std::string> {
        struct Target {
            const char* scenario;
            const char* rel;
            const char* cov;
        };
        const std::vector<Target> targets = {
            {"sec2", "f", "xy"},      {"sec2", "g", "xz"},
            {"sec2", "urel", "xu"},    {"sec2", "h", "xv"},
            {"sec2", "wrel", "xw"},   {"sec4", "f4", "c4xy"},
            {"sec4", "g4", "c4xz"},   {"sec4", "urel", "c4xu"},
            {"sec5", "g5", "c5xz"},   {"sec5", "urel5", "c5xu"},
        };
        std::map<std::string, Scenario> cache;
        for (const Target& t : targets) {
            auto it = cache.find(t.scenario);
            if (it == cache.end())
                it = cache
                         .emplace(t.scenario,
                                  load_scenario(dir + "/" + t.scenario + ".scn"))
                         .first;
            const Scenario& sc = it->second;
            Polynomial rel = sc.expr(t.rel).num();
            Polynomial::TermMap terms = rel.terms();
            auto term = terms.begin();
            std::advance(term,
                         uniform(rng, 0, static_cast<long>(terms.size()) - 1));
            term->second += 1;
            Polynomial mutated = Polynomial::from_terms(rel.ring(), terms);
            if (mutated == rel)
                return {false, std::string("mutation of ") + t.rel +
                                   " left the relation unchanged"};
            RelationCheck check = verify_relation(mutated, sc.cov(t.cov));
            if (check.pass)
                return {false, std::string("mutated relation ") + t.rel +
                                   " still vanishes under " + t.cov};
        }
        return {true, case_summary(10, "single-coefficient mutations of "
                                       "shipped relations: every one breaks "
                                       "its parametrized check")};
    });

    props.run("determinism", [&]() -> std::pair<bool, std::string> {
        VerificationReport first = run_section(dir, "sec3-char3");
        VerificationReport second = run_section(dir, "sec3-char3");
        zero_durations(first);
        zero_durations(second);
        if (to_json_like(first) != to_json_like(second))
            return {false, "two identical runs produced different reports"};
        return {true, "repeated run produces a byte-identical report"};
    });

    rep.duration_ms = ms_since(t0);
    return rep;
}

} // namespace cremona
