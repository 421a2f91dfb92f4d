#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cremona/report.hpp"
#include "cremona/runner.hpp"
#include "cremona/scenario.hpp"

using namespace cremona;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const ErrataReport& errata_report() {
    static ErrataReport rep = detect_errata(default_scenario_dir());
    return rep;
}

} // namespace

TEST_CASE("the canonical section list is fixed and loadable") {
    const auto& sections = scenario_sections();
    REQUIRE(sections.size() == 5);
    CHECK(sections[0] == "sec2");
    CHECK(sections[1] == "sec3-char2");
    CHECK(sections[2] == "sec3-char3");
    CHECK(sections[3] == "sec4");
    CHECK(sections[4] == "sec5");
    for (const auto& name : sections) {
        Scenario sc = load_scenario(default_scenario_dir() + "/" + name + ".scn");
        CHECK(sc.id == name);
    }
}

TEST_CASE("run_section: verdicts are deterministic and reports byte-stable") {
    VerificationReport a = run_section(default_scenario_dir(), "sec3-char3");
    VerificationReport b = run_section(default_scenario_dir(), "sec3-char3");
    CHECK(a.pass);
    CHECK(!a.steps.empty());
    for (const auto& st : a.steps) CHECK(st.pass);

    zero_durations(a);
    zero_durations(b);
    CHECK(to_json_like(a) == to_json_like(b));
    CHECK(to_text(a) == to_text(b));
}

TEST_CASE("run_scenario: steps never abort the run; failures carry witnesses") {
    const char* body = R"(scenario corrupt
field 0
ring x : x1 x2
ring y : y1 y2 y3

expr x y1x = 3*x1-9*x2-x2^2
expr x y2x = 27*x1+9*x1*x2+x2^3
expr x y3x = -27*x1-2*x1^2-9*x1*x2-2*x1*x2^2+x2^3

# 729 -> 728 in the y1^3*y2 coefficient
expr y fbad = 2*y1^6+728*y1^3*y2-27*y1^4*y2+4*y1^3*y2^2-27*y1*y2^3+2*y2^4+729*y1^3*y3-27*y1^4*y3-27*y1*y2^2*y3+729*y2*y3^2+729*y3^3

cov xy from x to y :
  forward y1 = y1x
  forward y2 = y2x
  forward y3 = y3x
end

step k1 relation cov=xy rel=fbad
step k2 involution map=nosuchmap
step k3 relation cov=xy rel=fbad
)";
    std::string path = "/tmp/cremona-test-corrupt.scn";
    {
        std::ofstream out(path);
        out << body;
    }
    Scenario sc = load_scenario(path);
    VerificationReport rep = run_scenario(sc);
    std::remove(path.c_str());

    CHECK_FALSE(rep.pass);
    REQUIRE(rep.steps.size() == 3); // k2's error did not abort k3
    CHECK_FALSE(rep.steps[0].pass);
    CHECK(rep.steps[0].detail.find("residue") != std::string::npos);
    CHECK_FALSE(rep.steps[1].pass);
    CHECK(rep.steps[1].detail.find("error") != std::string::npos);
    CHECK_FALSE(rep.steps[2].pass);
}

TEST_CASE("errata: all findings conclusive, with computed verdicts") {
    const ErrataReport& rep = errata_report();
    CHECK(rep.pass);
    REQUIRE(rep.findings.size() == 3);

    const ErrataFinding* denom = nullptr;
    const ErrataFinding* char3 = nullptr;
    const ErrataFinding* z1dir = nullptr;
    for (const auto& f : rep.findings) {
        if (f.id == "char2-denominator") denom = &f;
        if (f.id == "char3-map") char3 = &f;
        if (f.id == "quartic-z1-direction") z1dir = &f;
    }
    REQUIRE(denom != nullptr);
    REQUIRE(char3 != nullptr);
    REQUIRE(z1dir != nullptr);

    CHECK(denom->conclusive);
    CHECK(denom->verdict.find("x1+x1*x2+x2^3") != std::string::npos);
    CHECK(denom->verdict.find("inconsistent") != std::string::npos);
    bool lists_failing_steps = false;
    for (const auto& line : denom->evidence)
        if (line.find("variantA") != std::string::npos) lists_failing_steps = true;
    CHECK(lists_failing_steps);

    CHECK(char3->conclusive);
    CHECK(char3->verdict.find("consistent") != std::string::npos);

    CHECK(z1dir->conclusive);
    CHECK(z1dir->verdict.find("inverted") != std::string::npos);
}

TEST_CASE("display coverage: every required tag is carried by a step") {
    std::set<std::string> covered;
    auto note = [&covered](const std::string& display) {
        std::string tag;
        std::stringstream ss(display);
        while (std::getline(ss, tag, ','))
            if (!tag.empty()) covered.insert(tag);
    };
    for (const auto& name : scenario_sections()) {
        Scenario sc = load_scenario(default_scenario_dir() + "/" + name + ".scn");
        for (const auto& st : sc.steps) note(st.display);
    }
    for (const auto& st : errata_report().steps) note(st.display);

    REQUIRE(required_display_tags().size() == 49);
    for (const auto& tag : required_display_tags()) {
        INFO("required display tag: ", tag);
        CHECK(covered.count(tag) == 1);
    }
}

TEST_CASE("saved reports round-trip: verdicts survive serialization") {
    // a small synthetic suite report keeps this test independent of runtime
    SuiteReport rep;
    rep.seed = 42;
    rep.all_pass = false;
    rep.duration_ms = 1234;
    VerificationReport sec;
    sec.id = "demo";
    sec.pass = false;
    sec.duration_ms = 7;
    sec.steps.push_back({"s1", "relation", "d-demo", true, "residue 0", 3});
    sec.steps.push_back({"s2", "involution", "", false, "moved x1", 4});
    rep.sections.push_back(sec);
    rep.errata.pass = true;
    rep.errata.findings.push_back(
        {"demo-finding", true, "variant B is consistent", {"line one", "line two"}});
    rep.properties.id = "properties";
    rep.properties.pass = true;
    rep.properties.steps.push_back({"p1", "property", "", true, "100 cases", 5});
    rep.missing_displays.push_back("d-gone");

    const std::string path = "/tmp/cremona-test-report.json";
    save_report(rep, path, "json-like");
    std::string text = slurp(path);
    std::remove(path.c_str());

    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("all_pass") == false);
    CHECK(j.at("duration_ms") == 0); // saved reports zero durations
    REQUIRE(j.at("sections").size() == 1);
    CHECK(j["sections"][0].at("id") == "demo");
    REQUIRE(j["sections"][0].at("steps").size() == 2);
    CHECK(j["sections"][0]["steps"][0].at("pass") == true);
    CHECK(j["sections"][0]["steps"][1].at("pass") == false);
    CHECK(j["sections"][0]["steps"][1].at("detail") == "moved x1");
    CHECK(j.at("errata").at("findings")[0].at("conclusive") == true);
    CHECK(j.at("properties").at("steps")[0].at("pass") == true);
    CHECK(j.at("missing_displays")[0] == "d-gone");

    // identical inputs give byte-identical files
    save_report(rep, path, "json-like");
    std::string again = slurp(path);
    std::remove(path.c_str());
    CHECK(text == again);

    // the text format saves and renders the same verdicts
    save_report(rep, path, "text");
    std::string rendered = slurp(path);
    std::remove(path.c_str());
    CHECK(rendered.find("demo") != std::string::npos);
    CHECK(rendered.find("s2") != std::string::npos);

    CHECK_THROWS_AS(save_report(rep, "/tmp/cremona-test-report.x", "yaml"),
                    std::invalid_argument);
}

TEST_CASE("scenario directory override via the environment") {
    // the override takes effect even for a directory that does not exist;
    // resolution is the caller's concern
    REQUIRE(setenv("CREMONA_SCENARIO_DIR", "/tmp/cremona-alt-scenarios", 1) == 0);
    CHECK(default_scenario_dir() == "/tmp/cremona-alt-scenarios");
    REQUIRE(unsetenv("CREMONA_SCENARIO_DIR") == 0);
    CHECK(default_scenario_dir() != "/tmp/cremona-alt-scenarios");
}

TEST_CASE("property suite: verdicts are seed-independent") {
    VerificationReport p1 = run_properties(default_scenario_dir(), 7);
    VerificationReport p2 = run_properties(default_scenario_dir(), 99);
    CHECK(p1.pass);
    CHECK(p2.pass);
    REQUIRE(p1.steps.size() == p2.steps.size());
    for (std::size_t i = 0; i < p1.steps.size(); ++i) {
        CHECK(p1.steps[i].id == p2.steps[i].id);
        CHECK(p1.steps[i].pass == p2.steps[i].pass);
    }
}
