// Command-line front end: run the verification suite, apply and compose
// maps from scenario-format files, check involutions, and compute
// resultants.  Exit codes: 0 all checks passed (or pure computation
// succeeded), 1 a verification failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cremona/frontend.hpp"
#include "cremona/report.hpp"

namespace {

using namespace cremona;

void print_map(const CremonaMap& m) {
    for (std::size_t i = 0; i < m.ring()->arity(); ++i)
        std::printf("%s = %s\n", m.ring()->vars[i].c_str(),
                    to_string(m.image(i)).c_str());
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open " + path + " for writing");
    out << body;
}

int cmd_verify(const std::string& section, std::uint64_t seed,
               const std::string& report_path, const std::string& format) {
    std::string dir = default_scenario_dir();
    if (section == "all") {
        SuiteReport rep = run_all(dir, seed);
        std::fputs((format == "text" ? to_text(rep) : to_json_like(rep)).c_str(),
                   stdout);
        if (!report_path.empty()) save_report(rep, report_path, format);
        return rep.all_pass ? 0 : 1;
    }
    VerificationReport rep = run_section(dir, section);
    std::fputs((format == "text" ? to_text(rep) : to_json_like(rep)).c_str(),
               stdout);
    if (!report_path.empty()) {
        VerificationReport stable = rep;
        zero_durations(stable);
        write_file(report_path,
                   format == "text" ? to_text(stable) : to_json_like(stable));
    }
    return rep.pass ? 0 : 1;
}

int cmd_apply(const std::string& map_file, const std::string& expr_text) {
    Scenario sc = load_single_map_file(map_file);
    const CremonaMap& m = only_map(sc);
    RationalFunction e =
        parse_expression(expr_text, m.ring(), scenario_resolver(sc, m.ring()));
    std::printf("%s\n", to_string(m.pullback(e)).c_str());
    return 0;
}

int cmd_compose(const std::vector<std::string>& map_files) {
    Scenario first = load_single_map_file(map_files[0]);
    Scenario second = load_single_map_file(map_files[1]);
    const CremonaMap& f = only_map(first);
    const CremonaMap& g = only_map(second);
    print_map(compose(f, g));
    return 0;
}

int cmd_involution_check(const std::string& map_file) {
    Scenario sc = load_single_map_file(map_file);
    const CremonaMap& m = only_map(sc);
    if (verify_involution(m)) {
        std::printf("involution: yes\n");
        return 0;
    }
    std::printf("involution: no (%s)\n",
                is_identity(m) ? "the map is the identity"
                               : "the square is not the identity");
    return 1;
}

int cmd_resultant(const std::string& var, const std::vector<std::string>& polys) {
    std::printf("%s\n",
                to_string(resultant_from_texts(var, polys[0], polys[1])).c_str());
    return 0;
}

int cmd_errata() {
    ErrataReport rep = detect_errata(default_scenario_dir());
    std::fputs(to_text(rep).c_str(), stdout);
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of a Cremona involution's fixed-field towers"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify-paper", "run the scenario suite and report every step");
    std::string section = "all";
    std::uint64_t seed = 1;
    std::string report_path;
    std::string format = "text";
    verify->add_option("--section", section, "which scenario to run")
        ->check(CLI::IsMember(
            {"sec2", "sec3-char2", "sec3-char3", "sec4", "sec5", "all"}));
    verify->add_option("--seed", seed, "seed for the randomized property checks");
    verify->add_option("--report", report_path, "also write the report here");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json-like"}));

    auto* apply = app.add_subcommand(
        "apply", "pull an expression back along a map from a map file");
    std::string apply_map, apply_expr;
    apply->add_option("--map", apply_map, "scenario-format file with one map")
        ->required();
    apply->add_option("--expr", apply_expr, "expression in the map's ring")
        ->required();

    auto* comp = app.add_subcommand(
        "compose", "compose two maps: the first applied after the second");
    std::vector<std::string> comp_maps;
    comp->add_option("--map", comp_maps, "two scenario-format map files")
        ->expected(2)
        ->required();

    auto* invol = app.add_subcommand(
        "involution-check", "exit 0 exactly when the map squares to the "
                            "identity without being the identity");
    std::string invol_map;
    invol->add_option("--map", invol_map, "scenario-format file with one map")
        ->required();

    auto* res = app.add_subcommand(
        "resultant", "resultant of two polynomials in the named variable");
    std::string res_var;
    std::vector<std::string> res_polys;
    res->add_option("--var", res_var, "variable to eliminate")->required();
    res->add_option("--poly", res_polys, "two polynomials over the rationals")
        ->expected(2)
        ->required();

    auto* err = app.add_subcommand(
        "errata", "determine which variants of inconsistently displayed "
                  "formulas are the internally consistent ones");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(section, seed, report_path, format);
        if (apply->parsed()) return cmd_apply(apply_map, apply_expr);
        if (comp->parsed()) return cmd_compose(comp_maps);
        if (invol->parsed()) return cmd_involution_check(invol_map);
        if (res->parsed()) return cmd_resultant(res_var, res_polys);
        if (err->parsed()) return cmd_errata();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
