#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cremona/scenario.hpp"
#include "cremona/textio.hpp"

namespace cremona {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Loader {
    std::string path;
    std::string file;
    Scenario sc;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw schema_error(file + ":" + std::to_string(line_no) + ": " + field, what);
    }

    RingPtr ring(const std::string& name) {
        auto it = sc.rings.find(name);
        if (it == sc.rings.end()) fail("ring", "unknown ring " + name);
        return it->second;
    }

    /* Names visible inside an expression: the ring's variables plus every
     * previously defined expression over the same ring. */
    RationalFunction parse_in(const RingPtr& r, const std::string& text,
                              const std::string& field) {
        NameResolver resolver = [&](const std::string& name)
            -> std::optional<RationalFunction> {
            auto it = sc.exprs.find(name);
            if (it != sc.exprs.end() && *it->second.ring() == *r) return it->second;
            return std::nullopt;
        };
        try {
            return parse_expression(text, r, resolver);
        } catch (const parse_error& e) {
            fail(field, e.what());
        } catch (const error& e) {
            fail(field, e.what());
        }
    }

    /* "lhs = rhs" split at the first '='. */
    std::pair<std::string, std::string> assignment(const std::string& s,
                                                   const std::string& field) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(field, "expected '<name> = <expression>'");
        std::string lhs = strip(s.substr(0, eq));
        std::string rhs = strip(s.substr(eq + 1));
        if (lhs.empty() || rhs.empty()) fail(field, "expected '<name> = <expression>'");
        return {lhs, rhs};
    }

    void check_fresh_name(const std::string& name) {
        if (sc.exprs.count(name) || sc.maps.count(name) || sc.covs.count(name) ||
            sc.rewrites.count(name) || sc.rings.count(name))
            fail("name", "duplicate name " + name);
        for (const auto& [rn, r] : sc.rings)
            if (r->index_of(name) >= 0)
                fail("name", "name " + name + " collides with a ring variable");
    }

    void load(std::istream& in);
    void ring_decl(const std::vector<std::string>& words);
    void expr_decl(const std::string& rest);
    void map_block(const std::vector<std::string>& words, std::istream& in);
    void rewrite_block(const std::vector<std::string>& words, std::istream& in);
    void cov_block(const std::vector<std::string>& words, std::istream& in);
    void step_decl(const std::vector<std::string>& words);

    bool next_line(std::istream& in, std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            raw = strip(raw);
            if (raw.empty()) continue;
            out = raw;
            return true;
        }
        return false;
    }
};

void Loader::ring_decl(const std::vector<std::string>& words) {
    // ring <name> [field <N>] : <var> <var> ...
    std::size_t i = 1;
    if (i >= words.size()) fail("ring", "missing ring name");
    std::string name = words[i++];
    mpz_class chr = sc.characteristic;
    if (i + 1 < words.size() && words[i] == "field") {
        chr = mpz_class(words[i + 1]);
        i += 2;
    }
    if (i >= words.size() || words[i] != ":") fail("ring." + name, "expected ':'");
    ++i;
    std::vector<std::string> vars(words.begin() + static_cast<long>(i), words.end());
    if (vars.empty()) fail("ring." + name, "a ring needs at least one variable");
    if (sc.rings.count(name)) fail("ring." + name, "duplicate ring");
    Field f = chr == 0 ? Field::rationals() : Field::prime(chr);
    sc.rings.emplace(name, make_ring(f, vars));
}

void Loader::expr_decl(const std::string& rest) {
    // expr <ring> <name> = <expression>
    auto [head, rhs] = assignment(rest, "expr");
    auto words = split_ws(head);
    if (words.size() != 2) fail("expr", "expected 'expr <ring> <name> = <expression>'");
    RingPtr r = ring(words[0]);
    check_fresh_name(words[1]);
    sc.exprs.emplace(words[1], parse_in(r, rhs, "expr." + words[1]));
}

void Loader::map_block(const std::vector<std::string>& words, std::istream& in) {
    // map <ring> <name> :  then one "<var> = <expression>" per variable, then end
    if (words.size() != 4 || words[3] != ":")
        fail("map", "expected 'map <ring> <name> :'");
    RingPtr r = ring(words[1]);
    const std::string& name = words[2];
    check_fresh_name(name);
    std::vector<std::optional<RationalFunction>> images(r->arity());
    std::string line;
    while (true) {
        if (!next_line(in, line)) fail("map." + name, "unterminated block");
        if (line == "end") break;
        auto [var, rhs] = assignment(line, "map." + name);
        int idx = r->index_of(var);
        if (idx < 0) fail("map." + name, "unknown variable " + var);
        if (images[static_cast<std::size_t>(idx)])
            fail("map." + name, "duplicate image for " + var);
        images[static_cast<std::size_t>(idx)] =
            parse_in(r, rhs, "map." + name + "." + var);
    }
    std::vector<RationalFunction> final_images;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) fail("map." + name, "missing image for " + r->vars[i]);
        final_images.push_back(*images[i]);
    }
    sc.maps.emplace(name, CremonaMap(r, std::move(final_images)));
}

void Loader::rewrite_block(const std::vector<std::string>& words, std::istream& in) {
    // rewrite <name> from <ring> to <ring> :  then "<oldvar> = <expr>", end
    if (words.size() != 7 || words[2] != "from" || words[4] != "to" || words[6] != ":")
        fail("rewrite", "expected 'rewrite <name> from <ring> to <ring> :'");
    const std::string& name = words[1];
    check_fresh_name(name);
    RingPtr src = ring(words[3]);
    RingPtr tgt = ring(words[5]);
    Substitution s(src, tgt);
    std::string line;
    while (true) {
        if (!next_line(in, line)) fail("rewrite." + name, "unterminated block");
        if (line == "end") break;
        auto [var, rhs] = assignment(line, "rewrite." + name);
        if (src->index_of(var) < 0) fail("rewrite." + name, "unknown variable " + var);
        s.set(var, parse_in(tgt, rhs, "rewrite." + name + "." + var));
    }
    sc.rewrites.emplace(name, std::move(s));
}

void Loader::cov_block(const std::vector<std::string>& words, std::istream& in) {
    // cov <name> from <ring> to <ring> :  then forward/backward lines, end
    if (words.size() != 7 || words[2] != "from" || words[4] != "to" || words[6] != ":")
        fail("cov", "expected 'cov <name> from <ring> to <ring> :'");
    const std::string& name = words[1];
    check_fresh_name(name);
    ChangeOfVariables cov;
    cov.old_ring = ring(words[3]);
    cov.new_ring = ring(words[5]);
    std::vector<std::optional<RationalFunction>> fwd(cov.new_ring->arity());
    std::vector<std::optional<RationalFunction>> bwd(cov.old_ring->arity());
    std::string line;
    while (true) {
        if (!next_line(in, line)) fail("cov." + name, "unterminated block");
        if (line == "end") break;
        bool forward = line.rfind("forward ", 0) == 0;
        bool backward = line.rfind("backward ", 0) == 0;
        if (!forward && !backward)
            fail("cov." + name, "expected 'forward ...' or 'backward ...'");
        auto [var, rhs] = assignment(line.substr(forward ? 8 : 9), "cov." + name);
        if (forward) {
            int idx = cov.new_ring->index_of(var);
            if (idx < 0) fail("cov." + name, "unknown new generator " + var);
            fwd[static_cast<std::size_t>(idx)] =
                parse_in(cov.old_ring, rhs, "cov." + name + ".forward." + var);
        } else {
            int idx = cov.old_ring->index_of(var);
            if (idx < 0) fail("cov." + name, "unknown old variable " + var);
            bwd[static_cast<std::size_t>(idx)] =
                parse_in(cov.new_ring, rhs, "cov." + name + ".backward." + var);
        }
    }
    for (std::size_t i = 0; i < fwd.size(); ++i) {
        if (!fwd[i])
            fail("cov." + name, "missing forward image for " + cov.new_ring->vars[i]);
        cov.forward.push_back(*fwd[i]);
    }
    bool any_bwd = false;
    for (const auto& b : bwd) any_bwd = any_bwd || b.has_value();
    if (any_bwd) {
        for (std::size_t i = 0; i < bwd.size(); ++i) {
            if (!bwd[i])
                fail("cov." + name,
                     "missing backward image for " + cov.old_ring->vars[i]);
            cov.backward.push_back(*bwd[i]);
        }
    }
    validate(cov);
    sc.covs.emplace(name, std::move(cov));
}

void Loader::step_decl(const std::vector<std::string>& words) {
    // step <id> <op> [key=value ...]
    if (words.size() < 3) fail("step", "expected 'step <id> <op> [key=value ...]'");
    ScenarioStep st;
    st.id = words[1];
    st.op = words[2];
    st.line = line_no;
    for (const auto& s : sc.steps)
        if (s.id == st.id) fail("step." + st.id, "duplicate step id");
    for (std::size_t i = 3; i < words.size(); ++i) {
        std::size_t eq = words[i].find('=');
        if (eq == std::string::npos)
            fail("step." + st.id, "expected key=value, got '" + words[i] + "'");
        std::string key = words[i].substr(0, eq);
        std::string value = words[i].substr(eq + 1);
        if (key.empty()) fail("step." + st.id, "empty argument key");
        if (key == "display") {
            st.display = value;
        } else {
            if (st.args.count(key)) fail("step." + st.id, "duplicate key " + key);
            st.args.emplace(key, value);
        }
    }
    sc.steps.push_back(std::move(st));
}

void Loader::load(std::istream& in) {
    std::string line;
    bool have_header = false;
    while (next_line(in, line)) {
        auto words = split_ws(line);
        const std::string& kind = words[0];
        if (kind == "scenario") {
            if (words.size() != 2) fail("scenario", "expected 'scenario <id>'");
            sc.id = words[1];
            have_header = true;
        } else if (kind == "field") {
            if (words.size() != 2) fail("field", "expected 'field <characteristic>'");
            sc.characteristic = mpz_class(words[1]);
        } else if (!have_header) {
            fail("scenario", "file must start with 'scenario <id>'");
        } else if (kind == "ring") {
            ring_decl(words);
        } else if (kind == "expr") {
            expr_decl(strip(line.substr(4)));
        } else if (kind == "map") {
            map_block(words, in);
        } else if (kind == "rewrite") {
            rewrite_block(words, in);
        } else if (kind == "cov") {
            cov_block(words, in);
        } else if (kind == "step") {
            step_decl(words);
        } else {
            fail(kind, "unknown statement");
        }
    }
    if (!have_header) fail("scenario", "empty scenario file");
}

} // namespace

const RingPtr& Scenario::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end())
        throw schema_error(id + ".ring", "unknown ring " + name);
    return it->second;
}

const RationalFunction& Scenario::expr(const std::string& name) const {
    auto it = exprs.find(name);
    if (it == exprs.end())
        throw schema_error(id + ".expr", "unknown expression " + name);
    return it->second;
}

const CremonaMap& Scenario::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw schema_error(id + ".map", "unknown map " + name);
    return it->second;
}

const ChangeOfVariables& Scenario::cov(const std::string& name) const {
    auto it = covs.find(name);
    if (it == covs.end()) throw schema_error(id + ".cov", "unknown cov " + name);
    return it->second;
}

const Substitution& Scenario::rewrite(const std::string& name) const {
    auto it = rewrites.find(name);
    if (it == rewrites.end())
        throw schema_error(id + ".rewrite", "unknown rewrite " + name);
    return it->second;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error(path, "cannot open scenario file");
    Loader loader;
    loader.path = path;
    loader.file = std::filesystem::path(path).filename().string();
    loader.load(in);
    loader.sc.path = path;
    return std::move(loader.sc);
}

std::string default_scenario_dir() {
    if (const char* env = std::getenv("CREMONA_SCENARIO_DIR"); env && *env)
        return env;
    std::error_code ec;
    if (std::filesystem::is_directory("scenarios", ec)) return "scenarios";
#ifdef CREMONA_SOURCE_SCENARIO_DIR
    return CREMONA_SOURCE_SCENARIO_DIR;
#else
    return "scenarios";
#endif
}

const std::vector<std::string>& scenario_sections() {
    static const std::vector<std::string> sections{
        "sec2", "sec3-char2", "sec3-char3", "sec4", "sec5"};
    return sections;
}

} // namespace cremona
