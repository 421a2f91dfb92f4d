#include "cremona/frontend.hpp"

#include <regex>
#include <set>
#include <vector>

#include "cremona/sylvester.hpp"

namespace cremona {

Scenario load_single_map_file(const std::string& path) {
    Scenario sc = load_scenario(path);
    if (sc.maps.size() != 1)
        throw error(path + " must define exactly one map, found " +
                    std::to_string(sc.maps.size()));
    return sc;
}

const CremonaMap& only_map(const Scenario& sc) { return sc.maps.begin()->second; }

NameResolver scenario_resolver(const Scenario& sc, const RingPtr& ring) {
    return [sc, ring](const std::string& name) -> std::optional<RationalFunction> {
        auto it = sc.exprs.find(name);
        if (it != sc.exprs.end() && *it->second.ring() == *ring) return it->second;
        return std::nullopt;
    };
}

Polynomial resultant_from_texts(const std::string& var, const std::string& a,
                                const std::string& b) {
    std::set<std::string> names{var};
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    for (const std::string& text : {a, b}) {
        for (auto it = std::sregex_iterator(text.begin(), text.end(), ident);
             it != std::sregex_iterator(); ++it)
            names.insert(it->str());
    }
    RingPtr ring = make_ring(Field::rationals(),
                             std::vector<std::string>(names.begin(), names.end()));
    std::vector<Polynomial> ps;
    for (const std::string& text : {a, b}) {
        RationalFunction f = parse_expression(text, ring);
        if (!f.is_polynomial())
            throw error("'" + text + "' is not a polynomial");
        ps.push_back(f.num());
    }
    int idx = ring->index_of(var);
    return resultant(ps[0], ps[1], static_cast<std::size_t>(idx));
}

} // namespace cremona
