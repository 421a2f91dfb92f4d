#include <sstream>

#include "cremona/textio.hpp"

namespace cremona {

namespace {

void append_monomial(std::ostringstream& out, const PolyRing& ring, const Monomial& m,
                     bool after_coefficient) {
    bool first = !after_coefficient;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << ring.vars[i];
        if (m[i] > 1) out << "^" << m[i];
    }
}

bool is_constant_monomial(const Monomial& m) {
    for (auto e : m)
        if (e) return false;
    return true;
}

std::string render(const Polynomial& p, std::size_t max_terms) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    std::size_t printed = 0;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it, ++printed) {
        if (printed == max_terms) {
            out << " + [" << (p.terms().size() - printed) << " more terms]";
            break;
        }
        mpq_class c = it->second;
        if (printed == 0) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool constant = is_constant_monomial(it->first);
        bool coefficient_shown = c != 1 || constant;
        if (coefficient_shown) out << c;
        append_monomial(out, *p.ring(), it->first, coefficient_shown);
    }
    return out.str();
}

std::string render(const RationalFunction& f, std::size_t max_terms) {
    if (f.is_polynomial()) return render(f.num(), max_terms);
    return "(" + render(f.num(), max_terms) + ")/(" + render(f.den(), max_terms) + ")";
}

} // namespace

std::string to_string(const Polynomial& p) {
    return render(p, static_cast<std::size_t>(-1));
}

std::string to_string(const RationalFunction& f) {
    return render(f, static_cast<std::size_t>(-1));
}

std::string to_string_truncated(const Polynomial& p, std::size_t max_terms) {
    return render(p, max_terms);
}

std::string to_string_truncated(const RationalFunction& f, std::size_t max_terms) {
    return render(f, max_terms);
}

} // namespace cremona
