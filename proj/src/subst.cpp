#include "cremona/ratfunc.hpp"

namespace cremona {

Substitution::Substitution(RingPtr src, RingPtr tgt)
    : source(std::move(src)), target(std::move(tgt)), images(source->arity()) {
    if (source->field != target->field)
        throw ring_mismatch("substitution must preserve the coefficient field");
}

void Substitution::set(std::size_t source_var, RationalFunction image) {
    if (source_var >= source->arity()) throw error("variable index out of range");
    if (!(*image.ring() == *target))
        throw ring_mismatch("substitution image lives in the wrong ring");
    images[source_var] = std::move(image);
}

void Substitution::set(const std::string& source_var, RationalFunction image) {
    int i = source->index_of(source_var);
    if (i < 0) throw error("no variable named " + source_var);
    set(static_cast<std::size_t>(i), std::move(image));
}

namespace {

/* Shared state for substituting several polynomials under one assignment:
 * the common denominator and all power tables are computed once.
 *
 * With D = lcm of the image denominators and q_i = image_i * D (a
 * polynomial), a polynomial p of total degree t maps to N / D^t where
 * N = sum over terms c * prod x_i^{e_i} of  c * prod q_i^{e_i} * D^{t-|e|}.
 * Keeping everything over a single cleared denominator defers all gcd work
 * to one final reduction. */
class Engine {
public:
    Engine(std::vector<bool> used, const Substitution& s)
        : s_(s), used_(std::move(used)) {
        const std::size_t n = s.source->arity();
        D_ = Polynomial::constant(s.target, 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (!used_[i]) continue;
            if (!s.images[i])
                throw undefined_substitution("no image for variable " +
                                             s.source->vars[i]);
            D_ = lcm(D_, s.images[i]->den());
        }
        numerators_.resize(n);
        var_pows_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!used_[i]) continue;
            numerators_[i] = s.images[i]->num() * D_.divexact(s.images[i]->den());
            var_pows_[i].push_back(Polynomial::constant(s.target, 1));
        }
        d_pows_.push_back(Polynomial::constant(s.target, 1));
    }

    /* Numerator of p's image over the denominator D^(p's total degree). */
    std::pair<Polynomial, long> clear_substitute(const Polynomial& p) {
        long t = std::max(p.total_degree(), 0L);
        Polynomial acc = Polynomial::zero(s_.target);
        for (const auto& [m, c] : p.terms()) {
            long degsum = 0;
            Polynomial term = Polynomial::constant(s_.target, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                term *= power(var_pows_[i], numerators_[i], m[i]);
                degsum += m[i];
            }
            term *= power(d_pows_, D_, static_cast<std::uint32_t>(t - degsum));
            acc += term;
        }
        return {acc, t};
    }

    const Polynomial& common_denominator() const { return D_; }

    Polynomial d_power(long e) {
        return power(d_pows_, D_, static_cast<std::uint32_t>(e));
    }

private:
    const Polynomial& power(std::vector<Polynomial>& cache, const Polynomial& base,
                            std::uint32_t e) {
        while (cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    }

    const Substitution& s_;
    std::vector<bool> used_;
    Polynomial D_;
    std::vector<Polynomial> numerators_;
    std::vector<std::vector<Polynomial>> var_pows_;
    std::vector<Polynomial> d_pows_;
};

} // namespace

namespace {

std::vector<bool> used_mask(const Polynomial& p, const Substitution& s) {
    if (!(*p.ring() == *s.source))
        throw ring_mismatch("expression does not live in the substitution source ring");
    std::vector<bool> used(s.source->arity(), false);
    for (std::size_t i = 0; i < used.size(); ++i) used[i] = p.uses_variable(i);
    return used;
}

RationalFunction substitute_with(Engine& eng, const RationalFunction& f) {
    auto [a, ta] = eng.clear_substitute(f.num());
    auto [b, tb] = eng.clear_substitute(f.den());
    if (b.is_zero())
        throw undefined_substitution("denominator becomes identically zero");
    if (ta >= tb) return RationalFunction(a, b * eng.d_power(ta - tb));
    return RationalFunction(a * eng.d_power(tb - ta), b);
}

} // namespace

RationalFunction substitute(const Polynomial& p, const Substitution& s) {
    Engine eng(used_mask(p, s), s);
    auto [num, t] = eng.clear_substitute(p);
    return RationalFunction(num, eng.d_power(t));
}

RationalFunction substitute(const RationalFunction& f, const Substitution& s) {
    std::vector<bool> used = used_mask(f.num(), s);
    std::vector<bool> uden = used_mask(f.den(), s);
    for (std::size_t i = 0; i < used.size(); ++i)
        used[i] = used[i] || uden[i];
    Engine eng(std::move(used), s);
    return substitute_with(eng, f);
}

std::pair<Polynomial, Polynomial> substitute_fraction(const RationalFunction& f,
                                                      const Substitution& s) {
    std::vector<bool> used = used_mask(f.num(), s);
    std::vector<bool> uden = used_mask(f.den(), s);
    for (std::size_t i = 0; i < used.size(); ++i)
        used[i] = used[i] || uden[i];
    Engine eng(std::move(used), s);
    auto [a, ta] = eng.clear_substitute(f.num());
    auto [b, tb] = eng.clear_substitute(f.den());
    if (b.is_zero())
        throw undefined_substitution("denominator becomes identically zero");
    if (ta >= tb) return {a, b * eng.d_power(ta - tb)};
    return {a * eng.d_power(tb - ta), b};
}

std::vector<RationalFunction> substitute_many(const std::vector<RationalFunction>& fs,
                                              const Substitution& s) {
    std::vector<bool> used(s.source->arity(), false);
    for (const RationalFunction& f : fs) {
        std::vector<bool> un = used_mask(f.num(), s);
        std::vector<bool> ud = used_mask(f.den(), s);
        for (std::size_t i = 0; i < used.size(); ++i)
            used[i] = used[i] || un[i] || ud[i];
    }
    Engine eng(std::move(used), s);
    std::vector<RationalFunction> out;
    out.reserve(fs.size());
    for (const RationalFunction& f : fs) out.push_back(substitute_with(eng, f));
    return out;
}

} // namespace cremona
