#include "cremona/poly.hpp"

#include <algorithm>

namespace cremona {

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(Field f, std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw error("duplicate ring variable " + vars[i]);
    return std::make_shared<const PolyRing>(PolyRing{std::move(f), std::move(vars)});
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_)
        throw ring_mismatch("operand has no ring");
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
        throw ring_mismatch("operands belong to different rings");
}

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    Polynomial p = zero(std::move(ring));
    mpq_class r = p.ring_->field.reduce(c);
    if (r != 0) p.terms_.emplace(Monomial(p.ring_->arity(), 0), std::move(r));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Polynomial p = zero(std::move(ring));
    if (index >= p.ring_->arity())
        throw error("variable index out of range");
    Monomial m(p.ring_->arity(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), mpq_class(1));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
    int i = ring->index_of(name);
    if (i < 0) throw error("no variable named " + name);
    return variable(std::move(ring), static_cast<std::size_t>(i));
}

Polynomial Polynomial::from_terms(RingPtr ring, TermMap terms) {
    Polynomial p = zero(std::move(ring));
    for (auto& [m, c] : terms) {
        if (m.size() != p.ring_->arity())
            throw error("monomial length does not match ring arity");
        p.insert_term(m, c);
    }
    return p;
}

void Polynomial::insert_term(const Monomial& m, const mpq_class& c) {
    mpq_class r = ring_->field.reduce(c);
    if (r == 0) return;
    auto [it, fresh] = terms_.emplace(m, r);
    if (!fresh) {
        it->second = ring_->field.add(it->second, r);
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](std::uint32_t e) { return e == 0; }));
}

mpq_class Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw error("polynomial is not constant");
    return terms_.begin()->second;
}

long Polynomial::total_degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (auto e : m) d += e;
        best = std::max(best, d);
    }
    return best;
}

long Polynomial::degree_in(std::size_t var) const {
    long best = -1;
    for (const auto& [m, c] : terms_)
        best = std::max(best, static_cast<long>(m[var]));
    return terms_.empty() ? -1 : best;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const mpq_class& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = zero(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_->field.neg(c));
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, ring_->field.neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial r = zero(ring_);
    const std::size_t n = ring_->arity();
    Monomial prod(n);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < n; ++i) prod[i] = ma[i] + mb[i];
            r.insert_term(prod, ring_->field.mul(ca, cb));
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r = zero(ring_);
    mpq_class rc = ring_->field.reduce(c);
    if (rc == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, ring_->field.mul(v, rc));
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->arity()) throw error("variable index out of range");
    Polynomial r = zero(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.insert_term(d, ring_->field.mul(c, mpq_class(m[var])));
    }
    return r;
}

std::optional<Polynomial> Polynomial::try_divexact(const Polynomial& divisor) const {
    require_same_ring(*this, divisor);
    if (divisor.is_zero()) throw division_by_zero("polynomial division by zero");
    Polynomial q = zero(ring_);
    Polynomial r = *this;
    const Monomial& lmb = divisor.leading_monomial();
    const mpq_class& lcb = divisor.leading_coefficient();
    const std::size_t n = ring_->arity();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        Monomial d(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (lmr[i] < lmb[i]) return std::nullopt;
            d[i] = lmr[i] - lmb[i];
        }
        mpq_class c = ring_->field.div(r.leading_coefficient(), lcb);
        Polynomial t = zero(ring_);
        t.terms_.emplace(d, c);
        q += t;
        r -= t * divisor;
    }
    return q;
}

Polynomial Polynomial::divexact(const Polynomial& divisor) const {
    auto q = try_divexact(divisor);
    if (!q) throw inexact_division("polynomial division left a remainder");
    return *q;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (point.size() != ring_->arity())
        throw evaluation_error("point arity does not match ring arity");
    std::vector<mpq_class> canon(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        canon[i] = ring_->field.reduce(point[i]);
    mpq_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::uint32_t k = 0; k < m[i]; ++k)
                t = ring_->field.mul(t, canon[i]);
        }
        acc = ring_->field.add(acc, t);
    }
    return acc;
}

bool Polynomial::uses_variable(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    long d = degree_in(var);
    if (d < 0) return {};
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1, zero(ring_));
    for (const auto& [m, c] : terms_) {
        Monomial stripped = m;
        std::uint32_t e = stripped[var];
        stripped[var] = 0;
        out[e].terms_.emplace(std::move(stripped), c);
    }
    return out;
}

Polynomial Polynomial::from_coefficients_in(RingPtr ring, std::size_t var,
                                            const std::vector<Polynomial>& coeffs) {
    Polynomial r = zero(ring);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [m, c] : coeffs[d].terms_) {
            if (m[var] != 0) throw error("coefficient uses the carrier variable");
            Monomial lifted = m;
            lifted[var] = static_cast<std::uint32_t>(d);
            r.insert_term(lifted, c);
        }
    }
    return r;
}

std::pair<mpq_class, Polynomial> Polynomial::rational_content() const {
    if (!ring_->field.is_rationals())
        throw error("rational content requires characteristic 0");
    if (is_zero()) return {mpq_class(0), *this};
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coefficient() < 0) content = -content;
    Polynomial prim = zero(ring_);
    for (const auto& [m, c] : terms_) prim.terms_.emplace(m, c / content);
    return {content, prim};
}

Polynomial Polynomial::unit_normal() const {
    if (is_zero()) return *this;
    if (ring_->field.is_rationals()) return rational_content().second;
    return scaled(ring_->field.inv(leading_coefficient()));
}

Polynomial Polynomial::map_coefficients(const RingPtr& target) const {
    if (target->vars != ring_->vars)
        throw ring_mismatch("coefficient mapping must preserve the variable list");
    Polynomial r = zero(target);
    for (const auto& [m, c] : terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::rename_variables(const RingPtr& target,
                                        const std::vector<int>& var_map) const {
    if (var_map.size() != ring_->arity())
        throw error("variable map length does not match ring arity");
    if (target->field != ring_->field)
        throw ring_mismatch("variable renaming must preserve the field");
    Polynomial r = zero(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->arity(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] < 0)
                throw ring_mismatch("polynomial uses variable " + ring_->vars[i] +
                                    " absent from the target ring");
            t[static_cast<std::size_t>(var_map[i])] += m[i];
        }
        r.insert_term(t, c);
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(*this, o);
    return terms_ == o.terms_;
}

std::optional<std::pair<mpq_class, Monomial>>
equal_up_to_unit_monomial(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.terms().size() != b.terms().size()) return std::nullopt;
    const Field& F = a.ring()->field;
    const Monomial& la = a.leading_monomial();
    const Monomial& lb = b.leading_monomial();
    Monomial shift(la.size());
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] < lb[i]) return std::nullopt;
        shift[i] = la[i] - lb[i];
    }
    mpq_class c = F.div(a.leading_coefficient(), b.leading_coefficient());
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
        for (std::size_t i = 0; i < shift.size(); ++i)
            if (ia->first[i] != ib->first[i] + shift[i]) return std::nullopt;
        if (ia->second != F.mul(c, ib->second)) return std::nullopt;
    }
    return std::make_pair(c, shift);
}

} // namespace cremona
