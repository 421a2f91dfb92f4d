#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

/* Exponent vector; length always equals the ring's variable count.
 * std::vector's lexicographic operator< makes the first-listed variable the
 * most significant, which is exactly the lex term order used throughout. */
using Monomial = std::vector<std::uint32_t>;

struct PolyRing {
    Field field;
    std::vector<std::string> vars;

    std::size_t arity() const { return vars.size(); }
    int index_of(const std::string& name) const; // -1 when absent

    bool operator==(const PolyRing& o) const {
        return field == o.field && vars == o.vars;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field f, std::vector<std::string> vars);

/* Sparse multivariate polynomial with exact coefficients.  Invariants:
 * no stored zero coefficients, every coefficient canonical in the field,
 * every exponent vector of length ring->arity(). */
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    Polynomial() = default; // null ring; unusable until assigned

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial from_terms(RingPtr ring, TermMap terms);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* Value of a constant polynomial (zero polynomial gives 0). */
    mpq_class constant_value() const;

    /* Total degree; -1 for the zero polynomial. */
    long total_degree() const;
    long degree_in(std::size_t var) const;

    /* Leading data under lex order.  Precondition: nonzero. */
    const Monomial& leading_monomial() const;
    const mpq_class& leading_coefficient() const;

    /* Coefficient of an exact monomial (zero when absent). */
    mpq_class coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const mpq_class& c) const;
    Polynomial pow(unsigned long e) const;

    Polynomial derivative(std::size_t var) const;

    /* Exact quotient; throws inexact_division when the division does not
     * come out even, division_by_zero on a zero divisor. */
    Polynomial divexact(const Polynomial& divisor) const;
    std::optional<Polynomial> try_divexact(const Polynomial& divisor) const;

    /* Point evaluation; point.size() must equal the ring arity. */
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    /* Does the variable occur with positive degree anywhere. */
    bool uses_variable(std::size_t var) const;

    /* Coefficients of this viewed as a univariate polynomial in `var`;
     * entry d is the coefficient of var^d, a polynomial not using `var`.
     * Size is degree_in(var)+1; empty for the zero polynomial. */
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(RingPtr ring, std::size_t var,
                                           const std::vector<Polynomial>& coeffs);

    /* Split off rational content: *this == content * primitive where the
     * primitive part has coprime integer coefficients and positive leading
     * coefficient.  Zero splits as (0, zero).  Rationals only. */
    std::pair<mpq_class, Polynomial> rational_content() const;

    /* Unit-normalized copy: over the rationals the integer-primitive part
     * with positive leading coefficient, over F_p the monic multiple.
     * Zero stays zero. */
    Polynomial unit_normal() const;

    /* Image under coefficient-wise reduction into `target`, which must have
     * the same variables (possibly different field). */
    Polynomial map_coefficients(const RingPtr& target) const;

    /* Same terms transplanted into a ring with a different variable list.
     * `var_map[i]` is the target index of source variable i, or -1 when the
     * source variable must be absent (positive degree throws ring_mismatch). */
    Polynomial rename_variables(const RingPtr& target,
                                const std::vector<int>& var_map) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    TermMap terms_;

    void insert_term(const Monomial& m, const mpq_class& c);
    friend void require_same_ring(const Polynomial& a, const Polynomial& b);
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/* GCD in the canonical unit-normal form (integer-primitive with positive
 * leading coefficient over Q, monic over F_p).  gcd(0, 0) == 0. */
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/* Resultant of a and b with respect to one variable, with the Sylvester
 * determinant sign convention (a's coefficient rows listed first).
 * Preconditions: a, b nonzero and not both constant in `var`. */
Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var);

/* If a == c * m * b for a unit constant c and monomial m, return (c, m). */
std::optional<std::pair<mpq_class, Monomial>>
equal_up_to_unit_monomial(const Polynomial& a, const Polynomial& b);

} // namespace cremona
