#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

/* Quotient of polynomials kept in canonical form: gcd-reduced, and the
 * denominator unit-normal (integer-primitive with positive leading
 * coefficient over Q, monic over F_p).  Zero is 0/1.  Canonical forms make
 * operator== a plain term comparison. */
class RationalFunction {
public:
    RationalFunction() = default;

    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_poly(Polynomial p);
    static RationalFunction constant(RingPtr ring, const mpq_class& c);
    static RationalFunction variable(RingPtr ring, const std::string& name);

    const RingPtr& ring() const { return num_.ring(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    /* Exact point evaluation; throws evaluation_error when the denominator
     * vanishes at the point. */
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    bool uses_variable(std::size_t var) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    Polynomial num_, den_;
};

/* Equality via cross-multiplication preceded by a random-evaluation screen
 * (unequal operands are almost always rejected by the screen without any
 * polynomial multiplication).  Exact: never wrong in either direction. */
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/* The screen alone: false means definitely unequal, true means the `trials`
 * random evaluations all matched (or stayed inconclusive).  Over the
 * rationals evaluation happens modulo a fixed 61-bit Mersenne prime. */
bool rf_probably_equal(const RationalFunction& a, const RationalFunction& b,
                       std::uint64_t seed, int trials);

/* Variable assignment for substitution.  Images live in a common target
 * ring over the same field; only variables actually appearing in the
 * substituted expression need an image. */
struct Substitution {
    RingPtr source;
    RingPtr target;
    std::vector<std::optional<RationalFunction>> images;

    Substitution(RingPtr src, RingPtr tgt);
    void set(const std::string& source_var, RationalFunction image);
    void set(std::size_t source_var, RationalFunction image);
};

RationalFunction substitute(const Polynomial& p, const Substitution& s);
RationalFunction substitute(const RationalFunction& f, const Substitution& s);

/* Substitute into several expressions at once, sharing the cleared common
 * denominator and all cached powers across them. */
std::vector<RationalFunction> substitute_many(const std::vector<RationalFunction>& fs,
                                              const Substitution& s);

/* Image of f under s as an exact but unreduced numerator/denominator pair.
 * Skipping the gcd reduction makes this far cheaper than substitute() when
 * the canonical form is never needed (e.g. for equality checks).  Throws
 * undefined_substitution when the denominator vanishes identically. */
std::pair<Polynomial, Polynomial> substitute_fraction(const RationalFunction& f,
                                                      const Substitution& s);

/* num/den == g, with num/den not necessarily reduced (den nonzero).  Same
 * contract as rf_equal: a random-evaluation screen rejects almost every
 * unequal pair cheaply, then cross-multiplication decides exactly. */
bool fraction_equal(const Polynomial& num, const Polynomial& den,
                    const RationalFunction& g);

} // namespace cremona
