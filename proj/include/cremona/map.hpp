#pragma once

#include <optional>
#include <vector>

#include "cremona/ratfunc.hpp"

namespace cremona {

/* Rational self-map of affine n-space: one image per ring variable. */
class CremonaMap {
public:
    CremonaMap(RingPtr ring, std::vector<RationalFunction> images);

    static CremonaMap identity(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<RationalFunction>& images() const { return images_; }
    const RationalFunction& image(std::size_t i) const { return images_.at(i); }

    /* Substitution of this map's images into an expression: the pullback of
     * e along the map, i.e. e composed with the map. */
    RationalFunction pullback(const RationalFunction& e) const;
    RationalFunction pullback(const Polynomial& e) const;

    Substitution as_substitution() const;

    bool operator==(const CremonaMap& o) const { return images_ == o.images_; }

private:
    RingPtr ring_;
    std::vector<RationalFunction> images_;
};

/* compose(f, g) is the map x -> f(g(x)): g's images substituted into f's. */
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

bool is_identity(const CremonaMap& m);

/* True when m is a genuine involution: m o m is the identity and m itself
 * is not. */
bool verify_involution(const CremonaMap& m);

/* Coefficient-wise reduction of the map into characteristic p.  Throws
 * division_by_zero when a coefficient denominator is divisible by p and
 * undefined_substitution when an image's denominator reduces to zero. */
CremonaMap reduce_map_mod_p(const CremonaMap& m, const mpz_class& p);
RationalFunction reduce_rf_mod_p(const RationalFunction& f, const RingPtr& target);

/* How the map acts on a list of generators when every pullback is a unit
 * constant times a (Laurent) monomial in those same generators.
 *
 * exponents[i][j] is the exponent of generators[i] in the pullback of
 * generators[j] (exponent vectors are the columns), constants[j] the unit
 * in front, and determinant the integer determinant of the exponent
 * matrix.  nullopt when some pullback is not of this shape. */
struct MonomialActionProfile {
    std::vector<std::vector<long>> exponents;
    std::vector<mpq_class> constants;
    mpz_class determinant;
};

std::optional<MonomialActionProfile>
monomial_profile(const CremonaMap& m, const std::vector<RationalFunction>& generators);

} // namespace cremona
