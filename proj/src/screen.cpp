#include "cremona/ratfunc.hpp"

namespace cremona {

namespace {

/* 2^61 - 1, the Mersenne prime used for screening over the rationals. */
const mpz_class kScreenPrime = (mpz_class(1) << 61) - 1;

bool screen_fractions(const Polynomial& anum, const Polynomial& aden,
                      const Polynomial& bnum, const Polynomial& bden,
                      std::uint64_t seed, int trials) {
    require_same_ring(anum, bnum);
    const RingPtr& ring = anum.ring();
    const bool over_q = ring->field.is_rationals();
    Field F = over_q ? Field::prime(kScreenPrime) : ring->field;

    Polynomial na = anum, da = aden, nb = bnum, db = bden;
    if (over_q) {
        RingPtr modring = make_ring(F, ring->vars);
        try {
            na = na.map_coefficients(modring);
            da = da.map_coefficients(modring);
            nb = nb.map_coefficients(modring);
            db = db.map_coefficients(modring);
        } catch (const division_by_zero&) {
            return true; // a coefficient denominator hits the prime: inconclusive
        }
    }

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    const mpz_class& p = F.characteristic();

    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<mpq_class> point;
            point.reserve(ring->arity());
            for (std::size_t i = 0; i < ring->arity(); ++i)
                point.emplace_back(rng.get_z_range(p));
            mpq_class va = da.evaluate(point);
            mpq_class vb = db.evaluate(point);
            if (va == 0 || vb == 0) continue; // pole, resample
            if (F.mul(na.evaluate(point), vb) != F.mul(nb.evaluate(point), va))
                return false;
            break;
        }
    }
    return true;
}

} // namespace

bool rf_probably_equal(const RationalFunction& a, const RationalFunction& b,
                       std::uint64_t seed, int trials) {
    return screen_fractions(a.num(), a.den(), b.num(), b.den(), seed, trials);
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    if (!rf_probably_equal(a, b, 0x7c3a9d41u, 2)) return false;
    return a.num() * b.den() == b.num() * a.den();
}

bool fraction_equal(const Polynomial& num, const Polynomial& den,
                    const RationalFunction& g) {
    if (!screen_fractions(num, den, g.num(), g.den(), 0x51c6e3b7u, 2))
        return false;
    return num * g.den() == g.num() * den;
}

} // namespace cremona
