#include "cremona/field.hpp"

namespace cremona {

Field Field::prime(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw error("field characteristic must be 0 or a prime, got " + p.get_str());
    return Field(p);
}

mpq_class Field::reduce(const mpq_class& v) const {
    if (is_rationals()) {
        mpq_class r = v;
        r.canonicalize();
        return r;
    }
    mpz_class den = v.get_den(); // canonical mpq: den > 0, gcd(num, den) = 1
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), char_.get_mpz_t()) == 0)
        throw division_by_zero("denominator " + den.get_str() +
                               " is not invertible mod " + char_.get_str());
    mpz_class r = (v.get_num() % char_) * dinv % char_;
    if (r < 0) r += char_;
    return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    if (is_rationals()) return a + b;
    mpz_class r = (a.get_num() + b.get_num()) % char_;
    if (r < 0) r += char_;
    return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    if (is_rationals()) return a - b;
    mpz_class r = (a.get_num() - b.get_num()) % char_;
    if (r < 0) r += char_;
    return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (is_rationals()) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % char_;
    if (r < 0) r += char_;
    return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
    if (is_rationals()) return -a;
    if (a == 0) return a;
    return mpq_class(char_ - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
    if (a == 0) throw division_by_zero("inverse of zero");
    if (is_rationals()) return 1 / a;
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), char_.get_mpz_t());
    return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
    if (b == 0) throw division_by_zero("division by zero field element");
    if (is_rationals()) return a / b;
    return mul(a, inv(b));
}

} // namespace cremona
