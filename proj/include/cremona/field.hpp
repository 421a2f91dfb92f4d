#pragma once

#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

/* Coefficient field: either the rationals (characteristic 0) or a prime
 * field F_p.  Elements are carried as mpq_class values; over F_p they are
 * kept as canonical integer representatives in [0, p). */
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(const mpz_class& p);

    const mpz_class& characteristic() const { return char_; }
    bool is_rationals() const { return char_ == 0; }

    /* Canonical image of an arbitrary rational in this field.  Over F_p the
     * denominator must be invertible mod p. */
    mpq_class reduce(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    bool operator==(const Field& o) const { return char_ == o.char_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    explicit Field(mpz_class c) : char_(std::move(c)) {}

    mpz_class char_;
};

} // namespace cremona
