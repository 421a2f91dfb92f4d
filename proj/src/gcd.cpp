#include "cremona/poly.hpp"

namespace cremona {

namespace {

/* Pseudo-remainder of u by w with respect to variable v:
 * lc_v(w)^(deg_v u - deg_v w + 1) * u  mod  w. */
Polynomial prem(const Polynomial& u, const Polynomial& w, std::size_t v) {
    long n = w.degree_in(v);
    Polynomial d = w.coefficients_in(v).back(); // lc_v(w)
    Polynomial R = u;
    long e = u.degree_in(v) - n + 1;
    while (!R.is_zero() && R.degree_in(v) >= n) {
        auto rc = R.coefficients_in(v);
        Polynomial lead = rc.back();
        long shift = R.degree_in(v) - n;
        Polynomial vpow = Polynomial::variable(u.ring(), v).pow(static_cast<unsigned long>(shift));
        R = d * R - lead * vpow * w;
        --e;
    }
    if (e > 0) R = R * d.pow(static_cast<unsigned long>(e));
    return R;
}

int first_active_variable(const Polynomial& a, const Polynomial& b) {
    for (std::size_t i = 0; i < a.ring()->arity(); ++i)
        if (a.uses_variable(i) || b.uses_variable(i)) return static_cast<int>(i);
    return -1;
}

Polynomial gcd_inner(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t v) {
    Polynomial c = Polynomial::zero(p.ring());
    for (const Polynomial& coeff : p.coefficients_in(v)) {
        c = gcd_inner(c, coeff);
        if (!c.is_zero() && c.is_constant() &&
            (c.constant_value() == 1 || c.constant_value() == -1 ||
             !p.ring()->field.is_rationals()))
            break;
    }
    return c;
}

/* GCD up to unit; over the rationals all coefficients are integers here and
 * stay integers (subresultant divisions are exact over the integers). */
Polynomial gcd_inner(const Polynomial& a, const Polynomial& b) {
    const Field& F = a.ring()->field;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() && b.is_constant()) {
        if (!F.is_rationals()) return Polynomial::constant(a.ring(), 1);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_num().get_mpz_t(),
                b.constant_value().get_num().get_mpz_t());
        return Polynomial::constant(a.ring(), mpq_class(g));
    }
    if (a.is_constant()) return gcd_inner(a, content_in(b, static_cast<std::size_t>(first_active_variable(b, b))));
    if (b.is_constant()) return gcd_inner(b, content_in(a, static_cast<std::size_t>(first_active_variable(a, a))));

    auto v = static_cast<std::size_t>(first_active_variable(a, b));
    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial c = gcd_inner(ca, cb);
    Polynomial A = a.divexact(ca);
    Polynomial B = b.divexact(cb);
    if (A.degree_in(v) < 1 || B.degree_in(v) < 1)
        return c; // one side is v-free and primitive, hence a unit

    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    Polynomial g = Polynomial::constant(a.ring(), 1);
    Polynomial h = g;
    Polynomial result;
    while (true) {
        long delta = A.degree_in(v) - B.degree_in(v);
        Polynomial R = prem(A, B, v);
        if (R.is_zero()) {
            result = B.divexact(content_in(B, v));
            break;
        }
        if (R.degree_in(v) == 0) {
            result = Polynomial::constant(a.ring(), 1);
            break;
        }
        A = B;
        B = R.divexact(g * h.pow(static_cast<unsigned long>(delta)));
        g = A.coefficients_in(v).back();
        if (delta > 0)
            h = g.pow(static_cast<unsigned long>(delta))
                    .divexact(h.pow(static_cast<unsigned long>(delta - 1)));
    }
    return c * result;
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() && b.is_zero()) return a;
    return gcd_inner(a.unit_normal(), b.unit_normal()).unit_normal();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring());
    return (a * b).divexact(gcd(a, b)).unit_normal();
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero())
        throw error("resultant requires nonzero operands");
    if (var >= a.ring()->arity()) throw error("variable index out of range");
    long da = a.degree_in(var);
    long db = b.degree_in(var);
    if (da == 0 && db == 0)
        throw error("resultant operands are both constant in the chosen variable");
    if (da == 0) return a.pow(static_cast<unsigned long>(db));
    if (db == 0) return b.pow(static_cast<unsigned long>(da));

    Polynomial A = a, B = b;
    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) sign = -sign;
    }
    Polynomial g = Polynomial::constant(a.ring(), 1);
    Polynomial h = g;
    while (true) {
        long delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        Polynomial R = prem(A, B, var);
        A = B;
        da = db;
        if (R.is_zero()) return Polynomial::zero(a.ring());
        B = R.divexact(g * h.pow(static_cast<unsigned long>(delta)));
        db = B.degree_in(var);
        g = A.coefficients_in(var).back();
        if (delta > 0)
            h = g.pow(static_cast<unsigned long>(delta))
                    .divexact(h.pow(static_cast<unsigned long>(delta - 1)));
        if (db == 0) break;
    }
    Polynomial res = B.pow(static_cast<unsigned long>(da));
    if (da > 1) res = res.divexact(h.pow(static_cast<unsigned long>(da - 1)));
    return sign == 1 ? res : -res;
}

} // namespace cremona
