#include "cremona/ratfunc.hpp"

namespace cremona {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_, den_);
    if (den_.is_zero())
        throw division_by_zero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.ring(), 1);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    const Field& F = num_.ring()->field;
    if (F.is_rationals()) {
        auto [c, prim] = den_.rational_content();
        den_ = std::move(prim);
        num_ = num_.scaled(F.inv(c));
    } else {
        mpq_class lc = den_.leading_coefficient();
        if (lc != 1) {
            mpq_class ic = F.inv(lc);
            den_ = den_.scaled(ic);
            num_ = num_.scaled(ic);
        }
    }
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
    RationalFunction r;
    r.den_ = Polynomial::constant(p.ring(), 1);
    r.num_ = std::move(p);
    return r;
}

RationalFunction RationalFunction::constant(RingPtr ring, const mpq_class& c) {
    return from_poly(Polynomial::constant(std::move(ring), c));
}

RationalFunction RationalFunction::variable(RingPtr ring, const std::string& name) {
    return from_poly(Polynomial::variable(std::move(ring), name));
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

bool RationalFunction::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw division_by_zero("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned long>(e));
    r.den_ = den_.pow(static_cast<unsigned long>(e));
    return r; // powers of a canonical form stay canonical
}

mpq_class RationalFunction::evaluate(const std::vector<mpq_class>& point) const {
    mpq_class d = den_.evaluate(point);
    if (d == 0) throw evaluation_error("denominator vanishes at the evaluation point");
    return num_.ring()->field.div(num_.evaluate(point), d);
}

bool RationalFunction::uses_variable(std::size_t var) const {
    return num_.uses_variable(var) || den_.uses_variable(var);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

} // namespace cremona
