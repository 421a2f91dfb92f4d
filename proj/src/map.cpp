#include "cremona/map.hpp"

namespace cremona {

CremonaMap::CremonaMap(RingPtr ring, std::vector<RationalFunction> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_->arity())
        throw error("map needs one image per ring variable");
    for (const auto& f : images_)
        if (!(*f.ring() == *ring_))
            throw ring_mismatch("map image lives in the wrong ring");
}

CremonaMap CremonaMap::identity(RingPtr ring) {
    std::vector<RationalFunction> images;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        images.push_back(RationalFunction::from_poly(Polynomial::variable(ring, i)));
    return CremonaMap(ring, std::move(images));
}

Substitution CremonaMap::as_substitution() const {
    Substitution s(ring_, ring_);
    for (std::size_t i = 0; i < images_.size(); ++i) s.set(i, images_[i]);
    return s;
}

RationalFunction CremonaMap::pullback(const RationalFunction& e) const {
    return substitute(e, as_substitution());
}

RationalFunction CremonaMap::pullback(const Polynomial& e) const {
    return substitute(e, as_substitution());
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
    if (!(*f.ring() == *g.ring()))
        throw ring_mismatch("composed maps must share a ring");
    return CremonaMap(f.ring(), substitute_many(f.images(), g.as_substitution()));
}

bool is_identity(const CremonaMap& m) {
    for (std::size_t i = 0; i < m.ring()->arity(); ++i) {
        if (!m.image(i).is_polynomial()) return false;
        if (m.image(i).num() != Polynomial::variable(m.ring(), i)) return false;
    }
    return true;
}

bool verify_involution(const CremonaMap& m) {
    return !is_identity(m) && is_identity(compose(m, m));
}

RationalFunction reduce_rf_mod_p(const RationalFunction& f, const RingPtr& target) {
    const mpz_class& p = target->field.characteristic();
    if (p == 0) throw error("reduction target must have positive characteristic");
    if (!f.ring()->field.is_rationals())
        throw error("reduction starts from characteristic 0");
    if (f.is_zero()) return RationalFunction::constant(target, 0);
    auto [c, num_prim] = f.num().rational_content();
    if (c.get_den() % p == 0)
        throw division_by_zero("coefficient denominator divisible by " + p.get_str());
    Polynomial den_red = f.den().map_coefficients(target);
    if (den_red.is_zero())
        throw undefined_substitution("denominator vanishes mod " + p.get_str());
    Polynomial num_red = num_prim.map_coefficients(target).scaled(c);
    return RationalFunction(num_red, den_red);
}

CremonaMap reduce_map_mod_p(const CremonaMap& m, const mpz_class& p) {
    RingPtr target = make_ring(Field::prime(p), m.ring()->vars);
    std::vector<RationalFunction> images;
    images.reserve(m.images().size());
    for (const auto& f : m.images()) images.push_back(reduce_rf_mod_p(f, target));
    return CremonaMap(target, std::move(images));
}

namespace {

/* Degree and order of vanishing at T=0 of a nonzero univariate rational
 * function; both are group homomorphisms k(T)* -> Z, which is what makes
 * them usable as linear probes for monomial exponents. */
std::pair<long, long> degree_and_order(const RationalFunction& u) {
    long deg = u.num().degree_in(0) - u.den().degree_in(0);
    long ord = static_cast<long>(u.num().terms().begin()->first[0]) -
               static_cast<long>(u.den().terms().begin()->first[0]);
    return {deg, ord};
}

long rank_of(const std::vector<std::vector<long>>& rows, std::size_t width) {
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    long rank = 0;
    for (std::size_t col = 0; col < width; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            mpq_class factor = m[r][col] / m[static_cast<std::size_t>(rank)][col];
            for (std::size_t c = col; c < width; ++c)
                m[r][c] -= factor * m[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    return rank;
}

/* Solve rows * e = rhs-column by Gauss-Jordan over Q; nullopt when a
 * solution entry is not an integer. */
std::optional<std::vector<mpz_class>>
solve_integer(const std::vector<std::vector<long>>& rows,
              const std::vector<long>& rhs) {
    std::size_t k = rows[0].size();
    std::vector<std::vector<mpq_class>> aug;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        aug.emplace_back(rows[i].begin(), rows[i].end());
        aug.back().emplace_back(rhs[i]);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < aug.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < aug.size() && aug[pivot][col] == 0) ++pivot;
        if (pivot == aug.size()) return std::nullopt;
        std::swap(aug[rank], aug[pivot]);
        mpq_class inv = 1 / aug[rank][col];
        for (auto& v : aug[rank]) v *= inv;
        for (std::size_t r = 0; r < aug.size(); ++r) {
            if (r == rank || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col];
            for (std::size_t c = col; c <= k; ++c) aug[r][c] -= f * aug[rank][c];
        }
        ++rank;
    }
    if (rank < k) return std::nullopt;
    for (std::size_t r = rank; r < aug.size(); ++r)
        if (aug[r][k] != 0) return std::nullopt; // inconsistent probes
    std::vector<mpz_class> e;
    for (std::size_t i = 0; i < k; ++i) {
        if (aug[i][k].get_den() != 1) return std::nullopt;
        e.push_back(aug[i][k].get_num());
    }
    return e;
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
    // cofactor expansion; profile matrices are tiny
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class det = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0] == 0) continue;
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        mpz_class contrib = m[i][0] * integer_determinant(std::move(minor));
        det += (i % 2 == 0) ? contrib : -contrib;
    }
    return det;
}

} // namespace

std::optional<MonomialActionProfile>
monomial_profile(const CremonaMap& m, const std::vector<RationalFunction>& generators) {
    const std::size_t k = generators.size();
    if (k == 0) throw error("monomial profile needs at least one generator");
    for (const auto& g : generators) {
        if (!(*g.ring() == *m.ring()))
            throw ring_mismatch("generator lives in the wrong ring");
        if (g.is_zero()) throw error("monomial profile generators must be nonzero");
    }
    std::vector<RationalFunction> pulled;
    for (const auto& g : generators) {
        pulled.push_back(m.pullback(g));
        if (pulled.back().is_zero()) return std::nullopt;
    }

    const Field& F = m.ring()->field;
    RingPtr curve_ring = make_ring(F, {"T"});
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x90afb1u);
    const mpz_class coeff_span =
        F.is_rationals() ? mpz_class(41) : F.characteristic();

    std::vector<std::vector<long>> rows;            // probe functionals on exponents
    std::vector<std::vector<long>> rhs;             // same functionals on each pullback
    for (int attempt = 0; attempt < 200 && rank_of(rows, k) < static_cast<long>(k);
         ++attempt) {
        try {
            Substitution curve(m.ring(), curve_ring);
            for (std::size_t i = 0; i < m.ring()->arity(); ++i) {
                Polynomial::TermMap terms;
                long deg = 1 + static_cast<long>(mpz_class(rng.get_z_range(5)).get_si());
                for (long d = 0; d <= deg; ++d) {
                    mpq_class c(rng.get_z_range(coeff_span));
                    if (F.is_rationals()) c -= 20;
                    terms[{static_cast<std::uint32_t>(d)}] = c;
                }
                curve.set(i, RationalFunction::from_poly(
                                 Polynomial::from_terms(curve_ring, std::move(terms))));
            }
            std::vector<long> row_deg(k), row_ord(k);
            for (std::size_t i = 0; i < k; ++i) {
                RationalFunction v = substitute(generators[i], curve);
                if (v.is_zero()) throw evaluation_error("degenerate curve");
                std::tie(row_deg[i], row_ord[i]) = degree_and_order(v);
            }
            std::vector<long> rhs_deg(k), rhs_ord(k);
            for (std::size_t j = 0; j < k; ++j) {
                RationalFunction v = substitute(pulled[j], curve);
                if (v.is_zero()) throw evaluation_error("degenerate curve");
                std::tie(rhs_deg[j], rhs_ord[j]) = degree_and_order(v);
            }
            rows.push_back(std::move(row_deg));
            rhs.push_back(std::move(rhs_deg));
            rows.push_back(std::move(row_ord));
            rhs.push_back(std::move(rhs_ord));
        } catch (const undefined_substitution&) {
        } catch (const evaluation_error&) {
        } catch (const division_by_zero&) {
        }
    }
    if (rank_of(rows, k) < static_cast<long>(k)) return std::nullopt;

    MonomialActionProfile profile;
    profile.exponents.assign(k, std::vector<long>(k, 0));
    std::vector<std::vector<mpz_class>> mat(k, std::vector<mpz_class>(k));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<long> column(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) column[r] = rhs[r][j];
        auto e = solve_integer(rows, column);
        if (!e) return std::nullopt;
        RationalFunction reference = RationalFunction::constant(m.ring(), 1);
        for (std::size_t i = 0; i < k; ++i)
            reference = reference * generators[i].pow((*e)[i].get_si());
        RationalFunction ratio = pulled[j] / reference;
        if (!ratio.is_constant()) return std::nullopt;
        profile.constants.push_back(ratio.evaluate(
            std::vector<mpq_class>(m.ring()->arity(), 0)));
        for (std::size_t i = 0; i < k; ++i) {
            profile.exponents[i][j] = (*e)[i].get_si();
            mat[i][j] = (*e)[i];
        }
    }
    profile.determinant = integer_determinant(std::move(mat));
    return profile;
}

} // namespace cremona
