#include "cremona/sylvester.hpp"

namespace cremona {

namespace {

Polynomial det_by_cofactors(const std::vector<std::vector<Polynomial>>& m,
                            std::vector<std::size_t> rows,
                            std::vector<std::size_t> cols, RingPtr ring) {
    if (rows.empty()) return Polynomial::constant(ring, 1);
    Polynomial acc = Polynomial::zero(ring);
    std::size_t r0 = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = m[r0][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Polynomial minor = det_by_cofactors(m, sub_rows, sub_cols, ring);
        Polynomial contrib = entry * minor;
        acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

} // namespace

std::vector<std::vector<Polynomial>>
sylvester_matrix(const Polynomial& a, const Polynomial& b, std::size_t var) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero())
        throw error("Sylvester matrix requires nonzero operands");
    long da = a.degree_in(var);
    long db = b.degree_in(var);
    if (da == 0 && db == 0)
        throw error("Sylvester matrix requires a positive degree");
    auto ca = a.coefficients_in(var);
    auto cb = b.coefficients_in(var);
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Polynomial>> m(
        n, std::vector<Polynomial>(n, Polynomial::zero(a.ring())));
    for (long r = 0; r < db; ++r)
        for (long j = 0; j <= da; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                ca[static_cast<std::size_t>(da - j)];
    for (long r = 0; r < da; ++r)
        for (long j = 0; j <= db; ++j)
            m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + j)] =
                cb[static_cast<std::size_t>(db - j)];
    return m;
}

Polynomial sylvester_resultant(const Polynomial& a, const Polynomial& b,
                               std::size_t var) {
    long da = a.degree_in(var);
    long db = b.degree_in(var);
    if (da == 0 && db == 0)
        throw error("resultant operands are both constant in the chosen variable");
    if (da == 0) return a.pow(static_cast<unsigned long>(db));
    if (db == 0) return b.pow(static_cast<unsigned long>(da));
    auto m = sylvester_matrix(a, b, var);
    std::vector<std::size_t> idx(m.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return det_by_cofactors(m, idx, idx, a.ring());
}

} // namespace cremona
