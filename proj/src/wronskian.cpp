#include <confmech/wronskian.hpp>

#include <stdexcept>

namespace confmech {

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    size_t n = m.size();
    if (n == 0) return LaurentPoly(Poly(rat(1)), 0);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    int sign = 1;
    LaurentPoly prev(Poly(rat(1)), 0);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return LaurentPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Wronskian wronskian(const std::vector<EigenState>& states) {
    size_t n = states.size();
    if (n == 0) return Wronskian{LaurentPoly(Poly(rat(1)), 0), 0};
    int gauss = 0;
    for (const auto& s : states) {
        if (s.is_zero()) throw std::invalid_argument("wronskian of a zero state");
        gauss += s.gauss;
    }
    // rows: derivative order, columns: states; (d/dx + g x) ladder per column
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    LaurentPoly x1(Poly::monomial(rat(1), 1), 0);
    for (size_t i = 0; i < n; ++i) {
        m[0][i] = states[i].profile;
        for (size_t j = 1; j < n; ++j)
            m[j][i] = m[j - 1][i].derivative() + x1 * m[j - 1][i] * rat(states[i].gauss);
    }
    return Wronskian{laurent_det(std::move(m)), gauss};
}

QuasiState wronskian_ratio(const std::vector<EigenState>& numer,
                           const std::vector<EigenState>& denom) {
    Wronskian wn = wronskian(numer);
    Wronskian wd = wronskian(denom);
    if (wd.is_zero()) throw std::runtime_error("wronskian_ratio: zero denominator");
    if (wn.is_zero()) return QuasiState{QuasiRat(), wn.gauss - wd.gauss, rat(0)};
    Poly num = wn.profile.body().primitive_part();
    Poly den = wd.core();
    int mu = wn.valuation() - wd.valuation();
    QuasiRat fn = den.is_constant() ? QuasiRat(mu, num, {})
                                    : QuasiRat(mu, std::move(num), {{std::move(den), 1}});
    return QuasiState{std::move(fn), wn.gauss - wd.gauss, rat(0)};
}

bool seed_removal_identity(const EigenState& seed, const std::vector<EigenState>& fns) {
    size_t k = fns.size();
    if (k == 0) return true;
    std::vector<EigenState> inner;
    inner.reserve(k);
    for (const auto& f : fns) {
        Wronskian w = wronskian({seed, f});
        inner.push_back(EigenState{w.profile, w.gauss, rat(0)});
    }
    Wronskian lhs = wronskian(inner);

    std::vector<EigenState> all;
    all.reserve(k + 1);
    all.push_back(seed);
    for (const auto& f : fns) all.push_back(f);
    Wronskian big = wronskian(all);

    LaurentPoly rhs_profile = big.profile;
    int rhs_gauss = big.gauss;
    for (size_t i = 0; i + 1 < k; ++i) {
        rhs_profile = rhs_profile * seed.profile;
        rhs_gauss += seed.gauss;
    }
    return lhs.profile == rhs_profile && lhs.gauss == rhs_gauss;
}

}  // namespace confmech
