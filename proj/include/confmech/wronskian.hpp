#pragma once

#include <confmech/quasirat.hpp>
#include <confmech/states.hpp>

#include <vector>

namespace confmech {

// Exact determinant of a square Laurent-polynomial matrix, fraction-free
// (Bareiss): every division along the way is exact in the ring.
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

// Wronskian of states s_i = L_i e^{g_i x^2/2} in the factored form
// profile(x) * e^{gauss x^2/2}; the weights multiply out of the determinant
// because each column carries exactly one of them.
struct Wronskian {
    LaurentPoly profile;
    int gauss = 0;

    bool is_zero() const { return profile.is_zero(); }
    // primitive positive-leading body; the x power sits in valuation()
    Poly core() const { return profile.body().primitive_part(); }
    int valuation() const { return profile.valuation(); }
};

// W of the empty list is 1.
Wronskian wronskian(const std::vector<EigenState>& states);

// W(numer) / W(denom) as a quasirational state, canonicalized up to scale.
// The energy field is left at zero; callers attach it.
QuasiState wronskian_ratio(const std::vector<EigenState>& numer,
                           const std::vector<EigenState>& denom);

// Checks W(W(seed,f_1),...,W(seed,f_k)) == seed^{k-1} * W(seed,f_1,...,f_k),
// the identity behind iterated transformations, cleared of denominators so
// both sides are exact Laurent data.
bool seed_removal_identity(const EigenState& seed, const std::vector<EigenState>& fns);

}  // namespace confmech
