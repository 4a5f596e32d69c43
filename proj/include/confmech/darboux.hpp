#pragma once

#include <confmech/diffop.hpp>
#include <confmech/scheme.hpp>

namespace confmech {

// First-order pair generated by a nonvanishing seed: lower = d/dx + W kills
// the seed, raise = -d/dx + W is its formal adjoint, W = -(seed)'/(seed).
struct DarbouxPair {
    FirstOrder lower;
    FirstOrder raise;
};

DarbouxPair darboux_pair(const QuasiState& seed);

// Iterated chain whose k-th factor is the first-order operator generated by
// the ratio of consecutive Wronskians over the seed prefix. Applying the
// whole chain to f gives W(seeds..., f) / W(seeds...) at the shifted weight;
// every seed is annihilated.
OpChain intertwiner_chain(const std::vector<EigenState>& seeds);
OpChain intertwiner_chain(const Scheme& s);

// Chain that continues an existing transformation: factor k is generated by
// W(base..., added_1..k) / W(base..., added_1..k-1). With an empty base this
// is intertwiner_chain(added).
OpChain partial_intertwiner_chain(const std::vector<EigenState>& base,
                                  const std::vector<EigenState>& added);

// Expanded intertwining operator for a regular scheme. Order = number of
// seeds; kernel = span of the seeds. Independent of seed ordering.
DiffOp intertwiner(const Scheme& s);
DiffOp intertwiner_from_states(const std::vector<EigenState>& seeds);

// Transformed operator -D^2 + x^2 - 2 (ln W)'' decomposed into the
// inverse-square part (from the Wronskian valuation), the constant (from its
// gaussian weight), and a decaying quasirational tail. Eigenvalues are those
// of the untransformed operator on the states that survive.
SchrodingerOp dcka_potential(const Scheme& s);
SchrodingerOp potential_from_states(const std::vector<EigenState>& seeds);

// W(seeds..., psi) / W(seeds...): eigenstate of dcka_potential(s) at the
// unchanged eigenvalue psi.energy. The physical flag is recomputed from the
// structural rule. Throws std::domain_error when psi lies in the span of the
// seeds (zero image).
QuasiState map_state(const Scheme& s, const EigenState& psi);

// A L1 = (L2 - shift) A as an exact expanded operator identity.
bool verify_intertwining(const DiffOp& A, const SchrodingerOp& L1, const SchrodingerOp& L2,
                         const Rat& shift);

// Aplus Aminus = p(L) as an exact expanded operator identity.
bool verify_factorization(const DiffOp& Aplus, const DiffOp& Aminus, const SchrodingerOp& L,
                          const OperatorPoly& p);

// Scalar content of the two first-order extensions at coupling index m:
// the annihilating pair factorizes the neighbouring wells with one common
// shift, the non-annihilating pair with a split shift and a degenerate
// doublet at 4m+2.
struct SusyReport {
    bool exact_plus_minus;    // A_+ A_- = well(m-1) - (4m-1)
    bool exact_minus_plus;    // A_- A_+ = well(m)   - (4m-1)
    bool broken_minus_plus;   // B_- B_+ = well(m)   - 1
    bool broken_plus_minus;   // B_+ B_- = well(m-1) + 3
    bool ground_annihilated;  // A_- kills the lower ground state
    bool broken_spares_ground;  // B_-+ kill nothing physical low in the well
    Rat doublet_energy;         // common eigenvalue of the split-shift pair
    bool doublet_degenerate;

    bool all_hold() const {
        return exact_plus_minus && exact_minus_plus && broken_minus_plus &&
               broken_plus_minus && ground_annihilated && broken_spares_ground &&
               doublet_degenerate;
    }
};

SusyReport susy_content_check(long m);

// (d/dx - m/x) ... (d/dx - 1/x): the polynomial-level image of the m-step
// chain, mapping odd Hermite polynomials onto x^{m+1} times Laguerre
// polynomials in x^2.
OpChain hermite_to_laguerre_op(long m);

// Inverse bridge (-d/dx + 2x - 1/x) ... (-d/dx + 2x - m/x): the raising
// chain conjugated through the gaussian weight. The plain formal adjoint of
// hermite_to_laguerre_op lowers polynomial degree and cannot invert it; the
// conjugation supplies the 2x terms.
OpChain laguerre_to_hermite_op(long m);

// The four exact bridges between Hermite and Laguerre families at indices
// n >= m >= 0, with their integer constants.
struct HermiteLaguerreReport {
    bool chain_maps_state;      // m-seed chain on H_{2n+1} e^{-x^2/2}
    bool laguerre_from_odd;     // x^{m+1} L_{n-m}(x^2) from D_m H_{2n+1}
    bool odd_from_laguerre;     // H_{2n+1} from the inverse bridge
    bool even_from_laguerre;    // H_{2n} from the differentiated inverse bridge

    bool all_hold() const {
        return chain_maps_state && laguerre_from_odd && odd_from_laguerre &&
               even_from_laguerre;
    }
};

HermiteLaguerreReport hermite_laguerre_identity_check(long n, long m);

}  // namespace confmech
