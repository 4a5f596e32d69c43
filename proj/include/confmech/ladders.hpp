#pragma once

#include <confmech/darboux.hpp>
#include <confmech/diffop.hpp>
#include <confmech/scheme.hpp>

#include <string>
#include <utility>
#include <vector>

namespace confmech {

enum class LadderKind { A, B, C, Ctilde, Cm };

// Spectrum-shift operator O satisfying [H, O] = step * O, held as an
// unexpanded factor chain. The commutation identity is certified exactly at
// construction; on an eigenstate at E the image is an eigenstate at E + step
// (or zero), so apply() relabels the energy.
struct LadderOp {
    OpChain chain;
    Rat step;
    LadderKind kind = LadderKind::Cm;
    SchrodingerOp ham;  // reference operator the step and the polynomials below refer to
    Scheme scheme;      // generating scheme; empty for the bare isotonic pair

    int order() const { return chain.order(); }
    QuasiState apply(const QuasiState& s) const;
};

// Ladder triple of a regular scheme. All six members shift the spectrum of
// the same operator, ham = the transformed potential in the input scheme's
// convention. The representative conventions used by the closed-form
// factorization polynomials differ from it by constants:
//   L_pos = ham + to_plus,   L_neg = ham + to_minus.
struct LadderFamily {
    Scheme scheme;
    SchrodingerOp ham;
    Scheme positive_rep;
    Scheme negative_rep;
    Rat to_plus;
    Rat to_minus;
    bool even_top = false;  // top seed index even: glued pair gains one factor

    LadderOp a_minus, a_plus;  // order 2|negative_rep|+2, step -+4
    LadderOp b_minus, b_plus;  // order 2|positive_rep|+2, step -+4
    LadderOp c_minus, c_plus;  // glued pair, order n_m+1 and step -+2(n_m+1),
                               // +1 resp. +-2 more when even_top
};

// Order-two pair (lowering, raising) for the well x^2 + m(m+1)/x^2 in the
// bare convention. Together with the well they close the rank-one real
// symplectic algebra: [L, C^-+] = -+4 C^-+, [C^-, C^+] = 8 L.
std::pair<LadderOp, LadderOp> isotonic_ladders(long m);

// Conjugates the squared oscillator ladder through each of the two dressing
// chains (A from the negative representative, B from the positive) and glues
// the chains head-to-tail for the C pair. Requires a regular scheme.
LadderFamily build_ladders(const Scheme& s);

// Exact eigenstates of dcka_potential(s) at pairwise distinct energies in
// the input convention: images of the oscillator line under the equivalent
// positive transformation. Not all members are physical; all are exact.
std::vector<QuasiState> eigenprobes(const Scheme& s, int count);

// The polynomial q with a . b = q(ham), determined on eigenprobes and then
// certified as an exact operator identity (the difference annihilates more
// independent states than its order allows). Throws std::domain_error when
// the product is not polynomial in ham.
OperatorPoly product_polynomial(const LadderOp& a, const LadderOp& b);
OperatorPoly product_polynomial(const OpChain& a, const OpChain& b, const SchrodingerOp& ham,
                                const std::vector<QuasiState>& probes);

// Same contract for the commutator [a, b].
OperatorPoly commutator_polynomial(const LadderOp& a, const LadderOp& b);

// Spectral polynomials of the representative pair: the positive factor has
// its roots at the removed oscillator levels 2k+1 (variable L_(+)), the
// negative factor at the reflected seed energies, roots -(2l+1) (variable
// L_(-)).
Poly removed_level_polynomial(const Scheme& positive_rep);
Poly reflected_seed_polynomial(const Scheme& negative_rep);

// Closed-form factorization laws built from the two spectral polynomials
// alone, expressed in the input convention. plus_minus selects the order
// X+ X- (true) or X- X+ (false); the commutator is [X-, X+]. These must
// coincide with product_polynomial / commutator_polynomial on the live
// operators for every regular scheme.
OperatorPoly predicted_product(const LadderFamily& f, LadderKind kind, bool plus_minus);
OperatorPoly predicted_commutator(const LadderFamily& f, LadderKind kind);

struct KernelMember {
    Rat energy;     // input convention
    int band = 0;   // index into the predicted band list
};

struct KernelReport {
    std::vector<KernelMember> physical_members;
    std::vector<Rat> nonphysical_annihilated;  // energies of annihilated nonphysical probes
    int nonphysical_count_checked = 0;
    Rat cutoff_energy;
    int equidistant_members = 0;  // physical members inside the infinite band
};

// Applies op to every predicted physical eigenstate up to the cutoff and to
// the nonphysical mapped candidates (even-index and reflected seeds) in the
// same window. For an odd-top glued lowering operator the physical member
// list is additionally checked against the arrival rule: E is annihilated
// iff E + step leaves the spectrum. Requires a scheme-based op.
KernelReport kernel_report(const LadderOp& op, const SpectrumModel& spectrum, const Rat& cutoff);

// Default window for kernel and connectivity scans: six level spacings above
// the bottom of the infinite band, input convention.
Rat default_cutoff(const SpectrumModel& spectrum);

struct ConnectivityReport {
    int levels = 0;
    int components = 0;  // strongly connected components of the action graph
    bool strongly_connected = false;
};

// Directed graph on the physical levels up to the cutoff, one edge E -> E'
// per op with E' = E + step inside the window and an exactly nonzero image;
// every nonzero image is verified proportional to the target eigenstate.
ConnectivityReport spectrum_generating_check(const std::vector<LadderOp>& ops,
                                             const SpectrumModel& spectrum, const Rat& cutoff);

struct ReductionRelation {
    std::string description;
    bool holds = false;
    OperatorPoly cofactor;  // target = source . cofactor(ham), scale absorbed
};

// Factorization attempts through lower-order ladders: the higher of A/B
// through the lower, the glued pair of a pure isotonic tower through a power
// of the bare pair, and A/B through the partially dressed isotonic ladder
// when the scheme contains the isotonic prefix of its own coupling. A
// missing relation is reported with holds = false, never thrown.
std::vector<ReductionRelation> reduction_check(const Scheme& s);

struct LadderSearchReport {
    bool found = false;
    int degree_bound = 0;      // numerator degree allowed per coefficient
    int core_power_bound = 0;  // denominator allowance x^2 * core^this
    int nullspace_dimension = 0;
};

// Exhaustive linear search for an order-two ladder of ham at the given step
// over the ansatz sum_j q_j(x) / (x^2 core^b) d^j, deg q_j <= degree_bound.
// The commutation identity is linear in the q_j, so a trivial nullspace
// proves nonexistence within the ansatz bounds.
LadderSearchReport order_two_ladder_search(const SchrodingerOp& ham, const Rat& step,
                                           int degree_bound, int core_power_bound);

}  // namespace confmech
