#pragma once

#include <confmech/quasirat.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace confmech {

// Linear differential operator sum_j c_j(x) (d/dx)^j with exact rational
// coefficients. Kept trimmed: the top coefficient is nonzero.
class DiffOp {
  public:
    DiffOp() = default;  // zero operator
    explicit DiffOp(std::vector<RatFunc> coeffs);

    static DiffOp ddx();
    static DiffOp mult(RatFunc f);
    static DiffOp constant(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of (d/dx)^j; zero beyond the order.
    const RatFunc& coeff(int j) const;
    const std::vector<RatFunc>& coeffs() const { return c_; }

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    // Composition (this applied after o).
    DiffOp operator*(const DiffOp& o) const;
    DiffOp operator*(const Rat& s) const;
    bool operator==(const DiffOp& o) const;

    // Formal adjoint: d/dx -> -d/dx with coefficients moved to the left.
    DiffOp adjoint() const;

    QuasiRat apply(const QuasiRat& f) const;
    // Acts through the gaussian weight: d/dx becomes d/dx + gauss*x on the
    // profile. Preserves the energy label; callers re-tag when the operator
    // moves a state between eigenvalues.
    QuasiState apply(const QuasiState& s) const;

    std::string to_string() const;

  private:
    std::vector<RatFunc> c_;
    void trim();
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp adjoint(const DiffOp& a);
QuasiRat apply(const DiffOp& a, const QuasiRat& f);

// Polynomial in an (unspecified) operator symbol; plain coefficient algebra.
using OperatorPoly = Poly;

// p(L) expanded as a differential operator.
DiffOp operator_poly_at(const OperatorPoly& p, const DiffOp& L);

// Exactly -d^2/dx^2 + x^2 + inverse_square/x^2 + constant + tail, with the
// tail a quasirational remainder carrying no x^{-2} or constant part of its
// own. The decomposition is what the construction from Wronskians yields:
// inverse_square from the valuation, constant from the gaussian weight.
struct SchrodingerOp {
    Rat inverse_square;
    Rat constant;
    QuasiRat tail;

    // Everything except the oscillator well: inverse_square/x^2 + constant + tail.
    QuasiRat potential_remainder() const;
    double potential_at(double x) const;

    SchrodingerOp shifted(const Rat& delta) const;  // this + delta

    QuasiState apply(const QuasiState& s) const;
    // Exact check of L s = (s.energy) s.
    bool eigen_check(const QuasiState& s) const;

    DiffOp as_diffop() const;
    // m >= 0 with m(m+1) = inverse_square, when integral.
    std::optional<long> coupling_index() const;
    std::string to_string() const;
};

// V = x^2.
SchrodingerOp oscillator_op();
// V = x^2 + m(m+1)/x^2.
SchrodingerOp isotonic_op(long m);
// Same well shifted by 2m, the convention in which the first-order ladder
// factors intertwine neighbouring members at zero shift.
SchrodingerOp graded_isotonic_op(long m);

// First-order factor a*d/dx + w with a = +1 or -1. Chains of these represent
// high-order operators without expansion.
struct FirstOrder {
    int a = 1;
    QuasiRat w;

    QuasiState apply(const QuasiState& s) const;
    FirstOrder adjoint() const { return {-a, w}; }
    DiffOp to_diffop() const;
};

// Composition chain; factors[0] acts first.
struct OpChain {
    std::vector<FirstOrder> factors;

    int order() const { return static_cast<int>(factors.size()); }
    QuasiState apply(QuasiState s) const;
    OpChain adjoint() const;
    // Chain applying o first, then this.
    OpChain after(const OpChain& o) const;
    DiffOp to_diffop() const;  // expanded; intended for small chains
};

// a^- = d/dx + x and a^+ = -d/dx + x, shifting oscillator energies by -+2.
FirstOrder osc_lower();
FirstOrder osc_raise();

// Certifies that a linear operator X of order <= order_bound is identically
// zero: X annihilates order_bound + 1 states that are exact eigenstates of a
// common Schrodinger operator with pairwise distinct eigenvalues, hence
// linearly independent, exceeding the kernel dimension of any nonzero
// candidate. Returns false when the probe set is inadmissible or any image
// is nonzero.
bool operator_zero_certificate(const std::function<QuasiState(const QuasiState&)>& X,
                               int order_bound, const SchrodingerOp& H,
                               const std::vector<QuasiState>& probes);

// Argument rotation to the imaginary axis in the real-form convention:
// returns (R, q) with A|_{x -> ix, d/dx -> -i d/dx} = i^q R and R real.
// Requires every coefficient to have definite parity.
std::pair<DiffOp, int> wick_operator(const DiffOp& a);

}  // namespace confmech
