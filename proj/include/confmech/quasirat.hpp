#pragma once

#include <confmech/poly.hpp>
#include <confmech/states.hpp>

#include <string>
#include <vector>

namespace confmech {

// Rational function kept in factored form x^mu * num / prod_i core_i^e_i.
// Cores stay primitive with positive leading coefficient, are nonconstant,
// have nonzero constant term (x powers live in mu), and are pairwise
// distinct. The numerator also has nonzero constant term unless zero.
//
// The form is not forced to lowest terms: cancellation runs by trial
// division against whole cores, which is complete for the denominators
// arising here (Wronskian bodies) and cheap. Equality and zero tests do not
// rely on canonical form.
class QuasiRat {
  public:
    QuasiRat() = default;
    QuasiRat(const Rat& constant);
    QuasiRat(int mu, Poly num, std::vector<std::pair<Poly, int>> cores);

    static QuasiRat from_poly(const Poly& p);
    static QuasiRat from_laurent(const LaurentPoly& l);
    static QuasiRat from_ratfunc(const RatFunc& f);
    // f'/f for nonzero f; invariant under scaling of f.
    static QuasiRat log_derivative_of(const Poly& f);
    static QuasiRat log_derivative_of(const LaurentPoly& f);

    // this'/this. Requires a nonzero value.
    QuasiRat log_derivative() const;

    bool is_zero() const { return num_.is_zero(); }
    int mu() const { return mu_; }
    const Poly& num() const { return num_; }
    const std::vector<std::pair<Poly, int>>& cores() const { return den_; }

    QuasiRat operator-() const;
    QuasiRat operator+(const QuasiRat& o) const;
    QuasiRat operator-(const QuasiRat& o) const;
    QuasiRat operator*(const QuasiRat& o) const;
    QuasiRat operator*(const Rat& s) const;
    bool operator==(const QuasiRat& o) const;

    QuasiRat derivative() const;
    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    // Expanded form; use only when sizes are known to be small.
    RatFunc to_ratfunc() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    int mu_ = 0;
    Poly num_;
    std::vector<std::pair<Poly, int>> den_;
};

bool proportional(const QuasiRat& a, const QuasiRat& b);

// Generalization of EigenState to quasirational profiles: fn * e^{gauss x^2/2}.
// Transformed states and eigenprobes live here; defined up to scale.
struct QuasiState {
    QuasiRat fn;
    int gauss = -1;
    Rat energy;
    // Normalizable on the half line: vanishes at the origin and decays.
    bool physical = false;

    bool is_zero() const { return fn.is_zero(); }
};

QuasiState to_quasi(const EigenState& s);

// Structural half-line normalizability: decaying weight and profile vanishing
// at the origin. Assumes the profile has no poles on (0, inf).
bool physical_form(const QuasiState& s);

// Profile of the derivative: fn' + gauss * x * fn at the same weight.
QuasiRat derivative_profile(const QuasiState& s);

bool proportional(const QuasiState& a, const QuasiState& b);

}  // namespace confmech
