#pragma once

#include <confmech/poly.hpp>

#include <string>

namespace confmech {

// Physicists' Hermite polynomial H_n.
Poly hermite(int n);

// Conjugate family: H_n with the argument rotated to the imaginary axis and
// the phase stripped, leaving all-positive integer coefficients.
Poly conjugate_hermite(int n);

// Generalized Laguerre polynomial with rational parameter alpha.
Poly laguerre(int n, const Rat& alpha);

// p(x^2).
Poly compose_square(const Poly& p);

// Eigenstate written as profile(x) * exp(gauss * x^2 / 2) with a Laurent
// polynomial profile. gauss is +1 or -1. energy is the eigenvalue under the
// operator the state belongs to (stated per constructor).
struct EigenState {
    LaurentPoly profile;
    int gauss = -1;
    Rat energy;
    // Normalizable on the half line: vanishes at the origin and decays.
    bool physical = false;

    bool is_zero() const { return profile.is_zero(); }
    std::string to_string() const;
};

// Profile of the derivative: (profile' + gauss * x * profile).
LaurentPoly derivative_profile(const EigenState& s);

// Scales the profile so its body is integer, gcd 1, positive leading
// coefficient. States are rays; this fixes the representative.
EigenState canonical(EigenState s);

bool proportional(const EigenState& a, const EigenState& b);

// Harmonic oscillator eigenstate H_n e^{-x^2/2}, energy 2n+1 under -D^2+x^2.
EigenState osc_state(int n);

// Non-normalizable partner state, energy -(2n+1) under -D^2+x^2.
EigenState osc_state_negative(int n);

// Seed keyed by signed index: n >= 0 picks osc_state(n), n < 0 picks
// osc_state_negative(-n).
EigenState seed_state(int signed_index);

// Radial oscillator eigenstate x^{m+1} L_l^{(m+1/2)}(x^2) e^{-x^2/2},
// energy 4l+2m+3 under -D^2+x^2+m(m+1)/x^2.
EigenState isotonic_state(int m, int l);

// x -> ix followed by phase stripping. Requires a definite-parity profile.
// Flips the gaussian weight sign and negates the energy.
EigenState wick_rotate(const EigenState& s);

}  // namespace confmech
