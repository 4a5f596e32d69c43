#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <confmech/states.hpp>

using namespace confmech;

namespace {

Poly P(const std::vector<long>& c) { return Poly::from_longs(c); }

// Profile-level residual of (-D^2 + x^2 + mu/x^2) s = E s for s = L e^{g x^2/2}:
// -L'' - 2 g x L' - g L + mu x^{-2} L - E L must vanish (x^2 cancels when g^2=1).
LaurentPoly schrodinger_residual(const EigenState& s, const Rat& mu) {
    const LaurentPoly& L = s.profile;
    LaurentPoly x1(Poly::monomial(rat(1), 1), 0);
    LaurentPoly res = -L.derivative().derivative();
    res = res - x1 * L.derivative() * rat(2 * s.gauss);
    res = res - L * rat(s.gauss);
    if (mu != Rat(0)) res = res + LaurentPoly(Poly(mu), -2) * L;
    res = res - L * s.energy;
    return res;
}

}  // namespace

TEST_CASE("hermite polynomials") {
    CHECK(hermite(0) == P({1}));
    CHECK(hermite(1) == P({0, 2}));
    CHECK(hermite(2) == P({-2, 0, 4}));
    CHECK(hermite(3) == P({0, -12, 0, 8}));
    CHECK(hermite(4) == P({12, 0, -48, 0, 16}));
    CHECK(hermite(5) == P({0, 120, 0, -160, 0, 32}));
    for (int n = 0; n <= 10; ++n) {
        Poly h = hermite(n);
        CHECK(h.leading() == rat_pow(rat(2), n));
        // H_n'' - 2x H_n' + 2n H_n = 0
        Poly ode = h.derivative().derivative() - Poly::monomial(rat(2), 1) * h.derivative() +
                   h * rat(2 * n);
        CHECK(ode.is_zero());
        CHECK(h.scale_argument(rat(-1)) == h * rat_pow(rat(-1), n));
    }
}

TEST_CASE("conjugate hermite polynomials") {
    CHECK(conjugate_hermite(2) == P({2, 0, 4}));
    CHECK(conjugate_hermite(3) == P({0, 12, 0, 8}));
    CHECK(conjugate_hermite(4) == P({12, 0, 48, 0, 16}));
    for (int n = 0; n <= 12; ++n) {
        Poly h = conjugate_hermite(n);
        for (const auto& c : h.coeffs())
            CHECK(rat_sign(c) >= 0);  // every written coefficient positive
        // H'' + 2x H' - 2n H = 0 for the rotated family
        Poly ode = h.derivative().derivative() + Poly::monomial(rat(2), 1) * h.derivative() -
                   h * rat(2 * n);
        CHECK(ode.is_zero());
        // no positive zeros, so the partner potentials stay regular
        CHECK(positive_real_root_count(h) == 0);
    }
}

TEST_CASE("laguerre polynomials") {
    CHECK(laguerre(0, rat(1, 2)) == P({1}));
    CHECK(laguerre(1, rat(1, 2)) == Poly(std::vector<Rat>{rat(3, 2), rat(-1)}));
    CHECK(laguerre(2, rat(3, 2)) ==
          Poly(std::vector<Rat>{rat(35, 8), rat(-7, 2), rat(1, 2)}));
    for (int n = 0; n <= 8; ++n) {
        Rat alpha = rat(5, 2);
        Poly l = laguerre(n, alpha);
        // x y'' + (alpha + 1 - x) y' + n y = 0
        Poly ode = Poly::monomial(rat(1), 1) * l.derivative().derivative() +
                   Poly(std::vector<Rat>{alpha + 1, rat(-1)}) * l.derivative() + l * rat(n);
        CHECK(ode.is_zero());
        Rat lead = rat_pow(rat(-1), n);
        for (int k = 2; k <= n; ++k) lead /= rat(k);
        if (n > 0) CHECK(l.leading() == lead);
    }
}

TEST_CASE("oscillator states solve their equation") {
    for (int n = 0; n <= 8; ++n) {
        EigenState up = osc_state(n);
        CHECK(up.energy == rat(2 * n + 1));
        CHECK(schrodinger_residual(up, rat(0)).is_zero());
        EigenState dn = osc_state_negative(n);
        CHECK(dn.energy == rat(-(2 * n + 1)));
        CHECK(schrodinger_residual(dn, rat(0)).is_zero());
    }
    CHECK(proportional(seed_state(3), osc_state(3)));
    CHECK(proportional(seed_state(-3), osc_state_negative(3)));
    CHECK(!proportional(seed_state(3), seed_state(-3)));
}

TEST_CASE("isotonic states solve their equation") {
    for (int m = 0; m <= 3; ++m)
        for (int l = 0; l <= 3; ++l) {
            EigenState s = isotonic_state(m, l);
            CHECK(s.energy == rat(4 * l + 2 * m + 3));
            CHECK(schrodinger_residual(s, rat(m * (m + 1))).is_zero());
        }
    // explicit low members
    CHECK(isotonic_state(0, 0).profile == LaurentPoly(P({1}), 1));
    EigenState s11 = canonical(isotonic_state(1, 1));
    CHECK(s11.profile == LaurentPoly(P({-5, 0, 2}), 2));
}

TEST_CASE("negative-family kernel profiles solve the radial equation") {
    // x^{-m} e^{-x^2/2} and x^{m+1} e^{-x^2/2} both sit in the kernel story
    // of the first-order radial factors; check their energies directly.
    for (int m = 1; m <= 4; ++m) {
        EigenState lower{LaurentPoly(P({1}), -m), -1, rat(-(2 * m - 1))};
        CHECK(schrodinger_residual(lower, rat(m * (m + 1))).is_zero());
        EigenState upper{LaurentPoly(P({1}), m + 1), -1, rat(2 * m + 3)};
        CHECK(schrodinger_residual(upper, rat(m * (m + 1))).is_zero());
    }
}

TEST_CASE("wick rotation") {
    for (int n = 0; n <= 8; ++n) {
        EigenState w = wick_rotate(osc_state(n));
        CHECK(proportional(w, osc_state_negative(n)));
        CHECK(w.energy == rat(-(2 * n + 1)));
        EigenState back = wick_rotate(w);
        CHECK(proportional(back, osc_state(n)));
        CHECK(back.energy == osc_state(n).energy);
    }
    // definite parity required
    EigenState bad{LaurentPoly(P({1, 1}), 0), -1, rat(0)};
    CHECK_THROWS(wick_rotate(bad));
    // Laurent profiles rotate too: x^{-2} + x^2 has even parity and both
    // terms flip sign together, so the canonical profile is unchanged.
    EigenState lau{LaurentPoly(P({1, 0, 0, 0, 1}), -2), -1, rat(0)};
    EigenState rot = wick_rotate(lau);
    CHECK(rot.gauss == +1);
    CHECK(rot.profile == LaurentPoly(P({1, 0, 0, 0, 1}), -2));
    // exponents two apart flip relative sign: x + x^3 -> x - x^3
    EigenState odd{LaurentPoly(P({1, 0, 1}), 1), -1, rat(0)};
    CHECK(wick_rotate(odd).profile == LaurentPoly(P({-1, 0, 1}), 1));
}

TEST_CASE("canonical representative") {
    EigenState s{LaurentPoly(Poly(std::vector<Rat>{rat(-3, 2), rat(0), rat(-9, 4)}), 1), -1,
                 rat(5)};
    EigenState c = canonical(s);
    CHECK(c.profile == LaurentPoly(P({2, 0, 3}), 1));
    CHECK(proportional(s, c));
}

TEST_CASE("derivative profile") {
    // (x e^{-x^2/2})' = (1 - x^2) e^{-x^2/2}
    EigenState s{LaurentPoly(P({0, 1}), 0), -1, rat(3)};
    CHECK(derivative_profile(s) == LaurentPoly(P({1, 0, -1}), 0));
    // (x^{-1} e^{+x^2/2})' = (-x^{-2} + 1) e^{+x^2/2}
    EigenState t{LaurentPoly(P({1}), -1), +1, rat(0)};
    CHECK(derivative_profile(t) == LaurentPoly(P({-1, 0, 1}), -2));
}