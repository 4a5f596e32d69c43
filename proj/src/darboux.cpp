#include <confmech/darboux.hpp>

#include <stdexcept>

namespace confmech {

namespace {

// Full logarithmic derivative of profile * e^{g x^2/2}.
QuasiRat weighted_log_derivative(const Wronskian& w) {
    QuasiRat ld = QuasiRat::log_derivative_of(w.profile);
    if (w.gauss != 0) ld = ld + QuasiRat(1, Poly(rat(w.gauss)), {});
    return ld;
}

Rat factorial(long n) {
    Rat r(1);
    for (long k = 2; k <= n; ++k) r *= rat(k);
    return r;
}

// numerator of 2x - k/x over denominator x
Poly P2x_minus(long k) { return Poly(std::vector<Rat>{rat(-k), Rat(0), Rat(2)}); }

}  // namespace

DarbouxPair darboux_pair(const QuasiState& seed) {
    if (seed.is_zero()) throw std::invalid_argument("darboux seed must be nonzero");
    QuasiRat w = -(seed.fn.log_derivative() + QuasiRat(1, Poly(rat(seed.gauss)), {}));
    return DarbouxPair{FirstOrder{+1, w}, FirstOrder{-1, w}};
}

OpChain partial_intertwiner_chain(const std::vector<EigenState>& base,
                                  const std::vector<EigenState>& added) {
    OpChain chain;
    std::vector<EigenState> prefix = base;
    Wronskian prev = wronskian(prefix);
    if (prev.is_zero()) throw std::invalid_argument("dependent base states");
    QuasiRat prev_ld = weighted_log_derivative(prev);
    for (const auto& s : added) {
        prefix.push_back(s);
        Wronskian next = wronskian(prefix);
        if (next.is_zero()) throw std::invalid_argument("dependent seed states");
        QuasiRat next_ld = weighted_log_derivative(next);
        chain.factors.push_back(FirstOrder{+1, -(next_ld - prev_ld)});
        prev_ld = next_ld;
    }
    return chain;
}

OpChain intertwiner_chain(const std::vector<EigenState>& seeds) {
    return partial_intertwiner_chain({}, seeds);
}

OpChain intertwiner_chain(const Scheme& s) { return intertwiner_chain(s.states()); }

DiffOp intertwiner_from_states(const std::vector<EigenState>& seeds) {
    return intertwiner_chain(seeds).to_diffop();
}

DiffOp intertwiner(const Scheme& s) {
    Regularity r = regularity(s);
    if (!r.regular) throw std::domain_error("scheme generates a singular transformation");
    return intertwiner_from_states(s.states());
}

SchrodingerOp potential_from_states(const std::vector<EigenState>& seeds) {
    Wronskian w = wronskian(seeds);
    if (w.is_zero()) throw std::invalid_argument("dependent seed states");
    // With W = x^mu f(x) e^{k x^2/2}, f(0) != 0:
    //   -2 (ln W)'' = 2 mu / x^2 - 2k - 2 (f'' f - f'^2) / f^2
    int mu = w.valuation();
    Poly f = w.core();
    QuasiRat tail;
    if (f.degree() > 0) {
        Poly fnum = (f.derivative().derivative() * f - f.derivative() * f.derivative()) * rat(-2);
        tail = QuasiRat(0, fnum, {{f, 2}});
    }
    return SchrodingerOp{rat(2 * mu), rat(-2 * w.gauss), tail};
}

SchrodingerOp dcka_potential(const Scheme& s) {
    Regularity r = regularity(s);
    if (!r.regular) throw std::domain_error("scheme generates a singular transformation");
    return potential_from_states(s.states());
}

QuasiState map_state(const Scheme& s, const EigenState& psi) {
    std::vector<EigenState> numer = s.states();
    numer.push_back(psi);
    QuasiState out = wronskian_ratio(numer, s.states());
    if (out.is_zero()) throw std::domain_error("state lies in the span of the seeds");
    out.energy = psi.energy;
    out.physical = physical_form(out);
    return out;
}

bool verify_intertwining(const DiffOp& A, const SchrodingerOp& L1, const SchrodingerOp& L2,
                         const Rat& shift) {
    DiffOp lhs = A * L1.as_diffop();
    DiffOp rhs = (L2.as_diffop() - DiffOp::constant(shift)) * A;
    return (lhs - rhs).is_zero();
}

bool verify_factorization(const DiffOp& Aplus, const DiffOp& Aminus, const SchrodingerOp& L,
                          const OperatorPoly& p) {
    return (Aplus * Aminus - operator_poly_at(p, L.as_diffop())).is_zero();
}

SusyReport susy_content_check(long m) {
    if (m <= 0) throw std::invalid_argument("coupling index must be positive");
    QuasiState exact_seed{QuasiRat(static_cast<int>(m), Poly(Rat(1)), {}), -1, Rat(0)};
    QuasiState broken_seed{QuasiRat(static_cast<int>(m), Poly(Rat(1)), {}), +1, Rat(0)};
    DarbouxPair a = darboux_pair(exact_seed);
    DarbouxPair b = darboux_pair(broken_seed);
    SchrodingerOp lower_well = graded_isotonic_op(m - 1);
    SchrodingerOp upper_well = graded_isotonic_op(m);

    OperatorPoly common({rat(-(4 * m - 1)), Rat(1)});
    SusyReport rep{};
    rep.exact_plus_minus =
        verify_factorization(a.raise.to_diffop(), a.lower.to_diffop(), lower_well, common);
    rep.exact_minus_plus =
        verify_factorization(a.lower.to_diffop(), a.raise.to_diffop(), upper_well, common);
    rep.broken_minus_plus = verify_factorization(b.lower.to_diffop(), b.raise.to_diffop(),
                                                 upper_well, OperatorPoly({Rat(-1), Rat(1)}));
    rep.broken_plus_minus = verify_factorization(b.raise.to_diffop(), b.lower.to_diffop(),
                                                 lower_well, OperatorPoly({Rat(3), Rat(1)}));

    rep.ground_annihilated = a.lower.apply(to_quasi(isotonic_state(m - 1, 0))).is_zero();
    rep.broken_spares_ground = true;
    for (int l = 0; l <= 3; ++l) {
        if (b.lower.apply(to_quasi(isotonic_state(m, l))).is_zero())
            rep.broken_spares_ground = false;
        if (b.raise.apply(to_quasi(isotonic_state(m - 1, l))).is_zero())
            rep.broken_spares_ground = false;
    }

    rep.doublet_energy = rat(4 * m + 2);
    QuasiState upper_ground = to_quasi(isotonic_state(m, 0));
    upper_ground.energy = rep.doublet_energy;
    QuasiState lower_ground = to_quasi(isotonic_state(m - 1, 0));
    lower_ground.energy = rep.doublet_energy;
    rep.doublet_degenerate = upper_well.shifted(Rat(-1)).eigen_check(upper_ground) &&
                             lower_well.shifted(Rat(3)).eigen_check(lower_ground);
    return rep;
}

OpChain hermite_to_laguerre_op(long m) {
    OpChain chain;
    for (long k = 1; k <= m; ++k)
        chain.factors.push_back(FirstOrder{+1, QuasiRat(-1, Poly(rat(-k)), {})});
    return chain;
}

OpChain laguerre_to_hermite_op(long m) {
    OpChain chain;
    for (long k = m; k >= 1; --k)
        chain.factors.push_back(FirstOrder{-1, QuasiRat(-1, P2x_minus(k), {})});
    return chain;
}

HermiteLaguerreReport hermite_laguerre_identity_check(long n, long m) {
    if (m < 0 || n < m) throw std::invalid_argument("requires n >= m >= 0");
    Rat sign = (n + m) % 2 == 0 ? Rat(1) : Rat(-1);
    Rat c_nm = sign * rat_pow(Rat(2), static_cast<unsigned>(2 * n + m + 1)) * factorial(n);
    QuasiRat laguerre_side = QuasiRat::from_laurent(LaurentPoly(
        compose_square(laguerre(static_cast<int>(n - m), rat(2 * m + 1, 2))),
        static_cast<int>(m) + 1));

    HermiteLaguerreReport rep{};

    std::vector<EigenState> seeds;
    for (long k = 1; k <= m; ++k) seeds.push_back(osc_state(static_cast<int>(2 * k - 1)));
    QuasiState mapped = intertwiner_chain(seeds).apply(to_quasi(osc_state(static_cast<int>(2 * n + 1))));
    rep.chain_maps_state = mapped.gauss == -1 && (mapped.fn - laguerre_side * c_nm).is_zero();

    OpChain dm = hermite_to_laguerre_op(m);
    QuasiState plain{QuasiRat::from_poly(hermite(static_cast<int>(2 * n + 1))), 0, Rat(0)};
    QuasiState image = dm.apply(plain);
    rep.laguerre_from_odd = (image.fn * (Rat(1) / c_nm) - laguerre_side).is_zero();

    // Inverting through the raising chain divides by the factorization
    // eigenvalue 4^m n!/(n-m)!, leaving (-1)^{n+m} (n-m)! 2^{2n-m+1}.
    Rat inv = sign * factorial(n - m) * rat_pow(Rat(2), static_cast<unsigned>(2 * n - m + 1));
    QuasiState lag_state{laguerre_side, 0, Rat(0)};
    QuasiState back = laguerre_to_hermite_op(m).apply(lag_state);
    rep.odd_from_laguerre =
        (back.fn * inv - QuasiRat::from_poly(hermite(static_cast<int>(2 * n + 1)))).is_zero();

    Rat inv_even = sign * factorial(n - m) * rat_pow(Rat(2), static_cast<unsigned>(2 * n - m)) *
                   (Rat(1) / rat(2 * n + 1));
    rep.even_from_laguerre =
        (back.fn.derivative() * inv_even - QuasiRat::from_poly(hermite(static_cast<int>(2 * n))))
            .is_zero();
    return rep;
}

}  // namespace confmech
