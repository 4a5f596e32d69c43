#include <confmech/states.hpp>

#include <sstream>
#include <stdexcept>

namespace confmech {

namespace {

Poly hermite_like(int n, int sign) {
    // H_{k+1} = 2x H_k - sign * 2k H_{k-1}; sign -1 gives the conjugate family.
    if (n < 0) throw std::invalid_argument("hermite index must be >= 0");
    Poly prev(Rat(1));
    if (n == 0) return prev;
    Poly cur = Poly::monomial(rat(2), 1);
    Poly two_x = cur;
    for (int k = 1; k < n; ++k) {
        Poly next = two_x * cur - prev * rat(2L * k * sign);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Poly hermite(int n) { return hermite_like(n, +1); }

Poly conjugate_hermite(int n) { return hermite_like(n, -1); }

Poly laguerre(int n, const Rat& alpha) {
    if (n < 0) throw std::invalid_argument("laguerre index must be >= 0");
    Poly prev(Rat(1));
    if (n == 0) return prev;
    Poly cur(std::vector<Rat>{alpha + 1, rat(-1)});
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha - x) L_k - (k+alpha) L_{k-1}
        Poly lin(std::vector<Rat>{alpha + rat(2 * k + 1), rat(-1)});
        Poly next = (lin * cur - prev * (alpha + rat(k))) * rat(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly compose_square(const Poly& p) {
    if (p.is_zero()) return Poly();
    std::vector<Rat> out(2 * p.degree() + 1, Rat(0));
    for (int d = 0; d <= p.degree(); ++d) out[2 * d] = p.coeff(d);
    return Poly(std::move(out));
}

std::string EigenState::to_string() const {
    std::ostringstream os;
    os << "(" << profile.to_string() << ")*exp(" << (gauss > 0 ? "+" : "-")
       << "x^2/2)  [E=" << rat_to_string(energy) << "]";
    return os.str();
}

LaurentPoly derivative_profile(const EigenState& s) {
    LaurentPoly x_term = s.profile * LaurentPoly(Poly::monomial(rat(s.gauss), 1), 0);
    return s.profile.derivative() + x_term;
}

EigenState canonical(EigenState s) {
    if (s.profile.is_zero()) return s;
    Poly body = s.profile.body().primitive_part();
    s.profile = LaurentPoly(body, s.profile.valuation());
    return s;
}

bool proportional(const EigenState& a, const EigenState& b) {
    if (a.gauss != b.gauss) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.profile.valuation() != b.profile.valuation()) return false;
    const Poly &pa = a.profile.body(), &pb = b.profile.body();
    if (pa.degree() != pb.degree()) return false;
    Rat f = pa.leading() / pb.leading();
    return pa == pb * f;
}

EigenState osc_state(int n) {
    return EigenState{LaurentPoly::from_poly(hermite(n)), -1, rat(2 * n + 1), n % 2 == 1};
}

EigenState osc_state_negative(int n) {
    return EigenState{LaurentPoly::from_poly(conjugate_hermite(n)), +1, rat(-(2 * n + 1)), false};
}

EigenState seed_state(int signed_index) {
    return signed_index >= 0 ? osc_state(signed_index) : osc_state_negative(-signed_index);
}

EigenState isotonic_state(int m, int l) {
    if (m < 0 || l < 0) throw std::invalid_argument("isotonic indices must be >= 0");
    Poly radial = compose_square(laguerre(l, rat(2 * m + 1, 2)));
    return EigenState{LaurentPoly(radial, m + 1), -1, rat(4 * l + 2 * m + 3), true};
}

EigenState wick_rotate(const EigenState& s) {
    if (s.is_zero()) return EigenState{LaurentPoly(), -s.gauss, -s.energy, false};
    const Poly& body = s.profile.body();
    int val = s.profile.valuation();
    int parity = ((val % 2) + 2) % 2;
    std::vector<Rat> out(body.degree() + 1, Rat(0));
    for (int j = 0; j <= body.degree(); ++j) {
        if (body.coeff(j) == Rat(0)) continue;
        long e = val + j;
        if ((((e % 2) + 2) % 2) != parity)
            throw std::runtime_error("wick_rotate requires a definite-parity profile");
        // i^e / i^parity = (-1)^((e - parity)/2)
        long half = (e - parity) / 2;
        out[j] = (half % 2 == 0) ? body.coeff(j) : -body.coeff(j);
    }
    EigenState r{LaurentPoly(Poly(std::move(out)), val), -s.gauss, -s.energy,
                 -s.gauss < 0 && val >= 1};
    return canonical(std::move(r));
}

}  // namespace confmech
