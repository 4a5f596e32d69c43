#include <confmech/diffop.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confmech {

DiffOp::DiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::ddx() { return DiffOp({RatFunc(), RatFunc(Rat(1))}); }

DiffOp DiffOp::mult(RatFunc f) { return DiffOp({std::move(f)}); }

DiffOp DiffOp::constant(const Rat& c) { return DiffOp({RatFunc(c)}); }

const RatFunc& DiffOp::coeff(int j) const {
    static const RatFunc zero;
    if (j < 0 || j >= static_cast<int>(c_.size())) return zero;
    return c_[j];
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    std::vector<RatFunc> r(std::max(c_.size(), o.c_.size()));
    for (size_t j = 0; j < r.size(); ++j) r[j] = coeff(j) + o.coeff(j);
    return DiffOp(std::move(r));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator-() const {
    std::vector<RatFunc> r = c_;
    for (auto& f : r) f = -f;
    return DiffOp(std::move(r));
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    if (is_zero() || o.is_zero()) return DiffOp();
    // (c_j D^j) o (b_k D^k) = sum_i binom(j,i) c_j b_k^{(i)} D^{j-i+k}
    std::vector<RatFunc> r(c_.size() + o.c_.size() - 1);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        for (size_t k = 0; k < o.c_.size(); ++k) {
            if (o.c_[k].is_zero()) continue;
            RatFunc d = o.c_[k];
            Rat binom(1);
            for (size_t i = 0; i <= j; ++i) {
                if (!d.is_zero()) r[j - i + k] = r[j - i + k] + c_[j] * d * binom;
                if (i == j) break;
                binom *= rat(static_cast<long>(j - i), static_cast<long>(i + 1));
                d = d.derivative();
            }
        }
    }
    return DiffOp(std::move(r));
}

DiffOp DiffOp::operator*(const Rat& s) const {
    std::vector<RatFunc> r = c_;
    for (auto& f : r) f = f * s;
    return DiffOp(std::move(r));
}

bool DiffOp::operator==(const DiffOp& o) const { return (*this - o).is_zero(); }

DiffOp DiffOp::adjoint() const {
    // (c D^j)^+ = (-D)^j c, built by j-fold application of -D - via Leibniz:
    // (-1)^j sum_i binom(j,i) c^{(i)} D^{j-i}.
    DiffOp r;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        std::vector<RatFunc> term(j + 1);
        RatFunc d = c_[j];
        Rat binom(1);
        for (size_t i = 0; i <= j; ++i) {
            Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
            term[j - i] = d * (binom * sign);
            if (i == j) break;
            binom *= rat(static_cast<long>(j - i), static_cast<long>(i + 1));
            d = d.derivative();
        }
        r = r + DiffOp(std::move(term));
    }
    return r;
}

QuasiRat DiffOp::apply(const QuasiRat& f) const {
    QuasiRat res;
    QuasiRat d = f;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_zero()) res = res + QuasiRat::from_ratfunc(c_[j]) * d;
        if (j + 1 < c_.size()) d = d.derivative();
    }
    return res;
}

QuasiState DiffOp::apply(const QuasiState& s) const {
    QuasiRat gx(1, Poly(rat(s.gauss)), {});
    QuasiRat res;
    QuasiRat d = s.fn;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_zero()) res = res + QuasiRat::from_ratfunc(c_[j]) * d;
        if (j + 1 < c_.size()) d = d.derivative() + gx * d;
    }
    QuasiState out{res, s.gauss, s.energy};
    out.physical = physical_form(out);
    return out;
}

std::string DiffOp::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = order(); j >= 0; --j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j].to_string() << ")";
        if (j == 1) os << "*D";
        if (j > 1) os << "*D^" << j;
    }
    return os.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp adjoint(const DiffOp& a) { return a.adjoint(); }

QuasiRat apply(const DiffOp& a, const QuasiRat& f) { return a.apply(f); }

DiffOp operator_poly_at(const OperatorPoly& p, const DiffOp& L) {
    DiffOp res;
    DiffOp pw = DiffOp::constant(Rat(1));
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) != Rat(0)) res = res + pw * p.coeff(k);
        if (k < p.degree()) pw = pw * L;
    }
    return res;
}

QuasiRat SchrodingerOp::potential_remainder() const {
    QuasiRat r = tail;
    if (inverse_square != Rat(0)) r = r + QuasiRat(-2, Poly(inverse_square), {});
    if (constant != Rat(0)) r = r + QuasiRat(constant);
    return r;
}

double SchrodingerOp::potential_at(double x) const {
    return x * x + potential_remainder().eval_double(x);
}

SchrodingerOp SchrodingerOp::shifted(const Rat& delta) const {
    return SchrodingerOp{inverse_square, constant + delta, tail};
}

QuasiState SchrodingerOp::apply(const QuasiState& s) const {
    // On the profile of f e^{g x^2/2}:
    //   -f'' - 2gx f' - g f + (1 - g^2) x^2 f + (V - x^2) f
    QuasiRat f = s.fn;
    QuasiRat fp = f.derivative();
    Rat g(s.gauss);
    QuasiRat res = -(fp.derivative()) - QuasiRat(1, Poly(Rat(g * 2)), {}) * fp - f * g +
                   potential_remainder() * f;
    if (g * g != Rat(1)) res = res + QuasiRat(2, Poly(Rat(Rat(1) - g * g)), {}) * f;
    QuasiState out{res, s.gauss, s.energy};
    out.physical = physical_form(out);
    return out;
}

bool SchrodingerOp::eigen_check(const QuasiState& s) const {
    return (apply(s).fn - s.fn * s.energy).is_zero();
}

DiffOp SchrodingerOp::as_diffop() const {
    RatFunc v = RatFunc::from_poly(Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)})) +
                potential_remainder().to_ratfunc();
    return DiffOp({v, RatFunc(), RatFunc(Rat(-1))});
}

std::optional<long> SchrodingerOp::coupling_index() const {
    if (!rat_is_integer(inverse_square) || inverse_square < 0) return std::nullopt;
    long g = mpz_get_si(inverse_square.get_num().get_mpz_t());
    long m = 0;
    while (m * (m + 1) < g) ++m;
    if (m * (m + 1) != g) return std::nullopt;
    return m;
}

std::string SchrodingerOp::to_string() const {
    std::ostringstream os;
    os << "-D^2 + x^2";
    if (inverse_square != Rat(0)) os << " + " << rat_to_string(inverse_square) << "/x^2";
    if (constant != Rat(0)) os << " + " << rat_to_string(constant);
    if (!tail.is_zero()) os << " + " << tail.to_string();
    return os.str();
}

SchrodingerOp oscillator_op() { return SchrodingerOp{Rat(0), Rat(0), QuasiRat()}; }

SchrodingerOp isotonic_op(long m) {
    return SchrodingerOp{rat(m * (m + 1)), Rat(0), QuasiRat()};
}

SchrodingerOp graded_isotonic_op(long m) {
    return SchrodingerOp{rat(m * (m + 1)), rat(2 * m), QuasiRat()};
}

QuasiState FirstOrder::apply(const QuasiState& s) const {
    QuasiRat res = derivative_profile(s) * rat(a) + w * s.fn;
    QuasiState out{res, s.gauss, s.energy};
    out.physical = physical_form(out);
    return out;
}

DiffOp FirstOrder::to_diffop() const {
    return DiffOp({w.to_ratfunc(), RatFunc(rat(a))});
}

QuasiState OpChain::apply(QuasiState s) const {
    for (const auto& f : factors) s = f.apply(s);
    return s;
}

OpChain OpChain::adjoint() const {
    OpChain r;
    r.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        r.factors.push_back(it->adjoint());
    return r;
}

OpChain OpChain::after(const OpChain& o) const {
    OpChain r = o;
    r.factors.insert(r.factors.end(), factors.begin(), factors.end());
    return r;
}

DiffOp OpChain::to_diffop() const {
    DiffOp res = DiffOp::constant(Rat(1));
    for (const auto& f : factors) res = f.to_diffop() * res;
    return res;
}

FirstOrder osc_lower() { return FirstOrder{+1, QuasiRat(1, Poly(Rat(1)), {})}; }

FirstOrder osc_raise() { return FirstOrder{-1, QuasiRat(1, Poly(Rat(1)), {})}; }

bool operator_zero_certificate(const std::function<QuasiState(const QuasiState&)>& X,
                               int order_bound, const SchrodingerOp& H,
                               const std::vector<QuasiState>& probes) {
    if (static_cast<int>(probes.size()) < order_bound + 1) return false;
    std::set<Rat> energies;
    for (const auto& p : probes) {
        if (p.is_zero()) return false;
        if (!energies.insert(p.energy).second) return false;
        if (!H.eigen_check(p)) return false;
    }
    for (const auto& p : probes)
        if (!X(p).is_zero()) return false;
    return true;
}

namespace {

// f(ix) = i^q r(x) with r real and q the parity of f; requires definite parity.
std::pair<Poly, int> wick_poly(const Poly& f) {
    if (f.is_zero()) return {f, 0};
    int parity = -1;
    std::vector<Rat> out(f.degree() + 1, Rat(0));
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k) == Rat(0)) continue;
        if (parity < 0) parity = k % 2;
        if (k % 2 != parity)
            throw std::invalid_argument("argument rotation requires definite parity");
        out[k] = ((k - parity) / 2) % 2 == 0 ? f.coeff(k) : -f.coeff(k);
    }
    return {Poly(std::move(out)), parity};
}

}  // namespace

std::pair<DiffOp, int> wick_operator(const DiffOp& a) {
    if (a.is_zero()) return {a, 0};
    int q_common = -1;
    std::vector<RatFunc> out(a.order() + 1);
    for (int j = 0; j <= a.order(); ++j) {
        const RatFunc& c = a.coeff(j);
        if (c.is_zero()) continue;
        auto [rn, qn] = wick_poly(c.num());
        auto [rd, qd] = wick_poly(c.den());
        // c(ix) (-i)^j = i^q r with q = qn - qd - j mod 4.
        int q = ((qn - qd - j) % 4 + 4) % 4;
        if (q_common < 0) q_common = q % 4;
        int diff = ((q - q_common) % 4 + 4) % 4;
        if (diff == 1 || diff == 3)
            throw std::invalid_argument("argument rotation phase is not global");
        RatFunc r(rn, rd);
        if (diff == 2) r = -r;
        out[j] = r;
    }
    return {DiffOp(std::move(out)), q_common};
}

}  // namespace confmech
