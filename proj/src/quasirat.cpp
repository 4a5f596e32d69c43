#include <confmech/quasirat.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace confmech {

QuasiRat::QuasiRat(const Rat& constant) : num_(constant) {}

QuasiRat::QuasiRat(int mu, Poly num, std::vector<std::pair<Poly, int>> cores)
    : mu_(mu), num_(std::move(num)), den_(std::move(cores)) {
    normalize();
}

QuasiRat QuasiRat::from_poly(const Poly& p) { return QuasiRat(0, p, {}); }

QuasiRat QuasiRat::from_laurent(const LaurentPoly& l) {
    return QuasiRat(l.valuation(), l.body(), {});
}

QuasiRat QuasiRat::log_derivative_of(const Poly& f) {
    return log_derivative_of(LaurentPoly::from_poly(f));
}

QuasiRat QuasiRat::log_derivative_of(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("log derivative of zero");
    int t = f.valuation();
    Poly g = f.body().primitive_part();
    QuasiRat res(-1, Poly(rat(t)), {});
    if (g.degree() > 0) res = res + QuasiRat(0, g.derivative(), {{g, 1}});
    return res;
}

QuasiRat QuasiRat::from_ratfunc(const RatFunc& f) {
    if (f.num().is_zero()) return QuasiRat();
    if (f.den().is_constant()) return from_poly(f.num() * (Rat(1) / f.den().coeff(0)));
    Poly d = f.den().primitive_part();
    // den is monic, so d = lc(d) * den.
    return QuasiRat(0, f.num() * d.leading(), {{d, 1}});
}

QuasiRat QuasiRat::log_derivative() const {
    if (is_zero()) throw std::invalid_argument("log derivative of zero");
    QuasiRat res(-1, Poly(rat(mu_)), {});
    Poly n = num_.primitive_part();
    if (n.degree() > 0) res = res + QuasiRat(0, n.derivative(), {{n, 1}});
    for (const auto& [core, e] : den_)
        res = res - QuasiRat(0, core.derivative() * rat(e), {{core, 1}});
    return res;
}

void QuasiRat::normalize() {
    for (const auto& [core, e] : den_)
        if (core.is_zero() || e < 0) throw std::invalid_argument("bad denominator core");
    if (num_.is_zero()) {
        mu_ = 0;
        den_.clear();
        return;
    }
    int t = num_.valuation();
    if (t > 0) {
        num_ = num_.shift_down(t);
        mu_ += t;
    }
    std::vector<std::pair<Poly, int>> clean;
    for (auto& [core, e] : den_) {
        if (e == 0) continue;
        Poly c = core;
        int tv = c.valuation();
        if (tv > 0) {
            c = c.shift_down(tv);
            mu_ -= tv * e;
        }
        if (c.is_constant()) {
            num_ = num_ * rat_pow(Rat(1) / c.coeff(0), static_cast<unsigned>(e));
            continue;
        }
        Poly prim = c.primitive_part();
        if (!(prim == c)) {
            // core = s * prim: value of core^e carries s^e into the numerator
            Rat s = c.leading() / prim.leading();
            num_ = num_ * rat_pow(Rat(1) / s, static_cast<unsigned>(e));
            c = prim;
        }
        bool merged = false;
        for (auto& [k, ke] : clean)
            if (k == c) {
                ke += e;
                merged = true;
                break;
            }
        if (!merged) clean.emplace_back(std::move(c), e);
    }
    den_ = std::move(clean);
    // cancel whole cores out of the numerator
    for (auto& [core, e] : den_) {
        Poly q;
        while (e > 0 && num_.try_exact_div(core, q)) {
            num_ = q;
            --e;
        }
    }
    std::erase_if(den_, [](const auto& ce) { return ce.second == 0; });
}

QuasiRat QuasiRat::operator-() const {
    QuasiRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QuasiRat QuasiRat::operator+(const QuasiRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // union of cores at max exponent, minimum x power
    std::vector<std::pair<Poly, int>> cores = den_;
    for (const auto& [core, e] : o.den_) {
        bool found = false;
        for (auto& [k, ke] : cores)
            if (k == core) {
                ke = std::max(ke, e);
                found = true;
                break;
            }
        if (!found) cores.emplace_back(core, e);
    }
    int mu = std::min(mu_, o.mu_);
    auto lift = [&cores, mu](const QuasiRat& q) {
        Poly n = q.num_.shift_up(q.mu_ - mu);
        for (const auto& [core, e] : cores) {
            int have = 0;
            for (const auto& [k, ke] : q.den_)
                if (k == core) {
                    have = ke;
                    break;
                }
            for (int i = have; i < e; ++i) n = n * core;
        }
        return n;
    };
    Poly n = lift(*this) + lift(o);  // before cores is moved from
    return QuasiRat(mu, std::move(n), std::move(cores));
}

QuasiRat QuasiRat::operator-(const QuasiRat& o) const { return *this + (-o); }

QuasiRat QuasiRat::operator*(const QuasiRat& o) const {
    if (is_zero() || o.is_zero()) return QuasiRat();
    std::vector<std::pair<Poly, int>> cores = den_;
    for (const auto& [core, e] : o.den_) {
        bool found = false;
        for (auto& [k, ke] : cores)
            if (k == core) {
                ke += e;
                found = true;
                break;
            }
        if (!found) cores.emplace_back(core, e);
    }
    return QuasiRat(mu_ + o.mu_, num_ * o.num_, std::move(cores));
}

QuasiRat QuasiRat::operator*(const Rat& s) const {
    if (s == Rat(0) || is_zero()) return QuasiRat();
    QuasiRat r = *this;
    r.num_ = r.num_ * s;
    return r;
}

bool QuasiRat::operator==(const QuasiRat& o) const { return (*this - o).is_zero(); }

QuasiRat QuasiRat::derivative() const {
    if (is_zero()) return QuasiRat();
    Poly den_prod(Rat(1));
    for (const auto& [core, e] : den_) den_prod = den_prod * core;
    Poly n = (num_ * rat(mu_) + num_.derivative().shift_up(1)) * den_prod;
    for (size_t i = 0; i < den_.size(); ++i) {
        Poly partial = num_.shift_up(1) * den_[i].first.derivative() * rat(den_[i].second);
        for (size_t j = 0; j < den_.size(); ++j)
            if (j != i) partial = partial * den_[j].first;
        n = n - partial;
    }
    std::vector<std::pair<Poly, int>> cores = den_;
    for (auto& [core, e] : cores) ++e;
    return QuasiRat(mu_ - 1, std::move(n), std::move(cores));
}

Rat QuasiRat::eval(const Rat& x) const {
    if (is_zero()) return Rat(0);
    Rat v = num_.eval(x);
    for (const auto& [core, e] : den_) {
        Rat c = core.eval(x);
        if (c == Rat(0)) throw std::runtime_error("quasirational evaluated at a pole");
        v /= rat_pow(c, static_cast<unsigned>(e));
    }
    if (mu_ != 0) {
        if (x == Rat(0)) {
            if (mu_ < 0) throw std::runtime_error("quasirational evaluated at a pole");
            return Rat(0);
        }
        Rat p = rat_pow(x, static_cast<unsigned>(mu_ < 0 ? -mu_ : mu_));
        if (mu_ > 0)
            v *= p;
        else
            v /= p;
    }
    return v;
}

double QuasiRat::eval_double(double x) const {
    if (is_zero()) return 0.0;
    double v = num_.eval_double(x);
    for (const auto& [core, e] : den_)
        for (int i = 0; i < e; ++i) v /= core.eval_double(x);
    double p = 1.0;
    for (int i = 0; i < (mu_ < 0 ? -mu_ : mu_); ++i) p *= x;
    return mu_ >= 0 ? v * p : v / p;
}

RatFunc QuasiRat::to_ratfunc() const {
    if (is_zero()) return RatFunc();
    Poly n = num_, d(Rat(1));
    for (const auto& [core, e] : den_) d = d * poly_pow(core, static_cast<unsigned>(e));
    if (mu_ >= 0)
        n = n.shift_up(mu_);
    else
        d = d.shift_up(-mu_);
    return RatFunc(std::move(n), std::move(d));
}

std::string QuasiRat::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (mu_ != 0) os << var << "^" << mu_ << "*";
    os << "(" << num_.to_string(var) << ")";
    for (const auto& [core, e] : den_) {
        os << "/(" << core.to_string(var) << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

QuasiState to_quasi(const EigenState& s) {
    return QuasiState{QuasiRat::from_laurent(s.profile), s.gauss, s.energy, s.physical};
}

bool physical_form(const QuasiState& s) {
    return !s.is_zero() && s.gauss < 0 && s.fn.mu() >= 1;
}

QuasiRat derivative_profile(const QuasiState& s) {
    return s.fn.derivative() + QuasiRat(1, Poly(rat(s.gauss)), {}) * s.fn;
}

bool proportional(const QuasiState& a, const QuasiState& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.gauss == b.gauss && proportional(a.fn, b.fn);
}

bool proportional(const QuasiRat& a, const QuasiRat& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.mu() != b.mu()) return false;
    Poly cross_a = a.num(), cross_b = b.num();
    for (const auto& [core, e] : b.cores())
        cross_a = cross_a * poly_pow(core, static_cast<unsigned>(e));
    for (const auto& [core, e] : a.cores())
        cross_b = cross_b * poly_pow(core, static_cast<unsigned>(e));
    if (cross_a.degree() != cross_b.degree()) return false;
    Rat f = cross_a.leading() / cross_b.leading();
    return cross_a == cross_b * f;
}

}  // namespace confmech
