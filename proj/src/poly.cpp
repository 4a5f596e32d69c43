#include <confmech/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace confmech {

namespace {

const Rat kZero(0);

// Divide by the positive content only, preserving sign. Sturm chains may
// rescale members by positive constants, never negative ones.
Poly pos_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    std::vector<Rat> out;
    out.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) out.push_back(a / c);
    return Poly(std::move(out));
}

int sign_at_zero_plus(const Poly& p) {
    if (p.is_zero()) return 0;
    return rat_sign(p.coeff(p.valuation()));
}

int sign_at_infinity(const Poly& p) {
    if (p.is_zero()) return 0;
    return rat_sign(p.leading());
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly g = poly_gcd(p, p.derivative());
    Poly sf = g.is_constant() ? p : p.exact_div(g);
    chain.push_back(pos_primitive(sf));
    if (chain[0].degree() < 1) return chain;
    chain.push_back(pos_primitive(chain[0].derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Poly q, r;
        Poly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(pos_primitive(-r));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain) s.push_back(rat_sign(q.eval(x)));
    return variations(s);
}

}  // namespace

Poly::Poly(const Rat& constant) {
    if (constant != kZero) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }

Poly Poly::monomial(const Rat& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (coeff == kZero) return Poly();
    std::vector<Rat> c(degree + 1, kZero);
    c[degree] = coeff;
    return Poly(std::move(c));
}

Poly Poly::from_longs(const std::vector<long>& ascending_coeffs) {
    std::vector<Rat> c;
    c.reserve(ascending_coeffs.size());
    for (long a : ascending_coeffs) c.push_back(rat(a));
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == kZero) c_.pop_back();
}

const Rat& Poly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return kZero;
    return c_[deg];
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(-a);
    Poly r;
    r.c_ = std::move(out);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == kZero) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == kZero) return Poly();
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a * s);
    Poly r;
    r.c_ = std::move(out);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * rat(static_cast<long>(i));
    return Poly(std::move(out));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + rat_to_double(*it);
    return acc;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    q = Poly();
    r = a;
    int db = b.degree();
    const Rat& lb = b.leading();
    std::vector<Rat> qc;
    if (r.degree() >= db) qc.assign(r.degree() - db + 1, kZero);
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rat f = r.leading() / lb;
        qc[k] = f;
        std::vector<Rat> rc = r.c_;
        for (int i = 0; i <= db; ++i) rc[k + i] -= f * b.c_[i];
        r = Poly(std::move(rc));
    }
    q = Poly(std::move(qc));
}

Poly Poly::exact_div(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::runtime_error("exact_div: division not exact");
    return q;
}

bool Poly::try_exact_div(const Poly& b, Poly& q) const {
    if (b.is_zero()) return false;
    Poly r;
    divmod(*this, b, q, r);
    return r.is_zero();
}

Rat Poly::content() const {
    if (is_zero()) return kZero;
    mpz_class gnum(0), lden(1);
    for (const auto& a : c_) {
        if (a == kZero) continue;
        mpz_class n = a.get_num(), d = a.get_den();
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), d.get_mpz_t());
    }
    Rat c(gnum, lden);
    c.canonicalize();
    return c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    Rat c = content();
    if (rat_sign(leading()) < 0) c = -c;
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a / c);
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    Rat inv = Rat(1) / leading();
    return *this * inv;
}

int Poly::valuation() const {
    if (is_zero()) return 0;
    int t = 0;
    while (c_[t] == kZero) ++t;
    return t;
}

Poly Poly::shift_down(int t) const {
    if (t == 0 || is_zero()) return *this;
    if (valuation() < t) throw std::runtime_error("shift_down below valuation");
    std::vector<Rat> out(c_.begin() + t, c_.end());
    return Poly(std::move(out));
}

Poly Poly::shift_up(int t) const {
    if (t == 0 || is_zero()) return *this;
    std::vector<Rat> out(c_.size() + t, kZero);
    for (size_t i = 0; i < c_.size(); ++i) out[i + t] = c_[i];
    return Poly(std::move(out));
}

Poly Poly::scale_argument(const Rat& s) const {
    std::vector<Rat> out = c_;
    Rat f(1);
    for (size_t i = 1; i < out.size(); ++i) {
        f *= s;
        out[i] *= f;
    }
    return Poly(std::move(out));
}

Poly Poly::taylor_shift(const Rat& s) const {
    if (c_.size() <= 1 || s == kZero) return *this;
    std::vector<Rat> c = c_;
    int n = static_cast<int>(c.size()) - 1;
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) c[j] += s * c[j + 1];
    return Poly(std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rat& a = coeff(d);
        if (a == kZero) continue;
        Rat mag = a;
        if (first) {
            if (rat_sign(a) < 0) os << "-";
            if (rat_sign(a) < 0) mag = -a;
            first = false;
        } else {
            os << (rat_sign(a) < 0 ? " - " : " + ");
            if (rat_sign(a) < 0) mag = -a;
        }
        bool unit = (mag == Rat(1));
        if (d == 0) {
            os << rat_to_string(mag);
        } else {
            if (!unit) os << rat_to_string(mag) << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Poly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        Poly q, r;
        Poly::divmod(f, g, q, r);
        f = g;
        g = r.is_zero() ? Poly() : r.primitive_part();
    }
    return f.primitive_part();
}

Poly poly_pow(const Poly& base, unsigned exp) {
    Poly result(Rat(1));
    Poly b = base;
    while (exp) {
        if (exp & 1u) result = result * b;
        b = b * b;
        exp >>= 1u;
    }
    return result;
}

Poly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton form; divided differences stay exact over Rat.
    const size_t n = points.size();
    if (n == 0) return Poly();
    std::vector<Rat> coef(n);
    for (size_t i = 0; i < n; ++i) coef[i] = points[i].second;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rat dx = Rat(points[i].first - points[i - level].first);
            if (dx == 0) throw std::invalid_argument("interpolation abscissae must be distinct");
            coef[i] = Rat((coef[i] - coef[i - 1]) / dx);
            if (i == level) break;
        }
    }
    Poly result(coef[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        result = result * Poly({Rat(-points[i].first), Rat(1)}) + Poly(coef[i]);
    }
    return result;
}

int positive_real_root_count(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    Poly core = p.shift_down(p.valuation());
    if (core.degree() < 1) return 0;
    auto chain = sturm_chain(core);
    std::vector<int> at0, atinf;
    at0.reserve(chain.size());
    atinf.reserve(chain.size());
    for (const auto& q : chain) {
        at0.push_back(sign_at_zero_plus(q));
        atinf.push_back(sign_at_infinity(q));
    }
    return variations(at0) - variations(atinf);
}

int root_count_in(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    if (!(lo < hi)) return 0;
    auto chain = sturm_chain(p);
    if (chain[0].degree() < 1) return 0;
    return variations_at(chain, lo) - variations_at(chain, hi);
}

std::optional<std::pair<Rat, Rat>> isolate_positive_root(const Poly& p, const Rat& width) {
    int total = positive_real_root_count(p);
    if (total == 0) return std::nullopt;
    Poly core = p.shift_down(p.valuation());
    // Cauchy bound on root magnitude.
    Rat bound(1);
    const Rat& lead = core.leading();
    for (int d = 0; d < core.degree(); ++d) {
        Rat m = core.coeff(d) / lead;
        if (rat_sign(m) < 0) m = -m;
        if (m > bound) bound = m;
    }
    bound += Rat(1);
    Rat lo(0), hi = bound;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (root_count_in(core, mid, hi) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return std::make_pair(lo, hi);
}

LaurentPoly::LaurentPoly(Poly p, int val) : p_(std::move(p)), val_(val) {
    if (p_.is_zero()) {
        val_ = 0;
        return;
    }
    int t = p_.valuation();
    if (t > 0) {
        p_ = p_.shift_down(t);
        val_ += t;
    }
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) { return LaurentPoly(p, 0); }

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-p_, val_); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int v = std::min(val_, o.val_);
    return LaurentPoly(p_.shift_up(val_ - v) + o.p_.shift_up(o.val_ - v), v);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    return LaurentPoly(p_ * o.p_, val_ + o.val_);
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
    if (s == kZero) return LaurentPoly();
    return LaurentPoly(p_ * s, val_);
}

LaurentPoly LaurentPoly::derivative() const {
    if (is_zero()) return LaurentPoly();
    // d/dx (x^v p) = x^(v-1) (v p + x p')
    Poly q = p_ * rat(val_) + p_.derivative().shift_up(1);
    return LaurentPoly(std::move(q), val_ - 1);
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
    LaurentPoly q;
    if (!try_exact_div(o, q)) throw std::runtime_error("laurent exact_div: not exact");
    return q;
}

bool LaurentPoly::try_exact_div(const LaurentPoly& o, LaurentPoly& q) const {
    if (o.is_zero()) return false;
    if (is_zero()) {
        q = LaurentPoly();
        return true;
    }
    Poly qb;
    if (!p_.try_exact_div(o.p_, qb)) return false;
    q = LaurentPoly(std::move(qb), val_ - o.val_);
    return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    if (val_ == 0) return p_.to_string(var);
    std::ostringstream os;
    os << var << "^" << val_ << "*(" << p_.to_string(var) << ")";
    return os.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rat lead = den_.leading();
    if (lead != Rat(1)) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& l) {
    if (l.is_zero()) return RatFunc();
    if (l.valuation() >= 0) return RatFunc(l.body().shift_up(l.valuation()), Poly(Rat(1)));
    return RatFunc(l.body(), Poly::monomial(Rat(1), -l.valuation()));
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const Rat& s) const {
    RatFunc r;
    r.num_ = num_ * s;
    r.den_ = s == kZero ? Poly(Rat(1)) : den_;
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == kZero) throw std::runtime_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

double RatFunc::eval_double(double x) const {
    return num_.eval_double(x) / den_.eval_double(x);
}

std::string RatFunc::to_string(const std::string& var) const {
    // Canonical form keeps the denominator monic, so polynomial means den = 1.
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace confmech
