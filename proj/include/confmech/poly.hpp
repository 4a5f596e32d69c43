#pragma once

#include <confmech/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace confmech {

// Dense univariate polynomial over Rat. Invariant: coefficient vector is
// empty exactly for the zero polynomial, otherwise the leading entry is
// nonzero. degree() of the zero polynomial is the sentinel -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(std::vector<Rat> ascending_coeffs);

    static Poly monomial(const Rat& coeff, int degree);
    static Poly from_longs(const std::vector<long>& ascending_coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& coeff(int deg) const;          // 0 outside stored range
    const Rat& leading() const;               // throws on zero polynomial
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    // Quotient/remainder with remainder degree < divisor degree.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Division that must be exact; throws otherwise.
    Poly exact_div(const Poly& b) const;
    // True and sets quotient when b divides *this exactly.
    bool try_exact_div(const Poly& b, Poly& q) const;

    // Positive gcd of numerators' |content|; content(0) = 0.
    Rat content() const;
    // this / content, scaled so the leading coefficient is positive.
    // Result has integer coefficients with gcd 1.
    Poly primitive_part() const;
    // Divides by the leading coefficient.
    Poly monic() const;

    // x^t | p with maximal t (0 for the zero polynomial).
    int valuation() const;
    // p / x^t.
    Poly shift_down(int t) const;
    // p * x^t.
    Poly shift_up(int t) const;

    // p(s*x) for rational s; used by parity/rotation transforms.
    Poly scale_argument(const Rat& s) const;
    // p(x + s).
    Poly taylor_shift(const Rat& s) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // primitive, positive leading
Poly poly_pow(const Poly& base, unsigned exp);

// Unique polynomial of degree < points.size() through the given (x, y) pairs.
// Abscissae must be pairwise distinct.
Poly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Number of distinct roots of p in the open interval (0, +inf), exact,
// via a Sturm chain (no floating point anywhere).
int positive_real_root_count(const Poly& p);

// Number of distinct roots in (lo, hi], exact.
int root_count_in(const Poly& p, const Rat& lo, const Rat& hi);

// An interval (lo, hi] with 0 < lo < hi containing at least one positive
// root, bisected until hi - lo <= width. Empty when there is no positive root.
std::optional<std::pair<Rat, Rat>> isolate_positive_root(const Poly& p, const Rat& width);

// Laurent polynomial x^val * p with p(0) != 0 (zero stored as p = 0, val = 0).
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(Poly p, int val);
    static LaurentPoly from_poly(const Poly& p);

    bool is_zero() const { return p_.is_zero(); }
    int valuation() const { return val_; }
    int top_degree() const { return val_ + p_.degree(); }
    const Poly& body() const { return p_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& s) const;
    bool operator==(const LaurentPoly& o) const { return val_ == o.val_ && p_ == o.p_; }

    LaurentPoly derivative() const;
    LaurentPoly exact_div(const LaurentPoly& o) const;
    bool try_exact_div(const LaurentPoly& o, LaurentPoly& q) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    Poly p_;
    int val_ = 0;
};

// Rational function, canonical form: gcd(num, den) = 1 and den monic.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(const Poly& p) { return RatFunc(p, Poly(Rat(1))); }
    static RatFunc from_laurent(const LaurentPoly& l);

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rat& s) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative() const;
    Rat eval(const Rat& x) const;  // throws on a pole
    double eval_double(double x) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    Poly num_, den_;
};

}  // namespace confmech
