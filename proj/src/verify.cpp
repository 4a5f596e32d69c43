#include <confmech/verify.hpp>

#include <confmech/darboux.hpp>
#include <confmech/numeric.hpp>
#include <confmech/scheme.hpp>
#include <confmech/wronskian.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace confmech {

namespace {

constexpr double kNumericTol = 5e-3;

void add(SuiteReport& rep, const std::string& name, bool passed, const std::string& detail = "") {
    rep.checks.push_back({name, passed, passed ? "" : detail});
}

// frozen deformation data: scheme, inverse-square part, constant, tail
struct FrozenPotential {
    std::vector<int> scheme;
    long inverse_square;
    long constant;
    QuasiRat tail;
};

Poly P(std::vector<long> cs) { return Poly::from_longs(cs); }

std::vector<FrozenPotential> frozen_potentials() {
    std::vector<FrozenPotential> out;
    out.push_back({{-3, -7},
                   6,
                   -4,
                   QuasiRat(0, P({-2205, 0, -3654, 0, -840, 0, 528, 0, 240, 0, 32}) * Rat(24),
                            {{P({105, 0, 126, 0, 60, 0, 8}), 2}})});
    out.push_back({{1, 4, 5},
                   2,
                   6,
                   QuasiRat(0, P({-75, 0, 230, 0, -920, 0, -144, 0, -48, 0, 96}) * Rat(8),
                            {{P({15, 0, 10, 0, -4, 0, 8}), 2}})});
    out.push_back(
        {{1, 5, 6},
         2,
         6,
         QuasiRat(0,
                  P({-675, 0, -3960, 0, 9180, 0, 432, 0, -5712, 0, 1152, 0, -960, 0, 256}) *
                      Rat(16),
                  {{P({45, 0, 60, 0, 72, 0, -48, 0, 16}), 2}})});
    {
        Poly even_num = Poly(std::vector<Rat>{
            rat_from_string("-72937816875"), rat_from_string("359826563250"),
            rat_from_string("-3559365463500"), rat_from_string("1124647108200"),
            rat_from_string("368202542400"), rat_from_string("1343539612800"),
            rat_from_string("-1951252934400"), rat_from_string("822933619200"),
            rat_from_string("-1455591836160"), rat_from_string("1118053063680"),
            rat_from_string("-1055756298240"), rat_from_string("535377653760"),
            rat_from_string("-147987087360"), rat_from_string("32552681472"),
            rat_from_string("-9212461056"), rat_from_string("5052694528"),
            rat_from_string("-1919090688"), rat_from_string("402784256"),
            rat_from_string("-49020928"), rat_from_string("2621440")});
        std::vector<Rat> full(2 * 19 + 1, Rat(0));
        for (int k = 0; k <= 19; ++k) full[2 * k] = even_num.coeff(k);
        Poly den = P({467775, 0, 623700, 0, -374220, 0, 1995840, 0, -702240, 0, 94080, 0,
                      146560, 0, -64512, 0, 45824, 0, -11264, 0, 1024});
        out.push_back({{1, 4, 5, 10, 11}, 2, 10, QuasiRat(0, Poly(full) * Rat(16), {{den, 2}})});
    }
    return out;
}

void wronskian_structure_checks(SuiteReport& rep, const std::vector<int>& indices, bool negative) {
    std::vector<EigenState> seeds;
    std::ostringstream name;
    name << "wronskian structure (" << (negative ? "-" : "+") << ")";
    for (int i : indices) {
        seeds.push_back(negative ? osc_state_negative(i) : osc_state(i));
        name << " " << i;
    }
    const int m = static_cast<int>(indices.size());
    Wronskian w = wronskian(seeds);
    bool ok = w.valuation() == m * (m + 1) / 2 && w.gauss == (negative ? m : -m);
    Poly core = w.core();
    for (int d = 1; d <= core.degree() && ok; d += 2) ok = ok && core.coeff(d) == Rat(0);
    // seeds below the ground state never produce a node; deleted-level seeds
    // may, and their root count must match the scheme-level verdict
    std::vector<int> signed_indices = indices;
    if (negative)
        for (int& i : signed_indices) i = -i;
    ok = ok && positive_real_root_count(core) == regularity(Scheme(signed_indices)).root_count;
    if (negative) ok = ok && positive_real_root_count(core) == 0;
    add(rep, name.str(), ok, ok ? "" : "valuation, weight, or core structure violated");
}

void for_each_odd_subset(int max_index, int max_size,
                         const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pool;
    for (int i = 1; i <= max_index; i += 2) pool.push_back(i);
    const int n = static_cast<int>(pool.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > max_size) continue;
        std::vector<int> subset;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) subset.push_back(pool[b]);
        fn(subset);
    }
}

}  // namespace

bool SuiteReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* SuiteReport::first_failure() const {
    for (const CheckResult& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

SuiteReport suite_identities() {
    SuiteReport rep{"identities", {}};
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m <= n; ++m) {
            std::ostringstream name;
            name << "hermite-laguerre bridge n=" << n << " m=" << m;
            add(rep, name.str(), hermite_laguerre_identity_check(n, m).all_hold(),
                "bridge identity failed");
        }
    for_each_odd_subset(13, 5, [&](const std::vector<int>& subset) {
        wronskian_structure_checks(rep, subset, false);
        wronskian_structure_checks(rep, subset, true);
    });
    return rep;
}

SuiteReport suite_golden() {
    SuiteReport rep{"golden", {}};
    for (const FrozenPotential& f : frozen_potentials()) {
        Scheme s(f.scheme);
        SchrodingerOp op = dcka_potential(s);
        bool ok = op.inverse_square == Rat(f.inverse_square) && op.constant == Rat(f.constant) &&
                  QuasiRat(op.tail - f.tail).is_zero();
        add(rep, "deformation " + s.to_string(), ok, "potential differs from the frozen form");
    }
    return rep;
}

SuiteReport suite_duality(int max_index) {
    SuiteReport rep{"duality", {}};

    {
        DualityResult d = dual(Scheme({1, 4, 5, 10, 11}));
        add(rep, "dual of 1,4,5,10,11",
            d.dual == Scheme({-2, -3, -4, -5, -8, -9, -11}) && d.shift == Rat(24),
            "expected -2,-3,-4,-5,-8,-9,-11 with shift 24");
        DualityResult d3 = dual(Scheme({-3}));
        add(rep, "dual of -3", d3.dual == Scheme({1, 2, 3}) && d3.shift == Rat(8),
            "expected 1,2,3 with shift 8");
        DualityResult d13 = dual(Scheme({1, 3}));
        add(rep, "dual of 1,3", d13.dual == Scheme({-1, -3}) && d13.shift == Rat(8),
            "expected -1,-3 with shift 8");
    }

    bool involution = true, shift_law = true;
    int checked = 0;
    std::vector<int> current;
    // enumerate every nonempty index set up to max_index, both sign families
    std::function<void(int)> rec = [&](int next) {
        if (!current.empty()) {
            for (int sign : {1, -1}) {
                std::vector<int> idx;
                for (int v : current) idx.push_back(sign * v);
                Scheme s(idx);
                DualityResult d = dual(s);
                DualityResult dd = dual(d.dual);
                involution = involution && dd.dual == s;
                shift_law = shift_law && d.shift == Rat(2 * (s.max_magnitude() + 1)) &&
                            dd.shift == d.shift;
                ++checked;
            }
        }
        for (int v = next; v <= max_index; ++v) {
            current.push_back(v);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(1);
    {
        std::ostringstream name;
        name << "involution over " << checked << " schemes";
        add(rep, name.str(), involution, "dual of dual differs from the input");
        add(rep, "shift law 2(n_m+1)", shift_law, "duality shift violated");
    }

    for (const Scheme& s : {Scheme({-3}), Scheme({1, 3}), Scheme({1, 5, 6}), Scheme({-3, -7}),
                            Scheme({1, 4, 5, 10, 11})}) {
        DualityResult d = dual(s);
        SchrodingerOp a = dcka_potential(s);
        SchrodingerOp b = dcka_potential(d.dual);
        // d.shift = L_pos - L_neg, so the dual sits below a positive input
        Rat delta = s.sign_class() == Scheme::SignClass::positive ? d.shift : Rat(-d.shift);
        SchrodingerOp shifted = b.shifted(delta);
        bool ok = a.inverse_square == shifted.inverse_square && a.constant == shifted.constant &&
                  QuasiRat(a.tail - shifted.tail).is_zero();
        add(rep, "dual potentials agree for " + s.to_string(), ok,
            "potential pair differs after shift alignment");
    }
    return rep;
}

SuiteReport suite_numeric() {
    SuiteReport rep{"numeric", {}};
    for (const Scheme& s : {Scheme({-3, -7}), Scheme({1, 4, 5}), Scheme({1, 5, 6}),
                            Scheme({1, 4, 5, 10, 11})}) {
        SpectralReport r = verify_spectrum(s, GridSpec{}, 6);
        std::ostringstream detail;
        detail << "max level error " << r.max_abs_error << ", converged " << r.converged
               << ", counts " << r.counts_match;
        add(rep, "spectrum of " + s.to_string(),
            r.max_abs_error < kNumericTol && r.converged && r.counts_match, detail.str());
    }
    return rep;
}

SuiteReport suite_all() {
    SuiteReport rep{"all", {}};
    for (const SuiteReport& part :
         {suite_identities(), suite_golden(), suite_duality(), suite_numeric()})
        rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
    return rep;
}

SuiteReport run_suite(const std::string& name) {
    if (name == "identities") return suite_identities();
    if (name == "golden") return suite_golden();
    if (name == "duality") return suite_duality();
    if (name == "numeric") return suite_numeric();
    if (name == "all") return suite_all();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace confmech
