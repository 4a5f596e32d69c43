#include <confmech/scheme.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confmech {

namespace {

// canonical order: physical block ascending, then partners by magnitude
bool scheme_less(int a, int b) {
    bool na = a < 0, nb = b < 0;
    if (na != nb) return nb;
    int ma = na ? -a : a, mb = nb ? -b : b;
    return ma < mb;
}

}  // namespace

Scheme::Scheme(std::vector<int> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end(), scheme_less);
    for (size_t i = 1; i < idx_.size(); ++i)
        if (idx_[i] == idx_[i - 1]) throw std::invalid_argument("duplicate scheme index");
}

Scheme Scheme::parse(const std::string& text) {
    std::vector<int> idx;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
        if (token.empty()) {
            if (idx.empty() && in.eof()) break;  // wholly empty input
            throw std::invalid_argument("empty scheme entry");
        }
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("bad scheme entry: " + token);
        idx.push_back(v);
    }
    return Scheme(std::move(idx));
}

bool Scheme::contains(int i) const {
    return std::find(idx_.begin(), idx_.end(), i) != idx_.end();
}

Scheme::SignClass Scheme::sign_class() const {
    bool has_zero = false, has_pos = false, has_neg = false;
    for (int i : idx_) {
        if (i == 0) has_zero = true;
        else if (i > 0) has_pos = true;
        else has_neg = true;
    }
    if (has_zero || (has_pos && has_neg)) return SignClass::mixed;
    return has_neg ? SignClass::negative : SignClass::positive;
}

int Scheme::max_magnitude() const {
    int m = -1;
    for (int i : idx_) m = std::max(m, i < 0 ? -i : i);
    return m;
}

std::vector<EigenState> Scheme::states() const {
    std::vector<EigenState> out;
    out.reserve(idx_.size());
    for (int i : idx_) out.push_back(seed_state(i));
    return out;
}

std::string Scheme::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (i) os << ",";
        os << idx_[i];
    }
    return os.str();
}

DualityResult dual(const Scheme& s) {
    if (s.empty()) return DualityResult{Scheme(), rat(0), 0};
    if (s.sign_class() == Scheme::SignClass::mixed)
        throw std::invalid_argument("dual of a mixed scheme; reduce it first");
    bool negative_input = s.sign_class() == Scheme::SignClass::negative;
    int nm = s.max_magnitude();
    std::set<int> mags;
    for (int i : s.indices()) mags.insert(i < 0 ? -i : i);
    std::vector<int> out;
    for (int j = 0; j <= nm; ++j) {
        if (mags.count(j)) continue;
        out.push_back(negative_input ? nm - j : -(nm - j));
    }
    return DualityResult{Scheme(std::move(out)), rat(2 * (nm + 1)), nm + 1};
}

Reduction reduce_mixed(const Scheme& s) {
    // tokens (n, family): family +1 physical, -1 partner; (0,-1) is the
    // transient lowering token
    std::vector<std::pair<int, int>> cur;
    for (int i : s.indices()) cur.emplace_back(i < 0 ? -i : i, i < 0 ? -1 : +1);
    long gauss_steps = 0;  // K in W(input) = e^{K x^2/2} W(current)

    auto has = [&cur](int n, int fam) {
        for (auto& [cn, cf] : cur)
            if (cn == n && cf == fam) return true;
        return false;
    };
    auto raise_all = [&cur]() {
        for (auto& [n, fam] : cur) {
            if (fam > 0)
                ++n;  // physical ladder up
            else if (n == 0)
                fam = +1;  // the paired partner token becomes psi_0
            else
                --n;  // partner ladder lowers the index
        }
    };

    while (true) {
        if (has(0, -1)) {
            // consume the lowering token: raise everything else
            std::erase_if(cur, [](const auto& t) { return t.first == 0 && t.second < 0; });
            raise_all();
            ++gauss_steps;
        } else if (std::any_of(cur.begin(), cur.end(),
                               [](const auto& t) { return t.second < 0; })) {
            // insert a pair at the bottom, then raise
            raise_all();
            cur.emplace_back(0, +1);
            ++gauss_steps;
        } else if (has(0, +1)) {
            // all physical: peel psi_0 off by lowering everything else
            std::erase_if(cur, [](const auto& t) { return t.first == 0; });
            for (auto& [n, fam] : cur) --n;
            --gauss_steps;
        } else {
            break;
        }
    }
    std::vector<int> out;
    out.reserve(cur.size());
    for (auto& [n, fam] : cur) out.push_back(n);
    return Reduction{Scheme(std::move(out)), rat(-2 * gauss_steps)};
}

Regularity regularity(const Scheme& s) {
    if (s.empty()) return Regularity{true, 0, Poly(rat(1)), std::nullopt};
    Wronskian w = wronskian(s.states());
    if (w.is_zero()) throw std::logic_error("seed states produced a zero Wronskian");
    Poly core = w.core();
    int roots = positive_real_root_count(core);
    std::optional<std::pair<Rat, Rat>> window;
    if (roots > 0) window = isolate_positive_root(core, rat(1, 1024));
    return Regularity{roots == 0, roots, std::move(core), std::move(window)};
}

std::vector<Rat> SpectrumModel::lowest(int k) const {
    std::vector<Rat> out;
    for (const auto& b : bands) {
        long n = b.count ? *b.count : k;
        for (long i = 0; i < n && static_cast<int>(out.size()) < k; ++i)
            out.push_back(b.lowest + rat(4 * i));
        if (static_cast<int>(out.size()) >= k) break;
    }
    return out;
}

std::vector<Rat> SpectrumModel::lowest_input_convention(int k) const {
    std::vector<Rat> out = lowest(k);
    for (auto& e : out) e += rep_shift;
    return out;
}

int SpectrumModel::valence_count() const {
    int n = 0;
    for (const auto& b : bands)
        if (b.count) n += *b.count;
    return n;
}

SpectrumModel predict_spectrum(const Scheme& s) {
    Regularity reg = regularity(s);
    if (!reg.regular) throw std::invalid_argument("singular scheme has no predicted spectrum");
    Reduction red = reduce_mixed(s);

    std::set<long> removed;  // energies 2k+1 of odd seeds in the representative
    for (int k : red.positive.indices())
        if (k % 2 == 1) removed.insert(2L * k + 1);
    long horizon = removed.empty() ? 3 : *removed.rbegin() + 4;

    SpectrumModel model;
    std::optional<Rat> open_start;
    int open_count = 0;
    for (long e = 3; e <= horizon; e += 4) {
        if (removed.count(e)) {
            if (open_start) {
                model.bands.push_back(Band{*open_start, open_count});
                open_start.reset();
                open_count = 0;
            }
        } else {
            if (!open_start) open_start = rat(e);
            ++open_count;
        }
    }
    // whatever is open at the horizon continues forever
    model.bands.push_back(Band{open_start ? *open_start : rat(horizon + 4), std::nullopt});

    model.positive_rep = red.positive;
    model.rep_shift = red.shift;
    model.shift_to_negative = dual(red.positive).shift;
    return model;
}

int n_infinity(const Scheme& s) {
    SpectrumModel model = predict_spectrum(s);
    const Scheme& rep = model.positive_rep;
    if (rep.empty())
        throw std::invalid_argument("no ladder counting for the undeformed system");
    int nm = rep.max_magnitude();
    int n_plus = static_cast<int>(rep.size());
    int n_minus = nm + 1 - n_plus;
    int nv = model.valence_count();
    int total = n_plus + n_minus;  // = nm + 1
    return (nm % 2 == 1 ? total / 2 : (total - 1) / 2) - nv;
}

}  // namespace confmech
