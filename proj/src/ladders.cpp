#include <confmech/ladders.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace confmech {

namespace {

// a = r * b for a scalar r, or nullopt. b must be nonzero.
std::optional<Rat> exact_ratio(const QuasiRat& a, const QuasiRat& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Rat(0);
    for (long t = 1; t <= 200; ++t) {
        Rat x0(t, 7);
        bool ok = true;
        for (const auto& [core, e] : a.cores())
            if (core.eval(x0) == 0) { ok = false; break; }
        if (ok)
            for (const auto& [core, e] : b.cores())
                if (core.eval(x0) == 0) { ok = false; break; }
        if (!ok) continue;
        Rat bv = b.eval(x0);
        if (bv == 0) continue;
        Rat r = Rat(a.eval(x0) / bv);
        if ((a - b * r).is_zero()) return r;
        return std::nullopt;
    }
    throw std::logic_error("no admissible evaluation point found");
}

void check_probe_set(const std::vector<QuasiState>& probes, size_t need,
                     const SchrodingerOp& ham) {
    if (probes.size() < need) throw std::invalid_argument("too few probe states");
    for (size_t i = 0; i < need; ++i) {
        if (probes[i].is_zero() || !ham.eigen_check(probes[i]))
            throw std::invalid_argument("probe is not an exact eigenstate");
        for (size_t j = 0; j < i; ++j)
            if (probes[i].energy == probes[j].energy)
                throw std::invalid_argument("probe energies must be distinct");
    }
}

// Scalar action of X on each probe, interpolated to q and certified as the
// exact operator identity X = q(ham): the difference has order at most
// composite_order yet annihilates composite_order + 1 independent states.
OperatorPoly polynomial_in_hamiltonian(const std::function<QuasiState(const QuasiState&)>& X,
                                       int composite_order, const SchrodingerOp& ham,
                                       const std::vector<QuasiState>& probes) {
    const size_t need = static_cast<size_t>(composite_order) + 1;
    check_probe_set(probes, need, ham);
    std::vector<Rat> lambda(need);
    for (size_t i = 0; i < need; ++i) {
        QuasiState img = X(probes[i]);
        auto r = exact_ratio(img.fn, probes[i].fn);
        if (!r) throw std::domain_error("operator action is not scalar on an eigenprobe");
        lambda[i] = *r;
    }
    const size_t pts_needed = static_cast<size_t>(composite_order / 2) + 1;
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(pts_needed);
    for (size_t i = 0; i < pts_needed; ++i) pts.emplace_back(probes[i].energy, lambda[i]);
    OperatorPoly q = poly_interpolate(pts);
    for (size_t i = 0; i < need; ++i)
        if (q.eval(probes[i].energy) != lambda[i])
            throw std::domain_error("residue is not polynomial in the reference operator");
    return q;
}

// [ham, op] = step * op on an exact eigenstate at E reduces to: op maps the
// state to an exact eigenstate at E + step (or to zero). Checking that on
// order(op) + 3 independent probes certifies the operator identity, since
// the difference has order at most order(op) + 2.
void certify_step(const LadderOp& op, const std::vector<QuasiState>& probes) {
    const size_t need = static_cast<size_t>(op.order()) + 3;
    check_probe_set(probes, need, op.ham);
    for (size_t i = 0; i < need; ++i) {
        QuasiState img = op.apply(probes[i]);
        if (img.is_zero()) continue;
        if (!op.ham.eigen_check(img))
            throw std::logic_error("ladder step certification failed");
    }
}

std::vector<QuasiState> probes_for(const LadderOp& op, int count) {
    if (!op.scheme.empty()) return eigenprobes(op.scheme, count);
    long m = op.ham.coupling_index().value();
    std::vector<QuasiState> out;
    out.reserve(count);
    for (int l = 0; l < count; ++l) out.push_back(to_quasi(isotonic_state(static_cast<int>(m), l)));
    return out;
}

void require_shared_reference(const LadderOp& a, const LadderOp& b) {
    if (a.ham.inverse_square != b.ham.inverse_square || a.ham.constant != b.ham.constant ||
        !(a.ham.tail == b.ham.tail))
        throw std::invalid_argument("operators do not share a reference operator");
}

bool spectrum_contains(const SpectrumModel& spectrum, const Rat& energy_input) {
    Rat e = Rat(energy_input - spectrum.rep_shift);
    for (const Band& band : spectrum.bands) {
        Rat off = Rat((e - band.lowest) / 4);
        if (!rat_is_integer(off) || rat_sign(off) < 0) continue;
        if (!band.count) return true;
        if (off < *band.count) return true;
    }
    return false;
}

int band_index(const SpectrumModel& spectrum, const Rat& energy_input) {
    Rat e = Rat(energy_input - spectrum.rep_shift);
    for (size_t b = 0; b < spectrum.bands.size(); ++b) {
        Rat off = Rat((e - spectrum.bands[b].lowest) / 4);
        if (!rat_is_integer(off) || rat_sign(off) < 0) continue;
        if (!spectrum.bands[b].count || off < *spectrum.bands[b].count)
            return static_cast<int>(b);
    }
    throw std::invalid_argument("energy is not a predicted level");
}

std::vector<Rat> physical_levels(const SpectrumModel& spectrum, const Rat& cutoff) {
    int k = 16;
    std::vector<Rat> all = spectrum.lowest_input_convention(k);
    while (!all.empty() && all.back() <= cutoff) {
        k *= 2;
        all = spectrum.lowest_input_convention(k);
        if (k > (1 << 20)) throw std::invalid_argument("cutoff window too large");
    }
    std::vector<Rat> out;
    for (const Rat& e : all)
        if (e <= cutoff) out.push_back(e);
    return out;
}

// The physical eigenstate at a predicted level, via the equivalent positive
// transformation.
QuasiState level_state(const SpectrumModel& spectrum, const Rat& energy_input) {
    Rat e_rep = Rat(energy_input - spectrum.rep_shift);
    Rat idx = Rat((e_rep - 1) / 2);
    if (!rat_is_integer(idx)) throw std::invalid_argument("level is not an oscillator image");
    long n = idx.get_num().get_si();
    QuasiState st = map_state(spectrum.positive_rep, osc_state(static_cast<int>(n)));
    st.energy = energy_input;
    return st;
}

OpChain repeat_chain(const OpChain& c, int times) {
    OpChain out;
    for (int i = 0; i < times; ++i) out = c.after(out);
    return out;
}

// target = source . q(ham) as an exact identity, with q read off probe
// ratios and certified on order(target) + 1 independent eigenstates.
std::optional<OperatorPoly> factor_through(const OpChain& target, const OpChain& source,
                                           const SchrodingerOp& ham,
                                           const std::vector<QuasiState>& probes) {
    const int ot = target.order(), os = source.order();
    if (ot < os || (ot - os) % 2 != 0) return std::nullopt;
    const size_t deg = static_cast<size_t>((ot - os) / 2);
    const size_t need = static_cast<size_t>(ot) + 1;
    check_probe_set(probes, need, ham);
    std::vector<QuasiRat> t_img(need), s_img(need);
    std::vector<std::pair<Rat, Rat>> pts;
    for (size_t i = 0; i < need; ++i) {
        t_img[i] = target.apply(probes[i]).fn;
        s_img[i] = source.apply(probes[i]).fn;
        if (s_img[i].is_zero()) {
            if (!t_img[i].is_zero()) return std::nullopt;
            continue;
        }
        if (pts.size() <= deg) {
            auto r = exact_ratio(t_img[i], s_img[i]);
            if (!r) return std::nullopt;
            pts.emplace_back(probes[i].energy, *r);
        }
    }
    if (pts.size() < deg + 1) return std::nullopt;
    OperatorPoly q = poly_interpolate(pts);
    for (size_t i = 0; i < need; ++i) {
        QuasiRat expect = QuasiRat(s_img[i] * q.eval(probes[i].energy));
        if (!(t_img[i] - expect).is_zero()) return std::nullopt;
    }
    return q;
}

int component_count(int n, const std::vector<std::vector<int>>& adj) {
    // Kosaraju on a graph this small needs no tuning.
    std::vector<std::vector<int>> radj(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) radj[w].push_back(v);
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::function<void(int, const std::vector<std::vector<int>>&)> dfs =
        [&](int v, const std::vector<std::vector<int>>& g) {
            seen[v] = 1;
            for (int w : g[v])
                if (!seen[w]) dfs(w, g);
            order.push_back(v);
        };
    for (int v = 0; v < n; ++v)
        if (!seen[v]) dfs(v, adj);
    std::fill(seen.begin(), seen.end(), 0);
    int comps = 0;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (seen[v]) continue;
        ++comps;
        size_t mark = order.size();
        dfs(v, radj);
        order.resize(mark);
    }
    return comps;
}

int nullspace_dimension(std::vector<std::vector<Rat>>& rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat f = Rat(rows[r][col] / rows[rank][col]);
            for (int c = col; c < cols; ++c) rows[r][c] = Rat(rows[r][c] - f * rows[rank][c]);
        }
        ++rank;
    }
    return cols - rank;
}

}  // namespace

QuasiState LadderOp::apply(const QuasiState& s) const {
    QuasiState out = chain.apply(s);
    out.energy = Rat(s.energy + step);
    out.physical = !out.is_zero() && physical_form(out);
    return out;
}

std::pair<LadderOp, LadderOp> isotonic_ladders(long m) {
    if (m < 0) throw std::invalid_argument("coupling index must be nonnegative");
    // (d/dx + x - m/x)(-d/dx - x - m/x) = -(a^-)^2 + m(m+1)/x^2
    QuasiRat outer(-1, Poly::from_longs({-m, 0, 1}), {});
    QuasiRat inner(-1, Poly::from_longs({-m, 0, -1}), {});
    LadderOp minus;
    minus.chain = OpChain{{FirstOrder{-1, inner}, FirstOrder{+1, outer}}};
    minus.step = rat(-4);
    minus.kind = LadderKind::Cm;
    minus.ham = isotonic_op(m);
    LadderOp plus = minus;
    plus.chain = minus.chain.adjoint();
    plus.step = rat(4);
    auto probes = probes_for(minus, 2 + 3);
    certify_step(minus, probes);
    certify_step(plus, probes);
    return {minus, plus};
}

LadderFamily build_ladders(const Scheme& s) {
    Regularity reg = regularity(s);
    if (!reg.regular) throw std::domain_error("scheme generates a singular potential");
    LadderFamily fam;
    fam.scheme = s;
    fam.ham = dcka_potential(s);
    Reduction red = reduce_mixed(s);
    fam.positive_rep = red.positive;
    DualityResult dd = dual(red.positive);
    fam.negative_rep = dd.dual;
    fam.to_plus = Rat(-red.shift);
    fam.to_minus = Rat(fam.to_plus - dd.shift);
    const int nm = fam.positive_rep.max_magnitude();
    fam.even_top = (nm % 2 == 0);

    OpChain ap = intertwiner_chain(fam.positive_rep);
    OpChain an = intertwiner_chain(fam.negative_rep);
    OpChain ap_up = ap.adjoint();
    OpChain an_up = an.adjoint();
    OpChain sq_down{{osc_lower(), osc_lower()}};
    OpChain sq_up{{osc_raise(), osc_raise()}};

    auto make = [&](OpChain chain, const Rat& step, LadderKind kind) {
        LadderOp op;
        op.chain = std::move(chain);
        op.step = step;
        op.kind = kind;
        op.ham = fam.ham;
        op.scheme = s;
        return op;
    };
    fam.a_minus = make(an.after(sq_down.after(an_up)), rat(-4), LadderKind::A);
    fam.a_plus = make(an.after(sq_up.after(an_up)), rat(4), LadderKind::A);
    fam.b_minus = make(ap.after(sq_down.after(ap_up)), rat(-4), LadderKind::B);
    fam.b_plus = make(ap.after(sq_up.after(ap_up)), rat(4), LadderKind::B);
    if (fam.even_top) {
        Rat step = Rat(dd.shift + 2);
        fam.c_minus = make(ap.after(OpChain{{osc_lower()}}.after(an_up)), Rat(-step),
                           LadderKind::Ctilde);
        fam.c_plus = make(an.after(OpChain{{osc_raise()}}.after(ap_up)), step,
                          LadderKind::Ctilde);
    } else {
        fam.c_minus = make(ap.after(an_up), Rat(-dd.shift), LadderKind::C);
        fam.c_plus = make(an.after(ap_up), dd.shift, LadderKind::C);
    }

    int max_order = std::max(fam.a_minus.order(), std::max(fam.b_minus.order(),
                                                           fam.c_minus.order()));
    auto probes = eigenprobes(s, max_order + 3);
    for (const LadderOp* op : {&fam.a_minus, &fam.a_plus, &fam.b_minus, &fam.b_plus,
                               &fam.c_minus, &fam.c_plus})
        certify_step(*op, probes);
    return fam;
}

std::vector<QuasiState> eigenprobes(const Scheme& s, int count) {
    Reduction red = reduce_mixed(s);
    std::vector<QuasiState> out;
    out.reserve(count);
    for (int n = 0; static_cast<int>(out.size()) < count; ++n) {
        if (red.positive.contains(n)) continue;
        QuasiState st = map_state(red.positive, osc_state(n));
        st.energy = Rat(st.energy + red.shift);
        out.push_back(std::move(st));
    }
    return out;
}

OperatorPoly product_polynomial(const OpChain& a, const OpChain& b, const SchrodingerOp& ham,
                                const std::vector<QuasiState>& probes) {
    auto X = [&](const QuasiState& st) { return a.apply(b.apply(st)); };
    return polynomial_in_hamiltonian(X, a.order() + b.order(), ham, probes);
}

OperatorPoly product_polynomial(const LadderOp& a, const LadderOp& b) {
    require_shared_reference(a, b);
    auto probes = probes_for(a, a.order() + b.order() + 1);
    return product_polynomial(a.chain, b.chain, a.ham, probes);
}

OperatorPoly commutator_polynomial(const LadderOp& a, const LadderOp& b) {
    require_shared_reference(a, b);
    auto probes = probes_for(a, a.order() + b.order() + 1);
    auto X = [&](const QuasiState& st) {
        QuasiState ab = a.chain.apply(b.chain.apply(st));
        QuasiState ba = b.chain.apply(a.chain.apply(st));
        ab.fn = QuasiRat(ab.fn - ba.fn);
        return ab;
    };
    return polynomial_in_hamiltonian(X, a.order() + b.order(), a.ham, probes);
}

Poly removed_level_polynomial(const Scheme& positive_rep) {
    Poly p(Rat(1));
    for (int k : positive_rep.indices()) p = p * Poly({Rat(-(2 * k + 1)), Rat(1)});
    return p;
}

Poly reflected_seed_polynomial(const Scheme& negative_rep) {
    Poly r(Rat(1));
    for (int l : negative_rep.indices()) r = r * Poly({Rat(2 * std::abs(l) + 1), Rat(1)});
    return r;
}

OperatorPoly predicted_product(const LadderFamily& f, LadderKind kind, bool plus_minus) {
    const Poly P = removed_level_polynomial(f.positive_rep);
    const Poly R = reflected_seed_polynomial(f.negative_rep);
    const Poly x1 = Poly::from_longs({1, 1});   // x + 1
    const Poly x3 = Poly::from_longs({3, 1});   // x + 3
    switch (kind) {
        case LadderKind::A: {
            // dressed through the negative chain: seeds commute out as R
            Poly F = x1 * x3 * R * R.taylor_shift(Rat(4));
            if (plus_minus) F = F.taylor_shift(Rat(-4));
            return F.taylor_shift(f.to_minus);
        }
        case LadderKind::B: {
            Poly G = x1 * x3 * P * P.taylor_shift(Rat(4));
            if (plus_minus) G = G.taylor_shift(Rat(-4));
            return G.taylor_shift(f.to_plus);
        }
        case LadderKind::C: {
            // glued pair: the inner chain contracts to its own spectral factor
            Poly H = P * R;
            return plus_minus ? H.taylor_shift(f.to_minus) : H.taylor_shift(f.to_plus);
        }
        case LadderKind::Ctilde: {
            // middle oscillator factor contributes one linear term
            if (plus_minus) {
                Poly q = Poly::from_longs({-1, 1}) * P.taylor_shift(Rat(-2)) * R;
                return q.taylor_shift(f.to_minus);
            }
            Poly q = x1 * R.taylor_shift(Rat(2)) * P;
            return q.taylor_shift(f.to_plus);
        }
        case LadderKind::Cm:
            break;
    }
    throw std::invalid_argument("no closed-form law for this ladder kind");
}

OperatorPoly predicted_commutator(const LadderFamily& f, LadderKind kind) {
    return Poly(predicted_product(f, kind, false) - predicted_product(f, kind, true));
}

Rat default_cutoff(const SpectrumModel& spectrum) {
    return Rat(spectrum.bands.back().lowest + spectrum.rep_shift + 24);
}

KernelReport kernel_report(const LadderOp& op, const SpectrumModel& spectrum,
                           const Rat& cutoff) {
    if (op.scheme.empty())
        throw std::invalid_argument("kernel scan needs a scheme-generated ladder");
    if (!(spectrum.positive_rep == reduce_mixed(op.scheme).positive))
        throw std::invalid_argument("spectrum model belongs to a different scheme");
    KernelReport rep;
    rep.cutoff_energy = cutoff;
    for (const Rat& e : physical_levels(spectrum, cutoff)) {
        QuasiState st = level_state(spectrum, e);
        bool annihilated = op.chain.apply(st).is_zero();
        if (annihilated) rep.physical_members.push_back({e, band_index(spectrum, e)});
        if (op.kind == LadderKind::C && rat_sign(op.step) < 0) {
            bool leaves = !spectrum_contains(spectrum, Rat(e + op.step));
            if (annihilated != leaves)
                throw std::logic_error("kernel scan disagrees with the arrival rule");
        }
    }
    int last_band = static_cast<int>(spectrum.bands.size()) - 1;
    for (const KernelMember& m : rep.physical_members)
        if (m.band == last_band) ++rep.equidistant_members;

    // Nonphysical candidates: even-index images in the same window, plus the
    // reflected-seed images outside the representative's mirror set.
    for (int n = 0;; n += 2) {
        Rat e = Rat(rat(2 * n + 1) + spectrum.rep_shift);
        if (e > cutoff) break;
        if (spectrum.positive_rep.contains(n)) continue;
        QuasiState st = map_state(spectrum.positive_rep, osc_state(n));
        st.energy = e;
        ++rep.nonphysical_count_checked;
        if (op.chain.apply(st).is_zero()) rep.nonphysical_annihilated.push_back(e);
    }
    Scheme neg = dual(spectrum.positive_rep).dual;
    for (int n = 0; n <= spectrum.positive_rep.max_magnitude(); ++n) {
        if (neg.contains(-n)) continue;
        QuasiState st = map_state(spectrum.positive_rep, osc_state_negative(n));
        st.energy = Rat(st.energy + spectrum.rep_shift);
        ++rep.nonphysical_count_checked;
        if (op.chain.apply(st).is_zero()) rep.nonphysical_annihilated.push_back(st.energy);
    }
    return rep;
}

ConnectivityReport spectrum_generating_check(const std::vector<LadderOp>& ops,
                                             const SpectrumModel& spectrum, const Rat& cutoff) {
    ConnectivityReport rep;
    std::vector<Rat> levels = physical_levels(spectrum, cutoff);
    rep.levels = static_cast<int>(levels.size());
    std::vector<QuasiState> states;
    states.reserve(levels.size());
    for (const Rat& e : levels) states.push_back(level_state(spectrum, e));
    std::vector<std::vector<int>> adj(levels.size());
    for (size_t i = 0; i < levels.size(); ++i) {
        for (const LadderOp& op : ops) {
            Rat target = Rat(levels[i] + op.step);
            auto it = std::find(levels.begin(), levels.end(), target);
            if (it == levels.end()) continue;
            QuasiState img = op.chain.apply(states[i]);
            if (img.is_zero()) continue;
            size_t j = static_cast<size_t>(it - levels.begin());
            if (!proportional(img, states[j]))
                throw std::logic_error("ladder image escapes the predicted eigenstate");
            adj[i].push_back(static_cast<int>(j));
        }
    }
    rep.components = component_count(static_cast<int>(levels.size()), adj);
    rep.strongly_connected = (rep.components == 1 && rep.levels > 0);
    return rep;
}

std::vector<ReductionRelation> reduction_check(const Scheme& s) {
    LadderFamily fam = build_ladders(s);
    std::vector<ReductionRelation> out;
    int max_order = std::max(fam.a_minus.order(), fam.b_minus.order());
    auto probes = eigenprobes(s, max_order + 1);

    auto attempt = [&](const std::string& desc, const OpChain& target, const OpChain& source) {
        ReductionRelation rel;
        rel.description = desc;
        auto q = factor_through(target, source, fam.ham, probes);
        if (q) {
            rel.holds = true;
            rel.cofactor = *q;
        }
        out.push_back(std::move(rel));
    };

    if (fam.b_minus.order() > fam.a_minus.order())
        attempt("b_minus = a_minus . q(H)", fam.b_minus.chain, fam.a_minus.chain);
    else if (fam.a_minus.order() > fam.b_minus.order())
        attempt("a_minus = b_minus . q(H)", fam.a_minus.chain, fam.b_minus.chain);

    auto coupling = fam.ham.coupling_index();
    if (coupling && *coupling >= 1) {
        long m = *coupling;
        std::vector<int> prefix_idx;
        for (long k = 1; k <= 2 * m - 1; k += 2) prefix_idx.push_back(static_cast<int>(k));
        Scheme prefix(prefix_idx);
        bool contained = true;
        for (int k : prefix.indices())
            if (!fam.positive_rep.contains(k)) { contained = false; break; }
        if (contained) {
            auto [iso_minus, iso_plus] = isotonic_ladders(m);
            if (prefix == fam.positive_rep) {
                attempt("c_minus = scale (iso_minus)^coupling", fam.c_minus.chain,
                        repeat_chain(iso_minus.chain, static_cast<int>(m)));
            } else {
                std::vector<EigenState> added;
                for (int k : fam.positive_rep.indices())
                    if (!prefix.contains(k)) added.push_back(osc_state(k));
                OpChain t = partial_intertwiner_chain(prefix.states(), added);
                OpChain btilde_minus = t.after(iso_minus.chain.after(t.adjoint()));
                attempt("a_minus = btilde_minus . q(H)", fam.a_minus.chain, btilde_minus);
                attempt("b_minus = btilde_minus . q(H)", fam.b_minus.chain, btilde_minus);
            }
        }
    }
    return out;
}

LadderSearchReport order_two_ladder_search(const SchrodingerOp& ham, const Rat& step,
                                           int degree_bound, int core_power_bound) {
    LadderSearchReport rep;
    rep.degree_bound = degree_bound;
    rep.core_power_bound = core_power_bound;
    Poly core(Rat(1));
    for (const auto& [c, e] : ham.tail.cores()) core = core * c;
    if (core.is_constant()) rep.core_power_bound = core_power_bound = 0;

    DiffOp h = ham.as_diffop();
    // Covers every denominator in [H, O] - step O: the ansatz contributes
    // x^2 core^b, two derivatives of it add x^2 core^2, and the potential
    // with two derivatives adds x^4 core^4.
    Poly master = Poly::monomial(Rat(1), 8) * poly_pow(core, core_power_bound + 6);
    Poly den = Poly::monomial(Rat(1), 2) * poly_pow(core, core_power_bound);

    const int cols = 3 * (degree_bound + 1);
    std::vector<std::vector<Rat>> columns;
    int max_rows = 0;
    for (int j = 0; j <= 2; ++j) {
        for (int k = 0; k <= degree_bound; ++k) {
            std::vector<RatFunc> coeffs(j + 1);
            coeffs[j] = RatFunc(Poly::monomial(Rat(1), k), den);
            DiffOp basis(coeffs);
            DiffOp residue = commutator(h, basis) - basis * step;
            std::vector<Rat> col;
            for (int t = 0; t <= residue.order(); ++t) {
                const RatFunc& r = residue.coeff(t);
                Poly scaled = r.num() * master.exact_div(r.den());
                for (int d = 0; d <= scaled.degree(); ++d) {
                    int row = t * 512 + d;
                    if (row >= static_cast<int>(col.size())) col.resize(row + 1);
                    col[row] = scaled.coeff(d);
                }
            }
            max_rows = std::max(max_rows, static_cast<int>(col.size()));
            columns.push_back(std::move(col));
        }
    }
    std::vector<std::vector<Rat>> rows(max_rows, std::vector<Rat>(cols));
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < static_cast<int>(columns[c].size()); ++r)
            rows[r][c] = columns[c][r];
    rep.nullspace_dimension = nullspace_dimension(rows, cols);
    rep.found = rep.nullspace_dimension > 0;
    return rep;
}

}  // namespace confmech
