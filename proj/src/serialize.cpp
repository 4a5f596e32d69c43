#include <confmech/serialize.hpp>

#include <confmech/darboux.hpp>

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace confmech {

namespace {

// L_conv = ham + offset for the Hamiltonian the scheme generates
Rat convention_offset(const SpectrumModel& model, Convention c) {
    if (c == Convention::plus) return Rat(-model.rep_shift);
    return Rat(-model.rep_shift - model.shift_to_negative);
}

Json kernel_json(const KernelReport& k, const Rat& offset) {
    Json members = Json::array();
    for (const KernelMember& m : k.physical_members)
        members.push_back({{"energy", rat_json(Rat(m.energy + offset))}, {"band", m.band}});
    Json nonphys = Json::array();
    for (const Rat& e : k.nonphysical_annihilated) nonphys.push_back(rat_json(Rat(e + offset)));
    return Json{{"physical", members},
                {"equidistant_members", k.equidistant_members},
                {"nonphysical_annihilated", nonphys},
                {"nonphysical_checked", k.nonphysical_count_checked},
                {"cutoff", rat_json(Rat(k.cutoff_energy + offset))}};
}

Json family_json(const std::string& label, const LadderOp& down, const LadderOp& up,
                 const SpectrumModel& model, const Rat& offset, const Rat& cutoff_in) {
    Json fam;
    fam["label"] = label;
    fam["order"] = down.order();
    fam["step"] = rat_json(up.step);
    Poly comm = commutator_polynomial(down, up);
    fam["commutator"] = poly_json(comm.taylor_shift(Rat(-offset)));
    fam["kernel_minus"] = kernel_json(kernel_report(down, model, cutoff_in), offset);
    fam["kernel_plus"] = kernel_json(kernel_report(up, model, cutoff_in), offset);
    return fam;
}

Json connectivity_json(const std::string& ops, const ConnectivityReport& r) {
    return Json{{"ops", ops},
                {"levels", r.levels},
                {"components", r.components},
                {"strongly_connected", r.strongly_connected}};
}

}  // namespace

std::string convention_tag(Convention c) { return c == Convention::plus ? "L(+)" : "L(-)"; }

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json poly_json(const Poly& p) {
    Json coeffs = Json::array();
    if (p.degree() < 0) {
        coeffs.push_back("0");
        return coeffs;
    }
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(rat_to_string(p.coeff(i)));
    return coeffs;
}

Json make_envelope(const std::string& payload_kind, const std::string& scheme_text,
                   Convention c, Json payload) {
    Json env;
    env["tool"] = {{"name", "confmech"}, {"version", "0.1.0"}};
    env["scheme"] = scheme_text.empty() ? Json(nullptr) : Json(scheme_text);
    env["convention"] = convention_tag(c);
    env["payload_kind"] = payload_kind;
    env["payload"] = std::move(payload);
    return env;
}

std::vector<std::string> mirror_diagram(const Scheme& positive, const Scheme& negative) {
    const int n_m = positive.max_magnitude();
    if (n_m < 0 || n_m != negative.max_magnitude())
        throw std::invalid_argument("mirror diagram needs a dual pair with a shared top index");
    const int width = static_cast<int>(std::to_string(n_m).size()) + 3;
    std::ostringstream ruler_up, row_up, row_down, ruler_down;
    for (int k = 0; k <= n_m; ++k) {
        ruler_up << std::setw(width) << k;
        row_up << std::setw(width) << (positive.contains(k) ? '*' : 'o');
        row_down << std::setw(width) << (negative.contains(-(n_m - k)) ? '*' : 'o');
        ruler_down << std::setw(width) << ("-" + std::to_string(n_m - k));
    }
    // column k pairs level k with its reflection -(n_m - k); fills complement
    return {ruler_up.str(), row_up.str(), row_down.str(), ruler_down.str()};
}

Json duality_payload(const Scheme& input) {
    Json p;
    Scheme work = input;
    if (input.sign_class() == Scheme::SignClass::mixed) {
        Reduction r = reduce_mixed(input);
        work = r.positive;
        p["notice"] =
            "mixed scheme reduced to its strictly positive representative before dualizing";
        p["reduction"] = {{"positive", work.to_string()}, {"offset", rat_json(r.shift)}};
    }
    DualityResult d = dual(work);
    p["dual"] = d.dual.to_string();
    p["shift"] = rat_json(d.shift);
    p["gaussian_exponent"] = d.gaussian_exponent;
    const bool work_positive = work.sign_class() == Scheme::SignClass::positive;
    const Scheme& pos = work_positive ? work : d.dual;
    const Scheme& neg = work_positive ? d.dual : work;
    p["n_plus"] = pos.size();
    p["n_minus"] = neg.size();
    p["diagram"] = mirror_diagram(pos, neg);
    return p;
}

SchrodingerOp convention_potential(const Scheme& input, Convention c) {
    const Rat offset = convention_offset(predict_spectrum(input), c);
    return dcka_potential(input).shifted(offset);
}

Json potential_payload(const Scheme& input, Convention c) {
    const SchrodingerOp op = convention_potential(input, c);
    Json p;
    if (std::optional<long> m = op.coupling_index())
        p["m"] = *m;
    else
        p["m"] = nullptr;
    p["inverse_square"] = rat_json(op.inverse_square);
    p["constant"] = rat_json(op.constant);
    const RatFunc tail = op.tail.to_ratfunc();
    p["tail"] = {{"numerator", poly_json(tail.num())}, {"denominator", poly_json(tail.den())}};
    p["display"] = op.to_string();
    return p;
}

Json spectrum_payload(const Scheme& input, Convention c, bool numeric, const GridSpec& grid) {
    const SpectrumModel model = predict_spectrum(input);
    const Rat offset = convention_offset(model, c);
    Json p;
    Json bands = Json::array();
    for (const Band& b : model.bands) {
        Json jb;
        jb["lowest_plus"] = rat_json(b.lowest);
        jb["lowest_minus"] = rat_json(Rat(b.lowest - model.shift_to_negative));
        jb["count"] = b.count ? Json(*b.count) : Json(nullptr);
        bands.push_back(jb);
    }
    p["bands"] = bands;
    Json levels = Json::array();
    const Rat rep_to_conv = Rat(offset + model.rep_shift);  // rep-convention value + this
    for (const Rat& e : model.lowest(8)) levels.push_back(rat_json(Rat(e + rep_to_conv)));
    p["levels"] = levels;
    p["n_infinity"] = n_infinity(input);
    p["valence_count"] = model.valence_count();
    p["positive_representative"] = model.positive_rep.to_string();
    p["offsets"] = {{"input_minus_plus", rat_json(model.rep_shift)},
                    {"plus_minus_minus", rat_json(model.shift_to_negative)}};
    if (numeric) {
        const SpectralReport r = verify_spectrum(input, grid, 6);
        const double off_d = rat_to_double(offset);
        Json computed = Json::array(), predicted = Json::array();
        for (double e : r.computed) computed.push_back(e + off_d);
        for (double e : r.predicted) predicted.push_back(e + off_d);
        p["numeric"] = {{"computed", computed},
                        {"predicted", predicted},
                        {"max_abs_error", r.max_abs_error},
                        {"converged", r.converged},
                        {"counts_match", r.counts_match},
                        {"grid",
                         {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"points", grid.points}}}};
    }
    return p;
}

Json ladders_payload(const Scheme& input, Convention c, const std::optional<Rat>& cutoff) {
    const LadderFamily f = build_ladders(input);
    const SpectrumModel model = predict_spectrum(input);
    const Rat offset = c == Convention::plus ? f.to_plus : f.to_minus;
    const Rat cutoff_in = cutoff ? Rat(*cutoff - offset) : default_cutoff(model);
    Json p;
    Json fams = Json::array();
    fams.push_back(family_json("A", f.a_minus, f.a_plus, model, offset, cutoff_in));
    fams.push_back(family_json("B", f.b_minus, f.b_plus, model, offset, cutoff_in));
    Json cfam = family_json("C", f.c_minus, f.c_plus, model, offset, cutoff_in);
    cfam["glued_extra_factor"] = f.even_top;
    fams.push_back(cfam);
    p["families"] = fams;
    p["n_infinity"] = n_infinity(input);
    Json conn = Json::array();
    conn.push_back(connectivity_json(
        "A,C",
        spectrum_generating_check({f.a_minus, f.a_plus, f.c_minus, f.c_plus}, model, cutoff_in)));
    conn.push_back(connectivity_json(
        "B,C",
        spectrum_generating_check({f.b_minus, f.b_plus, f.c_minus, f.c_plus}, model, cutoff_in)));
    conn.push_back(
        connectivity_json("B", spectrum_generating_check({f.b_minus, f.b_plus}, model, cutoff_in)));
    p["connectivity"] = conn;
    Json reds = Json::array();
    for (const ReductionRelation& r : reduction_check(input)) {
        Json jr;
        jr["description"] = r.description;
        jr["holds"] = r.holds;
        jr["cofactor"] = r.holds ? poly_json(r.cofactor.taylor_shift(Rat(-offset))) : Json(nullptr);
        reds.push_back(jr);
    }
    p["reductions"] = reds;
    p["cutoff"] = rat_json(Rat(cutoff_in + offset));
    return p;
}

Json singular_payload(const Scheme& input, const Regularity& reg) {
    Json p;
    p["regular"] = false;
    p["core_root_count"] = reg.root_count;
    if (reg.root_window) {
        p["root_window"] = Json::array(
            {rat_json(reg.root_window->first), rat_json(reg.root_window->second)});
    } else {
        p["root_window"] = nullptr;
    }
    p["message"] = "seed Wronskian of " + input.to_string() +
                   " vanishes inside the half-line; the transformed potential is singular";
    return p;
}

Json suite_payload(const SuiteReport& report) {
    Json p;
    p["suite"] = report.suite;
    int passed = 0;
    for (const CheckResult& c : report.checks)
        if (c.passed) ++passed;
    p["checks_total"] = report.checks.size();
    p["checks_passed"] = passed;
    p["all_passed"] = report.all_passed();
    if (const CheckResult* f = report.first_failure())
        p["first_failure"] = {{"name", f->name}, {"detail", f->detail}};
    else
        p["first_failure"] = nullptr;
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.passed) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    p["checks"] = checks;
    return p;
}

std::string potential_csv(const SchrodingerOp& op, double a, double b, int samples) {
    if (samples < 1 || !(a > 0.0) || !(b >= a))
        throw std::invalid_argument("need samples >= 1 and 0 < a <= b");
    std::string out = "x,V\n";
    char buf[80];
    for (int i = 0; i < samples; ++i) {
        const double x = samples == 1 ? a : a + i * (b - a) / (samples - 1);
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", x, op.potential_at(x));
        out += buf;
    }
    return out;
}

}  // namespace confmech
