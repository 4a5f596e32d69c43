#include <confmech/serialize.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace cm = confmech;

namespace {

constexpr int kExitFail = 1;      // a verify suite reported a failed check
constexpr int kExitUsage = 2;     // bad flags, unparsable scheme, bad range
constexpr int kExitSingular = 3;  // seed Wronskian vanishes on the half-line

void emit(const cm::Json& j) { std::cout << j.dump(2) << "\n"; }

cm::Convention parse_convention(const std::string& s) {
    return s == "minus" ? cm::Convention::minus : cm::Convention::plus;
}

// Commands that build the transformed operator refuse singular schemes and
// report the bracketed root instead.
bool singular_bailout(const cm::Scheme& s, cm::Convention conv) {
    cm::Regularity reg = cm::regularity(s);
    if (reg.regular) return false;
    emit(cm::make_envelope("singular", s.to_string(), conv, cm::singular_payload(s, reg)));
    std::cerr << "error: scheme " << s.to_string() << " is singular";
    if (reg.root_window)
        std::cerr << "; Wronskian root isolated in (" << cm::rat_to_string(reg.root_window->first)
                  << ", " << cm::rat_to_string(reg.root_window->second) << ")";
    std::cerr << "\n";
    return true;
}

bool parse_range(const std::string& text, double& a, double& b) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        a = std::stod(text.substr(0, colon));
        b = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return a > 0.0 && b >= a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational deformations of conformal mechanics"};
    app.require_subcommand(1);

    std::string scheme_text;
    std::string convention = "plus";
    const auto convention_check = CLI::IsMember({"plus", "minus"});

    auto* cmd_dual = app.add_subcommand("dual", "dual scheme, shift, and mirror diagram");
    cmd_dual->add_option("scheme", scheme_text, "comma-separated signed seed indices")->required();
    cmd_dual->add_option("--convention", convention, "energy convention tag")
        ->check(convention_check);

    std::string format = "exact-json";
    std::string range = "0.5:8";
    std::string out_path;
    int samples = 256;
    auto* cmd_potential =
        app.add_subcommand("potential", "transformed potential, exact or sampled");
    cmd_potential->add_option("scheme", scheme_text)->required();
    cmd_potential->add_option("--format", format, "exact-json or csv-samples")
        ->check(CLI::IsMember({"exact-json", "csv-samples"}));
    cmd_potential->add_option("--range", range, "sample window a:b, a > 0");
    cmd_potential->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
    cmd_potential->add_option("--out", out_path, "CSV file path (csv-samples)");
    cmd_potential->add_option("--convention", convention)->check(convention_check);

    bool numeric = false;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "band structure of the physical levels");
    cmd_spectrum->add_option("scheme", scheme_text)->required();
    cmd_spectrum->add_flag("--numeric", numeric, "cross-check with the grid eigensolver");
    cmd_spectrum->add_option("--convention", convention)->check(convention_check);

    std::string cutoff_text;
    auto* cmd_ladders =
        app.add_subcommand("ladders", "spectrum-generating operators of the scheme");
    cmd_ladders->add_option("scheme", scheme_text)->required();
    cmd_ladders->add_option("--cutoff", cutoff_text,
                            "kernel/connectivity energy window (requested convention)");
    cmd_ladders->add_option("--convention", convention)->check(convention_check);

    std::string suite = "all";
    auto* cmd_verify = app.add_subcommand("verify", "run a self-check suite");
    cmd_verify->add_option("--suite", suite, "identities, golden, duality, numeric, or all")
        ->check(CLI::IsMember({"identities", "golden", "duality", "numeric", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const cm::Convention conv = parse_convention(convention);
    try {
        if (app.got_subcommand(cmd_verify)) {
            cm::SuiteReport rep = cm::run_suite(suite);
            emit(cm::make_envelope("verify", "", conv, cm::suite_payload(rep)));
            if (!rep.all_passed()) {
                const cm::CheckResult* f = rep.first_failure();
                std::cerr << "FAIL " << rep.suite << ": " << f->name
                          << (f->detail.empty() ? "" : " (" + f->detail + ")") << "\n";
                return kExitFail;
            }
            return 0;
        }

        const cm::Scheme s = cm::Scheme::parse(scheme_text);
        if (app.got_subcommand(cmd_dual)) {
            if (s.sign_class() == cm::Scheme::SignClass::mixed)
                std::cerr << "notice: mixed scheme; dualizing its positive representative\n";
            emit(cm::make_envelope("duality", s.to_string(), conv, cm::duality_payload(s)));
            return 0;
        }
        if (singular_bailout(s, conv)) return kExitSingular;

        if (app.got_subcommand(cmd_potential)) {
            if (format == "csv-samples") {
                double a = 0, b = 0;
                if (!parse_range(range, a, b)) {
                    std::cerr << "error: --range must be a:b with 0 < a <= b\n";
                    return kExitUsage;
                }
                if (out_path.empty()) {
                    std::cerr << "error: csv-samples needs --out FILE\n";
                    return kExitUsage;
                }
                std::ofstream file(out_path);
                if (!file) {
                    std::cerr << "error: cannot open " << out_path << "\n";
                    return kExitUsage;
                }
                file << cm::potential_csv(cm::convention_potential(s, conv), a, b, samples);
                emit(cm::make_envelope("potential-csv", s.to_string(), conv,
                                       cm::Json{{"out", out_path},
                                                {"samples", samples},
                                                {"range", cm::Json::array({a, b})}}));
            } else {
                emit(cm::make_envelope("potential", s.to_string(), conv,
                                       cm::potential_payload(s, conv)));
            }
            return 0;
        }
        if (app.got_subcommand(cmd_spectrum)) {
            emit(cm::make_envelope("spectrum", s.to_string(), conv,
                                   cm::spectrum_payload(s, conv, numeric, cm::GridSpec{})));
            return 0;
        }
        if (app.got_subcommand(cmd_ladders)) {
            std::optional<cm::Rat> cutoff;
            if (!cutoff_text.empty()) cutoff = cm::rat_from_string(cutoff_text);
            emit(cm::make_envelope("ladders", s.to_string(), conv,
                                   cm::ladders_payload(s, conv, cutoff)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
