#include "punar/errors.hpp"
#include "punar/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace punar;

struct Options {
    std::string field_path;
    long quadratic = 0;
    unsigned precision = 192;
    std::string exponent_variant = "proof";
    std::string eta_variant = "abstract";
    bool assume_unit_reducible = false;
    std::size_t max_classes = 100000;
    long dmax = 0;
    std::string output;
    std::string format = "json";
    unsigned long seed = 0;
};

void add_common(CLI::App* cmd, Options& o, bool with_field) {
    if (with_field) {
        cmd->add_option("--field", o.field_path, "field description JSON file");
        cmd->add_option("--quadratic", o.quadratic, "use Q(sqrt(d)) for squarefree d >= 2");
    }
    cmd->add_option("--precision-bits", o.precision, "working precision in bits")
        ->check(CLI::Range(64u, 4096u));
    cmd->add_option("--exponent-variant", o.exponent_variant, "stated | proof")
        ->check(CLI::IsMember({"stated", "proof"}));
    cmd->add_option("--eta-variant", o.eta_variant, "abstract | theorem")
        ->check(CLI::IsMember({"abstract", "theorem"}));
    cmd->add_flag("--assume-unit-reducible", o.assume_unit_reducible,
                  "treat the field as reducible by units alone");
    cmd->add_option("--max-classes", o.max_classes, "stop enumeration at this many classes");
    cmd->add_option("--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", o.seed, "seed for the sampled property checks");
}

FieldPtr load_field(const Options& o) {
    if (o.quadratic != 0 && !o.field_path.empty())
        throw InputError("--field and --quadratic are mutually exclusive");
    if (o.quadratic != 0) return make_quadratic_field(o.quadratic);
    if (o.field_path.empty()) throw InputError("one of --field or --quadratic is required");
    return field_from_description(load_field_description(o.field_path));
}

VerifyOptions verify_options(const Options& o) {
    VerifyOptions v;
    v.prec = static_cast<mpfr_prec_t>(o.precision);
    v.eta_variant = o.eta_variant == "theorem" ? EtaVariant::Theorem : EtaVariant::Abstract;
    v.exponent_variant =
        o.exponent_variant == "stated" ? ExponentVariant::Stated : ExponentVariant::Proof;
    v.assume_unit_reducible = o.assume_unit_reducible;
    v.max_classes = o.max_classes;
    v.seed = o.seed;
    return v;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file: " + path);
    f << content;
}

int cmd_field_info(const Options& o) {
    FieldPtr field = load_field(o);
    LogUnitLattice lat = build_log_lattice(field, static_cast<mpfr_prec_t>(o.precision));
    write_output(o.output, field_json(field, lat).dump(2) + "\n");
    return 0;
}

int cmd_bounds(const Options& o) {
    FieldPtr field = load_field(o);
    LogUnitLattice lat = build_log_lattice(field, static_cast<mpfr_prec_t>(o.precision));
    VerifyOptions v = verify_options(o);
    BoundReport b = make_bound_report(static_cast<unsigned>(field->degree()),
                                      field->discriminant(), lat.regulator,
                                      v.assume_unit_reducible, v.eta_variant, v.prec,
                                      v.exponent_variant);
    nlohmann::ordered_json j;
    j["field"] = field_json(field, lat);
    j["bounds"] = bounds_json(b);
    write_output(o.output, j.dump(2) + "\n");
    return 0;
}

int cmd_enumerate(const Options& o) {
    FieldPtr field = load_field(o);
    LogUnitLattice lat = build_log_lattice(field, static_cast<mpfr_prec_t>(o.precision));
    VerifyResult r = run_verification(field, lat, verify_options(o));
    write_output(o.output, report_json(field, lat, r).dump(2) + "\n");
    return exit_code_for(r);
}

int cmd_sweep(const Options& o) {
    if (o.dmax < 2) throw InputError("--dmax must be at least 2");
    std::map<long, std::string> existing;
    if (!o.output.empty() && std::filesystem::exists(o.output)) {
        std::ifstream f(o.output);
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
            existing[std::stol(line)] = line;
        }
    }
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    int code = 0;
    for (long d = 2; d <= o.dmax; ++d) {
        if (!is_squarefree_int(d)) continue;
        if (auto it = existing.find(d); it != existing.end()) {
            out << it->second << '\n';
            continue;
        }
        try {
            FieldPtr field = make_quadratic_field(d);
            LogUnitLattice lat = build_log_lattice(field, static_cast<mpfr_prec_t>(o.precision));
            VerifyResult r = run_verification(field, lat, verify_options(o));
            out << sweep_csv_row(d, lat, r) << '\n';
            code = std::max(code, exit_code_for(r));
        } catch (const Error& e) {
            out << d << ",,,,,,,,," << "fail,fail,fail,fail,fail,fail,fail\n";
            code = 4;
        }
    }
    write_output(o.output, out.str());
    return code;
}

int dispatch(const CLI::App& app, const Options& o) {
    if (app.got_subcommand("field-info")) return cmd_field_info(o);
    if (app.got_subcommand("bounds")) return cmd_bounds(o);
    if (app.got_subcommand("sweep-quadratic")) return cmd_sweep(o);
    return cmd_enumerate(o); // enumerate and verify share the full pipeline
}

} // namespace

int main(int argc, char** argv) {
    using namespace punar;
    Options o;
    CLI::App app{"Enumerates homothety classes of perfect unary forms over totally real "
                 "number fields and verifies them against closed-form class-count bounds"};
    app.require_subcommand(1);

    add_common(app.add_subcommand("field-info", "print field invariants"), o, true);
    add_common(app.add_subcommand("bounds", "evaluate all closed-form bounds"), o, true);
    add_common(app.add_subcommand("enumerate", "enumerate perfect form classes"), o, true);
    add_common(app.add_subcommand("verify", "enumerate and run every property suite"), o, true);
    CLI::App* sweep = app.add_subcommand("sweep-quadratic", "verify a range of real quadratic fields");
    add_common(sweep, o, false);
    sweep->add_option("--dmax", o.dmax, "largest squarefree d to include")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app, o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotTotallyReal& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ReduciblePolynomial& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BasisNotUnimodular& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const WrongCount& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotAUnit& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DependentUnits& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotTotallyPositive& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const DomainTooSmall& e) {
        std::cerr << "domain too small: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}
