#include "qv/field.hpp"
#include "qv/pipeline.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace pl = qv::pipeline;

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the quartic threefold computations"};
    std::vector<std::string> checks;
    long field = 120;
    std::uint64_t seed = 0;
    std::string report;
    bool list = false, timings = false, quiet = false;
    app.add_option("--checks", checks, "comma-separated check names (default: all)")->delimiter(',');
    app.add_option("--field", field, "order N of the cyclotomic field Q(zeta_N)")->check(CLI::PositiveNumber);
    app.add_option("--rng-seed", seed, "seed of the random generator");
    app.add_option("--report", report, "write the JSON report here ('-' for stdout)");
    app.add_flag("--list", list, "list the registered checks and exit");
    app.add_flag("--with-timings", timings, "record wall times (reports are then no longer byte-identical)");
    app.add_flag("-q,--quiet", quiet, "no per-check lines");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& c : pl::registry()) {
            std::cout << c.name << "  [criterion " << c.criterion << "]";
            if (!c.deps.empty()) {
                std::cout << "  after:";
                for (const auto& d : c.deps) std::cout << ' ' << d;
            }
            std::cout << "\n    " << c.claim << "\n";
        }
        return 0;
    }

    std::vector<std::string> selection;
    if (app.count("--checks") == 0) {
        selection = pl::all_check_names();
    } else {
        for (const auto& c : checks)
            if (!c.empty()) selection.push_back(c);
    }

    pl::Config cfg;
    cfg.field_order = field;
    cfg.seed = seed;
    cfg.timings = timings;

    std::vector<pl::CheckReport> reports;
    try {
        reports = pl::run(selection, cfg);
    } catch (const pl::UnknownCheck& e) {
        std::cerr << "verify: " << e.what() << " (see --list)\n";
        return 2;
    }

    std::ostream& log = report == "-" ? std::cerr : std::cout;
    long required = 0;
    for (const auto& r : reports) {
        if (!quiet) log << pl::to_string(r.status) << "  " << r.name << "\n";
        if (r.witness.contains("required_field_order")) required = std::max(required, r.witness["required_field_order"].get<long>());
    }
    if (required > 0) log << "field Q(zeta_" << field << ") is too small; rerun with --field " << required << "\n";

    if (!report.empty()) {
        if (report == "-") {
            std::cout << pl::render_report(reports, cfg);
        } else {
            try {
                pl::emit_report(reports, cfg, report);
            } catch (const std::exception& e) {
                std::cerr << "verify: " << e.what() << "\n";
                return 2;
            }
        }
    }
    return pl::all_passed(reports) ? 0 : 1;
}
