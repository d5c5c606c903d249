#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincat/report.hpp"
#include "spincat/verify.hpp"

using namespace spincat;

namespace {

struct SweepArgs {
    std::string j;
    int m = 0;
    std::vector<std::string> schemes;
    double p_start = 0.0;
    double p_end = 1.0;
    int steps = 201;
    std::string measures;
    std::string format = "csv";
    std::string out;
};

void add_common_options(CLI::App* cmd, SweepArgs& a, bool tripartite) {
    cmd->add_option("--j", a.j, "total spin, e.g. 2 or 3/2")->required();
    cmd->add_option("--m", a.m, "superposition parity: 0 even, 1 odd")->check(CLI::Range(0, 1));
    cmd->add_option("--scheme", a.schemes,
                    tripartite ? "splitting j1,j2,j3 (repeatable; default: every scheme)"
                               : "splitting j1,j2 (repeatable; default: every scheme)");
    cmd->add_option("--p-start", a.p_start, "first overlap value")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p-end", a.p_end, "last overlap value")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--steps", a.steps, "number of grid points")->check(CLI::PositiveNumber);
    cmd->add_option("--measures", a.measures,
                    "comma separated subset of e_pair,e_pure,d_right,d_left,total,delta_e,"
                    "delta_d,conservation_residuals");
    cmd->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", a.out, "write to this file instead of stdout");
}

int emit_table(const Table& table, const std::string& format, const std::string& out) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::binary);  // binary keeps LF line endings everywhere
        if (!file) {
            std::cerr << "error: cannot open " << out << " for writing\n";
            return 1;
        }
        os = &file;
    }
    if (format == "json")
        emit_json(table, *os);
    else
        emit_csv(table, *os);
    return 0;
}

int run_sweep_command(const SweepArgs& a, size_t parts) {
    SweepSpec spec;
    spec.j = HalfInt::parse(a.j);
    spec.m = a.m ? Parity::odd : Parity::even;
    auto enumerate = parts == 2 ? enumerate_bipartitions : enumerate_tripartitions;
    try {
        if (a.schemes.empty()) {
            spec.schemes = enumerate(spec.j);
        } else {
            for (const auto& s : a.schemes) {
                SplitScheme scheme = SplitScheme::parse(s);
                validate_scheme(scheme, spec.j, parts);
                spec.schemes.push_back(scheme);
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\nvalid schemes for j=" << spec.j.label() << ":";
        for (const auto& s : enumerate(spec.j)) std::cerr << " " << s.label();
        std::cerr << "\n";
        return 1;
    }
    spec.p_start = a.p_start;
    spec.p_end = a.p_end;
    spec.steps = a.steps;
    if (!a.measures.empty()) spec.measures = parse_measures(a.measures);
    return emit_table(run_sweep(spec), a.format, a.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"correlation sweeps of even/odd spin coherent superpositions"};
    app.require_subcommand(1);

    SweepArgs bi, tri;
    auto* cmd_bi = app.add_subcommand("bipartite", "pure two-part splittings");
    add_common_options(cmd_bi, bi, false);
    auto* cmd_tri = app.add_subcommand("tripartite", "three-part splittings and monogamy");
    add_common_options(cmd_tri, tri, true);

    int fig_id = 1;
    std::string fig_format = "csv";
    std::string fig_out;
    auto* cmd_fig = app.add_subcommand("figure", "preset sweeps behind the reference curves");
    cmd_fig->add_option("--id", fig_id, "preset number 1..10")->required()->check(CLI::Range(1, 10));
    cmd_fig->add_option("--format", fig_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_fig->add_option("--out", fig_out, "write to this file instead of stdout");

    std::vector<int> criteria;
    bool verify_all = false;
    auto* cmd_ver = app.add_subcommand("verify", "re-run the numerical cross-checks");
    cmd_ver->add_option("--criterion", criteria, "criterion number 1..8 (repeatable)")
        ->check(CLI::Range(1, 8));
    cmd_ver->add_flag("--all", verify_all, "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (cmd_bi->parsed()) return run_sweep_command(bi, 2);
        if (cmd_tri->parsed()) return run_sweep_command(tri, 3);
        if (cmd_fig->parsed()) return emit_table(figure(fig_id), fig_format, fig_out);
        std::vector<int> which = verify_all ? all_criteria()
                                            : (criteria.empty() ? cross_check_criteria() : criteria);
        bool ok = true;
        for (int n : which) {
            VerifyResult r = run_criterion(n);
            std::cout << format_result_line(r) << "\n";
            ok = ok && r.pass;
        }
        return ok ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
