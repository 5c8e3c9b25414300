#pragma once

// Command-line front end.  `run` is the whole program minus process plumbing,
// so it can be driven from tests with captured streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvm/diagram.hpp"
#include "gvm/harness.hpp"
#include "gvm/scalar_text.hpp"
#include "gvm/verdict.hpp"

namespace gvm::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct SetupFlags {
    std::string type;
    int n = 0;
    int p = 0;
    int q = 0;

    void attach(CLI::App& app) {
        app.add_option("--type", type, "Lie type")->required()->check(CLI::IsMember({"A", "D"}));
        app.add_option("--n", n, "rank parameter: sl(n) or so(2n)")->required();
        app.add_option("--p", p, "first removed simple root")->required();
        app.add_option("--q", q, "second removed simple root")->required();
    }

    ParabolicSetup build() const {
        return ParabolicSetup(LieType(type == "A" ? LieKind::A : LieKind::D, n), p, q);
    }
};

struct PointFlags {
    std::string z1 = "0";
    std::string z2 = "0";

    void attach(CLI::App& app) {
        app.add_option("--z1", z1, "first parameter, e.g. -5/2 or 1/3+tau")->required();
        app.add_option("--z2", z2, "second parameter")->required();
    }
};

/// Sweep parallelism from GVM_THREADS; 0 means the library default.
inline unsigned threads_from_env() {
    const char* raw = std::getenv("GVM_THREADS");
    if (!raw || !*raw) return 0;
    try {
        const long v = std::stol(raw);
        if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("GVM_THREADS", "must be a positive integer");
}

inline std::string verdict_text(const Verdict& v) {
    std::string s = v.reducible_oracle ? "reducible" : "irreducible";
    s += " gk=" + std::to_string(v.gk) + " dim_u=" + std::to_string(v.dim_u);
    s += std::string(" reducible=") + (v.reducible_oracle ? "true" : "false");
    if (v.reducible_criterion) s += " criterion=" + optional_bool(v.reducible_criterion);
    if (v.agree) s += " agree=" + optional_bool(v.agree);
    return s;
}

inline bool write_output(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << body;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << body;
    return static_cast<bool>(f);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reducibility of scalar generalized Verma modules for two-step nilpotent parabolics"};
    app.require_subcommand(1);

    SetupFlags setup_flags;
    PointFlags point_flags;
    std::string format = "text";

    auto* gkdim = app.add_subcommand("gkdim", "GK dimension of L(lambda) and dim u");
    setup_flags.attach(*gkdim);
    point_flags.attach(*gkdim);
    gkdim->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* reduce = app.add_subcommand("reduce", "reducibility verdict at one parameter point");
    SetupFlags reduce_setup;
    PointFlags reduce_point;
    reduce_setup.attach(*reduce);
    reduce_point.attach(*reduce);
    reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* rs = app.add_subcommand("rs", "insertion tableau of a comma-separated sequence");
    std::string seq;
    rs->add_option("--seq", seq, "e.g. \"5,3,3,1\"")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate oracle and criterion over a grid");
    SetupFlags sweep_setup;
    sweep_setup.attach(*sweep_cmd);
    std::string grid_kind = "standard";
    std::string lo = "-4";
    std::string hi = "3";
    std::string step = "1/2";
    bool diagonal = false;
    std::string out_path;
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--grid", grid_kind)->check(CLI::IsMember({"standard", "custom"}));
    sweep_cmd->add_option("--lo", lo, "custom grid lower bound");
    sweep_cmd->add_option("--hi", hi, "custom grid upper bound");
    sweep_cmd->add_option("--step", step, "custom grid spacing");
    sweep_cmd->add_flag("--diagonal", diagonal, "custom grid: only z1 = z2");
    sweep_cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "criterion vs oracle over every setup up to --max-n");
    std::string verify_type;
    int max_n = 0;
    verify->add_option("--type", verify_type)->required()->check(CLI::IsMember({"A", "D"}));
    verify->add_option("--max-n", max_n)->required();

    auto* diagram = app.add_subcommand("diagram", "plot reducible points of the standard grid");
    SetupFlags diagram_setup;
    diagram_setup.attach(*diagram);
    std::string diagram_out;
    bool ascii = false;
    diagram->add_option("--out", diagram_out, "SVG output file");
    diagram->add_flag("--ascii", ascii, "print a character grid instead of SVG");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*gkdim) {
            const auto setup = setup_flags.build();
            const auto z1 = parse_scalar(point_flags.z1, &cli_symbols());
            const auto z2 = parse_scalar(point_flags.z2, &cli_symbols());
            const auto gk = gk_dimension(setup, z1, z2);
            if (format == "json")
                out << nlohmann::ordered_json{{"gk", gk}, {"dim_u", setup.dim_u()}}.dump() << "\n";
            else
                out << "gk=" << gk << " dim_u=" << setup.dim_u() << "\n";
            return kOk;
        }
        if (*reduce) {
            const auto setup = reduce_setup.build();
            const auto v = evaluate(setup, parse_scalar(reduce_point.z1, &cli_symbols()),
                                    parse_scalar(reduce_point.z2, &cli_symbols()));
            if (format == "json")
                out << to_json(v).dump() << "\n";
            else
                out << verdict_text(v) << "\n";
            return kOk;
        }
        if (*rs) {
            ScalarSequence x;
            std::stringstream ss(seq);
            for (std::string item; std::getline(ss, item, ',');) x.push_back(parse_scalar(item, &cli_symbols()));
            for (const auto& row : rs_insertion(x)) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_scalar(row[i]);
                out << "\n";
            }
            out << "shape";
            for (int r : rs_shape(x).rows) out << " " << r;
            out << "\n";
            return kOk;
        }
        if (*sweep_cmd) {
            const auto setup = sweep_setup.build();
            ParameterGrid grid;
            if (grid_kind == "standard") {
                grid = standard_grid(setup);
            } else {
                const auto l = parse_scalar(lo, &cli_symbols());
                const auto h = parse_scalar(hi, &cli_symbols());
                const auto s = parse_scalar(step, &cli_symbols());
                if (!l.is_rational() || !h.is_rational() || !s.is_rational() || s.rational_part() <= Rational(0))
                    throw UnsupportedGrid("custom grid bounds and step must be rational, step positive");
                const auto axis = rational_range(l.rational_part(), h.rational_part(), s.rational_part());
                grid = {axis, axis, diagonal ? Pairing::Diagonal : Pairing::Cartesian, {}};
            }
            const auto report = sweep(setup, grid, {threads_from_env(), {}});
            const std::string body =
                sweep_format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report);
            if (!write_output(out_path, body, out)) {
                err << "error: cannot write " << out_path << "\n";
                return kUsage;
            }
            return kOk;
        }
        if (*verify) {
            const auto kind = verify_type == "A" ? LieKind::A : LieKind::D;
            if (max_n < (kind == LieKind::A ? 3 : 4))
                throw InvalidSetup("--max-n is below the smallest supported rank");
            const auto report = verify_family(kind, max_n, {threads_from_env(), {}});
            out << "setups=" << report.setups_checked << " points=" << report.points_checked
                << " mismatches=" << report.mismatches.size() << " errors=" << report.errors.size() << "\n";
            out << csv_header() << "\n";
            for (const auto& v : report.mismatches) out << csv_row(v) << "\n";
            for (const auto& e : report.errors) out << "error at point " << e.index << ": " << e.message << "\n";
            return report.verified() ? kOk : kMismatch;
        }
        if (*diagram) {
            const auto setup = diagram_setup.build();
            auto grid = standard_grid(setup);
            const auto report = sweep(setup, grid, {threads_from_env(), {}});
            if (ascii) {
                out << render_ascii(report);
                return kOk;
            }
            if (!write_output(diagram_out, render_svg(report), out)) {
                err << "error: cannot write " << diagram_out << "\n";
                return kUsage;
            }
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace gvm::cli
