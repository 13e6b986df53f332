#pragma once

// Command-line surface. Every invocation is deterministic: identical
// arguments produce byte-identical output. Exit codes: 0 success,
// 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spindiv/divisors.hpp"
#include "spindiv/format.hpp"
#include "spindiv/json_io.hpp"
#include "spindiv/verify.hpp"

namespace spindiv::cli {

namespace detail {

inline std::string render(const DivisorClass& c, const std::string& format) {
    if (format == "json") return emit_json(c) + "\n";
    if (format == "latex") return to_latex(c) + "\n";
    if (format == "text") return to_text(c) + "\n";
    throw std::invalid_argument("unknown format '" + format + "'");
}

inline int deliver(const std::string& payload, const std::optional<std::string>& output_path,
                   std::ostream& out, std::ostream& err) {
    if (!output_path) {
        out << payload;
        return 0;
    }
    std::ofstream file(*output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << *output_path << "'\n";
        return 2;
    }
    file << payload;
    return 0;
}

struct Range {
    long lo = 0;
    long hi = 0;
};

// "lo..hi" or a single value "n"
inline Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text + "' (expected lo..hi)");
    }
}

struct TableRow {
    long param = 0;
    std::vector<std::pair<std::string, std::string>> extra;  // name -> scalar value
    DivisorClass cls = DivisorClass::zero(ModuliSpace::m12_bar());
};

inline std::string render_table(const std::string& family, const std::string& param_name,
                                const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["family"] = family;
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r[param_name] = row.param;
            for (const auto& [k, v] : row.extra) r[k] = v;
            r["class"] = class_to_json(row.cls);
            arr.push_back(r);
        }
        j["rows"] = arr;
        return j.dump() + "\n";
    }
    if (format == "latex") {
        std::string out = "\\begin{tabular}{ll}\n" + param_name + " & class \\\\\n";
        for (const auto& row : rows) {
            out += std::to_string(row.param) + " & $" + to_latex(row.cls) + "$ \\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    if (format == "text") {
        std::string out = param_name;
        if (!rows.empty()) {
            for (const auto& [k, v] : rows.front().extra) out += "  " + k;
        }
        out += "  class\n";
        for (const auto& row : rows) {
            out += std::to_string(row.param);
            for (const auto& [k, v] : row.extra) out += "  " + v;
            out += "  " + to_text(row.cls) + "\n";
        }
        return out;
    }
    throw std::invalid_argument("unknown format '" + format + "'");
}

inline std::vector<TableRow> table_rows(const std::string& family, const Range& range) {
    std::vector<TableRow> rows;
    for (long p = range.lo; p <= range.hi; ++p) {
        TableRow row;
        row.param = p;
        if (family == "uclass-r1") {
            if (p < 1) throw std::invalid_argument("uclass-r1 requires a >= 1");
            const UClassResult u = u_class(1, static_cast<int>(2 * p + 1));
            row.extra = {{"g", std::to_string(u.g)},
                         {"d", std::to_string(u.d)},
                         {"N", u.degree.str()}};
            row.cls = u.cls;
        } else if (family == "uclass-r2") {
            if (p < 1) throw std::invalid_argument("uclass-r2 requires s >= 1");
            const UClassResult u = u_class(2, static_cast<int>(p));
            row.extra = {{"g", std::to_string(u.g)},
                         {"d", std::to_string(u.d)},
                         {"N", u.degree.str()}};
            row.cls = u.cls;
        } else if (family == "theta-null") {
            row.cls = theta_null_class(static_cast<int>(p)).cls;
        } else if (family == "theta-pointed") {
            row.cls = theta_pointed_class(static_cast<int>(p));
        } else if (family == "weierstrass") {
            row.cls = weierstrass_class(static_cast<int>(p));
        } else {
            throw std::invalid_argument("unknown family '" + family + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisor-class calculator for moduli of spin curves"};
    app.name("spindiv");
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<std::string> output_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|json|latex")
            ->check(CLI::IsMember({"text", "json", "latex"}))
            ->capture_default_str();
        cmd->add_option("--output", output_path, "write output to a file instead of stdout");
    };

    int r = 0, s = 0, g = 0, k = 0;
    std::string route = "engine";
    bool normalize = false;
    std::string family, range_text;
    std::string golden_dir = "tests/golden";
    std::string suite = "all";
    bool write_golden_files = false;

    CLI::App* uclass = app.add_subcommand("uclass", "spin Brill-Noether divisor class");
    uclass->add_option("--r", r, "series dimension r")->required();
    uclass->add_option("--s", s, "family parameter s (g = s(r+1), d = r(s+1))")->required();
    add_common(uclass);

    CLI::App* theta_null = app.add_subcommand("theta-null", "theta-null divisor class");
    CLI::Option* opt_g = theta_null->add_option("--g", g, "genus");
    CLI::Option* opt_k = theta_null->add_option("--k", k, "pencil degree (sets g = 2k-2)");
    opt_g->excludes(opt_k);
    opt_k->excludes(opt_g);
    theta_null->add_option("--route", route, "computation route: engine|hurwitz")
        ->check(CLI::IsMember({"engine", "hurwitz"}))
        ->capture_default_str();
    add_common(theta_null);

    CLI::App* theta_pointed =
        app.add_subcommand("theta-pointed", "divisor of points of odd theta-characteristics");
    theta_pointed->add_option("--g", g, "genus")->required();
    theta_pointed->add_flag("--normalize", normalize,
                            "eliminate delta_irr through the genus-2 relation (g = 2 only)");
    add_common(theta_pointed);

    CLI::App* weierstrass = app.add_subcommand("weierstrass", "Weierstrass-point divisor class");
    weierstrass->add_option("--g", g, "genus")->required();
    add_common(weierstrass);

    CLI::App* t2 = app.add_subcommand("t2", "2-torsion divisor on the two-pointed genus-1 space");
    add_common(t2);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--golden-dir", golden_dir, "directory with golden outputs")
        ->capture_default_str();
    verify->add_option("--suite", suite, "all|acceptance|golden|discrepancies")
        ->check(CLI::IsMember({"all", "acceptance", "golden", "discrepancies"}))
        ->capture_default_str();
    verify->add_flag("--write-golden", write_golden_files, "regenerate the golden files");

    CLI::App* table = app.add_subcommand("table", "parameter sweeps");
    table->add_option("--family", family,
                      "uclass-r1|uclass-r2|theta-null|theta-pointed|weierstrass")
        ->required();
    table->add_option("--range", range_text, "parameter range lo..hi")->required();
    add_common(table);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("spindiv");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (uclass->parsed()) {
            return detail::deliver(detail::render(u_class(r, s).cls, format), output_path, out, err);
        }
        if (theta_null->parsed()) {
            if (theta_null->count("--k")) {
                g = 2 * k - 2;
            } else if (!theta_null->count("--g")) {
                throw std::invalid_argument("theta-null requires --g or --k");
            }
            const ThetaNullRoute rt =
                route == "hurwitz" ? ThetaNullRoute::Hurwitz : ThetaNullRoute::Engine;
            return detail::deliver(detail::render(theta_null_class(g, rt).cls, format),
                                   output_path, out, err);
        }
        if (theta_pointed->parsed()) {
            DivisorClass cls = theta_pointed_class(g);
            if (normalize) {
                if (g != 2) throw std::invalid_argument("--normalize applies to g=2 only");
                cls = mumford_normalize_g2(cls);
            }
            return detail::deliver(detail::render(cls, format), output_path, out, err);
        }
        if (weierstrass->parsed()) {
            return detail::deliver(detail::render(weierstrass_class(g), format), output_path, out,
                                   err);
        }
        if (t2->parsed()) {
            return detail::deliver(detail::render(t2_class(), format), output_path, out, err);
        }
        if (verify->parsed()) {
            if (write_golden_files) {
                write_golden(golden_dir);
                out << "golden files written to " << golden_dir << "\n";
                return 0;
            }
            const VerifyReport report = run_verify(golden_dir, suite);
            print_report(report, out);
            return report.ok ? 0 : 1;
        }
        if (table->parsed()) {
            const detail::Range range = detail::parse_range(range_text);
            const auto rows = detail::table_rows(family, range);
            const std::string param_name =
                family == "uclass-r1" ? "a" : family == "uclass-r2" ? "s" : "g";
            return detail::deliver(detail::render_table(family, param_name, rows, format),
                                   output_path, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace spindiv::cli
