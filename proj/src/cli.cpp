#include "distspec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "distspec/bounds.hpp"
#include "distspec/canonical.hpp"
#include "distspec/corpus.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "distspec/hypergraph.hpp"

namespace distspec {
namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int do_analyze(const std::string& g6, double tol, std::ostream& out, std::ostream& err) {
    try {
        out << record_to_json(analyze(parse_graph6(g6), tol)) << '\n';
        return kExitOk;
    } catch (const ParseError& e) {
        err << "analyze: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotConnectedError& e) {
        err << "analyze: " << e.what() << '\n';
        return kExitUsage;
    }
}

int do_scan(const std::string& input, int enum_n, const std::string& output,
            const std::string& format, double tol, std::ostream& out, std::ostream& err) {
    ScanOutput scanned;
    if (enum_n > 0) {
        scanned = scan(enumerate_connected(enum_n), tol);
    } else if (input == "-") {
        scanned = scan_graph6_lines(std::cin, tol);
    } else {
        std::ifstream in(input);
        if (!in) {
            err << "scan: cannot open " << input << '\n';
            return kExitIo;
        }
        scanned = scan_graph6_lines(in, tol);
    }
    for (const ScanIssue& issue : scanned.issues)
        err << "scan: line " << issue.line << ": " << issue.message << '\n';
    const ScanSummary summary = aggregate(scanned.records, tol);
    const ReportFormat fmt = format == "csv" ? ReportFormat::csv : ReportFormat::json;
    if (output == "-") {
        write_report(summary, scanned.records, fmt, out);
        return kExitOk;
    }
    std::ofstream f(output);
    if (!f) {
        err << "scan: cannot open " << output << " for writing\n";
        return kExitIo;
    }
    write_report(summary, scanned.records, fmt, f);
    f.flush();
    if (!f) {
        err << "scan: short write to " << output << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int do_family(int odd_n, int even_n, std::ostream& out, std::ostream& err) {
    try {
        if (odd_n > 0) {
            const Graph g = complete_odd_multipartite(odd_n);
            out << encode_graph6(g) << " lambda1=" << fmt_real(closed_form_lambda1(odd_n, Family::odd_multipartite))
                << " sigma=" << fmt_real(sigma_n(odd_n)) << '\n';
        } else {
            const double l1 = closed_form_lambda1(even_n, Family::dvdr_even);
            const double s = sigma_n(even_n);
            for (const Graph& g : enumerate_n_minus_4_dvdr(even_n))
                out << encode_graph6(g) << " lambda1=" << fmt_real(l1) << " sigma=" << fmt_real(s) << '\n';
        }
        return kExitOk;
    } catch (const PreconditionError& e) {
        err << "family: " << e.what() << '\n';
        return kExitUsage;
    }
}

int do_shadow(bool fixtures, const std::string& input, std::ostream& out, std::ostream& err) {
    if (fixtures) {
        const auto [h1, h2] = fixture_pair();
        const Graph s1 = shadow(h1);
        const Graph s2 = shadow(h2);
        out << "h1_shadow " << encode_graph6(s1) << '\n';
        out << "h2_shadow " << encode_graph6(s2) << '\n';
        out << "shadows_isomorphic " << (is_isomorphic(s1, s2) ? "true" : "false") << '\n';
        out << "hypergraphs_isomorphic " << (is_hypergraph_isomorphic(h1, h2) ? "true" : "false")
            << '\n';
        return kExitOk;
    }
    try {
        if (input == "-") {
            out << "shadow " << encode_graph6(shadow(read_hypergraph(std::cin))) << '\n';
            return kExitOk;
        }
        std::ifstream in(input);
        if (!in) {
            err << "shadow: cannot open " << input << '\n';
            return kExitIo;
        }
        out << "shadow " << encode_graph6(shadow(read_hypergraph(in))) << '\n';
        return kExitOk;
    } catch (const ParseError& e) {
        err << "shadow: " << e.what() << '\n';
        return kExitUsage;
    }
}

int do_verify(int max_n, double tol, std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (int n = 4; n <= max_n; ++n) {
        const ScanOutput scanned = scan(enumerate_connected(n), tol);
        const ScanSummary summary = aggregate(scanned.records, tol);
        const PerOrderSummary& ps = summary.per_n.at(n);

        std::set<std::string> expected;
        if (n % 2 == 1) {
            expected.insert(canonical_form(complete_odd_multipartite(n)));
        } else {
            for (const Graph& g : enumerate_n_minus_4_dvdr(n))
                expected.insert(canonical_form(g));
        }

        std::set<std::string> argmin;
        for (const std::string& s : ps.argmin_graph6_list)
            argmin.insert(canonical_form(parse_graph6(s)));

        std::set<std::string> equality;
        long long resolved = 0;
        for (const SigmaRecord& r : scanned.records) {
            if (r.theorem == TheoremVerdict::equality) {
                equality.insert(canonical_form(parse_graph6(r.graph6)));
                ++resolved;
            } else if (r.theorem == TheoremVerdict::strict) {
                ++resolved;
            }
        }

        const double bound = sigma_n(n);
        const bool bound_ok = ps.min_sigma_lo <= bound && bound <= ps.min_sigma_hi;
        const bool argmin_ok = argmin == expected;
        const bool equality_ok = equality == expected;
        const bool verdicts_ok =
            ps.all_theorem_resolved && resolved == ps.non_tr_count && !ps.unresolved_tie;
        const bool conjecture_ok = ps.all_conjecture_certified;

        bool claims_ok = true;
        for (const std::string& s : ps.argmin_graph6_list) {
            const ClaimsReport cr = minimizer_claims_report(parse_graph6(s), 1e-6);
            claims_ok = claims_ok && cr.claim1 && cr.claim4_count == n - 1 && cr.claim5 &&
                        cr.diameter2 && cr.claim3_ratio_ok;
        }
        // Negative control: a path is never a minimizer and must fail the
        // extremal transmission profile.
        claims_ok = claims_ok && !minimizer_claims_report(path_graph(n), 1e-6).claim5;

        out << "n=" << n << " graphs=" << ps.graphs_scanned << " non_tr=" << ps.non_tr_count
            << " min_sigma=[" << fmt_real(ps.min_sigma_lo) << ',' << fmt_real(ps.min_sigma_hi)
            << "] argmin={";
        for (std::size_t i = 0; i < ps.argmin_graph6_list.size(); ++i)
            out << (i ? "," : "") << ps.argmin_graph6_list[i];
        out << "} bound=" << (bound_ok ? "ok" : "FAIL") << " argmin=" << (argmin_ok ? "ok" : "FAIL")
            << " equality=" << (equality_ok ? "ok" : "FAIL")
            << " verdicts=" << (verdicts_ok ? "ok" : "FAIL")
            << " conjecture=" << (conjecture_ok ? "ok" : "FAIL")
            << " claims=" << (claims_ok ? "ok" : "FAIL") << '\n';

        all_ok = all_ok && bound_ok && argmin_ok && equality_ok && verdicts_ok && conjecture_ok &&
                 claims_ok;
    }
    if (!all_ok) {
        err << "verify: verification failed\n";
        return kExitVerificationFailed;
    }
    out << "verify: all checks passed\n";
    return kExitOk;
}

std::string help_text(CLI::App& app) {
    const std::vector<CLI::App*> parsed = app.get_subcommands();
    return parsed.empty() ? app.help() : parsed.front()->help();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distance spectral gap toolkit", "distspec"};
    app.require_subcommand(1);

    double tol = 1e-10;
    auto add_tol = [&tol](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "enclosure width target")
            ->envname("DISTSPEC_TOL")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "print the record of one graph6 graph");
    std::string analyze_g6;
    analyze_cmd->add_option("graph6", analyze_g6, "graph6 string")->required();
    add_tol(analyze_cmd);

    CLI::App* scan_cmd = app.add_subcommand("scan", "scan a corpus and write a report");
    std::string scan_input;
    int scan_enum_n = 0;
    std::string scan_output = "-";
    std::string scan_format = "json";
    CLI::Option_group* source = scan_cmd->add_option_group("source", "corpus source");
    source->add_option("--input", scan_input, "graph6 file, one graph per line, - for stdin");
    source->add_option("--enum", scan_enum_n, "all connected graphs of this order (1..7)")
        ->check(CLI::Range(1, 7));
    source->require_option(1);
    scan_cmd->add_option("--output", scan_output, "report destination, - for stdout")
        ->capture_default_str();
    scan_cmd->add_option("--format", scan_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    add_tol(scan_cmd);

    CLI::App* family_cmd =
        app.add_subcommand("family", "print extremal family members with closed-form values");
    int odd_n = 0;
    int even_n = 0;
    CLI::Option_group* which = family_cmd->add_option_group("family", "family selector");
    which->add_option("--odd", odd_n, "odd order: complete multipartite with one singleton part");
    which->add_option("--dvdr-even", even_n, "even order: apex joined to an (n-4)-regular base");
    which->require_option(1);

    CLI::App* shadow_cmd =
        app.add_subcommand("shadow", "shadow graphs and hypergraph isomorphism verdicts");
    bool fixtures = false;
    std::string shadow_input;
    CLI::Option_group* hsource = shadow_cmd->add_option_group("source", "hypergraph source");
    hsource->add_flag("--fixtures", fixtures, "use the built-in 3-uniform pair");
    hsource->add_option("--input", shadow_input,
                        "hypergraph file: header \"n r\", one edge of 1-based labels per line");
    hsource->require_option(1);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exhaustively verify the minimum-gap bound and its extremal graphs");
    int max_n = 7;
    verify_cmd->add_option("--max-n", max_n, "largest order to sweep (4..7)")
        ->check(CLI::Range(4, 7))
        ->capture_default_str();
    add_tol(verify_cmd);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << help_text(app);
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "distspec: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*analyze_cmd) return do_analyze(analyze_g6, tol, out, err);
    if (*scan_cmd) return do_scan(scan_input, scan_enum_n, scan_output, scan_format, tol, out, err);
    if (*family_cmd) return do_family(odd_n, even_n, out, err);
    if (*shadow_cmd) return do_shadow(fixtures, shadow_input, out, err);
    return do_verify(max_n, tol, out, err);
}

}  // namespace distspec
