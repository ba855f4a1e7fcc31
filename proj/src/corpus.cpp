#include "distspec/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>

#include "distspec/canonical.hpp"
#include "distspec/distance.hpp"
#include "distspec/graph6.hpp"
#include "distspec/spectral.hpp"

namespace distspec {

SigmaRecord analyze(const Graph& g, double tol) {
    if (tol <= 0.0)
        throw PreconditionError("tol must be positive");
    const DistanceMatrix d = distance_matrix(g);
    const TransmissionProfile tp = transmissions(d);
    SigmaRecord r;
    r.graph6 = encode_graph6(g);
    r.n = g.order();
    r.d_max = tp.d_max;
    r.d_min = tp.d_min;
    r.wiener = tp.wiener;
    r.transmission_regular = tp.transmission_regular();
    r.sigma_bound = r.n >= 3 ? sigma_n(r.n) : 0.0;
    if (r.transmission_regular) return r;  // lambda1 equals d_max, so sigma is exactly 0
    const PerronCertificate pc = perron(d, tol);
    r.sigma_lo = tp.d_max - pc.lambda_hi;
    r.sigma_hi = tp.d_max - pc.lambda_lo;
    const SigmaEnclosure enc{r.sigma_lo, r.sigma_hi};
    r.conjecture = conjecture_verdict(enc, r.n);
    r.equality_class = classify_equality_case(g);
    r.theorem = theorem_verdict(enc, r.equality_class, r.n);
    return r;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1)
        throw PreconditionError("order must be at least 1");
    if (n > 7)
        throw UnsupportedSizeError(
            "enumerate_connected supports n <= 7; feed larger corpora in via graph6 files");
    std::set<std::string> reps{canonical_form(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> grown;
        for (const std::string& s : reps) {
            const Graph g = parse_graph6(s);
            // Attach vertex k-1 to every nonempty subset of the smaller graph.
            for (std::uint32_t nbrs = 1; nbrs < (1u << (k - 1)); ++nbrs) {
                Graph h(k);
                for (int u = 0; u < k - 1; ++u) {
                    for (int v = u + 1; v < k - 1; ++v)
                        if (g.adjacent(u, v)) h.add_edge(u, v);
                    if ((nbrs >> u) & 1u) h.add_edge(u, k - 1);
                }
                grown.insert(canonical_form(h));
            }
        }
        reps = std::move(grown);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (const std::string& s : reps) out.push_back(parse_graph6(s));
    return out;
}

namespace {

// A certified enclosure entirely below sigma_n would contradict the bound;
// floats alone must never declare that, so the scanner only flags it.
void flag_if_below_bound(ScanOutput& out, long long where) {
    const SigmaRecord& r = out.records.back();
    if (!r.transmission_regular && r.n >= 3 && r.equality_class == EqualityClass::none &&
        r.sigma_hi < r.sigma_bound)
        out.issues.push_back(
            {where, r.graph6 + ": enclosure below the order bound; needs exact-arithmetic review"});
}

}  // namespace

ScanOutput scan(const std::vector<Graph>& graphs, double tol) {
    ScanOutput out;
    long long ordinal = 0;
    for (const Graph& g : graphs) {
        ++ordinal;
        try {
            out.records.push_back(analyze(g, tol));
            flag_if_below_bound(out, ordinal);
        } catch (const NotConnectedError& e) {
            out.issues.push_back({ordinal, std::string("skipped: ") + e.what()});
        }
    }
    return out;
}

ScanOutput scan_graph6_lines(std::istream& in, double tol) {
    ScanOutput out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
            out.records.push_back(analyze(parse_graph6(line), tol));
            flag_if_below_bound(out, lineno);
        } catch (const ParseError& e) {
            out.issues.push_back({lineno, std::string("parse error: ") + e.what()});
        } catch (const NotConnectedError& e) {
            out.issues.push_back({lineno, std::string("skipped: ") + e.what()});
        }
    }
    return out;
}

namespace {

// min_hi is the smallest certified upper bound; any enclosure reaching it
// could still hold the true minimum.
std::set<std::string> overlap_candidates(const std::map<std::string, SigmaEnclosure>& encl) {
    double min_hi = encl.begin()->second.hi;
    for (const auto& [g6, e] : encl) min_hi = std::min(min_hi, e.hi);
    std::set<std::string> cands;
    for (const auto& [g6, e] : encl)
        if (e.lo <= min_hi) cands.insert(g6);
    return cands;
}

}  // namespace

ScanSummary aggregate(const std::vector<SigmaRecord>& records, double tol) {
    if (tol <= 0.0)
        throw PreconditionError("tol must be positive");
    ScanSummary summary;
    std::map<int, std::map<std::string, SigmaEnclosure>> non_tr;
    for (const SigmaRecord& r : records) {
        PerOrderSummary& ps = summary.per_n[r.n];
        ++ps.graphs_scanned;
        if (r.transmission_regular) continue;
        ++ps.non_tr_count;
        non_tr[r.n][r.graph6] = SigmaEnclosure{r.sigma_lo, r.sigma_hi};
    }
    for (auto& [n, ps] : summary.per_n) {
        if (ps.non_tr_count == 0) {
            ps.all_conjecture_certified = true;
            ps.all_theorem_resolved = true;
            continue;
        }
        ps.all_conjecture_certified = true;
        ps.all_theorem_resolved = true;
        for (const SigmaRecord& r : records) {
            if (r.n != n || r.transmission_regular) continue;
            if (r.conjecture != ConjectureVerdict::certified_holds)
                ps.all_conjecture_certified = false;
            if (r.theorem == TheoremVerdict::inconclusive)
                ps.all_theorem_resolved = false;
        }

        const std::map<std::string, SigmaEnclosure>& encl = non_tr[n];
        std::set<std::string> cands = overlap_candidates(encl);
        std::map<std::string, SigmaEnclosure> cur;
        for (const std::string& g6 : cands) cur[g6] = encl.at(g6);
        double t = tol;
        bool stable_tie = false;
        for (int round = 0; cands.size() > 1 && round < 3; ++round) {
            t = std::max(t / 10.0, 1e-13);
            std::map<std::string, SigmaEnclosure> refined;
            for (const std::string& g6 : cands) refined[g6] = sigma(parse_graph6(g6), t);
            std::set<std::string> next = overlap_candidates(refined);
            cur.clear();
            for (const std::string& g6 : next) cur[g6] = refined.at(g6);
            if (next == cands) {
                stable_tie = true;  // exact tie: every member survives its own refinement
                break;
            }
            cands = std::move(next);
        }
        ps.unresolved_tie = cands.size() > 1 && !stable_tie;
        ps.min_sigma_lo = cur.begin()->second.lo;
        ps.min_sigma_hi = cur.begin()->second.hi;
        for (const auto& [g6, e] : cur) {
            ps.min_sigma_lo = std::min(ps.min_sigma_lo, e.lo);
            ps.min_sigma_hi = std::min(ps.min_sigma_hi, e.hi);
        }
        ps.argmin_graph6_list.assign(cands.begin(), cands.end());
    }
    return summary;
}

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// graph6 bytes sit in [63, 126], so backslash is the only character that
// needs escaping inside a JSON string.
std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\\' || c == '"') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string record_csv_row(const SigmaRecord& r) {
    std::string row = r.graph6;
    row += ',' + std::to_string(r.n);
    row += ',' + std::to_string(r.d_max);
    row += ',' + std::to_string(r.d_min);
    row += ',' + std::to_string(r.wiener);
    row += ',';
    row += bool_text(r.transmission_regular);
    row += ',' + fmt_real(r.sigma_lo);
    row += ',' + fmt_real(r.sigma_hi);
    row += ',' + fmt_real(r.sigma_bound);
    row += ',';
    row += to_string(r.conjecture);
    row += ',';
    row += to_string(r.theorem);
    row += ',';
    row += to_string(r.equality_class);
    return row;
}

std::string per_order_json(int n, const PerOrderSummary& ps) {
    std::string out = json_string(std::to_string(n)) + ":{";
    out += "\"graphs_scanned\":" + std::to_string(ps.graphs_scanned);
    out += ",\"non_tr_count\":" + std::to_string(ps.non_tr_count);
    out += ",\"min_sigma_lo\":" + fmt_real(ps.min_sigma_lo);
    out += ",\"min_sigma_hi\":" + fmt_real(ps.min_sigma_hi);
    out += ",\"argmin_graph6_list\":[";
    for (std::size_t i = 0; i < ps.argmin_graph6_list.size(); ++i) {
        if (i) out += ',';
        out += json_string(ps.argmin_graph6_list[i]);
    }
    out += "],\"all_conjecture_certified\":";
    out += bool_text(ps.all_conjecture_certified);
    out += ",\"all_theorem_resolved\":";
    out += bool_text(ps.all_theorem_resolved);
    out += ",\"unresolved_tie\":";
    out += bool_text(ps.unresolved_tie);
    out += '}';
    return out;
}

}  // namespace

std::string record_to_json(const SigmaRecord& r) {
    std::string out = "{\"graph6\":" + json_string(r.graph6);
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"d_max\":" + std::to_string(r.d_max);
    out += ",\"d_min\":" + std::to_string(r.d_min);
    out += ",\"wiener\":" + std::to_string(r.wiener);
    out += ",\"transmission_regular\":";
    out += bool_text(r.transmission_regular);
    out += ",\"sigma_lo\":" + fmt_real(r.sigma_lo);
    out += ",\"sigma_hi\":" + fmt_real(r.sigma_hi);
    out += ",\"sigma_bound\":" + fmt_real(r.sigma_bound);
    out += ",\"conjecture\":" + json_string(to_string(r.conjecture));
    out += ",\"theorem\":" + json_string(to_string(r.theorem));
    out += ",\"equality_class\":" + json_string(to_string(r.equality_class));
    out += '}';
    return out;
}

void write_report(const ScanSummary& summary,
                  const std::vector<SigmaRecord>& records,
                  ReportFormat format,
                  std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "graph6,n,d_max,d_min,wiener,transmission_regular,"
               "sigma_lo,sigma_hi,sigma_bound,conjecture,theorem,equality_class\n";
        for (const SigmaRecord& r : records) out << record_csv_row(r) << '\n';
        return;
    }
    out << "{\"summary\":{\"per_n\":{";
    bool first = true;
    for (const auto& [n, ps] : summary.per_n) {
        if (!first) out << ',';
        first = false;
        out << per_order_json(n, ps);
    }
    out << "}},\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out << (i ? ",\n" : "\n") << record_to_json(records[i]);
    }
    if (!records.empty()) out << '\n';
    out << "]}\n";
}

}  // namespace distspec
