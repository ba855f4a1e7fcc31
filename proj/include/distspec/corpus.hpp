#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "distspec/bounds.hpp"
#include "distspec/graph.hpp"

namespace distspec {

// One scanned graph: exact integer profile, sigma enclosure and verdicts.
// Transmission-regular graphs carry a zero-width enclosure at 0 and
// not-applicable verdicts. sigma_bound is sigma_n(n) for n >= 3, else 0.
struct SigmaRecord {
    std::string graph6;
    int n = 0;
    int d_max = 0;
    int d_min = 0;
    long long wiener = 0;
    bool transmission_regular = false;
    double sigma_lo = 0.0;
    double sigma_hi = 0.0;
    double sigma_bound = 0.0;
    ConjectureVerdict conjecture = ConjectureVerdict::not_applicable;
    TheoremVerdict theorem = TheoremVerdict::not_applicable;
    EqualityClass equality_class = EqualityClass::none;
};

SigmaRecord analyze(const Graph& g, double tol = 1e-10);

// One representative per isomorphism class of connected graphs of order n,
// in canonical labeling, sorted by canonical form. Grown by vertex
// augmentation: every connected graph has a non-cut vertex, so augmenting
// the (n-1)-vertex classes by one vertex with every nonempty neighborhood
// reaches every class. Supported for n <= 7 (1, 1, 2, 6, 21, 112, 853
// classes); larger orders raise UnsupportedSizeError pointing at external
// graph6 corpora.
std::vector<Graph> enumerate_connected(int n);

// Inputs that could not be analyzed; scanning continues past them.
struct ScanIssue {
    long long line = 0;  // 1-based input line, or ordinal for in-memory scans
    std::string message;
};

struct ScanOutput {
    std::vector<SigmaRecord> records;
    std::vector<ScanIssue> issues;
};

// Disconnected graphs are skipped with an issue; records keep input order.
ScanOutput scan(const std::vector<Graph>& graphs, double tol = 1e-10);

// Line-oriented graph6 ingestion: blank lines and a ">>graph6<<" header line
// are skipped, unreadable lines become issues carrying the line number.
ScanOutput scan_graph6_lines(std::istream& in, double tol = 1e-10);

struct PerOrderSummary {
    long long graphs_scanned = 0;
    long long non_tr_count = 0;
    double min_sigma_lo = 0.0;
    double min_sigma_hi = 0.0;
    std::vector<std::string> argmin_graph6_list;  // sorted
    bool all_conjecture_certified = false;
    bool all_theorem_resolved = false;
    bool unresolved_tie = false;

    bool operator==(const PerOrderSummary&) const = default;
};

struct ScanSummary {
    std::map<int, PerOrderSummary> per_n;

    bool operator==(const ScanSummary&) const = default;
};

// Per-order minima over non-transmission-regular records. Argmin membership
// is decided by enclosure overlap with the running minimum; while the
// candidate set keeps shrinking it is re-resolved at 10x tighter tol (at
// most 3 rounds, floor 1e-13). A set that repeats is a genuine tie and all
// its members are reported; a set still shrinking after 3 rounds sets
// unresolved_tie.
ScanSummary aggregate(const std::vector<SigmaRecord>& records, double tol = 1e-10);

enum class ReportFormat { json, csv };

// JSON: {"summary": {"per_n": {...}}, "records": [...]}, reals with 17
// significant digits. CSV: header plus one record per row, same field names
// and identical formatted values.
void write_report(const ScanSummary& summary,
                  const std::vector<SigmaRecord>& records,
                  ReportFormat format,
                  std::ostream& out);

std::string record_to_json(const SigmaRecord& r);

}  // namespace distspec
