#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/corpus.hpp"
#include "distspec/distance.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"

using namespace distspec;
using nlohmann::json;

TEST_CASE("Analyze fills a complete record") {
    const SigmaRecord r = analyze(path_graph(3));
    CHECK(r.graph6 == "Bg");
    CHECK(r.n == 3);
    CHECK(r.d_max == 3);
    CHECK(r.d_min == 2);
    CHECK(r.wiener == 4);
    CHECK_FALSE(r.transmission_regular);
    CHECK(r.sigma_lo <= 2.0 - std::sqrt(3.0));
    CHECK(2.0 - std::sqrt(3.0) <= r.sigma_hi);
    CHECK(r.sigma_bound == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r.conjecture == ConjectureVerdict::certified_holds);
    CHECK(r.theorem == TheoremVerdict::equality);
    CHECK(r.equality_class == EqualityClass::odd_multipartite);

    const SigmaRecord c4 = analyze(cycle_graph(4));
    CHECK(c4.transmission_regular);
    CHECK(c4.sigma_lo == 0.0);
    CHECK(c4.sigma_hi == 0.0);
    CHECK(c4.conjecture == ConjectureVerdict::not_applicable);
    CHECK(c4.theorem == TheoremVerdict::not_applicable);
    CHECK(c4.equality_class == EqualityClass::none);

    const SigmaRecord k2 = analyze(complete_graph(2));
    CHECK(k2.transmission_regular);
    CHECK(k2.sigma_bound == 0.0);

    CHECK_THROWS_AS(analyze(disjoint_union({Graph(1), Graph(1)})), NotConnectedError);
    CHECK_THROWS_AS(analyze(path_graph(3), 0.0), PreconditionError);
}

TEST_CASE("Enumeration counts match an independent brute-force oracle") {
    const long long expected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const std::vector<Graph> reps = enumerate_connected(n);
        CHECK(static_cast<long long>(reps.size()) == expected[n - 1]);
        CHECK(static_cast<long long>(reps.size()) == oracle::connected_class_count(n));

        std::set<std::string> canon;
        for (const Graph& g : reps) {
            CHECK(g.order() == n);
            CHECK(is_connected(g));
            canon.insert(canonical_form(g));
        }
        CHECK(canon.size() == reps.size());  // pairwise non-isomorphic
    }
    CHECK(enumerate_connected(7).size() == 853);
    CHECK_THROWS_AS(enumerate_connected(8), UnsupportedSizeError);
    CHECK_THROWS_AS(enumerate_connected(0), PreconditionError);
}

TEST_CASE("Enumeration order is deterministic") {
    const std::vector<Graph> a = enumerate_connected(5);
    const std::vector<Graph> b = enumerate_connected(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        CHECK(encode_graph6(a[i]) < encode_graph6(a[i + 1]));
}

TEST_CASE("Scan skips disconnected graphs and keeps going") {
    const std::vector<Graph> input = {path_graph(3),
                                      disjoint_union({complete_graph(2), complete_graph(2)}),
                                      cycle_graph(4)};
    const ScanOutput out = scan(input);
    CHECK(out.records.size() == 2);
    REQUIRE(out.issues.size() == 1);
    CHECK(out.issues[0].line == 2);
    CHECK(out.issues[0].message.find("skipped") != std::string::npos);
}

TEST_CASE("Line scanner tolerates headers, blanks and bad lines") {
    const std::string two_k2 = encode_graph6(disjoint_union({complete_graph(2), complete_graph(2)}));
    std::istringstream in(">>graph6<<\nBg\n\nA_\n*junk\n" + two_k2 + "\r\nD?{\n");
    const ScanOutput out = scan_graph6_lines(in);
    CHECK(out.records.size() == 3);
    CHECK(out.records[0].graph6 == "Bg");
    CHECK(out.records[1].graph6 == "A_");
    CHECK(out.records[2].graph6 == "D?{");
    REQUIRE(out.issues.size() == 2);
    CHECK(out.issues[0].line == 5);
    CHECK(out.issues[0].message.find("parse error") != std::string::npos);
    CHECK(out.issues[1].line == 6);
    CHECK(out.issues[1].message.find("skipped") != std::string::npos);
}

TEST_CASE("Aggregate finds the extremal graphs of each order") {
    for (int n = 4; n <= 6; ++n) {
        const ScanOutput out = scan(enumerate_connected(n));
        const ScanSummary summary = aggregate(out.records);
        REQUIRE(summary.per_n.count(n) == 1);
        const PerOrderSummary& ps = summary.per_n.at(n);
        CHECK(ps.graphs_scanned == static_cast<long long>(out.records.size()));
        CHECK(ps.all_conjecture_certified);
        CHECK(ps.all_theorem_resolved);
        CHECK_FALSE(ps.unresolved_tie);
        CHECK(ps.min_sigma_lo <= sigma_n(n));
        CHECK(sigma_n(n) <= ps.min_sigma_hi);

        std::set<std::string> expected;
        if (n % 2 == 1) {
            expected.insert(canonical_form(complete_odd_multipartite(n)));
        } else {
            for (const Graph& g : enumerate_n_minus_4_dvdr(n))
                expected.insert(canonical_form(g));
        }
        std::set<std::string> got;
        for (const std::string& s : ps.argmin_graph6_list)
            got.insert(canonical_form(parse_graph6(s)));
        CHECK(got == expected);
    }
}

TEST_CASE("Aggregate reports exact ties as co-minimizers") {
    std::vector<Graph> graphs = enumerate_n_minus_4_dvdr(8);
    graphs.push_back(path_graph(8));
    const ScanOutput out = scan(graphs);
    const ScanSummary summary = aggregate(out.records);
    const PerOrderSummary& ps = summary.per_n.at(8);
    CHECK(ps.graphs_scanned == 3);
    CHECK(ps.argmin_graph6_list.size() == 2);
    CHECK_FALSE(ps.unresolved_tie);
    CHECK(ps.min_sigma_lo <= 5.0 - std::sqrt(23.0));
    CHECK(5.0 - std::sqrt(23.0) <= ps.min_sigma_hi);
    CHECK(std::is_sorted(ps.argmin_graph6_list.begin(), ps.argmin_graph6_list.end()));
}

TEST_CASE("Aggregate is order-independent and handles empty input") {
    const ScanOutput out = scan(enumerate_connected(5));
    const ScanSummary base = aggregate(out.records);

    std::vector<SigmaRecord> shuffled = out.records;
    std::mt19937 rng(5150u);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(aggregate(shuffled) == base);

    CHECK(aggregate({}).per_n.empty());
    CHECK_THROWS_AS(aggregate({}, 0.0), PreconditionError);
}

TEST_CASE("Reports serialize records and summary consistently") {
    const ScanSummary empty_summary = aggregate({});
    std::ostringstream empty_out;
    write_report(empty_summary, {}, ReportFormat::json, empty_out);
    CHECK(empty_out.str() == "{\"summary\":{\"per_n\":{}},\"records\":[]}\n");

    const ScanOutput out = scan(enumerate_connected(5));
    const ScanSummary summary = aggregate(out.records);

    std::ostringstream js;
    write_report(summary, out.records, ReportFormat::json, js);
    const json doc = json::parse(js.str());
    REQUIRE(doc.at("records").size() == 21);
    const json& per5 = doc.at("summary").at("per_n").at("5");
    CHECK(per5.at("graphs_scanned").get<long long>() == 21);
    CHECK(per5.at("argmin_graph6_list").size() == 1);
    CHECK(per5.at("all_conjecture_certified").get<bool>());
    CHECK_FALSE(per5.at("unresolved_tie").get<bool>());

    std::ostringstream cs;
    write_report(summary, out.records, ReportFormat::csv, cs);
    std::vector<std::string> lines;
    std::istringstream csin(cs.str());
    for (std::string line; std::getline(csin, line);) lines.push_back(line);
    REQUIRE(lines.size() == 22);
    CHECK(lines[0] ==
          "graph6,n,d_max,d_min,wiener,transmission_regular,"
          "sigma_lo,sigma_hi,sigma_bound,conjecture,theorem,equality_class");

    // identical field values in both formats, including the real-number text
    for (std::size_t i = 0; i < out.records.size(); ++i) {
        std::vector<std::string> cells;
        std::istringstream row(lines[i + 1]);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        REQUIRE(cells.size() == 12);
        const json rec = json::parse(record_to_json(out.records[i]));
        CHECK(cells[0] == rec.at("graph6").get<std::string>());
        CHECK(cells[1] == std::to_string(rec.at("n").get<int>()));
        CHECK(cells[5] == (rec.at("transmission_regular").get<bool>() ? "true" : "false"));
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", rec.at("sigma_lo").get<double>());
        CHECK(cells[6] == buf);
        CHECK(cells[10] == rec.at("theorem").get<std::string>());
    }
}

TEST_CASE("Record JSON escapes backslashes in graph6 payloads") {
    // order 29 puts a literal backslash in the size byte
    SigmaRecord r;
    r.graph6 = encode_graph6(complete_graph(29)).substr(0, 3);
    REQUIRE(r.graph6.find('\\') != std::string::npos);
    const json parsed = json::parse(record_to_json(r));
    CHECK(parsed.at("graph6").get<std::string>() == r.graph6);
}

TEST_CASE("Analyze and scan agree across ingestion paths") {
    const std::vector<Graph> reps = enumerate_connected(4);
    std::ostringstream file;
    for (const Graph& g : reps) file << encode_graph6(g) << '\n';
    std::istringstream in(file.str());
    const ScanOutput via_lines = scan_graph6_lines(in);
    const ScanOutput via_graphs = scan(reps);
    REQUIRE(via_lines.records.size() == via_graphs.records.size());
    CHECK(via_lines.issues.empty());
    for (std::size_t i = 0; i < via_lines.records.size(); ++i) {
        CHECK(via_lines.records[i].graph6 == via_graphs.records[i].graph6);
        CHECK(via_lines.records[i].sigma_lo == via_graphs.records[i].sigma_lo);
        CHECK(via_lines.records[i].sigma_hi == via_graphs.records[i].sigma_hi);
    }
}
