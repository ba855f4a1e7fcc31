#include <cmath>
#include <random>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectral.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace distspec;

namespace {

bool encloses(const PerronCertificate& c, double value) {
    return c.lambda_lo <= value && value <= c.lambda_hi;
}

}  // namespace

TEST_CASE("Perron enclosures contain exact closed-form eigenvalues") {
    const PerronCertificate p3 = perron(distance_matrix(path_graph(3)));
    CHECK(encloses(p3, 1.0 + std::sqrt(3.0)));
    CHECK(p3.width() <= 1e-10);

    const PerronCertificate p4 = perron(distance_matrix(path_graph(4)));
    CHECK(encloses(p4, 2.0 + std::sqrt(10.0)));

    // one singleton part plus two pairs: distance quotient is [[0,4],[1,4]]
    const Graph k122 = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(encloses(perron(distance_matrix(k122)), 2.0 + 2.0 * std::sqrt(2.0)));
}

TEST_CASE("Perron is exact in one step on transmission-regular graphs") {
    for (const Graph& g : {cycle_graph(4), complete_graph(4), cycle_graph(5), cycle_graph(6)}) {
        const TransmissionProfile t = transmissions(distance_matrix(g));
        REQUIRE(t.transmission_regular());
        const PerronCertificate c = perron(distance_matrix(g));
        CHECK(c.iterations == 1);
        CHECK(c.lambda_lo == c.lambda_hi);
        CHECK(c.lambda_lo == static_cast<double>(t.d_max));
    }
}

TEST_CASE("Perron validates input and reports convergence failure") {
    CHECK_THROWS_AS(perron(distance_matrix(path_graph(3)), 0.0), PreconditionError);
    CHECK_THROWS_AS(perron(distance_matrix(path_graph(3)), -1e-3), PreconditionError);
    CHECK_THROWS_AS(perron(DistanceMatrix(1, {0})), UnsupportedSizeError);

    // An unreachable tolerance must end in ConvergenceError carrying the
    // best gap achieved, not loop forever. The 4-path's ratios plateau at
    // rounding noise instead of collapsing to equal doubles.
    try {
        perron(distance_matrix(path_graph(4)), 1e-30);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved_gap() > 0.0);
        CHECK(e.achieved_gap() < 1e-10);
    }
}

TEST_CASE("Perron enclosures contain the dense-solver eigenvalue") {
    std::mt19937 rng(91u);
    std::uniform_int_distribution<int> order(2, 8);
    for (int round = 0; round < 60; ++round) {
        const Graph g = oracle::random_connected_graph(rng, order(rng), 0.5);
        const DistanceMatrix d = distance_matrix(g);
        const PerronCertificate c = perron(d, 1e-10);
        const double reference = oracle::lambda1(d);
        CHECK(c.lambda_lo - 1e-9 <= reference);
        CHECK(reference <= c.lambda_hi + 1e-9);
        CHECK(c.width() <= 1e-10 * 1.001);
        for (double v : c.vector) CHECK(v > 0.0);
    }
}

TEST_CASE("Rayleigh identity residual vanishes for positive unit vectors") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> order(2, 7);
    std::uniform_real_distribution<double> entry(0.05, 1.0);
    for (int round = 0; round < 40; ++round) {
        const Graph g = oracle::random_connected_graph(rng, order(rng), 0.5);
        const DistanceMatrix d = distance_matrix(g);
        const TransmissionProfile t = transmissions(d);

        std::vector<double> x(static_cast<std::size_t>(d.order()));
        double norm2 = 0.0;
        for (double& v : x) {
            v = entry(rng);
            norm2 += v * v;
        }
        for (double& v : x) v /= std::sqrt(norm2);
        CHECK(rayleigh_identity_residual(d, x, t.d_max) <= 1e-9);

        const PerronCertificate c = perron(d);
        CHECK(rayleigh_identity_residual(d, c.vector, t.d_max) <= 1e-9);
    }
}

TEST_CASE("Rayleigh identity rejects malformed vectors") {
    const DistanceMatrix d = distance_matrix(path_graph(3));
    CHECK_THROWS_AS(rayleigh_identity_residual(d, {0.5, 0.5}, 3), PreconditionError);
    CHECK_THROWS_AS(rayleigh_identity_residual(d, {0.5, -0.5, 0.5}, 3), PreconditionError);
    CHECK_THROWS_AS(rayleigh_identity_residual(d, {1.0, 1.0, 1.0}, 3), PreconditionError);
}

TEST_CASE("Quotient matrices detect equitability and reproduce eigenvalues") {
    const DistanceMatrix p4 = distance_matrix(path_graph(4));

    const QuotientMatrix ends_mids = quotient_matrix(p4, {{0, 3}, {1, 2}});
    CHECK(ends_mids.equitable);
    CHECK(ends_mids.at(0, 0) == 3.0);
    CHECK(ends_mids.at(0, 1) == 3.0);
    CHECK(ends_mids.at(1, 0) == 3.0);
    CHECK(ends_mids.at(1, 1) == 1.0);
    const double lam = largest_eig_2x2(ends_mids);
    CHECK(lam == doctest::Approx(2.0 + std::sqrt(10.0)).epsilon(1e-12));
    const PerronCertificate c = perron(p4);
    CHECK(c.lambda_lo - 1e-9 <= lam);
    CHECK(lam <= c.lambda_hi + 1e-9);

    // halves {0,1} and {2,3} have row sums 5 vs 3 toward the other side
    CHECK_FALSE(quotient_matrix(p4, {{0, 1}, {2, 3}}).equitable);

    const Graph k122 = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const QuotientMatrix apex_rest = quotient_matrix(distance_matrix(k122), {{0}, {1, 2, 3, 4}});
    CHECK(apex_rest.equitable);
    CHECK(apex_rest.at(0, 1) == 4.0);
    CHECK(apex_rest.at(1, 0) == 1.0);
    CHECK(apex_rest.at(1, 1) == 4.0);
    CHECK(largest_eig_2x2(apex_rest) == doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));

    const Graph w6 = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                           {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    const QuotientMatrix hub_rim = quotient_matrix(distance_matrix(w6), {{0}, {1, 2, 3, 4, 5}});
    CHECK(hub_rim.equitable);
    CHECK(largest_eig_2x2(hub_rim) == doctest::Approx(3.0 + std::sqrt(14.0)).epsilon(1e-12));
}

TEST_CASE("Quotient matrix validates the partition") {
    const DistanceMatrix d = distance_matrix(path_graph(4));
    CHECK_THROWS_AS(quotient_matrix(d, {}), PreconditionError);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1, 2, 3}, {}}), PreconditionError);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}, {2, 4}}), PreconditionError);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}, {1, 2, 3}}), PreconditionError);
    CHECK_THROWS_AS(quotient_matrix(d, {{0, 1}, {2}}), PreconditionError);

    CHECK_THROWS_AS(largest_eig_2x2(quotient_matrix(d, {{0}, {1, 2}, {3}})), PreconditionError);
}
