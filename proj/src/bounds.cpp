#include "distspec/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "distspec/distance.hpp"
#include "distspec/spectral.hpp"

namespace distspec {

int gamma_n(int n) {
    if (n < 1)
        throw PreconditionError("gamma_n needs n >= 1");
    return (n % 2 == 1) ? 1 : 2;
}

double sigma_n(int n) {
    if (n < 3)
        throw PreconditionError("sigma_n is defined for n >= 3");
    const double gamma = gamma_n(n);
    const double s = n + gamma;
    return 2.0 * gamma / (s + std::sqrt(s * s - 4.0 * gamma));
}

SigmaEnclosure sigma(const Graph& g, double tol) {
    const DistanceMatrix d = distance_matrix(g);
    const TransmissionProfile t = transmissions(d);
    const PerronCertificate c = perron(d, tol);
    return {t.d_max - c.lambda_hi, t.d_max - c.lambda_lo};
}

const char* to_string(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::certified_holds: return "certified-holds";
        case ConjectureVerdict::inconclusive: return "inconclusive";
        case ConjectureVerdict::not_applicable: return "not-applicable";
    }
    return "?";
}

const char* to_string(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::strict: return "strict";
        case TheoremVerdict::equality: return "equality";
        case TheoremVerdict::inconclusive: return "inconclusive";
        case TheoremVerdict::not_applicable: return "not-applicable";
    }
    return "?";
}

const char* to_string(EqualityClass c) {
    switch (c) {
        case EqualityClass::odd_multipartite: return "odd-multipartite";
        case EqualityClass::even_dvdr: return "even-dvdr";
        case EqualityClass::none: return "none";
    }
    return "?";
}

ConjectureVerdict conjecture_verdict(const SigmaEnclosure& s, int n) {
    const double threshold = 1.0 / (n + 1);
    return s.lo > threshold ? ConjectureVerdict::certified_holds
                            : ConjectureVerdict::inconclusive;
}

TheoremVerdict theorem_verdict(const SigmaEnclosure& s, EqualityClass cls, int n) {
    if (cls != EqualityClass::none) return TheoremVerdict::equality;
    if (s.lo > sigma_n(n)) return TheoremVerdict::strict;
    return TheoremVerdict::inconclusive;
}

namespace {

void require_not_transmission_regular(const TransmissionProfile& t) {
    if (t.transmission_regular())
        throw DomainError("sigma vanishes on transmission-regular graphs; nothing to check");
}

}  // namespace

ConjectureVerdict check_conjecture(const Graph& g, double tol) {
    const DistanceMatrix d = distance_matrix(g);
    const TransmissionProfile t = transmissions(d);
    require_not_transmission_regular(t);
    const PerronCertificate c = perron(d, tol);
    return conjecture_verdict({t.d_max - c.lambda_hi, t.d_max - c.lambda_lo}, g.order());
}

TheoremVerdict check_theorem(const Graph& g, double tol) {
    const DistanceMatrix d = distance_matrix(g);
    const TransmissionProfile t = transmissions(d);
    require_not_transmission_regular(t);
    const EqualityClass cls = classify_equality_case(g);
    if (cls != EqualityClass::none) return TheoremVerdict::equality;
    const PerronCertificate c = perron(d, tol);
    return theorem_verdict({t.d_max - c.lambda_hi, t.d_max - c.lambda_lo}, cls, g.order());
}

EqualityClass classify_equality_case(const Graph& g) {
    const int n = g.order();
    if (n % 2 == 1 && n >= 3) {
        // K_{1,2,...,2} iff the complement is a perfect matching on n-1
        // vertices plus one isolated vertex: one degree-0 vertex, the rest
        // degree 1.
        const Graph c = complement(g);
        int isolated = 0;
        bool degrees_ok = true;
        for (int v = 0; v < n; ++v) {
            const int dv = c.degree(v);
            if (dv == 0)
                ++isolated;
            else if (dv != 1)
                degrees_ok = false;
        }
        if (degrees_ok && isolated == 1) return EqualityClass::odd_multipartite;
    } else if (n % 2 == 0 && n >= 4) {
        // apex of degree n-1 whose removal leaves an (n-4)-regular graph;
        // with the apex universal that is deg(u) = n-3 for every other u.
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) != n - 1) continue;
            bool regular = true;
            for (int u = 0; u < n && regular; ++u)
                if (u != v && g.degree(u) != n - 3) regular = false;
            if (regular) return EqualityClass::even_dvdr;
        }
    }
    return EqualityClass::none;
}

ClaimsReport minimizer_claims_report(const Graph& g, double tol) {
    const int n = g.order();
    if (n < 3)
        throw PreconditionError("minimizer claims need n >= 3");
    if (!(tol > 0.0))
        throw PreconditionError("tol must be positive");

    const DistanceMatrix d = distance_matrix(g);
    const TransmissionProfile t = transmissions(d);
    require_not_transmission_regular(t);
    const PerronCertificate c = perron(d, std::min(tol, 1e-10));
    const int gamma = gamma_n(n);

    ClaimsReport rep;
    rep.claim1 = static_cast<long long>(n) * t.d_max - 2 * t.wiener == gamma;

    const auto [min_it, max_it] = std::minmax_element(c.vector.begin(), c.vector.end());
    const int u = static_cast<int>(max_it - c.vector.begin());
    const int v = static_cast<int>(min_it - c.vector.begin());
    rep.claim2 = t.transmissions[static_cast<std::size_t>(u)] > t.d_min &&
                 t.transmissions[static_cast<std::size_t>(v)] < t.d_max;

    rep.x_ratio = *max_it / *min_it;
    rep.claim3_ratio_ok = std::abs(rep.x_ratio - 1.0 / (1.0 - sigma_n(n))) <= tol;
    for (double xi : c.vector)
        if (xi >= *max_it * (1.0 - 1e-7)) ++rep.claim3_count;

    for (int w = 0; w < n; ++w)
        if (t.transmissions[static_cast<std::size_t>(w)] == t.d_max) ++rep.claim4_count;

    rep.claim5 = t.d_max == n + gamma - 1 && t.d_min == n - 1;
    rep.diameter2 = d.max_entry() == 2;
    return rep;
}

}  // namespace distspec
